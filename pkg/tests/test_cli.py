"""CLI behaviour: commands, formats, error channel, golden output."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from bwcontact.cli import run
from bwcontact.manifolds import descriptor_from_dict

DATA = Path(__file__).parent / "data"
LEFT = str(DATA / "elliptic-b22-dk4.json")
RIGHT = str(DATA / "elliptic-b22-dk8.json")


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_descriptor(tmp_path, name, **fields):
    data = {
        "name": name, "b2": 3, "b2_plus": 1,
        "c1": [0, 2, 0], "omega": [1, 0, 0], "spin": True,
    }
    data.update(fields)
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_validate_ok(capsys):
    code, out, err = invoke(capsys, "validate", LEFT)
    assert code == 0
    assert out.startswith("ok: elliptic-b22-dk4")
    assert err == ""


def test_validate_error_is_one_line(capsys, tmp_path):
    bad = write_descriptor(tmp_path, "bad", omega=[2, 4, 6])
    code, out, err = invoke(capsys, "validate", bad)
    assert code == 2
    assert out == ""
    assert err.startswith("error: omega_divisible: ")
    assert err.count("\n") == 1


def test_missing_file_error(capsys):
    code, out, err = invoke(capsys, "classify", "no-such-file.json")
    assert code == 2
    assert err.startswith("error: io_error: ")


def test_classify_text(capsys):
    code, out, _ = invoke(capsys, "classify", LEFT)
    assert code == 0
    assert "level: 8" in out
    assert "delta: 4" in out
    assert "d(K): 4" in out
    assert "barden: #21 S²×S³" in out


def test_classify_json_roundtrip(capsys):
    code, out, _ = invoke(capsys, "classify", LEFT, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["format_version"] == 1
    assert payload["command"] == "classify"
    # re-ingesting the echoed input reproduces the identical report
    m = descriptor_from_dict(payload["input"])
    assert m.to_dict() == payload["input"]
    code2, out2, _ = invoke(capsys, "classify", LEFT, "--format", "json")
    assert out2 == out


def test_spectrum_text_and_json(capsys):
    code, out, _ = invoke(capsys, "spectrum", LEFT, "--k-max", "3")
    assert code == 0
    assert "k_max: 3" in out
    assert "z degrees: -16" in out
    assert "k=3:" in out
    code, out, _ = invoke(
        capsys, "spectrum", LEFT, "--k-max", "3", "--format", "json"
    )
    payload = json.loads(out)
    spec = payload["result"]
    assert spec["level"] == 8 and spec["delta"] == 4
    assert len(spec["q_degrees"]) == 3 * 24
    assert spec["z_degrees"][0] == -16
    assert all(v == 0 for v in spec["z_degrees"][1:])


def test_compare_golden_file(capsys):
    code, out, _ = invoke(capsys, "compare", LEFT, RIGHT)
    assert code == 0
    golden = (DATA / "golden_compare.txt").read_text(encoding="utf-8")
    assert out == golden


def test_compare_json_structure(capsys):
    code, out, _ = invoke(capsys, "compare", LEFT, RIGHT, "--format", "json")
    payload = json.loads(out)
    result = payload["result"]
    assert result["almost_contact_equivalent"] is True
    assert result["contact_homology"]["decision"] == "not_isomorphic"
    assert result["contact_homology"]["distinguisher_residue"] == 3
    assert result["flag"] is None
    assert result["verdict"].endswith("distinguisher b=3")


def test_compare_isomorphic_pair(capsys, tmp_path):
    a = write_descriptor(tmp_path, "iso-a")                      # dK = 2
    b = write_descriptor(tmp_path, "iso-b", c1=[1, 2, 0], spin=False)  # dK = 1
    code, out, _ = invoke(capsys, "compare", a, b)
    assert code == 0
    assert "contact homology: isomorphic" in out
    assert "witness:" in out
    code, out, _ = invoke(capsys, "compare", a, b, "--format", "json")
    report = json.loads(out)["result"]["contact_homology"]
    assert report["decision"] == "isomorphic"
    assert report["witness"]


def test_compare_different_levels_flag(capsys, tmp_path):
    a = write_descriptor(tmp_path, "lvl-a")                       # level 2
    b = write_descriptor(tmp_path, "lvl-b", c1=[0, 4, 0])         # level 4
    code, out, _ = invoke(capsys, "compare", a, b)
    assert code == 0
    assert "contact homology: not compared" in out
    assert (
        "flag: different levels: trivially inequivalent as almost contact "
        "structures" in out
    )
    payload_code, out, _ = invoke(capsys, "compare", a, b, "--format", "json")
    result = json.loads(out)["result"]
    assert result["contact_homology"] is None
    assert result["almost_contact_equivalent"] is False
    assert result["diffeomorphic"] is True


def test_compare_different_manifolds_flag(capsys, tmp_path):
    a = write_descriptor(tmp_path, "m-a")
    b = write_descriptor(
        tmp_path, "m-b", b2=4, c1=[0, 2, 0, 0], omega=[1, 0, 0, 0]
    )
    code, out, _ = invoke(capsys, "compare", a, b)
    assert code == 0
    assert "diffeomorphic: false" in out
    assert "flag: different underlying manifolds: not diffeomorphic" in out
    assert "verdict: distinct 5-manifolds (not diffeomorphic)" in out


def test_counts_command(capsys):
    code, out, _ = invoke(capsys, "counts", "--r", "22", "--level", "12")
    assert code == 0
    assert "lower bound: 3" in out
    assert "exact: true" in out
    code, out, _ = invoke(
        capsys, "counts", "--r", "22", "--level", "12", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["result"]["lower_bound"] == 3
    assert payload["input"] == {"r": 22, "level": 12}


def test_counts_from_descriptor(capsys):
    code, out, _ = invoke(capsys, "counts", LEFT)
    assert code == 0
    assert "counts: r=22, level=8" in out
    # divisors of 8 that are >= 4: 4 and 8, both realizable at rank 22
    assert "lower bound: 2" in out


def test_counts_level_zero_rejected(capsys, tmp_path):
    flat = write_descriptor(tmp_path, "flat", c1=[0, 0, 0])
    code, out, err = invoke(capsys, "counts", flat)
    assert code == 2
    assert "level 0" in err


def test_counts_needs_arguments(capsys):
    code, out, err = invoke(capsys, "counts")
    assert code == 2
    assert "error: invalid_value" in err


def test_catalog_command(capsys):
    code, out, _ = invoke(capsys, "catalog", "--r", "10", "--k", "5")
    assert code == 0
    assert "homotopy elliptic surface" in out
    assert "Dolgachev surface" in out
    code, out, _ = invoke(capsys, "catalog", "--r", "10", "--level", "15")
    assert "k=5:" in out and "k=15:" in out
    code, out, err = invoke(capsys, "catalog", "--r", "10")
    assert code == 2
    code, out, _ = invoke(
        capsys, "catalog", "--r", "10", "--k", "4", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["result"]["sections"][0]["entries"] == []


def test_custom_catalog_flag(capsys, tmp_path):
    rules = [{"kind": "explicit", "family": "bespoke", "b2": 5,
              "b2_plus": 1, "dK_parity": "odd"}]
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(rules))
    code, out, _ = invoke(
        capsys, "counts", "--r", "5", "--level", "15", "--catalog", str(path)
    )
    assert code == 0
    assert "lower bound: 2" in out
    assert "bespoke" in out


def test_inconsistent_catalog_is_rejected(capsys, tmp_path):
    # a family realizing even k at rank 5 would contradict the refined
    # upper bound (even k forces a spin manifold, b2 = 2 mod 4); the count
    # report's internal consistency check must refuse it
    rules = [{"kind": "explicit", "family": "impossible", "b2": 5,
              "b2_plus": 1, "dK_parity": "any"}]
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(rules))
    code, out, err = invoke(
        capsys, "counts", "--r", "5", "--level", "12", "--catalog", str(path)
    )
    assert code == 2
    assert "error: invalid_value" in err


def test_output_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = invoke(capsys, "classify", LEFT, "--output", str(target))
    assert code == 0
    assert out == ""
    assert "level: 8" in target.read_text(encoding="utf-8")


def test_selftest_small(capsys):
    code, out, _ = invoke(
        capsys, "selftest", "--cases", "40", "--corpus-cases", "30",
        "--divisor-limit", "200",
    )
    assert code == 0
    assert "selftest: all suites passed" in out
    assert out.count("suite ") == 7


def test_selftest_json(capsys):
    code, out, _ = invoke(
        capsys, "selftest", "--cases", "25", "--corpus-cases", "20",
        "--divisor-limit", "100", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["ok"] is True
    assert len(payload["result"]["suites"]) == 7


def test_console_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "bwcontact", "classify", LEFT],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "level: 8" in proc.stdout

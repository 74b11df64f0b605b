"""Command line interface.

Commands operate on descriptor JSON files (fields: name, b2, b2_plus, c1,
omega, spin; the two covectors are integer arrays of length b2):

  validate   check a descriptor's invariants
  classify   Barden name, spin, level, Delta, d(K) of the circle bundle
  spectrum   truncated generator-degree spectrum
  compare    full comparison of two descriptors' contact structures
  counts     bounds on distinguishable structures at a given rank and level
  catalog    catalog manifolds realizing a divisibility at a given rank
  selftest   run the built-in oracle suites

Every command accepts --format text|json and --output FILE. JSON output
carries format_version = 1 and echoes its input, so a consumer can re-run
the computation from the output alone. Errors are one line on stderr,
`error: <code>: <message>`, with exit status 2 (selftest failures use 1).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .algebra import DegreeSpectrum, spectrum
from .geography import Catalog, catalog_realizable, contact_count_report
from .isomorphism import (
    Decision,
    IsomorphismReport,
    WitnessConsistencyError,
    build_witness,
    decide,
)
from .lattice import NotIndivisibleError
from .manifolds import (
    DescriptorError,
    FiveManifoldContact,
    SymplecticFourManifold,
    almost_contact_equivalent,
    boothby_wang,
    diffeomorphic,
    load_descriptor,
)
from .selftest import run_all

FORMAT_VERSION = 1

LEVEL_FLAG = "different levels: trivially inequivalent as almost contact structures"
MANIFOLD_FLAG = "different underlying manifolds: not diffeomorphic"


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _json_text(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _payload(command: str, **fields: Any) -> dict[str, Any]:
    out: dict[str, Any] = {"format_version": FORMAT_VERSION, "command": command}
    out.update(fields)
    return out


def _contact_lines(x: FiveManifoldContact, indent: str = "") -> list[str]:
    return [
        f"{indent}name: {x.source_name}",
        f"{indent}barden: {x.barden}",
        f"{indent}b2(X): {x.b2_X}",
        f"{indent}spin(X): {_bool(x.spin_X)}",
        f"{indent}level: {x.level}",
        f"{indent}delta: {x.delta}",
        f"{indent}d(K): {x.dK}",
    ]


def _cmd_validate(args: argparse.Namespace) -> tuple[int, str]:
    m = load_descriptor(args.descriptor)
    if args.format == "json":
        return 0, _json_text(
            _payload("validate", ok=True, input=m.to_dict())
        )
    return 0, (
        f"ok: {m.name}: valid descriptor "
        f"(b2={m.b2}, b2+={m.b2_plus}, spin={_bool(m.spin)})\n"
    )


def _cmd_classify(args: argparse.Namespace) -> tuple[int, str]:
    m = load_descriptor(args.descriptor)
    x = boothby_wang(m)
    if args.format == "json":
        return 0, _json_text(
            _payload("classify", input=m.to_dict(), result=x.to_dict())
        )
    lines = [f"classify: {m.name}"] + _contact_lines(x)[1:]
    return 0, "\n".join(lines) + "\n"


def _cmd_spectrum(args: argparse.Namespace) -> tuple[int, str]:
    m = load_descriptor(args.descriptor)
    x = boothby_wang(m)
    spec = spectrum(x, k_max=args.k_max)
    if args.format == "json":
        return 0, _json_text(
            _payload("spectrum", input=m.to_dict(), result=spec.to_dict())
        )
    lines = [
        f"spectrum: {m.name}",
        f"level: {spec.level}",
        f"delta: {spec.delta}",
        f"d(K): {spec.dK}",
        f"a: {spec.a}",
        f"k_max: {spec.k_max}",
        "z degrees: " + " ".join(str(z) for z in spec.z_degrees),
        f"q degrees by k (columns i = 0..{spec.a}):",
    ]
    per_k: dict[int, list[int]] = {}
    for idx, deg in spec.q_degrees:
        per_k.setdefault(idx.k, []).append(deg)
    for k in sorted(per_k):
        lines.append(f"  k={k}: " + " ".join(str(v) for v in per_k[k]))
    return 0, "\n".join(lines) + "\n"


def _compare_core(
    left: FiveManifoldContact,
    right: FiveManifoldContact,
    k_max: int,
) -> dict[str, Any]:
    """Shared comparison logic; returns a plain dict both renderers use."""
    diffeo = diffeomorphic(left, right)
    ac = almost_contact_equivalent(left, right)
    report: IsomorphismReport | None = None
    flag: str | None = None
    if left.b2_X != right.b2_X or left.spin_X != right.spin_X:
        flag = MANIFOLD_FLAG
    elif left.level != right.level:
        flag = LEVEL_FLAG
    else:
        lspec = spectrum(left, k_max=k_max)
        rspec = spectrum(right, k_max=k_max)
        report = decide(left.level, left.dK, right.dK)
        if report.decision is Decision.ISOMORPHIC:
            report = build_witness(lspec, rspec)
    if flag is not None:
        verdict = (
            "distinct 5-manifolds (not diffeomorphic)"
            if not diffeo
            else (
                f"diffeomorphic, inequivalent almost contact structures "
                f"(levels {left.level} vs {right.level})"
            )
        )
    elif report.decision is Decision.ISOMORPHIC:
        verdict = (
            "equivalent as almost contact structures, contact homology "
            "isomorphic (not distinguished)"
        )
    elif report.distinguisher_residue is not None:
        verdict = (
            "equivalent as almost contact structures, inequivalent contact "
            f"homology, distinguisher b={report.distinguisher_residue}"
        )
    else:
        lo, hi = report.distinguisher_lowest_degrees
        verdict = (
            "equivalent as almost contact structures, inequivalent contact "
            f"homology, lowest degrees {lo} vs {hi}"
        )
    return {
        "left": left,
        "right": right,
        "diffeomorphic": diffeo,
        "almost_contact_equivalent": ac,
        "report": report,
        "flag": flag,
        "verdict": verdict,
    }


def _cmd_compare(args: argparse.Namespace) -> tuple[int, str]:
    ml = load_descriptor(args.left)
    mr = load_descriptor(args.right)
    xl = boothby_wang(ml)
    xr = boothby_wang(mr)
    core = _compare_core(xl, xr, args.k_max)
    report: IsomorphismReport | None = core["report"]
    if args.format == "json":
        return 0, _json_text(
            _payload(
                "compare",
                inputs={"left": ml.to_dict(), "right": mr.to_dict()},
                result={
                    "left": xl.to_dict(),
                    "right": xr.to_dict(),
                    "diffeomorphic": core["diffeomorphic"],
                    "almost_contact_equivalent": core["almost_contact_equivalent"],
                    "contact_homology": (
                        report.to_dict() if report is not None else None
                    ),
                    "flag": core["flag"],
                    "verdict": core["verdict"],
                },
            )
        )
    lines = [f"compare: {xl.source_name} vs {xr.source_name}", "left:"]
    lines += _contact_lines(xl, indent="  ")
    lines.append("right:")
    lines += _contact_lines(xr, indent="  ")
    lines.append(f"diffeomorphic: {_bool(core['diffeomorphic'])}")
    lines.append(
        f"almost contact equivalent: {_bool(core['almost_contact_equivalent'])}"
    )
    if report is None:
        lines.append("contact homology: not compared")
        lines.append(f"flag: {core['flag']}")
    else:
        iso = report.decision is Decision.ISOMORPHIC
        lines.append(
            f"contact homology: {'isomorphic' if iso else 'not isomorphic'}"
        )
        lines.append(f"case: {report.case}")
        lines.append(f"detail: {report.detail}")
        if report.distinguisher_residue is not None:
            s1, s2 = report.distinguisher_statuses
            lines.append(
                f"distinguisher: residue class b={report.distinguisher_residue}"
                f" ({s1} vs {s2})"
            )
        if report.distinguisher_lowest_degrees is not None:
            lo, hi = report.distinguisher_lowest_degrees
            lines.append(f"distinguisher: lowest nonconstant degrees {lo} vs {hi}")
        if report.witness is not None:
            lines.append(
                f"witness: {len(report.witness)} generator pairs, "
                f"{len(report.deferred)} deferred (k_max={args.k_max})"
            )
    lines.append(f"verdict: {core['verdict']}")
    return 0, "\n".join(lines) + "\n"


def _load_catalog(args: argparse.Namespace) -> Catalog:
    if getattr(args, "catalog", None):
        return Catalog.from_path(args.catalog)
    return Catalog.default()


def _entry_line(entry) -> str:
    text = (
        f"{entry.family} ({entry.label}, b2={entry.b2}, b2+={entry.b2_plus})"
    )
    if entry.note:
        text += f" note: {entry.note}"
    return text


def _cmd_counts(args: argparse.Namespace) -> tuple[int, str]:
    cat = _load_catalog(args)
    descriptor_echo: dict[str, Any] | None = None
    if args.descriptor is not None:
        m = load_descriptor(args.descriptor)
        x = boothby_wang(m)
        if x.level < 1:
            raise ValueError(
                f"{m.name}: level {x.level}; divisor counting needs level >= 1"
            )
        r, level = m.b2, x.level
        descriptor_echo = m.to_dict()
    else:
        if args.r is None or args.level is None:
            raise ValueError(
                "counts needs either a descriptor file or both --r and --level"
            )
        r, level = args.r, args.level
    report = contact_count_report(r, level, cat)
    if args.format == "json":
        input_echo: dict[str, Any] = {"r": r, "level": level}
        if descriptor_echo is not None:
            input_echo["descriptor"] = descriptor_echo
        return 0, _json_text(
            _payload("counts", input=input_echo, result=report.to_dict())
        )
    refined = (
        "none"
        if report.upper_bound_refined is None
        else str(report.upper_bound_refined)
    )
    lines = [
        f"counts: r={report.r}, level={report.level}",
        f"manifold: {report.manifold}",
        f"spin(X): {_bool(report.spin_X)}",
        f"lower bound: {report.lower_bound}",
        f"upper bound N: {report.upper_bound_N}",
        f"upper bound refined: {refined}",
        f"exact: {_bool(report.exact)}",
    ]
    if report.realizations:
        lines.append("realized divisors:")
        for k, entries in report.realizations:
            for entry in entries:
                lines.append(f"  k={k}: {_entry_line(entry)}")
    else:
        lines.append("realized divisors: none")
    return 0, "\n".join(lines) + "\n"


def _cmd_catalog(args: argparse.Namespace) -> tuple[int, str]:
    cat = _load_catalog(args)
    if (args.k is None) == (args.level is None):
        raise ValueError("catalog needs exactly one of --k or --level")
    if args.k is not None:
        ks = [args.k]
    else:
        if args.level < 1:
            raise ValueError(f"--level {args.level} must be >= 1")
        ks = [
            k for k in range(4, args.level + 1) if args.level % k == 0
        ]
    sections = [
        (k, catalog_realizable(args.r, k, cat)) for k in ks
    ]
    if args.format == "json":
        return 0, _json_text(
            _payload(
                "catalog",
                input={
                    "r": args.r,
                    "k": args.k,
                    "level": args.level,
                },
                result={
                    "sections": [
                        {
                            "k": k,
                            "entries": [e.to_dict() for e in entries],
                        }
                        for k, entries in sections
                    ]
                },
            )
        )
    lines = [f"catalog: r={args.r}"]
    for k, entries in sections:
        if entries:
            lines.append(f"k={k}:")
            for entry in entries:
                lines.append(f"  {_entry_line(entry)}")
        else:
            lines.append(f"k={k}: no catalog manifold")
    return 0, "\n".join(lines) + "\n"


def _cmd_selftest(args: argparse.Namespace) -> tuple[int, str]:
    results = run_all(
        seed=args.seed,
        lattice_cases=args.cases,
        corpus_cases=args.corpus_cases,
        divisor_limit=args.divisor_limit,
    )
    ok = all(r.ok for r in results)
    if args.format == "json":
        payload = _payload(
            "selftest",
            input={
                "seed": args.seed,
                "cases": args.cases,
                "corpus_cases": args.corpus_cases,
                "divisor_limit": args.divisor_limit,
            },
            result={
                "ok": ok,
                "suites": [
                    {
                        "name": r.name,
                        "checks": r.cases,
                        "ok": r.ok,
                        "failures": r.failures,
                    }
                    for r in results
                ],
            },
        )
        return (0 if ok else 1), _json_text(payload)
    lines = [f"selftest: seed={args.seed}"]
    for r in results:
        lines.append(r.summary())
        for failure in r.failures:
            lines.append(f"    {failure}")
    lines.append(
        "selftest: all suites passed" if ok else "selftest: FAILURES above"
    )
    return (0 if ok else 1), "\n".join(lines) + "\n"


_HANDLERS = {
    "validate": _cmd_validate,
    "classify": _cmd_classify,
    "spectrum": _cmd_spectrum,
    "compare": _cmd_compare,
    "counts": _cmd_counts,
    "catalog": _cmd_catalog,
    "selftest": _cmd_selftest,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bwcontact",
        description=(
            "classify and compare circle-bundle contact structures on "
            "simply connected 5-manifolds"
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--output", metavar="FILE", default=None,
        help="write output to FILE instead of stdout",
    )
    kmax = argparse.ArgumentParser(add_help=False)
    kmax.add_argument(
        "--k-max", dest="k_max", type=int, default=50, metavar="N",
        help="generator index truncation (default: 50)",
    )
    catalog_opt = argparse.ArgumentParser(add_help=False)
    catalog_opt.add_argument(
        "--catalog", metavar="FILE", default=None,
        help="JSON catalog replacing the built-in one",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "validate", parents=[common], help="check a descriptor file"
    )
    p.add_argument("descriptor", help="descriptor JSON file")

    p = sub.add_parser(
        "classify", parents=[common],
        help="classify the circle-bundle contact structure",
    )
    p.add_argument("descriptor", help="descriptor JSON file")

    p = sub.add_parser(
        "spectrum", parents=[common, kmax],
        help="generator-degree spectrum",
    )
    p.add_argument("descriptor", help="descriptor JSON file")

    p = sub.add_parser(
        "compare", parents=[common, kmax],
        help="compare two descriptors' contact structures",
    )
    p.add_argument("left", help="first descriptor JSON file")
    p.add_argument("right", help="second descriptor JSON file")

    p = sub.add_parser(
        "counts", parents=[common, catalog_opt],
        help="bounds on distinguishable structures",
    )
    p.add_argument(
        "descriptor", nargs="?", default=None,
        help="descriptor JSON file (supplies r = b2 and the level)",
    )
    p.add_argument("--r", type=int, default=None, help="b2 of the 4-manifold")
    p.add_argument("--level", type=int, default=None, help="contact level d")

    p = sub.add_parser(
        "catalog", parents=[common, catalog_opt],
        help="catalog manifolds realizing a divisibility",
    )
    p.add_argument("--r", type=int, required=True, help="b2 of the 4-manifold")
    p.add_argument("--k", type=int, default=None, help="divisibility d(K)")
    p.add_argument(
        "--level", type=int, default=None,
        help="list all divisors k >= 4 of this level instead of one --k",
    )

    p = sub.add_parser(
        "selftest", parents=[common], help="run the built-in oracle suites"
    )
    p.add_argument("--seed", type=int, default=20240214)
    p.add_argument(
        "--cases", type=int, default=1000,
        help="random pairs in the quotient-divisibility suite",
    )
    p.add_argument(
        "--corpus-cases", dest="corpus_cases", type=int, default=300,
        help="descriptors in the classification corpus",
    )
    p.add_argument(
        "--divisor-limit", dest="divisor_limit", type=int, default=10000,
        help="upper limit of the divisor-count sweep",
    )
    return parser


def _error_code(exc: BaseException) -> str:
    if isinstance(exc, DescriptorError):
        return exc.code
    if isinstance(exc, NotIndivisibleError):
        return "not_indivisible"
    if isinstance(exc, WitnessConsistencyError):
        return "witness_consistency"
    if isinstance(exc, OSError):
        return "io_error"
    return "invalid_value"


def run(argv: list[str] | None = None) -> int:
    """Programmatic entry point; returns the process exit status."""
    args = _build_parser().parse_args(argv)
    try:
        code, text = _HANDLERS[args.command](args)
    except (
        DescriptorError,
        NotIndivisibleError,
        WitnessConsistencyError,
        ValueError,
        OSError,
    ) as exc:
        message = str(exc).replace("\n", " ")
        print(f"error: {_error_code(exc)}: {message}", file=sys.stderr)
        return 2
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

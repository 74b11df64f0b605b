"""Acceptance suite: one test per primary acceptance criterion.

Each test prints exactly one PASS/FAIL line (visible in the -rA summary) and
fails hard on any mismatch. All comparisons are exact integer equalities; no
tolerances anywhere.
"""

import subprocess
import sys
from math import gcd
from pathlib import Path

from bwcontact.geography import (
    Q_lower_bound,
    contact_count_report,
    count_N,
    count_N_prime,
)
from bwcontact.manifolds import barden_sum_name, boothby_wang
from bwcontact.selftest import (
    corpus_descriptors,
    suite_adapted_arithmetic,
    suite_decision_table,
    suite_quotient_divisibility,
    suite_residue_tables,
)

DATA = Path(__file__).parent / "data"

VERDICT_LINE = (
    "verdict: equivalent as almost contact structures, inequivalent "
    "contact homology, distinguisher b=3"
)


def _report(n: int, slug: str, failures: list[str], detail: str) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"ACCEPTANCE {n} [{slug}]: {status} - {detail}")
    assert not failures, f"criterion {n} failed: {failures[:5]}"


def test_acceptance_1_quotient_divisibility_oracle():
    result = suite_quotient_divisibility(
        seed=20240214, cases=1000, rank_max=5, entry_bound=20
    )
    _report(
        1, "quotient-divisibility",
        result.failures,
        f"{result.cases} seeded random (c, w) pairs, rank <= 5, "
        f"entries <= 20, against the gamma-sweep oracle",
    )


def test_acceptance_2_adapted_coordinate_arithmetic():
    result = suite_adapted_arithmetic(k_max=10, sigma_bound=10, m_max=10)
    _report(
        2, "adapted-arithmetic",
        result.failures,
        f"{result.cases} checks: level = k*|sigma_2| for coprime sigma, "
        f"|sigma_i| <= 10, k <= 10; realize_level hits m*k for m <= 10",
    )


def test_acceptance_3_delta_gcd_identity():
    corpus = corpus_descriptors(seed=20240214, cases=400)
    failures = []
    level_zero = 0
    for m in corpus:
        x = boothby_wang(m)
        if x.level == 0:
            level_zero += 1
        if gcd(x.delta, x.level) != x.dK:
            failures.append(
                f"{m.name}: gcd({x.delta}, {x.level}) != {x.dK}"
            )
    if level_zero < 20:
        failures.append(f"only {level_zero} level-0 cases in the corpus")
    _report(
        3, "delta-gcd",
        failures,
        f"gcd(Delta, level) = d(K) over {len(corpus)} descriptors "
        f"({level_zero} with level 0)",
    )


def test_acceptance_4_residue_tables():
    result = suite_residue_tables(d_max=30, delta_max=30)
    _report(
        4, "residue-tables",
        result.failures,
        f"{result.cases} checks: emptiness criterion vs generator scan "
        f"with k <= 2d for all d <= 30, Delta <= 30; Q_2 empty when "
        f"d(K) >= 4",
    )


def test_acceptance_5_decision_table():
    result = suite_decision_table(d_max=24, k_max=50)
    _report(
        5, "decision-table",
        result.failures,
        f"{result.cases} checks: exhaustive d <= 24 truth table, symmetry, "
        f"reflexivity, transitivity, separating distinguishers, and "
        f"degree-exact witnesses at k_max = 50",
    )


def test_acceptance_6_spin_parity_and_divisibility():
    corpus = corpus_descriptors(seed=20240214, cases=400)
    failures = []
    for m in corpus:
        x = boothby_wang(m)
        if x.spin_X != (x.level % 2 == 0):
            failures.append(f"{m.name}: spin {x.spin_X}, level {x.level}")
        if x.dK == 0:
            if x.level != 0:
                failures.append(f"{m.name}: d(K) = 0 with level {x.level}")
        elif x.level % x.dK != 0:
            failures.append(
                f"{m.name}: level {x.level} not divisible by {x.dK}"
            )
    _report(
        6, "spin-parity",
        failures,
        f"spin(X) iff even level, and d(K) | level, over {len(corpus)} "
        f"descriptors",
    )


def test_acceptance_7_counting_bounds():
    failures = []

    def check(cond, msg):
        if not cond:
            failures.append(msg)

    check(count_N(12) == 3, "N(12) != 3")
    check(count_N_prime(12) == 0, "N'(12) != 0")
    check(count_N(15) == 2, "N(15) != 2")
    for d in range(5, 100, 2):
        check(
            Q_lower_bound(10, d) == count_N(d),
            f"Q_lower_bound(10, {d}) != N({d})",
        )
    for d in range(4, 101, 2):
        check(
            Q_lower_bound(22, d) == count_N(d),
            f"Q_lower_bound(22, {d}) != N({d})",
        )
        check(
            Q_lower_bound(10, d) >= count_N_prime(d),
            f"Q_lower_bound(10, {d}) < N'({d})",
        )
    for n in (1, 2, 3):
        r_odd = 12 * n - 2
        for d in range(5, 100, 2):
            rep = contact_count_report(r_odd, d)
            check(
                rep.manifold == barden_sum_name(r_odd - 2, twisted=True),
                f"report({r_odd}, {d}): wrong manifold name",
            )
            check(
                rep.lower_bound == count_N(d),
                f"report({r_odd}, {d}): lower bound != N({d})",
            )
            check(
                rep.upper_bound_N == count_N(d),
                f"report({r_odd}, {d}): upper bound != N({d})",
            )
        r_even = 24 * n - 2
        for d in range(4, 101, 2):
            rep = contact_count_report(r_even, d)
            check(
                rep.manifold == barden_sum_name(r_even - 1, twisted=False),
                f"report({r_even}, {d}): wrong manifold name",
            )
            check(
                rep.lower_bound == count_N(d),
                f"report({r_even}, {d}): lower bound != N({d})",
            )
    for d in range(4, 101, 2):
        rep = contact_count_report(10, d)
        check(
            rep.lower_bound >= count_N_prime(d),
            f"report(10, {d}): lower bound < N'({d})",
        )
    _report(
        7, "counting-bounds",
        failures,
        "divisor counts, catalog lower bounds over odd d in [5, 99] and "
        "even d in [4, 100], and count reports for the first three "
        "catalog ranks",
    )


def test_acceptance_8_cli_golden_compare():
    failures = []
    proc = subprocess.run(
        [
            sys.executable, "-m", "bwcontact", "compare",
            str(DATA / "elliptic-b22-dk4.json"),
            str(DATA / "elliptic-b22-dk8.json"),
        ],
        capture_output=True, text=True,
    )
    golden = (DATA / "golden_compare.txt").read_text(encoding="utf-8")
    if proc.returncode != 0:
        failures.append(f"exit status {proc.returncode}: {proc.stderr!r}")
    if proc.stdout != golden:
        failures.append("output differs from tests/data/golden_compare.txt")
    lines = proc.stdout.splitlines()
    if not lines or lines[-1] != VERDICT_LINE:
        failures.append(f"verdict line wrong: {lines[-1] if lines else ''!r}")
    _report(
        8, "cli-golden",
        failures,
        "compare of the bundled level-8 pair reproduces the golden file "
        "byte for byte with the exact verdict line",
    )

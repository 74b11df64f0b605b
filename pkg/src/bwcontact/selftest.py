"""Independent oracle suites exercising every computational claim.

Each suite checks one layer of the package against a deliberately different
computation: a sweep-based brute force for quotient divisibility, direct
generator enumeration for residue-class emptiness, a divisor sieve for the
counting functions, and exhaustive small-parameter scans for the decision
table. The CLI `selftest` command runs all suites; the acceptance tests
reuse them with their own (larger) parameters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

from .algebra import (
    DegreeSpectrum,
    GeneratorIndex,
    QbStatus,
    deg_q,
    qb_members_bruteforce,
    qb_status,
)
from .geography import (
    Catalog,
    Q_lower_bound,
    Q_upper_bound,
    contact_count_report,
    count_N,
    count_N_prime,
    realize_level,
)
from .isomorphism import Decision, build_witness, decide
from .lattice import divisibility, dot, quotient_divisibility
from .manifolds import (
    SymplecticFourManifold,
    barden_sum_name,
    boothby_wang,
    validate,
)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    MAX_RECORDED = 12

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition and len(self.failures) < self.MAX_RECORDED:
            self.failures.append(message)

    def summary(self) -> str:
        state = "ok" if self.ok else f"FAILED ({len(self.failures)} recorded)"
        return f"suite {self.name}: {state}, {self.cases} checks"


def _is_integer_multiple(r: tuple[int, ...], w: tuple[int, ...]) -> bool:
    i = next((idx for idx, e in enumerate(w) if e != 0), None)
    if i is None:
        raise ValueError("w must be nonzero")
    if r[i] % w[i] != 0:
        return False
    t = r[i] // w[i]
    return all(rj == t * wj for rj, wj in zip(r, w))


def oracle_quotient_divisibility(
    c: tuple[int, ...], w: tuple[int, ...]
) -> int:
    """Brute-force the largest d with c = d*R + gamma*w, R not multiple of w.

    Sweeps gamma over a provably sufficient window: the answer d* divides
    every 2x2 minor of (c, w), so d* <= 2*max|c|*max|w|, and gamma in an
    optimal decomposition can be reduced modulo d* (replace R by R + t*w),
    so |gamma| <= max|c|*max|w| suffices. For each gamma the only candidate
    is gcd(c - gamma*w): any valid d at this gamma divides it, and it is
    itself valid unless the residual is a multiple of w, which would mean
    c is a multiple of w (answer 0, caught by the exact-hit test).
    """
    mc = max((abs(e) for e in c), default=0)
    mw = max(abs(e) for e in w)
    bound = mc * mw + 1
    best = 0
    for gamma in range(-bound, bound + 1):
        diff = tuple(ci - gamma * wi for ci, wi in zip(c, w))
        if all(e == 0 for e in diff):
            return 0
        g = gcd(*diff)
        residual = tuple(e // g for e in diff)
        if not _is_integer_multiple(residual, w):
            best = max(best, g)
    return best


def _random_indivisible(rng: random.Random, rank: int, bound: int) -> tuple:
    while True:
        w = tuple(rng.randint(-bound, bound) for _ in range(rank))
        if divisibility(w) == 1:
            return w


def suite_quotient_divisibility(
    seed: int = 20240214, cases: int = 1000,
    rank_max: int = 5, entry_bound: int = 20,
) -> SuiteResult:
    """Random (c, w) pairs against the gamma-sweep oracle."""
    result = SuiteResult("quotient-divisibility-oracle")
    rng = random.Random(seed)
    for _ in range(cases):
        rank = rng.randint(1, rank_max)
        w = _random_indivisible(rng, rank, entry_bound)
        if rng.random() < 0.15:
            # force the degenerate direction: c a multiple of w
            gamma = rng.randint(-entry_bound, entry_bound)
            c = tuple(gamma * wi for wi in w)
            if max((abs(e) for e in c), default=0) > entry_bound:
                c = w
        else:
            c = tuple(
                rng.randint(-entry_bound, entry_bound) for _ in range(rank)
            )
        got = quotient_divisibility(c, w)
        want = oracle_quotient_divisibility(c, w)
        result.check(
            got == want,
            f"quotient_divisibility{(c, w)} = {got}, oracle says {want}",
        )
    return result


def suite_adapted_arithmetic(
    k_max: int = 10, sigma_bound: int = 10, m_max: int = 10
) -> SuiteResult:
    """Adapted-coordinate formula d = k*|sigma_2| and level realization."""
    result = SuiteResult("adapted-coordinates-arithmetic")
    for k in range(1, k_max + 1):
        for s1 in range(-sigma_bound, sigma_bound + 1):
            for s2 in range(-sigma_bound, sigma_bound + 1):
                if gcd(s1, s2) != 1:
                    continue
                c = (k, 0)
                w = (s1, s2)
                got = quotient_divisibility(c, w)
                result.check(
                    got == k * abs(s2),
                    f"rank 2: qd((k,0),{w}) = {got} != {k}*|{s2}|",
                )
                # zero-padding to higher rank must not change the answer
                got4 = quotient_divisibility((k, 0, 0, 0), (s1, s2, 0, 0))
                result.check(
                    got4 == k * abs(s2),
                    f"rank 4 padding: {got4} != {k * abs(s2)}",
                )
    for k in range(1, k_max + 1):
        desc = SymplecticFourManifold(
            name=f"adapted-k{k}",
            b2=4,
            b2_plus=1,
            c1=(k, 0, 0, 0),
            omega=(0, 0, 0, 1),
            spin=(k % 2 == 0),
        )
        for m in range(1, m_max + 1):
            realized = realize_level(desc, m)
            result.check(
                realized.level == m * k,
                f"realize_level(k={k}, m={m}) gave {realized.level}",
            )
            result.check(
                realized.omega_adapted == (1, m, 0, 0),
                f"omega_adapted wrong for k={k}, m={m}",
            )
            oracle = oracle_quotient_divisibility(
                (k, 0, 0, 0), realized.omega_adapted
            )
            result.check(
                oracle == m * k,
                f"oracle disputes realized level k={k}, m={m}: {oracle}",
            )
    return result


def corpus_descriptors(
    seed: int = 20240214, cases: int = 300
) -> list[SymplecticFourManifold]:
    """Deterministic descriptor corpus: edge cases plus random instances."""
    corpus: list[SymplecticFourManifold] = [
        # the two bundled level-8 examples
        SymplecticFourManifold(
            "elliptic-b22-dk4", 22, 3,
            (4,) + (0,) * 21, (1, 2) + (0,) * 20, True,
        ),
        SymplecticFourManifold(
            "elliptic-b22-dk8", 22, 3,
            (8,) + (0,) * 21, (1, 1) + (0,) * 20, True,
        ),
        # rank 1: level is always 0
        SymplecticFourManifold("rank1-even", 1, 1, (4,), (1,), True),
        SymplecticFourManifold("rank1-odd", 1, 1, (3,), (1,), False),
        SymplecticFourManifold("rank1-zero", 1, 1, (0,), (1,), True),
        # c1 proportional to omega: level 0 at higher rank
        SymplecticFourManifold(
            "proportional", 3, 1, (3, 6, -3), (1, 2, -1), False
        ),
        SymplecticFourManifold("zero-c1", 2, 1, (0, 0), (2, 3), True),
    ]
    rng = random.Random(seed)
    while len(corpus) < cases:
        b2 = rng.randint(2, 6)
        omega = _random_indivisible(rng, b2, 9)
        if rng.random() < 0.2:
            gamma = rng.randint(-5, 5)
            c1 = tuple(gamma * wi for wi in omega)
        else:
            c1 = tuple(rng.randint(-9, 9) for _ in range(b2))
        spin = all(e % 2 == 0 for e in c1)
        b2_plus = rng.choice([v for v in range(1, b2 + 1, 2)])
        corpus.append(
            SymplecticFourManifold(
                name=f"random-{len(corpus)}",
                b2=b2, b2_plus=b2_plus, c1=c1, omega=omega, spin=spin,
            )
        )
    for m in corpus:
        validate(m)
    return corpus


def suite_classification_corpus(
    seed: int = 20240214, cases: int = 300
) -> SuiteResult:
    """gcd(Delta, level) = d(K), parity of the level, Barden consistency."""
    result = SuiteResult("classification-corpus")
    for m in corpus_descriptors(seed, cases):
        x = boothby_wang(m)
        result.check(
            gcd(x.delta, x.level) == x.dK,
            f"{m.name}: gcd({x.delta}, {x.level}) != d(K) = {x.dK}",
        )
        result.check(
            x.spin_X == (x.level % 2 == 0),
            f"{m.name}: spin(X) = {x.spin_X} but level = {x.level}",
        )
        if x.dK == 0:
            result.check(x.level == 0, f"{m.name}: d(K) = 0 with level > 0")
        else:
            result.check(
                x.level % x.dK == 0,
                f"{m.name}: level {x.level} not multiple of d(K) {x.dK}",
            )
        result.check(x.b2_X == m.b2 - 1, f"{m.name}: b2(X) wrong")
        want_name = (
            barden_sum_name(x.b2_X, twisted=False)
            if x.spin_X
            else barden_sum_name(x.b2_X - 1, twisted=True)
        )
        result.check(x.barden == want_name, f"{m.name}: barden name wrong")
        oracle = oracle_quotient_divisibility(m.c1, m.omega)
        result.check(
            x.level == oracle,
            f"{m.name}: level {x.level} but oracle says {oracle}",
        )
        result.check(
            divisibility(m.c1) == x.dK, f"{m.name}: d(K) mismatch"
        )
    return result


def suite_residue_tables(d_max: int = 30, delta_max: int = 30) -> SuiteResult:
    """qb_status against direct generator enumeration with k <= 2d."""
    result = SuiteResult("residue-tables")
    for d in range(1, d_max + 1):
        for delta in range(0, delta_max + 1):
            d_k = gcd(delta, d)
            for b in range(d):
                status = qb_status(b, d, d_k)
                members = qb_members_bruteforce(b, d, delta, 3, 2 * d)
                result.check(
                    (status is QbStatus.INFINITE) == bool(members),
                    f"(d={d}, delta={delta}, b={b}): status {status.value} "
                    f"but {len(members)} members with k <= {2 * d}",
                )
                if d_k >= 4 and b == 2:
                    result.check(
                        status is QbStatus.EMPTY,
                        f"(d={d}, dK={d_k}): Q_2 must be empty",
                    )
    return result


def synthetic_spectrum(
    level: int, delta: int, b2m: int = 2, k_max: int = 50, name: str = "synthetic"
) -> DegreeSpectrum:
    """Spectrum with prescribed (level, delta) without a full descriptor."""
    a = b2m + 1
    q_degrees = tuple(
        (GeneratorIndex(k, i), deg_q(k, i, delta, b2m))
        for k in range(1, k_max + 1)
        for i in range(0, a + 1)
    )
    z_degrees = (-2 * level,) + (0,) * (b2m - 2) if b2m >= 2 else ()
    return DegreeSpectrum(
        source_name=name, level=level, delta=delta, a=a, k_max=k_max,
        q_degrees=q_degrees, z_degrees=z_degrees,
    )


def _divisor_pool(d: int, cap: int) -> list[int]:
    if d == 0:
        return list(range(0, cap + 1))
    return [k for k in range(1, d + 1) if d % k == 0]


def suite_decision_table(d_max: int = 24, k_max: int = 50) -> SuiteResult:
    """Exhaustive decision scan: truth table, symmetry, transitivity,
    distinguishers for refutations, degree-exact witnesses for matches."""
    result = SuiteResult("decision-table")
    for d in range(0, d_max + 1):
        pool = _divisor_pool(d, d_max)
        for dk1 in pool:
            for dk2 in pool:
                rep = decide(d, dk1, dk2)
                expected_iso = (
                    (d >= 1 and dk1 <= 3 and dk2 <= 3)
                    or (d == 0 and dk1 == dk2)
                    or (d >= 4 and dk1 == dk2 >= 4)
                )
                result.check(
                    (rep.decision is Decision.ISOMORPHIC) == expected_iso,
                    f"decide({d},{dk1},{dk2}) = {rep.decision.value}",
                )
                mirrored = decide(d, dk2, dk1)
                result.check(
                    mirrored.decision == rep.decision,
                    f"decide({d},{dk1},{dk2}) not symmetric",
                )
                if rep.decision is Decision.NOT_ISOMORPHIC and d >= 4:
                    b = rep.distinguisher_residue
                    ok = b is not None and qb_status(b, d, dk1) != qb_status(
                        b, d, dk2
                    )
                    result.check(
                        ok,
                        f"decide({d},{dk1},{dk2}): distinguisher b={b} "
                        f"does not separate",
                    )
                if rep.decision is Decision.NOT_ISOMORPHIC and d == 0:
                    result.check(
                        rep.distinguisher_lowest_degrees
                        == (-2 + 2 * dk1, -2 + 2 * dk2),
                        f"decide(0,{dk1},{dk2}): lowest degrees wrong",
                    )
                if rep.decision is Decision.ISOMORPHIC:
                    left = synthetic_spectrum(d, dk1, k_max=k_max)
                    right = synthetic_spectrum(d, dk2, k_max=k_max)
                    witness = build_witness(left, right)
                    result.check(
                        witness.witness is not None and len(witness.witness) > 0,
                        f"({d},{dk1},{dk2}): empty witness",
                    )
                    exact = all(
                        deg_q(w.source.k, w.source.i, dk1, 2)
                        == -2 * d * w.alpha
                        + deg_q(w.target.k, w.target.i, dk2, 2)
                        for w in witness.witness
                    )
                    result.check(
                        exact, f"({d},{dk1},{dk2}): witness degree equation fails"
                    )
            # reflexivity across the pool
            result.check(
                decide(d, dk1, dk1).decision is Decision.ISOMORPHIC,
                f"decide({d},{dk1},{dk1}) not reflexive",
            )
        # transitivity of the induced relation at fixed level
        for a in pool:
            for b in pool:
                for c in pool:
                    iso_ab = decide(d, a, b).decision is Decision.ISOMORPHIC
                    iso_bc = decide(d, b, c).decision is Decision.ISOMORPHIC
                    iso_ac = decide(d, a, c).decision is Decision.ISOMORPHIC
                    if iso_ab and iso_bc:
                        result.check(
                            iso_ac, f"transitivity fails at d={d}: {a},{b},{c}"
                        )
    return result


def suite_divisor_counts(limit: int = 10000) -> SuiteResult:
    """count_N / count_N_prime against an independent divisor sieve."""
    result = SuiteResult("divisor-counts")
    n4 = [0] * (limit + 1)
    n4_odd = [0] * (limit + 1)
    for k in range(4, limit + 1):
        for mult in range(k, limit + 1, k):
            n4[mult] += 1
            if k % 2 == 1:
                n4_odd[mult] += 1
    for d in range(1, limit + 1):
        result.check(count_N(d) == n4[d], f"N({d}) != sieve {n4[d]}")
        result.check(
            count_N_prime(d) == n4_odd[d], f"N'({d}) != sieve {n4_odd[d]}"
        )
    return result


def suite_geography_bounds() -> SuiteResult:
    """Catalog-driven lower bounds against the divisor counts."""
    result = SuiteResult("geography-bounds")
    cat = Catalog.default()
    for d in range(5, 100, 2):
        result.check(
            Q_lower_bound(10, d, cat) == count_N(d),
            f"Q_lower_bound(10, {d}) != N({d})",
        )
    for d in range(4, 101, 2):
        result.check(
            Q_lower_bound(22, d, cat) == count_N(d),
            f"Q_lower_bound(22, {d}) != N({d})",
        )
        result.check(
            Q_lower_bound(10, d, cat) >= count_N_prime(d),
            f"Q_lower_bound(10, {d}) < N'({d})",
        )
        # rank 10 realizes odd divisors only, so the bound is in fact sharp
        result.check(
            Q_lower_bound(10, d, cat) == count_N_prime(d),
            f"Q_lower_bound(10, {d}) != N'({d})",
        )
    for d in range(4, 101):
        # rank not matching any catalog family: bound degenerates to zero
        result.check(
            Q_lower_bound(11, d, cat) == 0, f"Q_lower_bound(11, {d}) != 0"
        )
    result.check(Q_upper_bound(21, 12) == (3, 0), "Q_upper_bound(21,12)")
    result.check(Q_upper_bound(22, 12) == (3, None), "Q_upper_bound(22,12)")
    result.check(Q_upper_bound(9, 7) == (1, None), "Q_upper_bound(9,7)")
    for n in (1, 2, 3):
        for d in range(5, 30, 2):
            r = 12 * n - 2
            report = contact_count_report(r, d, cat)
            result.check(
                report.manifold == barden_sum_name(r - 2, twisted=True),
                f"report({r},{d}): manifold name",
            )
            result.check(
                report.lower_bound == count_N(d),
                f"report({r},{d}): lower bound",
            )
        for d in range(4, 30, 2):
            r = 24 * n - 2
            report = contact_count_report(r, d, cat)
            result.check(
                report.manifold == barden_sum_name(r - 1, twisted=False),
                f"report({r},{d}): manifold name",
            )
            result.check(
                report.lower_bound == count_N(d),
                f"report({r},{d}): lower bound",
            )
    return result


def run_all(
    seed: int = 20240214,
    lattice_cases: int = 1000,
    corpus_cases: int = 300,
    divisor_limit: int = 10000,
) -> list[SuiteResult]:
    return [
        suite_quotient_divisibility(seed=seed, cases=lattice_cases),
        suite_adapted_arithmetic(),
        suite_classification_corpus(seed=seed, cases=corpus_cases),
        suite_residue_tables(),
        suite_decision_table(),
        suite_divisor_counts(limit=divisor_limit),
        suite_geography_bounds(),
    ]

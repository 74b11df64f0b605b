"""Counting contact structures through the symplectic geography catalog.

A simply connected 5-manifold X = #(r-1) S2xS3 (or its non-spin twin) of
level d carries one Boothby-Wang contact structure for every symplectic M
with b2(M) = r, indivisible [omega], and a compatible canonical divisibility
k = d(K); structures coming from k and k' with k != k' and max(k, k') >= 4
have non-isomorphic contact homology at equal level. So the number Q(r, d)
of pairwise distinguishable level-d structures obtained this way is bounded
below by the number of realizable divisors k >= 4 of d, and above by

    N(d)  = #{k : k | d, k >= 4}
    N'(d) = #{k : k | d, k >= 4, k odd}   (the bound when only odd k can
                                           occur, e.g. r not 2 mod 4 forces
                                           every even-k candidate to be spin
                                           with b2 = 2 mod 4, impossible)

Realizability is looked up in a catalog of known symplectic families. The
built-in catalog holds the two families used for the counting corollaries:

  * homotopy elliptic surfaces: b2 = 12m - 2, b2+ = 2m - 1, chi_h = m,
    c1^2 = 0; every divisibility k >= 1 occurs, except that m odd forces
    k odd (b2+ = 2m - 1 = 1 mod 4 obstructs even canonical divisibility);
  * Dolgachev surfaces (the m = 1 torus-fibration case, listed separately
    because its realization argument is different): b2 = 10, b2+ = 1,
    k odd only.

A user catalog (JSON list of rules) can replace the built-in one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Sequence

from .lattice import complete_to_basis, divisibility, quotient_divisibility
from .manifolds import SymplecticFourManifold, barden_sum_name, validate


def _check_positive(d: int, name: str = "d") -> None:
    if d < 1:
        raise ValueError(f"{name} = {d} must be >= 1")


def _divisors(d: int) -> list[int]:
    _check_positive(d)
    small, large = [], []
    i = 1
    while i * i <= d:
        if d % i == 0:
            small.append(i)
            if i != d // i:
                large.append(d // i)
        i += 1
    return small + large[::-1]


def count_N(d: int) -> int:
    """Number of divisors k >= 4 of d."""
    return sum(1 for k in _divisors(d) if k >= 4)


def count_N_prime(d: int) -> int:
    """Number of odd divisors k >= 4 of d."""
    return sum(1 for k in _divisors(d) if k >= 4 and k % 2 == 1)


@dataclass(frozen=True)
class GeographyEntry:
    """One catalog manifold realizing divisibility k at second Betti rank b2."""

    family: str
    label: str
    b2: int
    b2_plus: int
    k: int
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "label": self.label,
            "b2": self.b2,
            "b2_plus": self.b2_plus,
            "k": self.k,
            "note": self.note,
        }


_RULE_KINDS = ("homotopy_elliptic", "dolgachev", "explicit")


class Catalog:
    """A list of realizability rules, queried by (r, k).

    Rules are JSON objects discriminated by "kind". The parametric families
    are implemented in code (their scan logic is theorem content); the
    "explicit" kind admits fixed user entries:

      {"kind": "explicit", "family": str, "b2": int, "b2_plus": int,
       "dK_parity": "odd" | "even" | "any"}
    """

    def __init__(self, rules: Sequence[dict[str, Any]]):
        for rule in rules:
            kind = rule.get("kind")
            if kind not in _RULE_KINDS:
                raise ValueError(
                    f"unknown catalog rule kind {kind!r}; "
                    f"expected one of {_RULE_KINDS}"
                )
            if kind == "explicit":
                missing = {"family", "b2", "b2_plus", "dK_parity"} - set(rule)
                if missing:
                    raise ValueError(
                        f"explicit catalog rule missing {sorted(missing)}"
                    )
                if rule["dK_parity"] not in ("odd", "even", "any"):
                    raise ValueError(
                        f"dK_parity must be odd/even/any, "
                        f"got {rule['dK_parity']!r}"
                    )
        self.rules = list(rules)

    @classmethod
    def default(cls) -> "Catalog":
        data = (
            resources.files("bwcontact").joinpath("data/catalog.json")
            .read_text(encoding="utf-8")
        )
        return cls(json.loads(data))

    @classmethod
    def from_path(cls, path: str | Path) -> "Catalog":
        with open(path, encoding="utf-8") as fh:
            rules = json.load(fh)
        if not isinstance(rules, list):
            raise ValueError(f"{path}: catalog must be a JSON list of rules")
        return cls(rules)

    def realizable(self, r: int, k: int) -> tuple[GeographyEntry, ...]:
        """Catalog manifolds with b2 = r realizing canonical divisibility k."""
        _check_positive(r, "r")
        _check_positive(k, "k")
        found: list[GeographyEntry] = []
        for rule in self.rules:
            kind = rule["kind"]
            if kind == "homotopy_elliptic":
                # b2 = 12m - 2 with m >= 1; m odd forces odd k
                if (r + 2) % 12 != 0:
                    continue
                m = (r + 2) // 12
                if m < 1:
                    continue
                if m % 2 == 1 and k % 2 == 0:
                    continue
                found.append(
                    GeographyEntry(
                        family="homotopy elliptic surface",
                        label=f"chi_h={m}",
                        b2=12 * m - 2,
                        b2_plus=2 * m - 1,
                        k=k,
                        note="c1^2 = 0" + (", k odd only" if m % 2 else ""),
                    )
                )
            elif kind == "dolgachev":
                if r != 10 or k % 2 == 0:
                    continue
                found.append(
                    GeographyEntry(
                        family="Dolgachev surface",
                        label="torus fibration",
                        b2=10,
                        b2_plus=1,
                        k=k,
                        note="k odd only",
                    )
                )
            else:
                if r != int(rule["b2"]):
                    continue
                parity = rule["dK_parity"]
                if parity == "odd" and k % 2 == 0:
                    continue
                if parity == "even" and k % 2 == 1:
                    continue
                found.append(
                    GeographyEntry(
                        family=str(rule["family"]),
                        label=str(rule.get("label", rule["family"])),
                        b2=int(rule["b2"]),
                        b2_plus=int(rule["b2_plus"]),
                        k=k,
                        note=str(rule.get("note", "")),
                    )
                )
        return tuple(found)


def catalog_realizable(
    r: int, k: int, catalog: Catalog | None = None
) -> tuple[GeographyEntry, ...]:
    return (catalog or Catalog.default()).realizable(r, k)


def Q_lower_bound(r: int, d: int, catalog: Catalog | None = None) -> int:
    """Number of divisors k >= 4 of d realizable at rank r in the catalog.

    Each realizable k contributes a level-d Boothby-Wang structure on the
    rank r - 1 connected sum, and distinct k >= 4 give non-isomorphic
    contact homology, so this counts pairwise distinguishable structures.
    """
    cat = catalog or Catalog.default()
    _check_positive(d)
    return sum(
        1 for k in _divisors(d) if k >= 4 and cat.realizable(r, k)
    )


def Q_upper_bound(r: int, d: int) -> tuple[int, int | None]:
    """(N(d), refined) upper bounds for Q(r, d).

    The refined bound applies when d is even but r != 2 mod 4: an even
    realizable k would force a spin manifold, whose b2 is 2 mod 4 by
    Rokhlin's theorem (signature divisible by 16, b2+ odd), so only odd k
    remain and N'(d) bounds the count. None means no refinement applies.
    """
    _check_positive(r, "r")
    refined = count_N_prime(d) if d % 2 == 0 and r % 4 != 2 else None
    return count_N(d), refined


@dataclass(frozen=True)
class RealizedLevel:
    """Result of realize_level: a symplectic class achieving a target level.

    omega_adapted is expressed in the adapted basis for c1/d(K) (first
    coordinate pairs to 1 with the primitive Chern covector). hypothesis
    records the geometric assumptions the realization needs but the
    descriptor cannot certify.
    """

    omega_adapted: tuple[int, ...]
    level: int
    hypothesis: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "omega_adapted": list(self.omega_adapted),
            "level": self.level,
            "hypothesis": self.hypothesis,
        }


def realize_level(m: SymplecticFourManifold, target_m: int) -> RealizedLevel:
    """Symplectic class of level m * d(K) on the manifold of a descriptor.

    In coordinates adapted to the primitive part of c1 (so c1 reads
    (k, 0, ..., 0) with k = d(K)), the class omega' = (1, m, 0, ..., 0) is
    indivisible and has quotient divisibility m * k; the achieved level is
    recomputed through quotient_divisibility and must agree with the
    arithmetic prediction. Requires b2 >= 2 and d(K) >= 1 (a torsion c1
    realizes only level 0).
    """
    validate(m)
    if target_m < 1:
        raise ValueError(f"target multiplier {target_m} must be >= 1")
    if m.b2 < 2:
        raise ValueError("b2 >= 2 required: rank one admits only level 0")
    k = divisibility(m.c1)
    if k == 0:
        raise ValueError("c1 = 0 admits only level 0; no positive level")
    primitive = tuple(c // k for c in m.c1)
    basis = complete_to_basis(primitive)
    c1_adapted = basis.express(m.c1)
    assert c1_adapted[0] == k and all(v == 0 for v in c1_adapted[1:])
    omega_new = (1, target_m) + (0,) * (m.b2 - 2)
    predicted = target_m * k
    recomputed = quotient_divisibility(c1_adapted, omega_new)
    if recomputed != predicted:
        raise RuntimeError(
            f"internal: realized level {recomputed} != predicted {predicted}"
        )
    return RealizedLevel(
        omega_adapted=omega_new,
        level=predicted,
        hypothesis=(
            "assumes the descriptor's manifold is minimal symplectic with "
            "b2+ > 1, or is a Dolgachev-type torus fibration when b2+ = 1; "
            "these properties are not derivable from the descriptor and are "
            "not checked"
        ),
    )


@dataclass(frozen=True)
class CountReport:
    """Lower/upper bounds on distinguishable level-d structures at rank r."""

    r: int
    level: int
    manifold: str
    spin_X: bool
    lower_bound: int
    upper_bound_N: int
    upper_bound_refined: int | None
    exact: bool
    realizations: tuple[tuple[int, tuple[GeographyEntry, ...]], ...]

    def __post_init__(self) -> None:
        cap = (
            self.upper_bound_N
            if self.upper_bound_refined is None
            else min(self.upper_bound_N, self.upper_bound_refined)
        )
        if not 0 <= self.lower_bound <= cap:
            raise ValueError(
                f"bounds out of order: lower {self.lower_bound}, "
                f"N {self.upper_bound_N}, refined {self.upper_bound_refined}"
            )
        if self.exact != (self.lower_bound == cap):
            raise ValueError("exact flag contradicts the bounds")

    def to_dict(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "level": self.level,
            "manifold": self.manifold,
            "spin_X": self.spin_X,
            "lower_bound": self.lower_bound,
            "upper_bound_N": self.upper_bound_N,
            "upper_bound_refined": self.upper_bound_refined,
            "exact": self.exact,
            "realizations": [
                {"k": k, "entries": [e.to_dict() for e in entries]}
                for k, entries in self.realizations
            ],
        }


def contact_count_report(
    r: int, d: int, catalog: Catalog | None = None
) -> CountReport:
    """Bound the number of distinguishable level-d contact structures.

    The underlying X is determined by r and the parity of d: spin (all
    trivial summands) for even d, non-spin (one twisted summand) for odd d.
    Requires r >= 2 and d >= 1.
    """
    if r < 2:
        raise ValueError(f"r = {r} must be >= 2 (b2(X) = r - 1 >= 1)")
    _check_positive(d)
    cat = catalog or Catalog.default()
    spin_x = d % 2 == 0
    manifold = (
        barden_sum_name(r - 1, twisted=False)
        if spin_x
        else barden_sum_name(r - 2, twisted=True)
    )
    realizations = tuple(
        (k, cat.realizable(r, k))
        for k in _divisors(d)
        if k >= 4 and cat.realizable(r, k)
    )
    lower = len(realizations)
    upper_n, refined = Q_upper_bound(r, d)
    cap = upper_n if refined is None else min(upper_n, refined)
    return CountReport(
        r=r,
        level=d,
        manifold=manifold,
        spin_X=spin_x,
        lower_bound=lower,
        upper_bound_N=upper_n,
        upper_bound_refined=refined,
        exact=lower == cap,
        realizations=realizations,
    )

"""Symplectic 4-manifold descriptors and their Boothby-Wang 5-manifolds.

A descriptor records the classification-relevant data of a closed simply
connected symplectic 4-manifold (M, omega) with integral indivisible [omega]:
second Betti number b2, b2^+, the first Chern class c1 and the symplectic
class omega as integer vectors in a fixed basis of H^2(M; Z) = Z^b2, and the
spin flag. The Boothby-Wang construction produces the total space X of the
circle bundle with Euler class [omega], carrying the contact structure xi
induced by the connection form; this module computes the classifying
invariants of (X, xi):

  b2(X) = b2(M) - 1            (H_2(X) is torsion free)
  level d(xi) = divisibility of c1(xi) in H^2(X), computed as the quotient
      divisibility of c1(M) modulo Z*omega
  Delta = value of c1 on a class A_0 with omega(A_0) = 1, canonicalized
      modulo the level
  d(K) = divisibility of the canonical class (equivalently of c1)
  spin(X) and the Barden diffeomorphism name.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Any, Mapping, Sequence

from .lattice import (
    Covector,
    as_int_tuple,
    divisibility,
    dot,
    quotient_divisibility,
    solve_unit,
)

# Connected-sum building blocks for simply connected 5-manifolds with
# torsion-free H_2 and vanishing Barden i-invariant obstructions: the trivial
# and twisted S^3 bundles over S^2.
TRIVIAL_BUNDLE = "S²×S³"          # S2xS3
TWISTED_BUNDLE = "S²×̃S³"    # S2x~S3, the nontrivial bundle
FIVE_SPHERE = "S⁵"


class DescriptorError(ValueError):
    """Invalid descriptor data. `code` is a stable machine-readable tag."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class SymplecticFourManifold:
    """Input descriptor. Entries of c1 and omega are coordinates in Z^b2."""

    name: str
    b2: int
    b2_plus: int
    c1: Covector
    omega: Covector
    spin: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "b2": self.b2,
            "b2_plus": self.b2_plus,
            "c1": list(self.c1),
            "omega": list(self.omega),
            "spin": self.spin,
        }


def validate(m: SymplecticFourManifold) -> SymplecticFourManifold:
    """Check all descriptor invariants; return the descriptor unchanged.

    Raises DescriptorError with a distinct code per failure:

      b2_not_positive     b2 < 1
      length_mismatch     len(c1) or len(omega) differs from b2
      omega_divisible     [omega] not indivisible (gcd of entries != 1;
                          the zero covector has gcd 0 and lands here too)
      spin_parity_clash   spin flag contradicts the parity of c1 (for simply
                          connected M, w_2 is the mod 2 reduction of c_1, so
                          spin must hold exactly when every c1 entry is even)
      b2_plus_out_of_range  not 1 <= b2_plus <= b2
      b2_plus_even        b2^+ of a closed symplectic 4-manifold is odd
    """
    if m.b2 < 1:
        raise DescriptorError("b2_not_positive", f"b2 = {m.b2} must be >= 1")
    if len(m.c1) != m.b2 or len(m.omega) != m.b2:
        raise DescriptorError(
            "length_mismatch",
            f"c1 has length {len(m.c1)}, omega has length {len(m.omega)}, "
            f"b2 = {m.b2}; all three must agree",
        )
    if divisibility(m.omega) != 1:
        raise DescriptorError(
            "omega_divisible",
            f"omega = {list(m.omega)} has divisibility "
            f"{divisibility(m.omega)}; the symplectic class must be "
            f"indivisible for the circle bundle to be simply connected",
        )
    c1_even = all(e % 2 == 0 for e in m.c1)
    if m.spin != c1_even:
        raise DescriptorError(
            "spin_parity_clash",
            f"spin = {m.spin} but c1 = {list(m.c1)} is "
            f"{'even' if c1_even else 'not even'}; w_2 is the mod 2 "
            f"reduction of c_1 on a simply connected 4-manifold",
        )
    if not 1 <= m.b2_plus <= m.b2:
        raise DescriptorError(
            "b2_plus_out_of_range",
            f"b2_plus = {m.b2_plus} must satisfy 1 <= b2_plus <= b2 = {m.b2}",
        )
    if m.b2_plus % 2 == 0:
        raise DescriptorError(
            "b2_plus_even",
            f"b2_plus = {m.b2_plus} is even; closed symplectic 4-manifolds "
            f"have odd b2^+",
        )
    return m


def descriptor_from_dict(data: Mapping[str, Any]) -> SymplecticFourManifold:
    """Build and validate a descriptor from parsed JSON."""
    required = {"name", "b2", "b2_plus", "c1", "omega", "spin"}
    missing = required - set(data)
    if missing:
        raise DescriptorError(
            "missing_field", f"missing fields: {sorted(missing)}"
        )
    extra = set(data) - required
    if extra:
        raise DescriptorError("unknown_field", f"unknown fields: {sorted(extra)}")
    name = data["name"]
    if not isinstance(name, str) or not name:
        raise DescriptorError("bad_field", "name must be a nonempty string")
    if not isinstance(data["spin"], bool):
        raise DescriptorError("bad_field", "spin must be a boolean")
    try:
        b2 = int(data["b2"])
        b2_plus = int(data["b2_plus"])
        c1 = as_int_tuple(data["c1"])
        omega = as_int_tuple(data["omega"])
    except (TypeError, ValueError) as exc:
        raise DescriptorError("bad_field", f"non-integer entry: {exc}") from exc
    return validate(
        SymplecticFourManifold(
            name=name, b2=b2, b2_plus=b2_plus, c1=c1, omega=omega,
            spin=bool(data["spin"]),
        )
    )


def load_descriptor(path: str | Path) -> SymplecticFourManifold:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DescriptorError("bad_json", f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise DescriptorError("bad_json", f"{path}: top level must be an object")
    return descriptor_from_dict(data)


def barden_sum_name(trivial_count: int, twisted: bool) -> str:
    """Barden name of #k(S2xS3) (# S2x~S3): the empty connected sum is S^5."""
    if trivial_count < 0:
        raise ValueError("summand count must be >= 0")
    parts: list[str] = []
    if trivial_count == 1:
        parts.append(TRIVIAL_BUNDLE)
    elif trivial_count > 1:
        parts.append(f"#{trivial_count} {TRIVIAL_BUNDLE}")
    if twisted:
        parts.append(TWISTED_BUNDLE)
    if not parts:
        return FIVE_SPHERE
    return " # ".join(parts)


@dataclass(frozen=True)
class FiveManifoldContact:
    """Classifying data of a Boothby-Wang contact 5-manifold (X, xi).

    Consistency facts enforced on construction:
      * spin(X) holds exactly when the level is even;
      * the level is a multiple of d(K) (with 0 | 0 the only way d(K) = 0);
      * gcd(Delta, level) = d(K), under the convention gcd(x, 0) = x;
      * Delta is the canonical representative: in [0, level) when level > 0,
        the absolute value when level = 0.
    """

    source_name: str
    b2_X: int
    barden: str
    spin_X: bool
    level: int
    delta: int
    dK: int

    def __post_init__(self) -> None:
        if self.b2_X < 0:
            raise ValueError("b2(X) must be >= 0")
        if self.level < 0 or self.delta < 0 or self.dK < 0:
            raise ValueError("level, Delta, d(K) are nonnegative")
        if self.spin_X != (self.level % 2 == 0):
            raise ValueError(
                f"spin(X) = {self.spin_X} inconsistent with level {self.level}"
            )
        if self.dK == 0:
            if self.level != 0:
                raise ValueError("d(K) = 0 forces level 0")
        elif self.level % self.dK != 0:
            raise ValueError(
                f"level {self.level} is not a multiple of d(K) = {self.dK}"
            )
        if gcd(self.delta, self.level) != self.dK:
            raise ValueError(
                f"gcd(Delta, level) = gcd({self.delta}, {self.level}) != "
                f"d(K) = {self.dK}"
            )
        if self.level > 0 and not 0 <= self.delta < self.level:
            raise ValueError(
                f"Delta = {self.delta} not reduced modulo level {self.level}"
            )

    def to_dict(self) -> dict[str, Any]:
        return {
            "source_name": self.source_name,
            "b2_X": self.b2_X,
            "barden": self.barden,
            "spin_X": self.spin_X,
            "level": self.level,
            "delta": self.delta,
            "dK": self.dK,
        }


def boothby_wang(m: SymplecticFourManifold) -> FiveManifoldContact:
    """Invariants of the Boothby-Wang bundle over a validated descriptor.

    The level is the quotient divisibility of c1 modulo Z*omega (pulling
    back along the bundle projection kills exactly Z*omega in H^2). Delta is
    c1 evaluated on any A_0 with omega(A_0) = 1; changing A_0 shifts Delta
    by a multiple of the level, so the reduced value is well defined. X is
    spin iff c1 is congruent to 0 or omega mod 2, which for a validated
    descriptor is decided by the descriptor parity data alone.
    """
    validate(m)
    level = quotient_divisibility(m.c1, m.omega)
    delta_raw = dot(m.c1, solve_unit(m.omega))
    delta = delta_raw % level if level > 0 else abs(delta_raw)
    d_k = divisibility(m.c1)
    spin_x = all(e % 2 == 0 for e in m.c1) or all(
        (c - w) % 2 == 0 for c, w in zip(m.c1, m.omega)
    )
    b2_x = m.b2 - 1
    if spin_x:
        barden = barden_sum_name(b2_x, twisted=False)
    else:
        # non-spin total space: one twisted summand absorbs w_2
        barden = barden_sum_name(b2_x - 1, twisted=True)
    return FiveManifoldContact(
        source_name=m.name,
        b2_X=b2_x,
        barden=barden,
        spin_X=spin_x,
        level=level,
        delta=delta,
        dK=d_k,
    )


def diffeomorphic(x: FiveManifoldContact, y: FiveManifoldContact) -> bool:
    """Barden's classification: b2 plus the spin type decide the manifold."""
    return x.b2_X == y.b2_X and x.spin_X == y.spin_X


def almost_contact_equivalent(
    x: FiveManifoldContact, y: FiveManifoldContact
) -> bool:
    """Same manifold and same level: the level classifies almost contact
    structures on these X up to equivalence."""
    return diffeomorphic(x, y) and x.level == y.level

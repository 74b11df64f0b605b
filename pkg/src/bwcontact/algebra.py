"""Generator-degree bookkeeping for the contact homology algebras.

For a Boothby-Wang contact manifold (X, xi) of level d over M with
b2(M) = b2M, the relevant graded algebra is generated, over a polynomial
ring on classes z_1..z_{b2M-1} of even nonpositive degrees, by classes
q_{k,i} indexed by an integer k >= 1 and i in {0, 1, ..., a} with
a = b2M + 1. Their degrees are determined by the level data alone:

    deg Delta_i = 0 (i = 0),  2 (1 <= i <= b2M),  4 (i = a = b2M + 1)
    deg q_{k,i} = deg Delta_i - 2 + 2*Delta*k
    deg z_n    = -2 * c1(B_n);  canonically (-2d, 0, ..., 0)

Since all degrees are even and deg z_1 = -2d, the useful invariant of a
generator is its residue class b = (deg/2) mod d; Q_b denotes the set of
q-generators in class b. Emptiness of Q_b depends only on d(K) =
gcd(Delta, d): the class is nonempty (and then infinite) exactly when d(K)
divides one of b-1, b, b+1, because deg Delta_i/2 - 1 ranges over
{-1, 0, 1} and Delta*k sweeps the multiples of d(K) modulo d.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Any, NamedTuple

from .manifolds import FiveManifoldContact


class GeneratorIndex(NamedTuple):
    k: int
    i: int


class QbStatus(enum.Enum):
    EMPTY = "empty"
    INFINITE = "infinite"


def deg_delta_i(i: int, b2M: int) -> int:
    if b2M < 1:
        raise ValueError(f"b2(M) = {b2M} must be >= 1")
    if i == 0:
        return 0
    if 1 <= i <= b2M:
        return 2
    if i == b2M + 1:
        return 4
    raise ValueError(f"index i = {i} out of range 0..{b2M + 1}")


def deg_q(k: int, i: int, delta: int, b2M: int) -> int:
    """Degree of the generator q_{k,i}. Requires k >= 1."""
    if k < 1:
        raise ValueError(f"k = {k} must be >= 1")
    return deg_delta_i(i, b2M) - 2 + 2 * delta * k


def _check_class_args(b: int, d: int) -> None:
    if d < 1:
        raise ValueError(f"residue classes need level d >= 1, got {d}")
    if not 0 <= b < d:
        raise ValueError(f"residue class b = {b} out of range 0..{d - 1}")


def qb_status(b: int, d: int, dK: int) -> QbStatus:
    """Emptiness of the generator class Q_b, decided by divisibility.

    Q_b is infinite when d(K) divides b-1, b, or b+1 (mod nothing: plain
    integer divisibility, and d(K) >= 1 here since d >= 1 and d(K) | d),
    else empty. Note every class is infinite when d(K) <= 3, since among
    three consecutive integers one is divisible by each of 1, 2, 3.
    """
    _check_class_args(b, d)
    if dK < 1 or d % dK != 0:
        raise ValueError(f"d(K) = {dK} must be a positive divisor of d = {d}")
    if (b - 1) % dK == 0 or b % dK == 0 or (b + 1) % dK == 0:
        return QbStatus.INFINITE
    return QbStatus.EMPTY


def qb_members_bruteforce(
    b: int, d: int, delta: int, b2M: int, k_max: int
) -> list[GeneratorIndex]:
    """All (k, i) with k <= k_max whose degree lies in class b, by direct scan.

    Deliberately independent of qb_status: enumerates degrees from the
    defining formula. A class that qb_status calls infinite is guaranteed a
    member with k <= 2d (the sequence Delta*k mod d is periodic with period
    dividing d), so k_max = 2d suffices as a witness bound.
    """
    _check_class_args(b, d)
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if gcd(delta, d) < 1:
        raise ValueError("need gcd(Delta, d) >= 1")
    members = []
    target = (2 * b) % (2 * d)
    for k in range(1, k_max + 1):
        for i in range(0, b2M + 2):
            if deg_q(k, i, delta, b2M) % (2 * d) == target:
                members.append(GeneratorIndex(k, i))
    return members


@dataclass(frozen=True)
class ResidueClassTable:
    """Status of every class Q_b, b = 0..d-1, for one (d, d(K)) pair."""

    level: int
    dK: int
    statuses: tuple[QbStatus, ...]

    def __post_init__(self) -> None:
        if len(self.statuses) != self.level:
            raise ValueError("need one status per residue class")
        for b, status in enumerate(self.statuses):
            if status != qb_status(b, self.level, self.dK):
                raise ValueError(f"status at b = {b} contradicts the criterion")

    def empty_classes(self) -> tuple[int, ...]:
        return tuple(
            b for b, s in enumerate(self.statuses) if s is QbStatus.EMPTY
        )

    def infinite_classes(self) -> tuple[int, ...]:
        return tuple(
            b for b, s in enumerate(self.statuses) if s is QbStatus.INFINITE
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "level": self.level,
            "dK": self.dK,
            "statuses": [s.value for s in self.statuses],
        }


def residue_table(d: int, dK: int) -> ResidueClassTable:
    return ResidueClassTable(
        level=d,
        dK=dK,
        statuses=tuple(qb_status(b, d, dK) for b in range(d)),
    )


@dataclass(frozen=True)
class DegreeSpectrum:
    """Truncated generator-degree data of one contact structure.

    q_degrees lists ((k, i), deg) for 1 <= k <= k_max, 0 <= i <= a, ordered
    by (k, i). z_degrees is the canonical tuple (-2*level, 0, ..., 0) of
    length a - 2 = b2(M) - 1. a = b2(M) + 1 ties the spectrum to the
    underlying manifold's rank.
    """

    source_name: str
    level: int
    delta: int
    a: int
    k_max: int
    q_degrees: tuple[tuple[GeneratorIndex, int], ...]
    z_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        b2m = self.a - 1
        if b2m < 1:
            raise ValueError("a = b2(M) + 1 must be >= 2")
        if self.k_max < 1:
            raise ValueError("k_max must be >= 1")
        expected = tuple(
            (GeneratorIndex(k, i), deg_q(k, i, self.delta, b2m))
            for k in range(1, self.k_max + 1)
            for i in range(0, self.a + 1)
        )
        if self.q_degrees != expected:
            raise ValueError("q_degrees disagree with the degree formula")
        canonical_z = (-2 * self.level,) + (0,) * (b2m - 2) if b2m >= 2 else ()
        if self.z_degrees != canonical_z:
            raise ValueError(
                f"z_degrees must be the canonical tuple {canonical_z}"
            )

    @property
    def dK(self) -> int:
        # gcd(x, 0) = x makes this right at level 0 as well
        return gcd(self.delta, self.level)

    def classes(self) -> dict[int, list[tuple[GeneratorIndex, int]]]:
        """Generators grouped by residue class b = (deg/2) mod level.

        Only meaningful for positive level; each class list is sorted by
        (degree, k, i), the pairing order used by witness construction.
        """
        if self.level < 1:
            raise ValueError("residue classes need positive level")
        grouped: dict[int, list[tuple[GeneratorIndex, int]]] = {}
        for idx, deg in self.q_degrees:
            b = (deg // 2) % self.level
            grouped.setdefault(b, []).append((idx, deg))
        for members in grouped.values():
            members.sort(key=lambda item: (item[1], item[0].k, item[0].i))
        return grouped

    def to_dict(self) -> dict[str, Any]:
        return {
            "source_name": self.source_name,
            "level": self.level,
            "delta": self.delta,
            "a": self.a,
            "k_max": self.k_max,
            "z_degrees": list(self.z_degrees),
            "q_degrees": [
                {"k": idx.k, "i": idx.i, "deg": deg}
                for idx, deg in self.q_degrees
            ],
        }


def spectrum(contact: FiveManifoldContact, k_max: int = 50) -> DegreeSpectrum:
    """Degree spectrum of the contact structure, truncated at k <= k_max."""
    b2m = contact.b2_X + 1
    a = b2m + 1
    q_degrees = tuple(
        (GeneratorIndex(k, i), deg_q(k, i, contact.delta, b2m))
        for k in range(1, k_max + 1)
        for i in range(0, a + 1)
    )
    z_degrees = (-2 * contact.level,) + (0,) * (b2m - 2) if b2m >= 2 else ()
    return DegreeSpectrum(
        source_name=contact.source_name,
        level=contact.level,
        delta=contact.delta,
        a=a,
        k_max=k_max,
        q_degrees=q_degrees,
        z_degrees=z_degrees,
    )

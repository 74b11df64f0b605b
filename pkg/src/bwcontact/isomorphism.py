"""Deciding isomorphism of the contact homology algebras.

Two Boothby-Wang contact structures on the same X with the same level d are
compared through the arithmetic triple (d, d(K), d(K')). The algebras are
isomorphic (as graded algebras over the common polynomial base) exactly when

    (d >= 1 and d(K) <= 3 and d(K') <= 3)
    or (d = 0 and d(K) = d(K'))
    or (d >= 4 and d(K) = d(K') >= 4).

In the negative cases a concrete obstruction is reported: for d = 0 the
lowest degree among nonconstant generators (-2 + 2*d(K)) differs; for
d >= 4 some residue class Q_b is infinite on one side and empty on the
other, and the smallest such witness is b = 2 when min(d(K), d(K')) <= 3,
else b = min(d(K), d(K')) - 1.

In the positive cases build_witness produces an explicit degree-preserving
assignment q_{k,i} -> z'_1^alpha * q'_{k',i'} with
deg q = -2d*alpha + deg q', pairing generators residue class by residue
class in (degree, k, i) order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, NamedTuple

from .algebra import (
    DegreeSpectrum,
    GeneratorIndex,
    QbStatus,
    qb_status,
)


class Decision(enum.Enum):
    ISOMORPHIC = "isomorphic"
    NOT_ISOMORPHIC = "not_isomorphic"


class WitnessConsistencyError(RuntimeError):
    """Truncation produced a lopsided residue class; k_max was too small."""


class WitnessEntry(NamedTuple):
    source: GeneratorIndex
    alpha: int
    target: GeneratorIndex


@dataclass(frozen=True)
class IsomorphismReport:
    level: int
    dK_left: int
    dK_right: int
    decision: Decision
    case: str
    detail: str
    distinguisher_residue: int | None = None
    distinguisher_statuses: tuple[str, str] | None = None
    distinguisher_lowest_degrees: tuple[int, int] | None = None
    witness: tuple[WitnessEntry, ...] | None = None
    deferred: tuple[tuple[str, GeneratorIndex], ...] | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "level": self.level,
            "dK_left": self.dK_left,
            "dK_right": self.dK_right,
            "decision": self.decision.value,
            "case": self.case,
            "detail": self.detail,
        }
        if self.distinguisher_residue is not None:
            out["distinguisher_residue"] = self.distinguisher_residue
            out["distinguisher_statuses"] = list(self.distinguisher_statuses)
        if self.distinguisher_lowest_degrees is not None:
            out["distinguisher_lowest_degrees"] = list(
                self.distinguisher_lowest_degrees
            )
        if self.witness is not None:
            out["witness"] = [
                {
                    "source": {"k": w.source.k, "i": w.source.i},
                    "alpha": w.alpha,
                    "target": {"k": w.target.k, "i": w.target.i},
                }
                for w in self.witness
            ]
        if self.deferred is not None:
            out["deferred"] = [
                {"side": side, "k": idx.k, "i": idx.i}
                for side, idx in self.deferred
            ]
        return out


def _check_triple(d: int, dK: int, dK2: int) -> None:
    if d < 0 or dK < 0 or dK2 < 0:
        raise ValueError("level and divisibilities are nonnegative")
    for name, val in (("d(K)", dK), ("d(K')", dK2)):
        if val == 0:
            if d != 0:
                raise ValueError(f"{name} = 0 forces level 0, got d = {d}")
        elif d % val != 0:
            raise ValueError(f"{name} = {val} does not divide the level {d}")


def decide(d: int, dK: int, dK2: int) -> IsomorphismReport:
    """Isomorphism decision from the arithmetic triple alone (no witness).

    Precondition: d(K) | d and d(K') | d, where only 0 divides 0. Levels
    d = 1, 2, 3 always land in the first positive case because a divisor of
    such d is at most 3.
    """
    _check_triple(d, dK, dK2)
    if d >= 1 and dK <= 3 and dK2 <= 3:
        return IsomorphismReport(
            level=d, dK_left=dK, dK_right=dK2,
            decision=Decision.ISOMORPHIC,
            case="small_divisibilities",
            detail=(
                f"level {d} >= 1 and both divisibilities ({dK}, {dK2}) are "
                f"<= 3: every residue class is infinite on both sides"
            ),
        )
    if d == 0 and dK == dK2:
        return IsomorphismReport(
            level=d, dK_left=dK, dK_right=dK2,
            decision=Decision.ISOMORPHIC,
            case="level_zero_equal",
            detail=(
                f"level 0 with equal divisibilities ({dK}): the degree data "
                f"coincide outright"
            ),
        )
    if d >= 4 and dK == dK2 >= 4:
        return IsomorphismReport(
            level=d, dK_left=dK, dK_right=dK2,
            decision=Decision.ISOMORPHIC,
            case="large_equal",
            detail=(
                f"level {d} >= 4 with equal divisibilities {dK} >= 4: "
                f"identical residue tables"
            ),
        )
    if d == 0:
        lo, hi = -2 + 2 * dK, -2 + 2 * dK2
        return IsomorphismReport(
            level=d, dK_left=dK, dK_right=dK2,
            decision=Decision.NOT_ISOMORPHIC,
            case="level_zero_unequal",
            detail=(
                f"level 0 with distinct divisibilities: lowest nonconstant "
                f"generator degrees differ ({lo} vs {hi})"
            ),
            distinguisher_lowest_degrees=(lo, hi),
        )
    # remaining: d >= 4, dK != dK2, max >= 4
    small, large = sorted((dK, dK2))
    b = 2 if small <= 3 else small - 1
    status_small = qb_status(b, d, small)
    status_large = qb_status(b, d, large)
    if status_small == status_large:
        raise RuntimeError(
            f"internal: distinguisher b = {b} fails to separate "
            f"(d, dK, dK') = ({d}, {dK}, {dK2})"
        )
    left_status = status_small if dK == small else status_large
    right_status = status_large if dK == small else status_small
    return IsomorphismReport(
        level=d, dK_left=dK, dK_right=dK2,
        decision=Decision.NOT_ISOMORPHIC,
        case="large_unequal",
        detail=(
            f"level {d} >= 4 with distinct divisibilities ({dK} vs {dK2}): "
            f"residue class b = {b} is {left_status.value} for d(K) = {dK} "
            f"and {right_status.value} for d(K') = {dK2}"
        ),
        distinguisher_residue=b,
        distinguisher_statuses=(left_status.value, right_status.value),
    )


def build_witness(
    left: DegreeSpectrum, right: DegreeSpectrum
) -> IsomorphismReport:
    """Explicit generator pairing certifying an Isomorphic decision.

    Both spectra must share level, a, and k_max. For level 0 the pairing is
    the identity on indices (equal divisibilities force equal degree data).
    For positive level, generators are paired inside each residue class in
    (degree, k, i) order; each pair (source, target) gets the unique integer
    alpha with  deg source = -2*level*alpha + deg target. Unpaired
    generators at the truncation boundary are reported as deferred, never
    silently dropped. A residue class populated on exactly one side means
    k_max was too small to see the other side's members (cannot happen for
    k_max >= 2*level) and raises WitnessConsistencyError.
    """
    if left.level != right.level:
        raise ValueError(
            f"levels differ ({left.level} vs {right.level}); no witness"
        )
    if left.a != right.a:
        raise ValueError(f"ranks differ (a = {left.a} vs {right.a})")
    if left.k_max != right.k_max:
        raise ValueError(
            f"truncations differ (k_max {left.k_max} vs {right.k_max})"
        )
    d = left.level
    base = decide(d, left.dK, right.dK)
    if base.decision is not Decision.ISOMORPHIC:
        raise ValueError(
            f"decision is {base.decision.value}; witnesses exist only for "
            f"isomorphic pairs"
        )
    entries: list[WitnessEntry] = []
    deferred: list[tuple[str, GeneratorIndex]] = []
    if d == 0:
        # equal delta on both sides: identity pairing, alpha = 0 throughout
        for (idx, deg), (idx2, deg2) in zip(left.q_degrees, right.q_degrees):
            if idx != idx2 or deg != deg2:
                raise RuntimeError(
                    "internal: level-0 isomorphic spectra must agree entrywise"
                )
            entries.append(WitnessEntry(source=idx, alpha=0, target=idx2))
    else:
        left_classes = left.classes()
        right_classes = right.classes()
        for b in sorted(set(left_classes) | set(right_classes)):
            lmembers = left_classes.get(b, [])
            rmembers = right_classes.get(b, [])
            if bool(lmembers) != bool(rmembers):
                raise WitnessConsistencyError(
                    f"residue class b = {b} populated on one side only at "
                    f"k_max = {left.k_max}; increase k_max (2*level = "
                    f"{2 * d} always suffices)"
                )
            for (lidx, ldeg), (ridx, rdeg) in zip(lmembers, rmembers):
                diff = rdeg - ldeg
                if diff % (2 * d) != 0:
                    raise RuntimeError(
                        "internal: paired generators in one residue class "
                        "must have degrees congruent mod 2*level"
                    )
                entries.append(
                    WitnessEntry(source=lidx, alpha=diff // (2 * d), target=ridx)
                )
            for lidx, _ in lmembers[len(rmembers):]:
                deferred.append(("left", lidx))
            for ridx, _ in rmembers[len(lmembers):]:
                deferred.append(("right", ridx))
    return IsomorphismReport(
        level=base.level,
        dK_left=base.dK_left,
        dK_right=base.dK_right,
        decision=base.decision,
        case=base.case,
        detail=base.detail,
        witness=tuple(entries),
        deferred=tuple(deferred),
    )

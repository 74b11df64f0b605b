"""Exact integer linear algebra on free abelian groups of finite rank.

Everything here works with plain Python ints (arbitrary precision), so no
computation can overflow silently. Vectors and covectors are tuples of ints;
a covector c acts on a vector v by the dot product sum(c[i]*v[i]).

The central problem: given covectors c and w on Z^n with w indivisible,
compute the divisibility of the class induced by c on the quotient lattice
Hom(ker w, Z), i.e. the largest d >= 0 with  c = d*R + gamma*w  for some
integer covector R and integer gamma, where R is required not to be an
integer multiple of w. Two independent computations of this number are made
and compared (see quotient_divisibility).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from operator import index as _int
from typing import Sequence

IntVector = tuple[int, ...]
Covector = tuple[int, ...]


class NotIndivisibleError(ValueError):
    """An operation required a covector of divisibility exactly one."""


def as_int_tuple(values: Sequence[int]) -> IntVector:
    """Normalize a sequence to a tuple of true ints, rejecting floats.

    operator.index accepts ints and integer-like types but raises on float,
    which is the behaviour we want: a float entry would mean someone already
    lost exactness upstream.
    """
    vec = tuple(_int(v) for v in values)
    if not vec:
        raise ValueError("rank must be at least 1")
    return vec


def dot(c: Sequence[int], v: Sequence[int]) -> int:
    if len(c) != len(v):
        raise ValueError(f"length mismatch: {len(c)} vs {len(v)}")
    return sum(ci * vi for ci, vi in zip(c, v))


def divisibility(c: Sequence[int]) -> int:
    """gcd of the entries of c; zero iff c is the zero covector.

    This is the divisibility of c as an element of the dual lattice: the
    largest d such that c = d*c' for an integer covector c'.
    """
    return gcd(*as_int_tuple(c))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a,b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _bezout_chain(alpha: IntVector) -> tuple[int, IntVector, list[IntVector]]:
    """Core construction: running Bezout combination along the entries.

    Returns (g, x, kernel) where g = gcd(alpha) >= 0, x is an integer vector
    with alpha . x = g, and kernel is a list of n-1 vectors spanning
    {v : alpha . v = 0} whenever alpha != 0. The kernel rows depend only on
    alpha up to scale (each step uses the ratios alpha[j]/g_j and
    g_{j-1}/g_j), so they are also a kernel basis for alpha/gcd(alpha).

    Invariant maintained: after step j, x is supported on coordinates <= j
    and alpha . x = gcd(alpha[0..j]).
    """
    n = len(alpha)
    g = abs(alpha[0])
    x = [1 if alpha[0] >= 0 else -1] + [0] * (n - 1)
    kernel: list[IntVector] = []
    for j in range(1, n):
        a_j = alpha[j]
        if g == 0 and a_j == 0:
            # zero prefix continues: e_j itself pairs to zero
            kernel.append(tuple(1 if t == j else 0 for t in range(n)))
            continue
        g_new, s, t = _xgcd(g, a_j)
        # v pairs to (a_j/g_new)*g - (g/g_new)*a_j = 0
        v = tuple(
            (a_j // g_new) * x[t_] - (g // g_new) * (1 if t_ == j else 0)
            for t_ in range(n)
        )
        kernel.append(v)
        x = [s * x[t_] + t * (1 if t_ == j else 0) for t_ in range(n)]
        g = g_new
    return g, tuple(x), kernel


def _sign_normalized(v: IntVector) -> IntVector:
    """Flip sign so the first nonzero entry is positive."""
    for entry in v:
        if entry != 0:
            return v if entry > 0 else tuple(-e for e in v)
    return v


def kernel_basis(alpha: Sequence[int]) -> list[IntVector]:
    """Basis of the rank n-1 sublattice {v in Z^n : alpha . v = 0}.

    Requires alpha != 0. Each basis vector is sign-normalized (first nonzero
    entry positive) so the output is deterministic. The rows, together with
    any x satisfying alpha . x = gcd(alpha), form a basis of Z^n, which is
    what makes them a *lattice* basis of the kernel and not merely a spanning
    set of a finite-index sublattice.
    """
    vec = as_int_tuple(alpha)
    if all(e == 0 for e in vec):
        raise ValueError("kernel basis requires a nonzero covector")
    _, _, kernel = _bezout_chain(vec)
    rows = [_sign_normalized(v) for v in kernel]
    for v in rows:
        assert dot(vec, v) == 0
    return rows


def solve_unit(w: Sequence[int]) -> IntVector:
    """Integer vector x with w . x = 1; exists iff divisibility(w) == 1."""
    vec = as_int_tuple(w)
    g, x, _ = _bezout_chain(vec)
    if g != 1:
        raise NotIndivisibleError(
            f"no integer solution of w.x = 1: divisibility(w) = {g}"
        )
    assert dot(vec, x) == 1
    return x


def _fraction_inverse(rows: tuple[IntVector, ...]) -> tuple[IntVector, ...]:
    """Exact inverse of an integer matrix via Gauss-Jordan over Fraction.

    Raises NotIndivisibleError if the matrix is singular and ValueError if
    the inverse is not integral (det != +-1). An integer matrix has an
    integer inverse exactly when det = +-1, so integrality doubles as the
    unimodularity certificate.
    """
    n = len(rows)
    aug = [
        [Fraction(rows[i][j]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise NotIndivisibleError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [e * inv_p for e in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [e - factor * p for e, p in zip(aug[r], aug[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            entry = aug[i][j]
            if entry.denominator != 1:
                raise ValueError("inverse is not integral: determinant != +-1")
            row.append(int(entry))
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class AdaptedBasis:
    """Basis e_1..e_n of Z^n adapted to an indivisible covector alpha.

    rows[0] pairs with alpha to 1 and rows[1:] span ker(alpha); the change
    of basis is unimodular. inverse is the exact integer inverse of the row
    matrix, so coordinates of any vector in the adapted basis are
    v_adapted = v . inverse (columns of inverse are the dual basis).
    """

    alpha: Covector
    rows: tuple[IntVector, ...]
    inverse: tuple[IntVector, ...]

    def __post_init__(self) -> None:
        n = len(self.alpha)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("basis must be square of the covector's rank")
        if dot(self.alpha, self.rows[0]) != 1:
            raise ValueError("first basis vector must pair to 1")
        for r in self.rows[1:]:
            if dot(self.alpha, r) != 0:
                raise ValueError("tail basis vectors must lie in the kernel")
        # rows . inverse = identity, entrywise over Z
        for i in range(n):
            for j in range(n):
                s = sum(self.rows[i][t] * self.inverse[t][j] for t in range(n))
                if s != (1 if i == j else 0):
                    raise ValueError("inverse does not invert the basis matrix")

    @property
    def rank(self) -> int:
        return len(self.alpha)

    def express(self, covector: Sequence[int]) -> IntVector:
        """Values of a covector on the basis rows (its adapted coordinates)."""
        vec = as_int_tuple(covector)
        return tuple(dot(vec, r) for r in self.rows)


def complete_to_basis(alpha: Sequence[int]) -> AdaptedBasis:
    """Complete an indivisible covector to an adapted basis of Z^n.

    The integer inverse exists because the row matrix consists of a unit
    solution plus a kernel lattice basis, hence is unimodular; Fraction
    elimination certifies this (a non-unimodular matrix would produce a
    fractional inverse and raise).
    """
    vec = as_int_tuple(alpha)
    if divisibility(vec) != 1:
        raise NotIndivisibleError(
            f"cannot complete to a basis: divisibility = {divisibility(vec)}"
        )
    g, x, kernel = _bezout_chain(vec)
    assert g == 1
    rows = (tuple(x),) + tuple(_sign_normalized(v) for v in kernel)
    inverse = _fraction_inverse(rows)
    return AdaptedBasis(alpha=vec, rows=rows, inverse=inverse)


def _quotient_div_by_kernel(c: IntVector, w: IntVector) -> int:
    """Route 1: restrict c to a lattice basis of ker(w) and take the gcd.

    The quotient Hom(Z^n,Z)/Zw is identified with Hom(ker w, Z) by
    restriction (w indivisible makes ker w a direct summand), and the
    divisibility of a class in Hom(ker w, Z) is the gcd of its values on a
    lattice basis.
    """
    return gcd(*(dot(c, v) for v in kernel_basis(w)))


def _quotient_div_by_minors(c: IntVector, w: IntVector) -> int:
    """Route 2: gcd of all 2x2 minors of the pair (c, w).

    The minor vector (c_i w_j - c_j w_i) is the image of c /\\ w in the
    exterior square; a unimodular change of coordinates acts on it by
    another unimodular map, so the gcd is basis-independent, and in adapted
    coordinates (w = first dual basis vector) it is visibly the gcd of the
    non-leading entries of c, i.e. the quotient divisibility.
    """
    n = len(c)
    g = 0
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(g, c[i] * w[j] - c[j] * w[i])
    return g


def quotient_divisibility(c: Sequence[int], w: Sequence[int]) -> int:
    """Divisibility of the image of c in Hom(Z^n,Z)/Zw, for indivisible w.

    Equals the largest d >= 0 admitting c = d*R + gamma*w with R an integer
    covector that is not an integer multiple of w; d = 0 means c is a
    multiple of w (image zero in the quotient). Rank 1 returns 0: the
    quotient is trivial.

    Both independent computations (kernel restriction and minor gcd) are
    always performed; disagreement indicates a bug and raises RuntimeError.
    """
    cv = as_int_tuple(c)
    wv = as_int_tuple(w)
    if len(cv) != len(wv):
        raise ValueError(f"rank mismatch: {len(cv)} vs {len(wv)}")
    if divisibility(wv) != 1:
        raise NotIndivisibleError(
            f"quotient divisibility needs indivisible w, got divisibility "
            f"{divisibility(wv)}"
        )
    if len(cv) == 1:
        return 0
    by_kernel = _quotient_div_by_kernel(cv, wv)
    by_minors = _quotient_div_by_minors(cv, wv)
    if by_kernel != by_minors:
        raise RuntimeError(
            f"internal disagreement: kernel route {by_kernel} vs minor route "
            f"{by_minors} for c={cv}, w={wv}"
        )
    return by_kernel

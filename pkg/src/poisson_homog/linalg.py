"""
Dense exact linear algebra over the rationals.

Matrices are tuples of row tuples of Fraction; vectors are tuples of
Fraction. Nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple
Matrix = tuple


class DimensionError(ValueError):
    pass


def frac(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    return Fraction(x)


def vec(xs: Iterable) -> Vector:
    return tuple(frac(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def zeros(m: int, n: int) -> Matrix:
    z = Fraction(0)
    return tuple((z,) * n for _ in range(m))


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n))


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError("length mismatch %d != %d" % (len(u), len(v)))
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError("length mismatch %d != %d" % (len(u), len(v)))
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    c = frac(c)
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError("length mismatch %d != %d" % (len(u), len(v)))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], n: int | None = None) -> Vector:
    if n is None:
        n = len(vectors[0])
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] += c * a
    return tuple(out)


def transpose(A: Matrix, ncols: int | None = None) -> Matrix:
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def matvec(A: Matrix, v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in A)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    if A and Bt and len(A[0]) != len(Bt[0]):
        raise DimensionError("inner dimensions differ")
    return tuple(tuple(dot(r, c) for c in Bt) for r in A)


def matsub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(sub(a, b) for a, b in zip(A, B))


def matadd(A: Matrix, B: Matrix) -> Matrix:
    return tuple(add(a, b) for a, b in zip(A, B))


def matscale(c, A: Matrix) -> Matrix:
    return tuple(scale(c, r) for r in A)


def kron(A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(a * b for a in ra for b in rb)
        for ra in A for rb in B)


def trace(A: Matrix) -> Fraction:
    return sum((A[i][i] for i in range(len(A))), Fraction(0))


def rref(A: Sequence[Sequence], ncols: int | None = None):
    """
    Reduced row-echelon form. Returns (R, pivots) with zero rows dropped.
    """
    rows = [list(r) for r in A]
    n = len(rows[0]) if rows else (ncols or 0)
    pivots = []
    r = 0
    for c in range(n):
        p = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r]), tuple(pivots)


def rank(A: Sequence[Sequence]) -> int:
    return len(rref(A)[1]) if A else 0


def nullspace(A: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis (as rows) of {x : A x = 0}."""
    n = len(A[0]) if A else ncols
    if n is None:
        raise DimensionError("cannot infer column count of an empty matrix")
    R, pivots = rref(A, n) if A else ((), ())
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return tuple(basis)


def solve(A: Sequence[Sequence], b: Sequence, ncols: int | None = None):
    """
    One solution x of A x = b, or None when inconsistent.
    Free variables are set to zero.
    """
    n = len(A[0]) if A else ncols
    if n is None:
        raise DimensionError("cannot infer column count of an empty matrix")
    if not A:
        return zero_vec(n) if is_zero(b) else None
    aug = [tuple(r) + (frac(bi),) for r, bi in zip(A, b)]
    R, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return tuple(x)


def inverse(A: Matrix) -> Matrix:
    n = len(A)
    aug = [tuple(r) + unit(n, i) for i, r in enumerate(A)]
    R, pivots = rref(aug, 2 * n)
    if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(r[n:]) for r in R)


def det(A: Matrix) -> Fraction:
    n = len(A)
    rows = [list(r) for r in A]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        piv = rows[c][c]
        d *= piv
        for i in range(c + 1, n):
            f = rows[i][c] / piv
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return d


@dataclass(frozen=True)
class Subspace:
    """
    A linear subspace of Q^n, stored by its reduced row-echelon basis.

    Two Subspaces compare equal iff they are the same subspace.
    """
    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [vec(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionError(
                    "vector of length %d in ambient dimension %d" % (len(r), ambient_dim))
        if not rows:
            return cls(ambient_dim, ())
        R, _ = rref(rows)
        return cls(ambient_dim, R)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, identity(n))

    @classmethod
    def coordinate(cls, indices: Iterable[int], n: int) -> "Subspace":
        return cls.span([unit(n, i) for i in indices], n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(j for j, x in enumerate(r) if x != 0) for r in self.basis)

    def canonical(self) -> "Subspace":
        return Subspace.span(self.basis, self.ambient_dim)

    def contains(self, v: Sequence) -> bool:
        return subspace_contains(self, v)

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of v in self.basis; raises ValueError if v is not in self."""
        x = solve(transpose(self.basis), vec(v), self.dim) if self.basis else (
            () if is_zero(v) else None)
        if x is None:
            raise ValueError("vector does not lie in the subspace")
        return x

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def image(self, A: Matrix) -> "Subspace":
        return Subspace.span([matvec(A, b) for b in self.basis], len(A))

    def complement_indices(self) -> tuple:
        """Standard basis indices whose unit vectors complete self to a basis."""
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)


def subspace_contains(a: Subspace, v: Sequence) -> bool:
    v = vec(v)
    if len(v) != a.ambient_dim:
        raise DimensionError("vector length %d, ambient %d" % (len(v), a.ambient_dim))
    # reduce v against the rref basis
    w = list(v)
    for row in a.basis:
        pc = next(j for j, x in enumerate(row) if x != 0)
        f = w[pc]
        if f:
            w = [x - f * y for x, y in zip(w, row)]
    return all(x == 0 for x in w)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError("ambient dimensions differ")
    n = a.ambient_dim
    if not a.basis or not b.basis:
        return Subspace.zero(n)
    # solve sum s_i a_i - sum t_j b_j = 0
    cols = list(a.basis) + [scale(-1, r) for r in b.basis]
    K = nullspace(transpose(cols), len(cols))
    vecs = [lincomb(k[:a.dim], a.basis, n) for k in K]
    return Subspace.span(vecs, n)


def annihilator_of(s: Subspace) -> Subspace:
    """{xi : xi(v) = 0 for v in s}, in dual coordinates."""
    n = s.ambient_dim
    if not s.basis:
        return Subspace.full(n)
    return Subspace.span(nullspace(s.basis, n), n)

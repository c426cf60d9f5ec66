"""
Graded exterior algebra over a finite basis with exact coefficients.

A k-vector is stored by its coordinates on the lexicographically ordered
basis e_I = e_{i1} ^ ... ^ e_{ik}, i1 < ... < ik. The same class stores
multiforms over the dual basis; which space an element lives in is up to
the caller. The pairing between the two is the determinant pairing,
(eps_I, e_J) = delta_IJ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

from . import linalg as la
from .linalg import DimensionError, Subspace


def basis_keys(n: int, k: int) -> list:
    return list(combinations(range(n), k))


def sort_sign(idx: Sequence[int]):
    """(sign, sorted tuple) of a sequence of indices; sign 0 on a repeat."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


def merge_sign(I: Sequence[int], J: Sequence[int]) -> int:
    """Sign of e_I ^ e_J relative to e_{I u J} (0 if they overlap)."""
    s, _ = sort_sign(tuple(I) + tuple(J))
    return s


@dataclass(frozen=True)
class Multivector:
    dim: int
    degree: int
    coords: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, c in self.coords.items():
            key = tuple(key)
            if len(key) != self.degree or list(key) != sorted(set(key)):
                raise ValueError("bad index tuple %r for degree %d" % (key, self.degree))
            if key and (key[0] < 0 or key[-1] >= self.dim):
                raise DimensionError("index out of range in %r" % (key,))
            c = la.frac(c)
            if c != 0:
                clean[key] = c
        object.__setattr__(self, "coords", dict(sorted(clean.items())))

    # construction

    @classmethod
    def zero(cls, dim: int, degree: int) -> "Multivector":
        return cls(dim, degree, {})

    @classmethod
    def scalar(cls, dim: int, c=1) -> "Multivector":
        return cls(dim, 0, {(): c})

    @classmethod
    def basis(cls, dim: int, *idx: int) -> "Multivector":
        s, key = sort_sign(idx)
        if s == 0:
            return cls.zero(dim, len(idx))
        return cls(dim, len(idx), {key: s})

    @classmethod
    def from_vector(cls, v: Sequence) -> "Multivector":
        return cls(len(v), 1, {(i,): x for i, x in enumerate(v)})

    @classmethod
    def from_dense(cls, dim: int, degree: int, values: Sequence) -> "Multivector":
        """Coordinates listed in basis_keys(dim, degree) order."""
        keys = basis_keys(dim, degree)
        if len(values) != len(keys):
            raise DimensionError("expected %d coordinates" % len(keys))
        return cls(dim, degree, dict(zip(keys, values)))

    @classmethod
    def from_bivector_matrix(cls, P: Sequence[Sequence]) -> "Multivector":
        """sum_{i<j} P[i][j] e_i ^ e_j for an antisymmetric matrix P."""
        n = len(P)
        for i in range(n):
            for j in range(n):
                if P[i][j] != -P[j][i]:
                    raise ValueError("matrix is not antisymmetric")
        return cls(n, 2, {(i, j): P[i][j] for i in range(n) for j in range(i + 1, n)})

    # views

    def dense(self) -> tuple:
        return tuple(self.coords.get(k, Fraction(0)) for k in basis_keys(self.dim, self.degree))

    def to_vector(self) -> tuple:
        if self.degree != 1:
            raise ValueError("not a vector")
        return self.dense()

    def bivector_matrix(self) -> tuple:
        """Antisymmetric P with self = sum_{i<j} P[i][j] e_i ^ e_j."""
        if self.degree != 2:
            raise ValueError("not a bivector")
        P = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for (i, j), c in self.coords.items():
            P[i][j] = c
            P[j][i] = -c
        return tuple(tuple(r) for r in P)

    def is_zero(self) -> bool:
        return not self.coords

    def __getitem__(self, key) -> Fraction:
        s, k = sort_sign(key)
        if s == 0:
            return Fraction(0)
        return s * self.coords.get(k, Fraction(0))

    # arithmetic

    def _check(self, other: "Multivector"):
        if self.dim != other.dim:
            raise DimensionError("ambient dimensions %d != %d" % (self.dim, other.dim))

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        if self.degree != other.degree:
            raise ValueError("cannot add degree %d and %d" % (self.degree, other.degree))
        out = dict(self.coords)
        for k, c in other.coords.items():
            out[k] = out.get(k, 0) + c
        return Multivector(self.dim, self.degree, out)

    def __neg__(self) -> "Multivector":
        return Multivector(self.dim, self.degree, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __mul__(self, c) -> "Multivector":
        c = la.frac(c)
        return Multivector(self.dim, self.degree, {k: c * v for k, v in self.coords.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "Multivector") -> "Multivector":
        return wedge(self, other)

    def __repr__(self):
        if not self.coords:
            return "Multivector(dim=%d, degree=%d, 0)" % (self.dim, self.degree)
        terms = " + ".join("%s*e%s" % (c, "".join(str(i) for i in k)) for k, c in self.coords.items())
        return "Multivector(dim=%d, degree=%d, %s)" % (self.dim, self.degree, terms)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    a._check(b)
    out: dict = {}
    for I, x in a.coords.items():
        for J, y in b.coords.items():
            s, K = sort_sign(I + J)
            if s:
                out[K] = out.get(K, 0) + s * x * y
    return Multivector(a.dim, a.degree + b.degree, out)


def wedge_all(factors: Iterable[Multivector], dim: int) -> Multivector:
    out = Multivector.scalar(dim)
    for f in factors:
        out = wedge(out, f)
    return out


def pair(xi: Multivector, x: Multivector) -> Fraction:
    """Determinant pairing of a k-form with a k-vector."""
    xi._check(x)
    if xi.degree != x.degree:
        raise ValueError("degrees differ")
    return sum((c * x.coords.get(k, 0) for k, c in xi.coords.items()), Fraction(0))


def interior(x: Multivector, xi: Multivector) -> Multivector:
    """
    iota_x xi, defined by (iota_x xi, y) = (xi, x ^ y).

    Symmetric in the roles of V and V*, so interior(xi, r) for a covector xi
    and a bivector r gives the vector iota_xi r.
    """
    x._check(xi)
    k, j = x.degree, xi.degree
    if k > j:
        raise ValueError("interior product needs deg x (%d) <= deg xi (%d)" % (k, j))
    out: dict = {}
    for I, a in x.coords.items():
        Iset = set(I)
        for K, b in xi.coords.items():
            if not Iset.issubset(K):
                continue
            J = tuple(t for t in K if t not in Iset)
            s = merge_sign(I, J)
            out[J] = out.get(J, 0) + s * a * b
    return Multivector(x.dim, j - k, out)


def contract(r: Multivector, xi: Sequence) -> tuple:
    """iota_xi r as a plain vector, for a bivector r and covector xi."""
    return interior(Multivector.from_vector(xi), r).to_vector()


def linear_extension(A: Sequence[Sequence], m: Multivector) -> Multivector:
    """The induced map wedge^k A applied to m; A is (target dim) x (source dim)."""
    rows = len(A)
    cols = [tuple(A[i][j] for i in range(rows)) for j in range(len(A[0]))] if rows else []
    out = Multivector.zero(rows, m.degree)
    for I, c in m.coords.items():
        term = wedge_all((Multivector.from_vector(cols[i]) for i in I), rows)
        out = out + term * c
    return out


def schouten(a: Multivector, b: Multivector, bracket: Callable) -> Multivector:
    """
    Schouten bracket on wedge g extending the Lie bracket of g.

    For monomials a = a1^...^ap, b = b1^...^bq,
      [a, b] = sum_{i,j} (-1)^{i+j} [a_i, b_j] ^ a_1..^a_i..a_p ^ b_1..^b_j..b_q
    (hats omitted), and brackets with scalars vanish. `bracket(i, j)`
    returns [e_i, e_j] as a coordinate vector.
    """
    a._check(b)
    n = a.dim
    p, q = a.degree, b.degree
    if p == 0 or q == 0:
        return Multivector.zero(n, max(p + q - 1, 0))
    out: dict = {}
    for I, x in a.coords.items():
        for J, y in b.coords.items():
            c = x * y
            for i, ai in enumerate(I):
                rest_a = I[:i] + I[i + 1:]
                for j, bj in enumerate(J):
                    rest_b = J[:j] + J[j + 1:]
                    br = bracket(ai, bj)
                    sgn = -1 if (i + j) % 2 else 1
                    for t, v in enumerate(br):
                        if not v:
                            continue
                        s, K = sort_sign((t,) + rest_a + rest_b)
                        if s:
                            out[K] = out.get(K, 0) + sgn * s * c * v
    return Multivector(n, p + q - 1, out)


def quotient_map_matrix(h: Subspace) -> tuple:
    """
    A projection q: Q^n -> Q^n/h as a (n - dim h) x n matrix with kernel h.

    The quotient is coordinatized by the standard basis vectors outside the
    pivot columns of h's echelon basis.
    """
    n = h.ambient_dim
    comp = h.complement_indices()
    # basis of Q^n: complement unit vectors, then h basis; invert to read coordinates
    B = [la.unit(n, j) for j in comp] + list(h.basis)
    inv = la.inverse(la.transpose(B))
    return tuple(inv[: len(comp)])


def member_of_wedge_ideal(v: Multivector, h: Subspace, k_total: int | None = None) -> bool:
    """
    True iff v lies in h ^ wedge^{k-1}(V): the kernel of wedge^k q for the
    quotient map q: V -> V/h.
    """
    if v.dim != h.ambient_dim:
        raise DimensionError("ambient dimensions differ")
    if k_total is not None and k_total != v.degree:
        raise ValueError("degree mismatch: %d vs %d" % (v.degree, k_total))
    if v.degree == 0:
        return v.is_zero()
    Q = quotient_map_matrix(h)
    if not Q:
        return True
    return linear_extension(Q, v).is_zero()


def wedge_dim(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0

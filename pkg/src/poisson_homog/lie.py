"""
Finite-dimensional Lie algebras given by structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import linalg as la
from .exterior import Multivector, quotient_map_matrix, schouten
from .linalg import DimensionError, Subspace


@dataclass(frozen=True)
class Violation:
    kind: str
    indices: tuple
    value: tuple

    def as_dict(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices),
                "value": [str(x) for x in self.value]}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=False)
class LieAlgebraData:
    """
    Structure constants c[i][j][k] with [x_i, x_j] = sum_k c[i][j][k] x_k.

    Construction does not enforce the Lie axioms; run validate_lie.
    """
    dim: int
    structure_constants: tuple
    basis_names: tuple = ()

    def __post_init__(self):
        n = self.dim
        c = self.structure_constants
        if len(c) != n or any(len(r) != n for r in c) or any(len(v) != n for r in c for v in r):
            raise DimensionError("structure constants must be %d x %d x %d" % (n, n, n))
        object.__setattr__(self, "structure_constants",
                           tuple(tuple(la.vec(v) for v in r) for r in c))
        names = tuple(self.basis_names) or tuple("x%d" % (i + 1) for i in range(n))
        if len(names) != n:
            raise DimensionError("expected %d basis names" % n)
        object.__setattr__(self, "basis_names", names)

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict, basis_names=()) -> "LieAlgebraData":
        """brackets maps (i, j) -> coefficient vector of [x_i, x_j]; antisymmetry is filled in."""
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in brackets.items():
            v = la.vec(v)
            c[i][j] = list(v)
            if (j, i) not in brackets:
                c[j][i] = [-x for x in v]
        return cls(dim, tuple(tuple(tuple(v) for v in r) for r in c), tuple(basis_names))

    @classmethod
    def abelian(cls, dim: int, basis_names=()) -> "LieAlgebraData":
        return cls.from_brackets(dim, {}, basis_names)

    def __eq__(self, other):
        return (isinstance(other, LieAlgebraData) and self.dim == other.dim
                and self.structure_constants == other.structure_constants)

    def __hash__(self):
        return hash((self.dim, self.structure_constants))

    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.structure_constants[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionError("vectors must have length %d" % n)
        out = [Fraction(0)] * n
        c = self.structure_constants
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, v in enumerate(c[i][j]):
                    if v:
                        out[k] += ab * v
        return tuple(out)

    def schouten(self, a: Multivector, b: Multivector) -> Multivector:
        if a.dim != self.dim:
            raise DimensionError("multivector dimension %d, algebra %d" % (a.dim, self.dim))
        return schouten(a, b, self.bracket_basis)

    @cached_property
    def is_abelian(self) -> bool:
        return all(la.is_zero(v) for r in self.structure_constants for v in r)


def validate_lie(data: LieAlgebraData) -> ValidationReport:
    """Every violated antisymmetry or Jacobi component, with its index triple."""
    n = data.dim
    c = data.structure_constants
    bad = []
    for i in range(n):
        for j in range(i, n):
            s = la.add(c[i][j], c[j][i])
            if not la.is_zero(s):
                bad.append(Violation("antisymmetry", (i, j), s))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                e = la.unit(n, i), la.unit(n, j), la.unit(n, k)
                br = data.bracket
                total = la.add(la.add(br(br(e[0], e[1]), e[2]), br(br(e[1], e[2]), e[0])),
                               br(br(e[2], e[0]), e[1]))
                if not la.is_zero(total):
                    bad.append(Violation("jacobi", (i, j, k), total))
    return ValidationReport(tuple(bad))


def ad_matrix(x: Sequence, alg: LieAlgebraData) -> tuple:
    """Matrix of ad_x; column j is [x, x_j]."""
    n = alg.dim
    cols = [alg.bracket(x, la.unit(n, j)) for j in range(n)]
    return la.transpose(cols)


def adjoint_character(alg: LieAlgebraData) -> tuple:
    """The covector x -> tr(ad_x)."""
    n = alg.dim
    c = alg.structure_constants
    return tuple(sum((c[i][j][j] for j in range(n)), Fraction(0)) for i in range(n))


def derived_subalgebra(alg: LieAlgebraData) -> Subspace:
    n = alg.dim
    return Subspace.span([alg.bracket_basis(i, j) for i in range(n) for j in range(i + 1, n)], n)


def annihilator(h: Subspace) -> Subspace:
    """h^0 inside g*, in dual-basis coordinates."""
    return la.annihilator_of(h)


def is_closed(alg: LieAlgebraData, space: Subspace) -> tuple:
    """(closed?, first offending basis pair) for [space, space] within space."""
    B = space.basis
    for a in range(len(B)):
        for b in range(a + 1, len(B)):
            if not space.contains(alg.bracket(B[a], B[b])):
                return False, (a, b)
    return True, None


class NotASubalgebra(ValueError):
    pass


@dataclass(frozen=True)
class SubalgebraHandle:
    parent: LieAlgebraData
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != self.parent.dim:
            raise DimensionError("subspace lives in dimension %d, algebra has %d"
                                 % (self.space.ambient_dim, self.parent.dim))
        ok, pair = is_closed(self.parent, self.space)
        if not ok:
            raise NotASubalgebra("bracket of basis vectors %r leaves the subspace" % (pair,))

    @property
    def dim(self) -> int:
        return self.space.dim

    def structure(self) -> LieAlgebraData:
        return restrict_algebra(self.parent, self.space.basis)


def restrict_algebra(alg: LieAlgebraData, basis: Sequence[Sequence], names=()) -> LieAlgebraData:
    """Structure constants of a subalgebra in the given (independent) basis."""
    B = [la.vec(b) for b in basis]
    sp = Subspace.span(B, alg.dim)
    if sp.dim != len(B):
        raise ValueError("basis vectors are dependent")
    Bt = la.transpose(B)
    m = len(B)
    c = []
    for i in range(m):
        row = []
        for j in range(m):
            v = alg.bracket(B[i], B[j])
            coef = la.solve(Bt, v, m)
            if coef is None:
                raise NotASubalgebra("bracket of basis vectors %d, %d leaves the span" % (i, j))
            row.append(coef)
        c.append(tuple(row))
    return LieAlgebraData(m, tuple(c), tuple(names))


@dataclass(frozen=True)
class Quotient:
    """
    Coordinates on g/h: projection (rows = dim g/h) and a section with
    projection . section = identity. The rows of the projection form a basis
    of h^0 dual to the quotient coordinates.
    """
    projection: tuple
    section: tuple
    kernel: Subspace

    @property
    def dim(self) -> int:
        return len(self.projection)

    def q(self, x: Sequence) -> tuple:
        return la.matvec(self.projection, x)

    def lift(self, y: Sequence) -> tuple:
        return la.matvec(self.section, y)


def quotient_basis(g: LieAlgebraData, h: SubalgebraHandle | Subspace) -> Quotient:
    space = h.space if isinstance(h, SubalgebraHandle) else h
    if space.ambient_dim != g.dim:
        raise DimensionError("h is not a subspace of g")
    n = g.dim
    comp = space.complement_indices()
    Q = quotient_map_matrix(space) if comp else ()
    S = la.transpose([la.unit(n, j) for j in comp]) if comp else tuple(() for _ in range(n))
    return Quotient(Q, S, space)

"""
Lie bialgebras, their Drinfeld doubles, and pointwise group frames.

Elements of the double d = g + g* are coordinate vectors of length 2n:
the first n entries are the g-part on x_1..x_n, the last n the g*-part
on the dual basis xi_1..xi_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from . import linalg as la
from .exterior import Multivector, contract, wedge_dim
from .lie import (LieAlgebraData, ValidationReport, Violation, ad_matrix,
                  adjoint_character, validate_lie)
from .linalg import DimensionError, Subspace


class NotABialgebra(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        v = report.violations[0]
        super().__init__("not a Lie bialgebra: %s fails on basis %r of the double"
                         % (v.kind, v.indices))


class FrameError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class BialgebraData:
    """
    A Lie algebra g with cobracket delta: g -> wedge^2 g.

    `cobracket` has one row per basis vector x_i, listing the coordinates of
    delta(x_i) on e_j ^ e_k, j < k, in lexicographic order.
    """
    g: LieAlgebraData
    cobracket: tuple

    def __post_init__(self):
        n = self.g.dim
        m = wedge_dim(n, 2)
        rows = tuple(la.vec(r) for r in self.cobracket)
        if len(rows) != n or any(len(r) != m for r in rows):
            raise DimensionError("cobracket must be %d x %d" % (n, m))
        object.__setattr__(self, "cobracket", rows)

    @classmethod
    def trivial(cls, g: LieAlgebraData) -> "BialgebraData":
        return cls(g, la.zeros(g.dim, wedge_dim(g.dim, 2)))

    @classmethod
    def coboundary(cls, g: LieAlgebraData, r: Multivector) -> "BialgebraData":
        """delta(x) = [x, r] (Schouten bracket with a degree-1 element)."""
        n = g.dim
        rows = [g.schouten(Multivector.from_vector(la.unit(n, i)), r).dense() for i in range(n)]
        return cls(g, tuple(rows))

    @property
    def n(self) -> int:
        return self.g.dim

    def delta(self, x: Sequence) -> Multivector:
        n = self.n
        vals = la.matvec(la.transpose(self.cobracket), x) if n > 1 else ()
        return Multivector.from_dense(n, 2, vals)

    def delta_basis(self, i: int) -> Multivector:
        return Multivector.from_dense(self.n, 2, self.cobracket[i])

    def delta_ext(self, m: Multivector) -> Multivector:
        """
        delta on g, extended to wedge^2 g by delta(x ^ y) = x ^ delta(y) - delta(x) ^ y.

        This is the sign for which 1/2 [L, L] + delta(L) is the tri-vector
        phi(xi, eta, zeta) = <p_1[L xi + xi, L eta + eta], L zeta + zeta>.
        """
        n = self.n
        if m.degree == 1:
            return self.delta(m.to_vector())
        if m.degree != 2:
            raise ValueError("delta is extended to degrees 1 and 2 only")
        out = Multivector.zero(n, 3)
        for (i, j), c in m.coords.items():
            xi = Multivector.basis(n, i)
            xj = Multivector.basis(n, j)
            out = out + ((xi ^ self.delta_basis(j)) - (self.delta_basis(i) ^ xj)) * c
        return out

    @cached_property
    def dual(self) -> LieAlgebraData:
        """g* with [xi_j, xi_k] = sum_i delta(x_i)^{jk} xi_i."""
        n = self.n
        pairs = list(combinations(range(n), 2))
        brackets = {}
        for col, (j, k) in enumerate(pairs):
            brackets[(j, k)] = tuple(self.cobracket[i][col] for i in range(n))
        names = tuple("%s*" % s for s in self.g.basis_names)
        return LieAlgebraData.from_brackets(n, brackets, names)

    def dual_bracket(self, xi: Sequence, eta: Sequence) -> tuple:
        return self.dual.bracket(xi, eta)


def ad_star_x(x: Sequence, xi: Sequence, g: LieAlgebraData) -> tuple:
    """(ad*_x xi, y) = (xi, [y, x])."""
    n = g.dim
    return tuple(la.dot(xi, g.bracket(la.unit(n, k), x)) for k in range(n))


def ad_star_xi(xi: Sequence, x: Sequence, bialg: BialgebraData) -> tuple:
    """(ad*_xi x, eta) = (x, [eta, xi]) with the dual bracket."""
    n = bialg.n
    return tuple(la.dot(x, bialg.dual_bracket(la.unit(n, k), xi)) for k in range(n))


def split(v: Sequence, n: int):
    if len(v) != 2 * n:
        raise DimensionError("double vector must have length %d" % (2 * n))
    return tuple(v[:n]), tuple(v[n:])


def join(x: Sequence, xi: Sequence) -> tuple:
    return tuple(la.vec(x)) + tuple(la.vec(xi))


def six_term_bracket(bialg: BialgebraData, u: Sequence, v: Sequence) -> tuple:
    """[x+xi, y+eta] = [x,y] + ad*_xi y - ad*_eta x + [xi,eta] + ad*_x eta - ad*_y xi."""
    n = bialg.n
    g = bialg.g
    x, xi = split(u, n)
    y, eta = split(v, n)
    gpart = la.add(la.sub(g.bracket(x, y), ad_star_xi(eta, x, bialg)), ad_star_xi(xi, y, bialg))
    dpart = la.add(la.sub(bialg.dual_bracket(xi, eta), ad_star_x(y, xi, g)), ad_star_x(x, eta, g))
    return gpart + dpart


@dataclass(frozen=True, eq=False)
class DoubleData:
    bialg: BialgebraData
    d: LieAlgebraData
    pairing: tuple
    jacobi: ValidationReport

    @property
    def n(self) -> int:
        return self.bialg.n

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        return self.d.bracket(u, v)

    def pair(self, u: Sequence, v: Sequence) -> Fraction:
        n = self.n
        x, xi = split(u, n)
        y, eta = split(v, n)
        return la.dot(x, eta) + la.dot(y, xi)

    def g_subspace(self) -> Subspace:
        return Subspace.coordinate(range(self.n), 2 * self.n)

    def gstar_subspace(self) -> Subspace:
        return Subspace.coordinate(range(self.n, 2 * self.n), 2 * self.n)

    def embed_g(self, x: Sequence) -> tuple:
        return join(x, la.zero_vec(self.n))

    def embed_gstar(self, xi: Sequence) -> tuple:
        return join(la.zero_vec(self.n), xi)

    def p_g(self, v: Sequence) -> tuple:
        return split(v, self.n)[0]

    def p_gstar(self, v: Sequence) -> tuple:
        return split(v, self.n)[1]


def pairing_matrix(n: int) -> tuple:
    I = la.identity(n)
    Z = la.zeros(n, n)
    top = tuple(a + b for a, b in zip(Z, I))
    bot = tuple(a + b for a, b in zip(I, Z))
    return top + bot


def build_double(bialg: BialgebraData, check: bool = True) -> DoubleData:
    """
    The double of (g, delta). With check=True a failing Jacobi sweep raises
    NotABialgebra naming an offending triple; otherwise the report is kept
    on the result.
    """
    n = bialg.n
    N = 2 * n
    basis = [la.unit(N, i) for i in range(N)]
    c = tuple(tuple(six_term_bracket(bialg, basis[i], basis[j]) for j in range(N))
              for i in range(N))
    names = tuple(bialg.g.basis_names) + tuple("%s*" % s for s in bialg.g.basis_names)
    d = LieAlgebraData(N, c, names)
    report = validate_lie(d)
    if check and not report.ok:
        raise NotABialgebra(report)
    return DoubleData(bialg, d, pairing_matrix(n), report)


def check_pairing_invariance(dbl: DoubleData) -> ValidationReport:
    N = 2 * dbl.n
    E = [la.unit(N, i) for i in range(N)]
    bad = []
    for z in range(N):
        for a in range(N):
            for b in range(a, N):
                s = dbl.pair(dbl.bracket(E[z], E[a]), E[b]) + dbl.pair(E[a], dbl.bracket(E[z], E[b]))
                if s:
                    bad.append(Violation("pairing-invariance", (z, a, b), (s,)))
    return ValidationReport(tuple(bad))


def is_isotropic(w: Subspace, dbl: DoubleData) -> bool:
    B = w.basis
    return all(dbl.pair(B[i], B[j]) == 0 for i in range(len(B)) for j in range(i, len(B)))


def is_lagrangian(w: Subspace, dbl: DoubleData) -> bool:
    if w.ambient_dim != 2 * dbl.n:
        raise DimensionError("subspace is not in the double")
    return w.dim == dbl.n and is_isotropic(w, dbl)


# ---------------------------------------------------------------------------
# pointwise group data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointFrame:
    """
    Pointwise data of a group element g.

    Ad_g acts on g; coAd is Ad*_{g^-1} on g* (the inverse transpose of Ad_g);
    piG is the right-trivialized Poisson bivector r_{g^-1} pi_G(g) in wedge^2 g.
    Ad_d, when present, is the action of some element of the double group on d.
    """
    Ad_g: tuple
    coAd: tuple
    piG: Multivector
    Ad_d: tuple | None = None

    def __post_init__(self):
        n = len(self.Ad_g)
        object.__setattr__(self, "Ad_g", la.mat(self.Ad_g))
        object.__setattr__(self, "coAd", la.mat(self.coAd))
        if self.Ad_d is not None:
            object.__setattr__(self, "Ad_d", la.mat(self.Ad_d))
            if len(self.Ad_d) != 2 * n:
                raise FrameError("Ad_d must be %d x %d" % (2 * n, 2 * n))
        if self.piG.dim != n or self.piG.degree != 2:
            raise FrameError("piG must be a bivector over a %d-dimensional algebra" % n)
        try:
            inv = la.inverse(self.Ad_g)
        except ZeroDivisionError:
            raise FrameError("Ad_g is singular") from None
        if la.transpose(inv) != self.coAd:
            raise FrameError("coAd is not the inverse transpose of Ad_g")

    @classmethod
    def identity(cls, n: int, Ad_d=None) -> "PointFrame":
        I = la.identity(n)
        return cls(I, I, Multivector.zero(n, 2), Ad_d)

    @classmethod
    def from_Ad_g(cls, Ad_g, piG: Multivector, Ad_d=None) -> "PointFrame":
        Ad_g = la.mat(Ad_g)
        return cls(Ad_g, la.transpose(la.inverse(Ad_g)), piG, Ad_d)

    @property
    def n(self) -> int:
        return len(self.Ad_g)


def frame_matrix(frame: PointFrame) -> tuple:
    """The 2n x 2n matrix of Ad_g on d assembled from the frame blocks."""
    n = frame.n
    cols = [ad_group_on_double(frame, la.unit(2 * n, j)) for j in range(2 * n)]
    return la.transpose(cols)


def ad_group_on_double(frame: PointFrame, v: Sequence) -> tuple:
    """Ad_g(x + xi) = Ad_g x + iota_{Ad*_{g^-1} xi} piG + Ad*_{g^-1} xi."""
    n = frame.n
    x, xi = split(la.vec(v), n)
    cxi = la.matvec(frame.coAd, xi)
    gpart = la.add(la.matvec(frame.Ad_g, x), contract(frame.piG, cxi))
    return gpart + cxi


def preserves_bracket(A: Sequence[Sequence], alg: LieAlgebraData):
    """(ok, offending basis pair) for A[x,y] = [Ax, Ay]."""
    n = alg.dim
    cols = la.transpose(A)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = la.matvec(A, alg.bracket_basis(i, j))
            rhs = alg.bracket(cols[i], cols[j])
            if lhs != rhs:
                return False, (i, j)
    return True, None


def preserves_pairing(A: Sequence[Sequence], dbl: DoubleData):
    N = 2 * dbl.n
    cols = la.transpose(A)
    for i in range(N):
        for j in range(i, N):
            if dbl.pair(cols[i], cols[j]) != dbl.pair(la.unit(N, i), la.unit(N, j)):
                return False, (i, j)
    return True, None


def check_frame(frame: PointFrame, dbl: DoubleData) -> None:
    """Raise FrameError unless the frame is consistent with the double."""
    if frame.n != dbl.n:
        raise FrameError("frame dimension %d, algebra %d" % (frame.n, dbl.n))
    ok, where = preserves_bracket(frame.Ad_g, dbl.bialg.g)
    if not ok:
        raise FrameError("Ad_g does not preserve the bracket on basis pair %r" % (where,))
    ok, where = preserves_bracket(frame_matrix(frame), dbl.d)
    if not ok:
        raise FrameError("Ad_g on the double does not preserve the bracket on %r" % (where,))
    if frame.Ad_d is not None:
        ok, where = preserves_bracket(frame.Ad_d, dbl.d)
        if not ok:
            raise FrameError("Ad_d does not preserve the bracket on %r" % (where,))
        ok, where = preserves_pairing(frame.Ad_d, dbl)
        if not ok:
            raise FrameError("Ad_d does not preserve the pairing on %r" % (where,))


def exp_nilpotent(A: Sequence[Sequence]) -> tuple:
    """exp(A) for nilpotent A, exactly; ValueError if A is not nilpotent."""
    n = len(A)
    A = la.mat(A)
    out = la.identity(n)
    term = la.identity(n)
    for k in range(1, n + 1):
        term = la.matscale(Fraction(1, k), la.matmul(term, A))
        if all(la.is_zero(r) for r in term):
            return out
        out = la.matadd(out, term)
    if any(not la.is_zero(r) for r in la.matmul(term, A)):
        raise ValueError("matrix is not nilpotent")
    return out


def is_nilpotent(A: Sequence[Sequence]) -> bool:
    n = len(A)
    P = la.mat(A)
    for _ in range(n):
        if all(la.is_zero(r) for r in P):
            return True
        P = la.matmul(P, A)
    return all(la.is_zero(r) for r in P)


def group_element(dbl: DoubleData, generators: Sequence[Sequence]) -> tuple:
    """
    Product exp(ad z_1) ... exp(ad z_k) acting on d, for d-vectors z_i with
    ad-nilpotent action. Exactly a bracket- and pairing-preserving matrix.
    """
    N = 2 * dbl.n
    M = la.identity(N)
    for z in generators:
        A = ad_matrix(la.vec(z), dbl.d)
        M = la.matmul(M, exp_nilpotent(A))
    return M


def frame_from_group(dbl: DoubleData, g_generators: Sequence[Sequence],
                     d_generators: Sequence[Sequence] | None = None) -> PointFrame:
    """
    A consistent frame for g = exp(z_1)...exp(z_k), z_i in g ad-nilpotent.

    The g*-to-g block of Ad_g on d equals -P coAd where P is the matrix of piG.
    """
    n = dbl.n
    M = group_element(dbl, [join(z, la.zero_vec(n)) for z in g_generators])
    Ad_g = tuple(r[:n] for r in M[:n])
    B = tuple(r[n:] for r in M[:n])
    coAd = tuple(r[n:] for r in M[n:])
    if any(not la.is_zero(r[:n]) for r in M[n:]):
        raise FrameError("group element does not preserve g")
    P = la.matscale(-1, la.matmul(B, la.inverse(coAd)))
    piG = Multivector.from_bivector_matrix(P)
    Ad_d = group_element(dbl, d_generators) if d_generators is not None else None
    return PointFrame(Ad_g, coAd, piG, Ad_d)


def characters(dbl: DoubleData):
    """(chi_g in g*, chi_{g*} in g) as coordinate vectors."""
    return adjoint_character(dbl.bialg.g), adjoint_character(dbl.bialg.dual)

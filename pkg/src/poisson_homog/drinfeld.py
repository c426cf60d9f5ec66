"""
Poisson homogeneous spaces at the base point.

A homogeneous space G/H is described by a bialgebra (g, delta), a
subalgebra h of g and a bivector Lambda in wedge^2 g lifting pi(eH). The
Drinfeld Lagrangian subspace is l = {x + Lambda xi + xi : x in h, xi in h^0}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import linalg as la
from .double import (BialgebraData, DoubleData, PointFrame, ad_group_on_double,
                     ad_star_x, build_double, check_frame, join, split)
from .exterior import (Multivector, contract, linear_extension, member_of_wedge_ideal,
                       pair, wedge_all)
from .lie import (LieAlgebraData, Quotient, SubalgebraHandle, adjoint_character,
                  annihilator, quotient_basis)
from .linalg import DimensionError, Subspace


class CorrespondenceError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HomogeneousSpaceData:
    bialg: BialgebraData
    h: SubalgebraHandle
    lam: Multivector

    def __post_init__(self):
        n = self.bialg.n
        if self.h.parent != self.bialg.g:
            raise ValueError("h is not a subalgebra of the bialgebra's g")
        if self.lam.dim != n or self.lam.degree != 2:
            raise DimensionError("Lambda must be a bivector over g")

    @classmethod
    def make(cls, bialg: BialgebraData, h_vectors=(), lam: Multivector | None = None):
        n = bialg.n
        h = SubalgebraHandle(bialg.g, Subspace.span(h_vectors, n))
        return cls(bialg, h, lam if lam is not None else Multivector.zero(n, 2))

    @property
    def n(self) -> int:
        return self.bialg.n

    @property
    def g(self) -> LieAlgebraData:
        return self.bialg.g

    @cached_property
    def double(self) -> DoubleData:
        return build_double(self.bialg, check=False)

    @cached_property
    def h0(self) -> Subspace:
        return annihilator(self.h.space)

    @cached_property
    def quotient(self) -> Quotient:
        return quotient_basis(self.g, self.h)

    @cached_property
    def l(self) -> Subspace:
        return l_from_lambda(self)

    def lam_apply(self, xi: Sequence) -> tuple:
        """Lambda xi = iota_xi Lambda."""
        return contract(self.lam, xi)

    def kappa(self, xi: Sequence) -> tuple:
        """xi -> Lambda xi + xi in d."""
        return join(self.lam_apply(xi), xi)


# ---------------------------------------------------------------------------
# the r <-> l correspondence
# ---------------------------------------------------------------------------

def _canonical_pair(u, v, n):
    return la.dot(u[:n], v[n:]) + la.dot(v[:n], u[n:])


def lagrangian_from_r(g: LieAlgebraData, h: SubalgebraHandle | Subspace, r: Multivector) -> Subspace:
    """
    l_r = {x + xi : xi|_h = 0, iota_xi r = x + h} for r in wedge^2(g/h), with
    g/h coordinatized by quotient_basis(g, h).
    """
    Q = quotient_basis(g, h)
    n = g.dim
    m = Q.dim
    if r.dim != m or r.degree != 2:
        raise DimensionError("r must be a bivector over g/h (dimension %d)" % m)
    vecs = [join(b, la.zero_vec(n)) for b in Q.kernel.basis]
    for a in range(m):
        y = contract(r, la.unit(m, a))
        vecs.append(join(Q.lift(y), Q.projection[a]))
    return Subspace.span(vecs, 2 * n)


def r_from_lagrangian(l: Subspace, g: LieAlgebraData, h: SubalgebraHandle | Subspace) -> Multivector:
    """Inverse of lagrangian_from_r; l must be Lagrangian with l & g = h."""
    n = g.dim
    Q = quotient_basis(g, h)
    if l.ambient_dim != 2 * n:
        raise DimensionError("l must live in the double")
    B = l.basis
    if len(B) != n or any(_canonical_pair(B[i], B[j], n) for i in range(n) for j in range(i, n)):
        raise CorrespondenceError("l is not Lagrangian")
    gsub = Subspace.coordinate(range(n), 2 * n)
    hd = Subspace.span([join(b, la.zero_vec(n)) for b in Q.kernel.basis], 2 * n)
    if (l & gsub) != hd:
        raise CorrespondenceError("l & g differs from h")
    # g*-projections of the basis of l, to locate an element over each xi_a
    proj = la.transpose([b[n:] for b in B])
    m = Q.dim
    rows = []
    for a in range(m):
        coef = la.solve(proj, Q.projection[a], len(B))
        if coef is None:
            raise CorrespondenceError("l has no element over the quotient covector %d" % a)
        x = la.lincomb(coef, [b[:n] for b in B], n)
        rows.append(Q.q(x))
    coords = {}
    for a in range(m):
        for b in range(m):
            if rows[a][b] != -rows[b][a]:
                raise CorrespondenceError("recovered r is not antisymmetric")
            if a < b:
                coords[(a, b)] = rows[a][b]
    return Multivector(m, 2, coords)


def l_from_lambda(space: HomogeneousSpaceData) -> Subspace:
    n = space.n
    vecs = [join(x, la.zero_vec(n)) for x in space.h.space.basis]
    vecs += [space.kappa(xi) for xi in space.h0.basis]
    return Subspace.span(vecs, 2 * n)


def q_lambda(space: HomogeneousSpaceData) -> Multivector:
    """The image of Lambda in wedge^2(g/h)."""
    Q = space.quotient
    if not Q.projection:
        return Multivector.zero(0, 2)
    return linear_extension(Q.projection, space.lam)


# ---------------------------------------------------------------------------
# Drinfeld conditions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DrinfeldReport:
    cond_a_infinitesimal: bool
    cond_b: bool
    lemma_conditions: tuple
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.cond_a_infinitesimal and self.cond_b


def _bracket_into_witness(dbl: DoubleData, A, B, target: Subspace, symmetric: bool):
    for i, a in enumerate(A):
        for j, b in enumerate(B):
            if symmetric and j <= i:
                continue
            if not target.contains(dbl.bracket(a, b)):
                return (i, j)
    return None


def check_drinfeld(space: HomogeneousSpaceData) -> DrinfeldReport:
    """
    cond_a_infinitesimal: [h, l] in l; cond_b: l is closed under the double
    bracket. Witnesses are basis index pairs (into h and l bases).
    """
    dbl = space.double
    n = space.n
    l = space.l
    hvecs = [join(x, la.zero_vec(n)) for x in space.h.space.basis]
    wa = _bracket_into_witness(dbl, hvecs, l.basis, l, symmetric=False)
    wb = _bracket_into_witness(dbl, l.basis, l.basis, l, symmetric=True)
    c1, c2 = check_lambda_conditions(space)
    witnesses = {}
    if wa is not None:
        witnesses["cond_a"] = {"h_index": wa[0], "l_index": wa[1]}
    if wb is not None:
        witnesses["cond_b"] = {"l_indices": list(wb)}
    witnesses.update(lambda_condition_witnesses(space))
    return DrinfeldReport(wa is None, wb is None, (c1, c2), witnesses)


def condition1_element(space: HomogeneousSpaceData, x: Sequence) -> Multivector:
    """[x, Lambda] + delta(x)."""
    X = Multivector.from_vector(x)
    return space.g.schouten(X, space.lam) + space.bialg.delta(x)


def condition2_element(space: HomogeneousSpaceData) -> Multivector:
    """[Lambda, Lambda] + 2 delta(Lambda)."""
    lam = space.lam
    return space.g.schouten(lam, lam) + space.bialg.delta_ext(lam) * 2


def check_lambda_conditions(space: HomogeneousSpaceData) -> tuple:
    """
    (condition 1 in infinitesimal form, condition 2):
      [x, Lambda] + delta(x) in h ^ g  for x in a basis of h,
      [Lambda, Lambda] + 2 delta(Lambda) in h ^ g ^ g.
    """
    h = space.h.space
    c1 = all(member_of_wedge_ideal(condition1_element(space, x), h, 2) for x in h.basis)
    c2 = member_of_wedge_ideal(condition2_element(space), h, 3)
    return c1, c2


def lambda_condition_witnesses(space: HomogeneousSpaceData) -> dict:
    h = space.h.space
    out = {}
    for i, x in enumerate(h.basis):
        if not member_of_wedge_ideal(condition1_element(space, x), h, 2):
            out["lambda_condition_1"] = {"h_index": i}
            break
    v = condition2_element(space)
    if not member_of_wedge_ideal(v, h, 3):
        H0 = space.h0.basis
        k = len(H0)
        for a in range(k):
            for b in range(a + 1, k):
                for c in range(b + 1, k):
                    form = wedge_all((Multivector.from_vector(H0[t]) for t in (a, b, c)), space.n)
                    val = pair(form, v)
                    if val:
                        out["lambda_condition_2"] = {"h0_indices": [a, b, c], "value": str(val)}
                        return out
    return out


# ---------------------------------------------------------------------------
# twisted bracket, characters, the character identity
# ---------------------------------------------------------------------------

def twisted_bracket(xi: Sequence, eta: Sequence, space: HomogeneousSpaceData) -> tuple:
    """[xi, eta]_Lambda = [xi, eta] + ad*_{Lambda xi} eta - ad*_{Lambda eta} xi."""
    g = space.g
    out = space.bialg.dual_bracket(xi, eta)
    out = la.add(out, ad_star_x(space.lam_apply(xi), eta, g))
    return la.sub(out, ad_star_x(space.lam_apply(eta), xi, g))


def h0_closure_witness(space: HomogeneousSpaceData):
    H0 = space.h0.basis
    for i in range(len(H0)):
        for j in range(i + 1, len(H0)):
            if not space.h0.contains(twisted_bracket(H0[i], H0[j], space)):
                return (i, j)
    return None


def check_h0_closure(space: HomogeneousSpaceData) -> bool:
    return h0_closure_witness(space) is None


def chi_h0_lambda(space: HomogeneousSpaceData) -> tuple:
    """Values of xi -> tr(eta -> [xi, eta]_Lambda on h^0) on the basis of h^0."""
    w = h0_closure_witness(space)
    if w is not None:
        raise PreconditionError("h^0 is not closed under the twisted bracket (pair %r)" % (w,))
    H0 = space.h0.basis
    vals = []
    for xi in H0:
        tr = Fraction(0)
        for j, eta in enumerate(H0):
            tr += space.h0.coordinates(twisted_bracket(xi, eta, space))[j]
        vals.append(tr)
    return tuple(vals)


def b_lambda(lam: Multivector, g: LieAlgebraData) -> tuple:
    """b Lambda = sum_i [x_i, y_i] for Lambda = sum_i x_i ^ y_i."""
    out = la.zero_vec(g.dim)
    for (i, j), c in lam.coords.items():
        out = la.add(out, la.scale(c, g.bracket_basis(i, j)))
    return out


def b_lambda_from_terms(terms: Sequence, g: LieAlgebraData) -> tuple:
    """b Lambda from an explicit decomposition [(x_1, y_1), ...]."""
    out = la.zero_vec(g.dim)
    for x, y in terms:
        out = la.add(out, g.bracket(la.vec(x), la.vec(y)))
    return out


def chi_l(space: HomogeneousSpaceData, v: Sequence) -> Fraction:
    """tr(ad_v restricted to l), for v in l."""
    l = space.l
    if not l.contains(v):
        raise ValueError("vector is not in l")
    dbl = space.double
    tr = Fraction(0)
    for j, b in enumerate(l.basis):
        w = dbl.bracket(v, b)
        tr += l.coordinates(w)[j]
    return tr


def _require_drinfeld(space: HomogeneousSpaceData):
    rep = check_drinfeld(space)
    if not rep.ok:
        raise PreconditionError("Drinfeld conditions fail: %r" % (rep.witnesses,))
    return rep


def lambda_chi_sides(space: HomogeneousSpaceData):
    """
    Both sides of the character identity on the basis of h^0:
      chi_{h0,Lambda}(xi) + (b Lambda, xi)
      = 1/2 (chi_l(Lambda xi + xi) - chi_g(Lambda xi) + chi_{g*}(xi)).
    """
    _require_drinfeld(space)
    chi_g = adjoint_character(space.g)
    chi_gs = adjoint_character(space.bialg.dual)
    bl = b_lambda(space.lam, space.g)
    left = [c + la.dot(bl, xi) for c, xi in zip(chi_h0_lambda(space), space.h0.basis)]
    right = []
    for xi in space.h0.basis:
        lx = space.lam_apply(xi)
        right.append(Fraction(1, 2) * (chi_l(space, join(lx, xi)) - la.dot(chi_g, lx)
                                       + la.dot(xi, chi_gs)))
    return tuple(left), tuple(right)


def verify_lambda_chi(space: HomogeneousSpaceData) -> tuple:
    left, right = lambda_chi_sides(space)
    return la.sub(left, right)


@dataclass(frozen=True)
class ModularElement:
    value: tuple
    x_l: tuple
    chi_g: tuple
    chi_gstar: tuple


def modular_element(space: HomogeneousSpaceData) -> ModularElement:
    """
    Base-point modular element 1/2 q(x_l + chi_{g*} + Lambda chi_g) in the
    quotient coordinates, where (x_l, xi) = chi_l(Lambda xi + xi) on h^0.
    """
    _require_drinfeld(space)
    H0 = space.h0.basis
    rhs = [chi_l(space, space.kappa(xi)) for xi in H0]
    x_l = la.solve(H0, rhs, space.n) if H0 else la.zero_vec(space.n)
    if x_l is None:
        raise PreconditionError("no x_l solves the character system")
    chi_g = adjoint_character(space.g)
    x0 = adjoint_character(space.bialg.dual)
    total = la.add(la.add(x_l, x0), space.lam_apply(chi_g))
    Q = space.quotient
    value = la.scale(Fraction(1, 2), Q.q(total)) if Q.dim else ()
    return ModularElement(value, x_l, chi_g, x0)


def anchor_at_point(frame: PointFrame, v: Sequence) -> tuple:
    """Right-trivialized anchor p_g Ad_g(x + xi) at the frame's point."""
    n = frame.n
    return split(ad_group_on_double(frame, v), n)[0]


def coefficient_weight_at_identity(space: HomogeneousSpaceData, N: int, v: Sequence) -> Fraction:
    """(N/2)(chi_l(x + xi) - chi_g(x) + chi_{g*}(xi)) for x + xi in l."""
    v = la.vec(v)
    if not space.l.contains(v):
        raise ValueError("vector is not in l")
    x, xi = split(v, space.n)
    chi_g = adjoint_character(space.g)
    chi_gs = adjoint_character(space.bialg.dual)
    return Fraction(N, 2) * (chi_l(space, v) - la.dot(chi_g, x) + la.dot(xi, chi_gs))


def l_algebra(space: HomogeneousSpaceData):
    """(l as an abstract Lie algebra in the basis of space.l, h inside it)."""
    from .lie import restrict_algebra
    basis = space.l.basis
    alg = restrict_algebra(space.double.d, basis)
    n = space.n
    h_in_l = [space.l.coordinates(join(x, la.zero_vec(n))) for x in space.h.space.basis]
    return alg, Subspace.span(h_in_l, len(basis))

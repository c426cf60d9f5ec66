"""
Quasi-triple twist data and pointwise checks on D x_G D/G.

For a bivector Lambda on g the complement g' = {Lambda xi + xi} of g in the
double is Lagrangian but in general not a subalgebra; the failure is
measured by the tri-vector phi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg as la
from .double import (BialgebraData, DoubleData, FrameError, PointFrame, ad_star_x,
                     ad_star_xi, build_double, join, split)
from .drinfeld import anchor_at_point
from .exterior import Multivector, basis_keys, contract, quotient_map_matrix
from .linalg import DimensionError, Subspace


class ConventionError(RuntimeError):
    """Independent computations of the same quantity disagree."""


def _check_lambda(lam: Multivector, n: int):
    if lam.dim != n or lam.degree != 2:
        raise DimensionError("Lambda must be a bivector over a %d-dimensional algebra" % n)


def g_prime(lam: Multivector) -> Subspace:
    """g' = span{Lambda xi_i + xi_i} inside the double."""
    n = lam.dim
    return Subspace.span([join(contract(lam, la.unit(n, i)), la.unit(n, i)) for i in range(n)], 2 * n)


def _kappa(lam, xi):
    return join(contract(lam, xi), xi)


def phi_by_projection(dbl: DoubleData, lam: Multivector) -> Multivector:
    """phi(xi, eta, zeta) = <p_1[L xi + xi, L eta + eta], L zeta + zeta>, p_1(x + xi) = x - L xi."""
    n = dbl.n
    e = [la.unit(n, i) for i in range(n)]
    vals = []
    for i, j, k in basis_keys(n, 3):
        x, xi = split(dbl.bracket(_kappa(lam, e[i]), _kappa(lam, e[j])), n)
        p1 = join(la.sub(x, contract(lam, xi)), la.zero_vec(n))
        vals.append(dbl.pair(p1, _kappa(lam, e[k])))
    return Multivector.from_dense(n, 3, vals)


def phi_by_expansion(bialg: BialgebraData, lam: Multivector) -> Multivector:
    """
    phi(xi, eta, zeta) = (zeta, [L xi, L eta] + ad*_xi L eta - ad*_eta L xi - L [xi, eta]_L),
    with [xi, eta]_L = [xi, eta] + ad*_{L xi} eta - ad*_{L eta} xi.
    """
    n = bialg.n
    g = bialg.g
    L = [contract(lam, la.unit(n, i)) for i in range(n)]
    vals = []
    for i, j, k in basis_keys(n, 3):
        xi, eta = la.unit(n, i), la.unit(n, j)
        tw = la.sub(la.add(bialg.dual_bracket(xi, eta), ad_star_x(L[i], eta, g)),
                    ad_star_x(L[j], xi, g))
        v = g.bracket(L[i], L[j])
        v = la.add(v, ad_star_xi(xi, L[j], bialg))
        v = la.sub(v, ad_star_xi(eta, L[i], bialg))
        v = la.sub(v, contract(lam, tw))
        vals.append(v[k])
    return Multivector.from_dense(n, 3, vals)


def phi_by_schouten(bialg: BialgebraData, lam: Multivector) -> Multivector:
    """1/2 [Lambda, Lambda] + delta(Lambda)."""
    return bialg.g.schouten(lam, lam) * Fraction(1, 2) + bialg.delta_ext(lam)


def phi(bialg: BialgebraData, lam: Multivector, dbl: DoubleData | None = None) -> Multivector:
    """phi computed three ways; ConventionError if any two differ."""
    _check_lambda(lam, bialg.n)
    dbl = dbl or build_double(bialg, check=False)
    a = phi_by_projection(dbl, lam)
    b = phi_by_expansion(bialg, lam)
    c = phi_by_schouten(bialg, lam)
    if a != b or a != c:
        raise ConventionError("phi disagrees: projection %r, expansion %r, schouten %r" % (a, b, c))
    return a


@dataclass(frozen=True, eq=False)
class QuasiTripleData:
    bialg: BialgebraData
    lam: Multivector
    g_prime: Subspace
    phi: Multivector

    @classmethod
    def make(cls, bialg: BialgebraData, lam: Multivector) -> "QuasiTripleData":
        _check_lambda(lam, bialg.n)
        return cls(bialg, lam, g_prime(lam), phi(bialg, lam))


def delta_g_prime(bialg: BialgebraData, lam: Multivector, v: Sequence) -> Multivector:
    """
    delta_{g'}(Lambda xi + xi) on the basis g'_k = Lambda xi_k + xi_k:
    the (k, l) coordinate is (xi, [x_k, x_l]).
    """
    n = bialg.n
    v = la.vec(v)
    _, xi = split(v, n)
    if _kappa(lam, xi) != v:
        raise ValueError("vector is not in g'")
    g = bialg.g
    return Multivector(n, 2, {(k, l): la.dot(xi, g.bracket_basis(k, l))
                              for k, l in basis_keys(n, 2)})


# ---------------------------------------------------------------------------
# pointwise geometry
# ---------------------------------------------------------------------------

def _ad_g_image(ad: Sequence[Sequence], n: int) -> Subspace:
    cols = la.transpose(ad)
    return Subspace.span(cols[:n], 2 * n)


def check_eq_gg(lam: Multivector, ad_d: Sequence[Sequence], ad_gd: Sequence[Sequence]) -> tuple:
    """(g' & Ad_d g == 0, g* & Ad_{gd} g == 0)."""
    n = lam.dim
    gstar = Subspace.coordinate(range(n, 2 * n), 2 * n)
    first = (g_prime(lam) & _ad_g_image(ad_d, n)).dim == 0
    second = (gstar & _ad_g_image(ad_gd, n)).dim == 0
    return first, second


@dataclass(frozen=True)
class PointPiP:
    """
    pi_P at (g, d) as a linear map from g* + Ad_d g to g + d/Ad_d g.

    Input coordinates: xi on the dual basis, then y + eta as coefficients on
    the columns Ad_d x_1, ..., Ad_d x_n. Output coordinates: the anchor in
    right-trivialized form, then d/Ad_d g via quotient_map_matrix. The
    covector y + eta in Ad_d g acts on d/Ad_d g through the pairing.
    """
    frame_g: PointFrame
    ad_d: tuple
    lam: Multivector
    matrix: tuple
    form: tuple

    @property
    def rank(self) -> int:
        return la.rank(self.matrix)

    @property
    def is_antisymmetric(self) -> bool:
        F = self.form
        return all(F[i][j] == -F[j][i] for i in range(len(F)) for j in range(len(F)))


def point_pi_p(frame_g: PointFrame, ad_d: Sequence[Sequence], lam: Multivector,
               dbl: DoubleData | None = None) -> PointPiP:
    """
    (xi, y + eta) -> (lambda_u(g), -[u]) with u = y - Lambda eta + Lambda xi + xi.

    The induced bilinear form pairs the first output slot with a
    left-trivialized covector, (xi_1, Ad_{g^-1} v), and the second through
    the pairing of d.
    """
    n = frame_g.n
    _check_lambda(lam, n)
    ad_d = la.mat(ad_d)
    if len(ad_d) != 2 * n:
        raise FrameError("Ad_d must be %d x %d" % (2 * n, 2 * n))
    if dbl is not None:
        from .double import preserves_bracket, preserves_pairing
        for ok, where in (preserves_bracket(ad_d, dbl.d), preserves_pairing(ad_d, dbl)):
            if not ok:
                raise FrameError("Ad_d is not an automorphism of the double (basis %r)" % (where,))
    W = _ad_g_image(ad_d, n)
    if W.dim != n:
        raise FrameError("Ad_d is singular")
    Q = quotient_map_matrix(W)
    cols_d = la.transpose(ad_d)
    inputs = [join(la.zero_vec(n), la.unit(n, i)) for i in range(n)] + list(cols_d[:n])

    us = []
    for idx, v in enumerate(inputs):
        if idx < n:
            xi = v[n:]
            us.append(join(contract(lam, xi), xi))
        else:
            y, eta = split(v, n)
            us.append(join(la.sub(y, contract(lam, eta)), la.zero_vec(n)))
    cols = []
    for u in us:
        anchor = anchor_at_point(frame_g, u)
        cols.append(anchor + la.scale(-1, la.matvec(Q, u)))
    M = la.transpose(cols)

    inv = la.inverse(frame_g.Ad_g)
    F = []
    for a, va in enumerate(inputs):
        row = []
        for u in us:
            if a < n:
                row.append(la.dot(va[n:], la.matvec(inv, anchor_at_point(frame_g, u))))
            else:
                x, xi = split(va, n)
                row.append(-(la.dot(x, u[n:]) + la.dot(u[:n], xi)))
        F.append(tuple(row))
    return PointPiP(frame_g, ad_d, lam, M, tuple(F))


def xi_h_element(frame_h: PointFrame, lam: Multivector, xi: Sequence) -> tuple:
    """Ad_h Lambda xi + p_g Ad_h xi - Lambda Ad*_{h^-1} xi."""
    xi = la.vec(xi)
    cxi = la.matvec(frame_h.coAd, xi)
    out = la.matvec(frame_h.Ad_g, contract(lam, xi))
    out = la.add(out, contract(frame_h.piG, cxi))
    return la.sub(out, contract(lam, cxi))


def check_xi_h(frame_h: PointFrame, lam: Multivector, xi: Sequence, h: Subspace) -> bool:
    """Membership of Ad_h Lambda xi + p_g Ad_h xi - Lambda Ad*_{h^-1} xi in h, for xi in h^0."""
    if h.image(frame_h.Ad_g) != h:
        raise FrameError("frame does not preserve h")
    if any(la.dot(xi, b) for b in h.basis):
        raise ValueError("xi does not annihilate h")
    return h.contains(xi_h_element(frame_h, lam, xi))

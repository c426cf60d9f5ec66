from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from poisson_homog import linalg as la
from poisson_homog.double import (BialgebraData, FrameError, PointFrame, build_double,
                                  frame_from_group, frame_matrix, is_lagrangian, is_nilpotent,
                                  join)
from poisson_homog.drinfeld import HomogeneousSpaceData, check_drinfeld, l_from_lambda
from poisson_homog.exterior import Multivector, basis_keys, contract
from poisson_homog.lie import LieAlgebraData, ad_matrix
from poisson_homog.linalg import DimensionError, Subspace
from poisson_homog.twist import (ConventionError, QuasiTripleData, check_eq_gg, check_xi_h,
                                 delta_g_prime, g_prime, phi, phi_by_expansion,
                                 phi_by_projection, phi_by_schouten, point_pi_p, xi_h_element)

from helpers import SL2, nilpotent_directions, random_generators, random_multivector
from oracles import schouten_leibniz

EF = Multivector.basis(3, 1, 2)
HEF = Multivector.basis(3, 0, 1, 2)
coef = st.integers(-3, 3)


def test_phi_vanishes_for_zero_lambda(catalog):
    for name, spec in catalog.items():
        assert phi(spec.bialg, Multivector.zero(spec.g.dim, 2)).is_zero(), name


def test_phi_of_ef_over_trivial_cobracket():
    assert phi(BialgebraData.trivial(SL2), EF) == HEF


def test_phi_on_abelian_is_zero(rng):
    b = BialgebraData.trivial(LieAlgebraData.abelian(4))
    for _ in range(10):
        assert phi(b, random_multivector(rng, 4, 2)).is_zero()


@given(st.lists(coef, min_size=3, max_size=3))
def test_phi_schouten_route_matches_leibniz_oracle(c):
    lam = Multivector.from_dense(3, 2, c)
    b = BialgebraData.trivial(SL2)
    assert phi_by_schouten(b, lam) == schouten_leibniz(lam, lam, SL2) * Fraction(1, 2)


def test_phi_routes_agree_on_catalog(catalog, rng):
    for name, spec in catalog.items():
        b = spec.bialg
        dbl = build_double(b)
        for _ in range(5):
            lam = random_multivector(rng, b.n, 2)
            a = phi_by_projection(dbl, lam)
            assert a == phi_by_expansion(b, lam) == phi_by_schouten(b, lam), name


def test_phi_reports_disagreement(monkeypatch):
    import poisson_homog.twist as tw
    monkeypatch.setattr(tw, "phi_by_schouten", lambda b, lam: Multivector.zero(3, 3))
    with pytest.raises(ConventionError):
        tw.phi(BialgebraData.trivial(SL2), EF)


def test_phi_rejects_wrong_shape():
    with pytest.raises(DimensionError):
        phi(BialgebraData.trivial(SL2), Multivector.basis(3, 0))


def test_g_prime_is_lagrangian_complement(catalog, rng):
    for name, spec in catalog.items():
        dbl = build_double(spec.bialg)
        for _ in range(5):
            gp = g_prime(random_multivector(rng, dbl.n, 2))
            assert gp.dim == dbl.n
            assert is_lagrangian(gp, dbl), name
            assert (gp & dbl.g_subspace()).dim == 0, name


def test_g_prime_with_zero_h_is_graph_of_lambda(catalog):
    for name, spec in catalog.items():
        lam = spec.lam_or_zero
        sp = HomogeneousSpaceData.make(spec.bialg, (), lam)
        assert g_prime(lam) == l_from_lambda(sp), name


def test_zero_lambda_gives_g_star(catalog):
    for spec in catalog.values():
        n = spec.g.dim
        q = QuasiTripleData.make(spec.bialg, Multivector.zero(n, 2))
        assert q.g_prime == Subspace.coordinate(range(n, 2 * n), 2 * n)
        assert q.phi.is_zero()


def test_delta_g_prime_against_pairing(catalog, rng):
    # <delta v, x_k ^ x_l> = <v, [x_k, x_l]> computed in the double
    for name, spec in catalog.items():
        b = spec.bialg
        dbl = build_double(b)
        n = b.n
        for _ in range(3):
            lam = random_multivector(rng, n, 2)
            xi = tuple(rng.randint(-3, 3) for _ in range(n))
            v = join(contract(lam, xi), xi)
            out = delta_g_prime(b, lam, v)
            for k, l in basis_keys(n, 2):
                w = join(b.g.bracket_basis(k, l), la.zero_vec(n))
                assert out[(k, l)] == dbl.pair(v, w), name


def test_delta_g_prime_abelian_and_membership():
    ab = BialgebraData.trivial(LieAlgebraData.abelian(3))
    assert delta_g_prime(ab, EF, join(contract(EF, (1, 2, 3)), (1, 2, 3))).is_zero()
    with pytest.raises(ValueError):
        delta_g_prime(ab, EF, (1, 0, 0, 0, 0, 0))


def test_delta_g_prime_zero_lambda_is_bracket_transpose():
    b = BialgebraData.trivial(SL2)
    lam = Multivector.zero(3, 2)
    out = delta_g_prime(b, lam, (0, 0, 0, 0, 0, 1))
    # eps_F sees only [H, F] = -2F
    assert out == Multivector(3, 2, {(0, 2): -2})


# pointwise checks

def _sl2_setup():
    b = BialgebraData.coboundary(SL2, EF)
    return b, build_double(b)


@pytest.mark.parametrize("name", ["abelian2", "aff2", "sl2_ef_cartan", "sl2_he_point", "heisenberg"])
def test_identity_frame_is_nondegenerate(catalog, name):
    spec = catalog[name]
    dbl = build_double(spec.bialg)
    n = dbl.n
    lam = spec.lam_or_zero
    I = la.identity(2 * n)
    assert check_eq_gg(lam, I, I) == (True, True)
    P = point_pi_p(PointFrame.identity(n), I, lam, dbl)
    assert P.is_antisymmetric
    assert P.rank == 2 * n


def test_random_frames_antisymmetric_and_gg_gives_full_rank(rng):
    b, dbl = _sl2_setup()
    gdirs = nilpotent_directions(SL2)
    ddirs = nilpotent_directions(dbl.d)
    for _ in range(20):
        fr = frame_from_group(dbl, random_generators(rng, gdirs), random_generators(rng, ddirs))
        lam = random_multivector(rng, 3, 2, -2, 2)
        ad_gd = la.matmul(frame_matrix(fr), fr.Ad_d)
        gg = check_eq_gg(lam, fr.Ad_d, ad_gd)
        P = point_pi_p(fr, fr.Ad_d, lam, dbl)
        assert P.is_antisymmetric
        if all(gg):
            assert P.rank == 6


def test_swap_on_abelian_double_breaks_gg():
    ab = BialgebraData.trivial(LieAlgebraData.abelian(2))
    dbl = build_double(ab)
    S = ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0))
    lam = Multivector.zero(2, 2)
    assert check_eq_gg(lam, S, S) == (False, False)
    P = point_pi_p(PointFrame.identity(2), S, lam, dbl)
    assert P.is_antisymmetric and P.rank == 0


def test_point_rejects_non_automorphism():
    _, dbl = _sl2_setup()
    bad = la.matscale(2, la.identity(6))
    with pytest.raises(FrameError):
        point_pi_p(PointFrame.identity(3), bad, EF, dbl)
    with pytest.raises(FrameError):
        point_pi_p(PointFrame.identity(3), la.identity(4), EF)


def test_xi_h_identity_frame_is_lambda(catalog):
    for name, spec in catalog.items():
        sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
        fr = PointFrame.identity(spec.g.dim)
        for xi in sp.h0.basis:
            assert xi_h_element(fr, sp.lam, xi) == la.zero_vec(spec.g.dim), name
            assert check_xi_h(fr, sp.lam, xi, sp.h.space)


def test_xi_h_on_drinfeld_fixtures(catalog, rng):
    for name, spec in catalog.items():
        sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
        if not check_drinfeld(sp).ok:
            continue
        dbl = build_double(spec.bialg)
        cands = list(sp.h.space.basis) + nilpotent_directions(spec.g)
        dirs = [z for z in cands if sp.h.space.contains(z) and _nilpotent(spec.g, z)]
        if not dirs:
            continue
        for _ in range(5):
            fr = frame_from_group(dbl, random_generators(rng, dirs))
            for xi in sp.h0.basis:
                assert check_xi_h(fr, sp.lam, xi, sp.h.space), name


def test_xi_h_rejects_frame_outside_normalizer():
    b, dbl = _sl2_setup()
    fr = frame_from_group(dbl, [(0, 1, 0)])
    h = Subspace.span([(1, 0, 0)], 3)
    with pytest.raises(FrameError):
        check_xi_h(fr, EF, (0, 1, 0), h)


def _nilpotent(g, z):
    return is_nilpotent(ad_matrix(z, g))

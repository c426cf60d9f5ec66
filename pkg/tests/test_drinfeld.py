from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from poisson_homog import linalg as la
from poisson_homog.double import BialgebraData, PointFrame, build_double, join
from poisson_homog.drinfeld import (CorrespondenceError, HomogeneousSpaceData, PreconditionError,
                                    anchor_at_point, b_lambda, b_lambda_from_terms,
                                    check_drinfeld, check_h0_closure, check_lambda_conditions,
                                    chi_h0_lambda, chi_l, coefficient_weight_at_identity,
                                    h0_closure_witness, l_from_lambda, lagrangian_from_r,
                                    modular_element, q_lambda, r_from_lagrangian,
                                    twisted_bracket, verify_lambda_chi)
from poisson_homog.exterior import Multivector, basis_keys, contract
from poisson_homog.lie import LieAlgebraData, quotient_basis
from poisson_homog.linalg import Subspace

from helpers import AFF2, BOOK, HEIS, SL2

EF = Multivector.basis(3, 1, 2)
small = st.integers(-3, 3)


def bivectors(n):
    m = len(basis_keys(n, 2))
    return st.lists(small, min_size=m, max_size=m).map(lambda v: Multivector.from_dense(n, 2, v))


def h_plus_h0(n, h):
    h0 = la.annihilator_of(h)
    return Subspace.span([join(x, la.zero_vec(n)) for x in h.basis]
                         + [join(la.zero_vec(n), xi) for xi in h0.basis], 2 * n)


# correspondence

def test_r_zero_gives_h_plus_h0():
    h = Subspace.span([(1, 0, 0)], 3)
    l = lagrangian_from_r(SL2, h, Multivector.zero(2, 2))
    assert l == h_plus_h0(3, h)
    assert r_from_lagrangian(l, SL2, h).is_zero()


def test_h_zero_gives_graph():
    r = Multivector.basis(3, 0, 2) * 2
    l = lagrangian_from_r(SL2, Subspace.zero(3), r)
    for i in range(3):
        xi = la.unit(3, i)
        assert l.contains(join(contract(r, xi), xi))


def test_two_dim_quotient_line_forces_r_zero():
    h = Subspace.span([(0, 1)], 2)
    l = lagrangian_from_r(AFF2, h, Multivector.zero(1, 2))
    assert l == Subspace.span([(0, 1, 0, 0), (0, 0, 1, 0)], 4)


def test_r_from_lagrangian_errors():
    h = Subspace.span([(1, 0, 0)], 3)
    with pytest.raises(CorrespondenceError):
        r_from_lagrangian(Subspace.coordinate(range(3), 6), SL2, h)
    with pytest.raises(CorrespondenceError):
        r_from_lagrangian(Subspace.coordinate([0, 1, 3], 6), SL2, h)


GL4 = LieAlgebraData.from_brackets(4, {(0, 1): (0, 1, 0, 0), (0, 2): (0, 0, 1, 0), (1, 2): (0, 0, 0, 1)})


@given(st.lists(small, min_size=3, max_size=3))
def test_roundtrip_four_dim_one_dim_h(vals):
    h = Subspace.span([(0, 0, 0, 1)], 4)
    r = Multivector.from_dense(3, 2, vals)
    l = lagrangian_from_r(GL4, h, r)
    assert r_from_lagrangian(l, GL4, h) == r


@given(bivectors(3), bivectors(3))
def test_lift_independence(lam, extra):
    h = Subspace.span([(1, 0, 0)], 3)
    # keep only the part of `extra` inside h ^ g
    shift = Multivector(3, 2, {k: c for k, c in extra.coords.items() if 0 in k})
    b = BialgebraData.trivial(SL2)
    a = HomogeneousSpaceData.make(b, h.basis, lam)
    c = HomogeneousSpaceData.make(b, h.basis, lam + shift)
    assert l_from_lambda(a) == l_from_lambda(c)
    assert q_lambda(a) == q_lambda(c)


def test_l_from_lambda_agrees_with_correspondence(catalog):
    for name, spec in catalog.items():
        sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
        assert sp.l == lagrangian_from_r(sp.g, sp.h, q_lambda(sp)), name


# Drinfeld conditions

def test_aff2_fixture_passes(catalog):
    spec = catalog["aff2"]
    sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
    rep = check_drinfeld(sp)
    assert rep.cond_a_infinitesimal and rep.cond_b and rep.lemma_conditions == (True, True)
    assert rep.witnesses == {}


def test_bracket_failure_has_witnesses(catalog):
    spec = catalog["sl2_bracket_fail"]
    sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
    rep = check_drinfeld(sp)
    assert rep.cond_a_infinitesimal and not rep.cond_b
    assert "cond_b" in rep.witnesses and "lambda_condition_2" in rep.witnesses
    # [E^F, E^F] = 2 H^E^F pairs with eps_H ^ eps_E ^ eps_F to 2
    assert rep.witnesses["lambda_condition_2"]["value"] == "2"


def test_h_equal_g_always_passes():
    sp = HomogeneousSpaceData.make(BialgebraData.coboundary(SL2, EF), la.identity(3))
    rep = check_drinfeld(sp)
    assert rep.ok and sp.l == Subspace.coordinate(range(3), 6)


def test_condition_two_on_cartan():
    sp = HomogeneousSpaceData.make(BialgebraData.trivial(SL2), [(1, 0, 0)], EF)
    assert check_lambda_conditions(sp) == (True, True)


def test_book_algebra_separates_the_conditions():
    # [h, l] fails, hence closure of l fails, while [L, L] + 2 delta(L) lies in h ^ g ^ g
    sp = HomogeneousSpaceData.make(BialgebraData.trivial(BOOK), [(1, 0, 0)], Multivector.basis(3, 1, 2))
    rep = check_drinfeld(sp)
    assert not rep.cond_a_infinitesimal and not rep.cond_b
    assert rep.lemma_conditions == (False, True)
    assert h0_closure_witness(sp) == (0, 1)
    with pytest.raises(PreconditionError):
        chi_h0_lambda(sp)


# twisted bracket and characters

@given(st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_twisted_bracket_specializations(xi, eta):
    b = BialgebraData.coboundary(SL2, EF)
    sp = HomogeneousSpaceData.make(b, (), Multivector.zero(3, 2))
    assert twisted_bracket(xi, eta, sp) == b.dual_bracket(xi, eta)
    sp0 = HomogeneousSpaceData.make(BialgebraData.trivial(SL2), (), Multivector.zero(3, 2))
    assert la.is_zero(twisted_bracket(xi, eta, sp0))


@given(bivectors(3), st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_twisted_bracket_is_gstar_part_of_double_bracket(lam, xi, eta):
    b = BialgebraData.coboundary(SL2, EF + Multivector.basis(3, 0, 1))
    sp = HomogeneousSpaceData.make(b, (), lam)
    dbl = build_double(b)
    assert dbl.p_gstar(dbl.bracket(sp.kappa(xi), sp.kappa(eta))) == twisted_bracket(xi, eta, sp)


def test_h0_closure_vacuous_for_h_zero():
    sp = HomogeneousSpaceData.make(BialgebraData.trivial(BOOK), (), Multivector.basis(3, 1, 2))
    assert check_h0_closure(sp)


def test_b_lambda():
    assert b_lambda(EF, SL2) == (1, 0, 0)
    assert b_lambda(Multivector.zero(3, 2), SL2) == (0, 0, 0)
    # E ^ F = (E + H) ^ F - H ^ F
    terms = [((1, 1, 0), (0, 0, 1)), ((-1, 0, 0), (0, 0, 1))]
    assert b_lambda_from_terms(terms, SL2) == b_lambda(EF, SL2)


def test_chi_zero_for_zero_data():
    sp = HomogeneousSpaceData.make(BialgebraData.trivial(SL2), [(1, 0, 0)])
    assert chi_h0_lambda(sp) == (0, 0)


def test_lambda_chi_on_aff2(catalog):
    spec = catalog["aff2"]
    sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
    assert verify_lambda_chi(sp) == (0,)


def test_lambda_chi_requires_drinfeld(catalog):
    spec = catalog["sl2_bracket_fail"]
    sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
    with pytest.raises(PreconditionError):
        verify_lambda_chi(sp)


# modular element

def test_modular_element_abelian():
    ab = LieAlgebraData.abelian(3)
    sp = HomogeneousSpaceData.make(BialgebraData.trivial(ab), [(1, 0, 0)])
    assert modular_element(sp).value == (0, 0)


def test_modular_element_aff2_fixture(catalog):
    spec = catalog["aff2"]
    sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
    me = modular_element(sp)
    assert me.chi_g == (1, 0) and me.chi_gstar == (0, 0)
    assert sp.h.space.contains(me.x_l)
    assert me.value == (0,)


def test_modular_element_aff2_with_bivector():
    # l = span{x2 + eps1, -x1 + eps2} with [u1, u2] = u1: chi_l(u1) = 0, chi_l(u2) = -1,
    # so x_l = -x2 and the value is 1/2 (-x2 + 0 + Lambda eps1) = 0
    sp = HomogeneousSpaceData.make(BialgebraData.trivial(AFF2), (), Multivector.basis(2, 0, 1))
    me = modular_element(sp)
    assert me.x_l == (0, -1)
    assert me.value == (0, 0)
    assert chi_l(sp, (0, 1, 1, 0)) == 0 and chi_l(sp, (-1, 0, 0, 1)) == -1


def test_modular_element_well_defined_mod_h(catalog):
    spec = catalog["sl2_sum_borel"]
    sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
    me = modular_element(sp)
    Q = sp.quotient
    for x in sp.h.space.basis:
        other = la.add(me.x_l, la.scale(3, x))
        for xi in sp.h0.basis:
            assert la.dot(xi, other) == la.dot(xi, me.x_l)
        assert Q.q(other) == Q.q(me.x_l)


def test_modular_element_linear_in_lambda_term():
    # h = 0: doubling Lambda doubles the Lambda chi_g contribution
    b = BialgebraData.trivial(BOOK)
    vals = []
    for s in (1, 2):
        sp = HomogeneousSpaceData.make(b, (), Multivector.basis(3, 1, 2) * s)
        vals.append(sp.lam_apply(modular_element(sp).chi_g))
    assert vals[1] == la.scale(2, vals[0])


# anchor and weights

def test_anchor_identity_frame():
    fr = PointFrame.identity(3)
    assert anchor_at_point(fr, (1, 2, 3, 4, 5, 6)) == (1, 2, 3)


def test_anchor_with_zero_pi():
    A = ((1, 0, 0), (0, 2, 0), (0, 0, Fraction(1, 2)))
    fr = PointFrame.from_Ad_g(A, Multivector.zero(3, 2))
    assert anchor_at_point(fr, (1, 1, 1, 0, 0, 0)) == (1, 2, Fraction(1, 2))


@given(st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_anchor_bracket_on_g_parts(x, y):
    dbl = build_double(BialgebraData.coboundary(SL2, EF))
    fr = PointFrame.identity(3)
    u, v = join(x, (0, 0, 0)), join(y, (0, 0, 0))
    assert anchor_at_point(fr, dbl.bracket(u, v)) == SL2.bracket(anchor_at_point(fr, u),
                                                                  anchor_at_point(fr, v))


def test_coefficient_weights(catalog):
    spec = catalog["aff2"]
    sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
    for v in sp.l.basis:
        assert coefficient_weight_at_identity(sp, 0, v) == 0
    assert coefficient_weight_at_identity(sp, 2, (0, 0, 1, 0)) == 0
    assert coefficient_weight_at_identity(sp, 2, (0, 1, 0, 0)) == 0
    with pytest.raises(ValueError):
        coefficient_weight_at_identity(sp, 2, (1, 0, 0, 0))


def test_weights_vanish_when_everything_unimodular(catalog):
    spec = catalog["heisenberg"]
    sp = HomogeneousSpaceData.make(spec.bialg, spec.h, spec.lam_or_zero)
    for N in (1, 2, 5):
        assert all(coefficient_weight_at_identity(sp, N, v) == 0 for v in sp.l.basis)

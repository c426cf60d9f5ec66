import pytest
from hypothesis import given, strategies as st

from poisson_homog import linalg as la
from poisson_homog.double import (BialgebraData, FrameError, NotABialgebra, PointFrame,
                                  ad_group_on_double, build_double, check_frame,
                                  check_pairing_invariance, frame_from_group, frame_matrix,
                                  is_lagrangian, preserves_bracket, preserves_pairing,
                                  six_term_bracket)
from poisson_homog.exterior import Multivector
from poisson_homog.lie import LieAlgebraData, validate_lie
from poisson_homog.linalg import Subspace

SL2 = LieAlgebraData.from_brackets(3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)})
EF = Multivector.basis(3, 1, 2)


def test_catalog_doubles(catalog):
    for name, spec in catalog.items():
        dbl = build_double(spec.bialg)
        assert dbl.jacobi.ok, name
        assert check_pairing_invariance(dbl).ok, name
        assert is_lagrangian(dbl.g_subspace(), dbl)
        assert is_lagrangian(dbl.gstar_subspace(), dbl)


def test_dual_bracket_of_standard_sl2():
    b = BialgebraData.coboundary(SL2, EF)
    # delta(E) = [E, E^F] = E^H, so [eps_H, eps_E] picks up -1 on eps_E
    assert b.delta((0, 1, 0)) == Multivector.basis(3, 1, 0)
    assert b.dual_bracket((1, 0, 0), (0, 1, 0)) == (0, -1, 0)
    assert validate_lie(b.dual).ok


def test_trivial_cobracket_gives_semidirect_product():
    dbl = build_double(BialgebraData.trivial(SL2))
    # [xi, eta] = 0 and [x, xi] = ad*_x xi; (ad*_E eps_E, H) = (eps_E, [H, E]) = 2
    assert la.is_zero(dbl.bracket(la.unit(6, 3), la.unit(6, 4)))
    assert dbl.bracket(la.unit(6, 1), la.unit(6, 4)) == (0, 0, 0, 2, 0, 0)


def test_non_bialgebra_raises_with_witness():
    heis = LieAlgebraData.from_brackets(3, {(0, 1): (0, 0, 1)})
    bad = BialgebraData(heis, ((1, 0, 0), (0, 0, 0), (0, 0, 0)))
    with pytest.raises(NotABialgebra) as exc:
        build_double(bad)
    assert not exc.value.report.ok
    assert not build_double(bad, check=False).jacobi.ok


@given(st.lists(st.integers(-2, 2), min_size=6, max_size=6),
       st.lists(st.integers(-2, 2), min_size=6, max_size=6))
def test_six_term_bracket_is_antisymmetric(u, v):
    b = BialgebraData.coboundary(SL2, EF)
    assert six_term_bracket(b, u, v) == la.scale(-1, six_term_bracket(b, v, u))


def test_identity_frame_and_errors():
    dbl = build_double(BialgebraData.coboundary(SL2, EF))
    fr = PointFrame.identity(3)
    check_frame(fr, dbl)
    assert frame_matrix(fr) == la.identity(6)
    with pytest.raises(FrameError):
        PointFrame(la.identity(3), ((2, 0, 0), (0, 1, 0), (0, 0, 1)), Multivector.zero(3, 2))
    bad = PointFrame.from_Ad_g(((1, 0, 0), (0, 2, 0), (0, 0, 1)), Multivector.zero(3, 2))
    with pytest.raises(FrameError):
        check_frame(bad, dbl)


@pytest.mark.parametrize("gens", [[(0, 1, 0)], [(0, 0, 2)], [(0, 1, 0), (0, 0, -1)]])
def test_group_frames_are_consistent(gens):
    dbl = build_double(BialgebraData.coboundary(SL2, EF))
    fr = frame_from_group(dbl, gens, [(0, 0, 0, 0, 1, 0)])
    check_frame(fr, dbl)
    M = frame_matrix(fr)
    assert preserves_bracket(M, dbl.d)[0]
    assert preserves_pairing(M, dbl)[0]
    # the frame action agrees with the exponential it came from on g*
    v = (0, 0, 0, 1, 2, 3)
    assert ad_group_on_double(fr, v) == la.matvec(M, v)

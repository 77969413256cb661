from fractions import Fraction as F

import pytest

from arithwidth import dilation
from arithwidth.exact import PreconditionError
from arithwidth.polytope import make_polytope
from arithwidth.semigroup import length_oracle, numerical_semigroup, semigroup_polytope


@pytest.fixture
def segment():
    return make_polytope([(0,), (1,)])


def test_segment_series(segment):
    s = dilation.aw_series(segment, (1,), 1, 5)
    assert [v for _, v in s.samples] == [2, 3, 4, 5, 6]
    assert s.to_csv().splitlines() == ["n,value", "1,2", "2,3", "3,4", "4,5", "5,6"]


def test_segment_fit(segment):
    model = dilation.fit_quasilinear(dilation.aw_series(segment, (1,), 1, 6))
    piece = model.pieces[0]
    assert (piece.slope, piece.intercept, piece.onset) == (1, 1, 1)
    assert model(100) == 101


def test_fit_needs_samples(sliver):
    with pytest.raises(dilation.InsufficientSamples):
        dilation.fit_quasilinear(dilation.aw_series(sliver, (0, 1), 1, 10))


def test_bad_range(segment):
    with pytest.raises(PreconditionError):
        dilation.aw_series(segment, (1,), 0, 5)
    with pytest.raises(PreconditionError):
        dilation.aw_series(segment, (1,), 5, 4)


def test_frozen_quad_series(quad):
    # values from the independent convex-hull oracle
    assert [v for _, v in dilation.aw_series(quad, (0, 1), 6, 12).samples] == [4, 4, 5, 5, 6, 6, 7]
    assert [v for _, v in dilation.aw_series(quad, (1, 0), 6, 12).samples] == [4, 4, 4, 5, 5, 6, 7]


def test_increment(sliver, triangle):
    assert dilation.recurrence_increment(sliver, (0, 1)) == 14
    assert dilation.recurrence_increment(triangle, (1, 0)) == 4
    diag = make_polytope([(0, 0), (2, 2)])
    assert dilation.lattice_step(diag, (1, 1)) == 2
    assert dilation.recurrence_increment(diag, (1, 1)) == 2


def test_recurrence_sliver(sliver):
    rep = dilation.verify_recurrence(sliver, (0, 1), 1, 40)
    assert rep.onset is not None and rep.onset <= 5
    assert all(v < rep.onset for v in rep.violations)
    assert rep.checked_through == 35


def test_recurrence_flags_dilates_off_lattice():
    P = make_polytope([(0, F(1, 2)), (2, F(1, 2))])
    rep = dilation.verify_recurrence(P, (1, 0), 1, 12)
    assert set(rep.skipped) == {1, 3, 5, 7, 9}
    assert rep.onset is not None and not rep.violations
    s = dilation.aw_series(P, (1, 0), 1, 4)
    assert s.flagged == (1, 3)


def test_semigroup_recurrence_single_check():
    S = numerical_semigroup([22, 79, 91, 190])
    P = semigroup_polytope(S)
    assert P.denominator == 15025010
    k = dilation.check_recurrence(P, (1, 1, 1, 1), 4180, length_oracle(S))
    assert k.holds and k.lhs == 201344


def test_semigroup_gap_count():
    S = numerical_semigroup([22, 79, 91, 190])
    rep = dilation.gap_count_series(semigroup_polytope(S), (1, 1, 1, 1), 4180, 4180, length_oracle(S))
    assert rep.counts == ((4180, 5),)


def test_gap_count_triangle(triangle):
    rep = dilation.gap_count_series(triangle, (1, 0), 1, 12)
    assert dict(rep.counts)[1] == 1
    assert rep.onset is not None and rep.onset <= 2


def test_integrality_gaps(sliver):
    g = dilation.integrality_gaps(sliver, (0, 1))
    assert (g.I_M, g.I_m) == (F(14, 5), 0)
    rep = dilation.integrality_gap_periodicity(sliver, (0, 1), 1, 40)
    assert [rep.classes[r].value.I_M for r in range(5)] == [0, F(14, 5), F(8, 5), F(7, 5), F(11, 5)]
    assert all(rep.classes[r].value.I_m == 0 for r in range(5))
    with pytest.raises(PreconditionError):
        dilation.integrality_gaps(make_polytope([(F(1, 2), 0)]), (1, 0))


def test_reflected_quad_minimizer_pattern():
    # the quad fixture with x1 and x2 exchanged
    Q = make_polytope([(0, 0), (0, F(1, 3)), (F(1, 2), 0), (F(1, 3), F(1, 2))])
    rep = dilation.optimal_direction_series(Q, 1, 60)
    both, only = ((0, 1), (1, 0)), ((0, 1),)
    assert {r: rep.classes[r].value for r in range(6)} == {0: both, 1: both, 2: only, 3: both, 4: only, 5: both}


def test_aw_min_series_quad(quad):
    res = dilation.aw_min_series(quad, 1, 36)
    assert all(p.slope == F(1, 2) for p in res.model.pieces.values())
    assert all(res.slope_consistent(r) for r in range(6))
    d = res.to_dict()
    assert d["model"]["D"] == 6 and len(d["series"]["samples"]) == 36

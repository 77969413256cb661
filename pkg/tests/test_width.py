import random
from fractions import Fraction as F

import pytest

from arithwidth import width
from arithwidth.exact import PreconditionError
from arithwidth.lattice_points import enumerate_lattice_points
from arithwidth.polytope import dilate, make_polytope
from conftest import random_polytope
from oracles import brute_min_aw


def test_directions_sliver(sliver):
    assert width.test_directions(sliver) == [(0, 1)]


def test_directions_triangle(triangle):
    dirs = width.test_directions(triangle)
    assert (0, 1) in dirs and (1, -2) in dirs


def test_directions_collinear():
    P = make_polytope([(0, 0), (3, 3)])
    assert width.test_directions(P) == [(1, -1)]


def test_directions_need_two_points(quad):
    with pytest.raises(PreconditionError):
        width.test_directions(quad)


def test_distinct_difference_directions():
    pts = [(0, 0), (1, 1), (2, 2), (0, 1)]
    assert width.distinct_difference_directions(pts) == [(0, 1), (1, 0), (1, 1), (2, 1)]


def test_arithmetic_width_examples(triangle, sliver, quad):
    r = width.arithmetic_width(triangle)
    assert r.value == 3 and set(r.minimizers) == {(0, 1), (1, -2)}
    r = width.arithmetic_width(sliver)
    assert r.value == 1 and r.minimizers == ((0, 1),)
    r = width.arithmetic_width(quad)
    assert r.value == 1 and r.convention
    assert width.arithmetic_width(make_polytope([(F(1, 2), 0)])).value == 0


def test_arithmetic_width_1d():
    r = width.arithmetic_width(make_polytope([(F(-1, 2),), (F(7, 3),)]))
    assert r.value == 3 and r.minimizers == ((1,),)


def test_widths_large_entries_fall_back():
    pts = [(0, 0), (2**40, 1)]
    dirs = [(1, 0), (0, 1)]
    assert width._widths(pts, dirs) == [2, 2]


@pytest.mark.parametrize("seed", range(30))
def test_test_set_sufficient_2d(seed):
    rng = random.Random(1000 + seed)
    P = random_polytope(rng, 2)
    pts = enumerate_lattice_points(P)
    if len(pts) < 2:
        return
    assert width.arithmetic_width(P).value == brute_min_aw(pts, 2, 6)


@pytest.mark.parametrize("seed", range(10))
def test_test_set_sufficient_3d(seed):
    rng = random.Random(2000 + seed)
    P = random_polytope(rng, 3, bound=3)
    pts = enumerate_lattice_points(P)
    if len(pts) < 2:
        return
    assert width.arithmetic_width(P).value == brute_min_aw(pts, 3, 3)


def test_lattice_width_bounded():
    square = make_polytope([(0, 0), (1, 0), (0, 1), (1, 1)])
    r = width.lattice_width_bounded(square)
    assert r.value == 1 and set(r.minimizers) == {(1, 0), (0, 1)}
    assert width.lattice_width_bounded(dilate(square, 5), 3).value == 5
    with pytest.raises(PreconditionError):
        width.lattice_width_bounded(square, 0)


def test_lattice_width_sliver(sliver):
    r = width.lattice_width_bounded(sliver)
    assert r.value == 1 and r.minimizers == ((1, 0),)
    assert r.method == width.BOUNDED_ENUMERATION


def test_divergence(sliver):
    rep = width.divergence_report(sliver)
    assert rep.relation == "disjoint"
    square = make_polytope([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert width.divergence_report(square).relation == "equal"
    d = rep.to_dict()
    assert d["lattice_width"]["value"] == "1" and d["arithmetic_width"]["minimizers"] == [[0, 1]]


def test_primitive_directions():
    dirs = width.primitive_directions(2, 1)
    assert sorted(dirs) == [(0, 1), (1, -1), (1, 0), (1, 1)]

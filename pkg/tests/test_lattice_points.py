from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithwidth.lattice_points import (
    EnumerationCapExceeded,
    bounding_box,
    box_size,
    count_lattice_points,
    enumerate_lattice_points,
)
from arithwidth.polytope import contains, dilate, make_polytope, translate
from oracles import lattice_points_2d

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4)
points2 = st.lists(st.tuples(rationals, rationals), min_size=1, max_size=6)
points3 = st.lists(st.tuples(rationals, rationals, rationals), min_size=1, max_size=5)


def test_examples(triangle, sliver, quad):
    assert enumerate_lattice_points(triangle) == [(0, 0), (2, 1), (3, 1), (4, 1), (4, 2)]
    assert enumerate_lattice_points(sliver) == [(0, 0), (1, 0)]
    assert enumerate_lattice_points(quad) == [(0, 0)]
    assert enumerate_lattice_points(make_polytope([(F(1, 2), F(1, 2))])) == []


def test_unit_cube_dilate():
    cube = make_polytope(list(product((0, 1), repeat=3)))
    assert count_lattice_points(dilate(cube, 2)) == 27


def test_bounding_box(sliver):
    assert bounding_box(sliver) == ((0, 0), (1, 2))
    assert box_size(sliver) == 6
    assert box_size(make_polytope([(F(1, 3), 0), (F(2, 3), 0)])) == 0


def test_cap_exceeded():
    big = make_polytope([(0, 0), (1000, 0), (0, 1000)])
    with pytest.raises(EnumerationCapExceeded) as err:
        enumerate_lattice_points(big, cap=1000)
    assert err.value.estimate == 1001 ** 2


@settings(max_examples=150, deadline=None)
@given(points2)
def test_matches_hull_oracle(pts):
    P = make_polytope(pts)
    assert enumerate_lattice_points(P) == lattice_points_2d(pts)


@settings(max_examples=40, deadline=None)
@given(points3)
def test_matches_membership_in_3d(pts):
    P = make_polytope(pts)
    lo, hi = bounding_box(P)
    expected = [z for z in product(*[range(a, b + 1) for a, b in zip(lo, hi)]) if contains(P, z)]
    assert enumerate_lattice_points(P) == expected


@settings(max_examples=60, deadline=None)
@given(points2, st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_translation_equivariance(pts, t):
    P = make_polytope(pts)
    shifted = [tuple(a + b for a, b in zip(z, t)) for z in enumerate_lattice_points(P)]
    assert enumerate_lattice_points(translate(P, t)) == shifted


@settings(max_examples=60, deadline=None)
@given(points2, st.tuples(rationals, rationals))
def test_adding_a_vertex_only_adds_points(pts, extra):
    small = set(enumerate_lattice_points(make_polytope(pts)))
    assert small <= set(enumerate_lattice_points(make_polytope(pts + [extra])))

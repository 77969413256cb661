"""Exact enumeration of the integer points of a rational polytope.

The scan walks the bounding box one axis at a time. Before descending along
an axis it computes, by exact LP, the range that axis takes on the slice of P
cut out by the already-fixed coordinates, so only the projection of P is
visited. On the last axis the slice is an interval and every integer in it is
a point of P.
"""

from __future__ import annotations

from functools import lru_cache
from math import ceil, floor, prod

from .exact import IntVector
from .polytope import RationalPolytope, coordinate_range

DEFAULT_CAP = 10**8


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, estimate: int, cap: int):
        super().__init__(f"bounding box holds {estimate} candidate points, cap is {cap}")
        self.estimate = estimate
        self.cap = cap


def bounding_box(P: RationalPolytope) -> tuple[IntVector, IntVector]:
    lo = tuple(ceil(min(v[i] for v in P.vertices)) for i in range(P.dim))
    hi = tuple(floor(max(v[i] for v in P.vertices)) for i in range(P.dim))
    return lo, hi


def box_size(P: RationalPolytope) -> int:
    lo, hi = bounding_box(P)
    return prod(max(0, b - a + 1) for a, b in zip(lo, hi))


@lru_cache(maxsize=4096)
def _scan(P: RationalPolytope) -> tuple[IntVector, ...]:
    d = P.dim
    out: list[IntVector] = []

    def walk(prefix: tuple[int, ...]) -> None:
        rng = coordinate_range(P, prefix)
        if rng is None:
            return
        lo, hi = ceil(rng[0]), floor(rng[1])
        if len(prefix) == d - 1:
            out.extend(prefix + (z,) for z in range(lo, hi + 1))
        else:
            for z in range(lo, hi + 1):
                walk(prefix + (z,))

    walk(())
    return tuple(out)


def enumerate_lattice_points(P: RationalPolytope, cap: int = DEFAULT_CAP) -> list[IntVector]:
    """All of ``P ∩ Z^d`` in lexicographic order.

    Raises :class:`EnumerationCapExceeded` when the bounding box holds more
    than ``cap`` candidates.
    """
    size = box_size(P)
    if size > cap:
        raise EnumerationCapExceeded(size, cap)
    if size == 0:
        return []
    return list(_scan(P))


def count_lattice_points(P: RationalPolytope, cap: int = DEFAULT_CAP) -> int:
    return len(enumerate_lattice_points(P, cap))

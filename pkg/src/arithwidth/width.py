"""Global minimization of arithmetic width and (bounded) lattice width."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .arithmetic_range import functional_values, lattice_width_dir
from .exact import (
    IntVector,
    PreconditionError,
    canonical_direction,
    format_rational,
    integer_kernel,
    kernel_generator,
    rational_rank,
)
from .lattice_points import DEFAULT_CAP, enumerate_lattice_points
from .polytope import RationalPolytope

TEST_SET = "test_set"
BOUNDED_ENUMERATION = "bounded_enumeration"

# products of |entries| below this fit comfortably in int64
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class WidthResult:
    value: int | Fraction
    minimizers: tuple[IntVector, ...]
    method: str
    convention: str | None = None

    def to_dict(self) -> dict:
        value = self.value if isinstance(self.value, int) else format_rational(self.value)
        out = {"value": value, "minimizers": [list(c) for c in self.minimizers],
               "method": self.method}
        if self.convention:
            out["convention"] = self.convention
        return out


def _as_int64(rows: Sequence[Sequence[int]]) -> np.ndarray | None:
    arr = np.array(rows, dtype=object)
    if arr.size and int(np.abs(arr).max()) >= 2**31:
        return None
    return arr.astype(np.int64)


def distinct_difference_directions(points: Sequence[IntVector]) -> list[IntVector]:
    """Canonical directions of ``x - y`` over distinct pairs of ``points``."""
    if len(points) < 2:
        return []
    arr = _as_int64(points)
    if arr is not None:
        i, j = np.triu_indices(len(points), k=1)
        diffs = np.unique(arr[j] - arr[i], axis=0)
        raw = [tuple(int(x) for x in row) for row in diffs]
    else:
        raw = {tuple(a - b for a, b in zip(x, y)) for x, y in combinations(points, 2)}
    return sorted({canonical_direction(v) for v in raw})


def test_directions(P: RationalPolytope, cap: int = DEFAULT_CAP) -> list[IntVector]:
    """Finite direction set guaranteed to contain an arithmetic-width minimizer.

    Differences are taken between lattice points of P (not the whole of
    ``(P - P) ∩ Z^d``), which is enough because a minimizer must collapse
    some pair of lattice points. If the differences span all of R^d, each
    independent (d-1)-subset contributes its primitive kernel generator.
    Otherwise every direction orthogonal to the span already gives width 1,
    and a basis of that integer kernel is returned.
    """
    pts = enumerate_lattice_points(P, cap)
    if len(pts) < 2:
        raise PreconditionError("test_directions: need at least two lattice points")
    d = P.dim
    dirs = distinct_difference_directions(pts)
    span = rational_rank(dirs)
    out: set[IntVector] = set()
    if span < d:
        for k in integer_kernel(dirs, d):
            out.add(canonical_direction(k))
    elif d == 1:
        out.add((1,))
    else:
        for subset in combinations(dirs, d - 1):
            g = kernel_generator(subset)
            if any(g):
                out.add(canonical_direction(g))
    return sorted(out)


def _widths(points: Sequence[IntVector], dirs: Sequence[IntVector]) -> list[int]:
    if not dirs:
        return []
    pts = _as_int64(points)
    ds = _as_int64(dirs)
    if pts is not None and ds is not None:
        bound = int(np.abs(pts).max(initial=0)) * int(np.abs(ds).max(initial=0)) * len(dirs[0])
        if bound < _INT64_SAFE:
            out: list[int] = []
            for start in range(0, len(dirs), 2048):
                vals = np.sort(pts @ ds[start:start + 2048].T, axis=0)
                out.extend(int(x) for x in 1 + np.count_nonzero(np.diff(vals, axis=0), axis=0))
            return out
    return [len(functional_values(points, c)) for c in dirs]


def arithmetic_width(P: RationalPolytope, cap: int = DEFAULT_CAP) -> WidthResult:
    """Minimum arithmetic width over all directions, with every test
    direction attaining it."""
    pts = enumerate_lattice_points(P, cap)
    e1 = (1,) + (0,) * (P.dim - 1)
    if len(pts) <= 1:
        note = "no lattice points" if not pts else "single lattice point"
        return WidthResult(len(pts), (e1,), TEST_SET, f"{note}: every direction attains the value")
    dirs = test_directions(P, cap)
    widths = _widths(pts, dirs)
    best = min(widths)
    return WidthResult(best, tuple(c for c, w in zip(dirs, widths) if w == best), TEST_SET)


def primitive_directions(d: int, bound: int) -> list[IntVector]:
    """Canonical primitive vectors with sup-norm at most ``bound``."""
    out = []
    for c in product(range(-bound, bound + 1), repeat=d):
        if any(c) and canonical_direction(c) == c:
            out.append(c)
    return out


def lattice_width_bounded(P: RationalPolytope, bound: int = 10) -> WidthResult:
    """Minimum lattice width over canonical primitive ``c`` with
    ``max|c_i| <= bound``.

    Exact for that family only; it is the global minimum when the optimal
    direction is known to lie inside the box.
    """
    if bound < 1:
        raise PreconditionError("lattice_width_bounded: bound must be >= 1")
    best, arg = None, []
    for c in primitive_directions(P.dim, bound):
        w = lattice_width_dir(P, c)
        if best is None or w < best:
            best, arg = w, [c]
        elif w == best:
            arg.append(c)
    return WidthResult(best, tuple(arg), BOUNDED_ENUMERATION)


@dataclass(frozen=True)
class DivergenceReport:
    arithmetic: WidthResult
    lattice: WidthResult
    relation: str

    def to_dict(self) -> dict:
        return {"arithmetic_width": self.arithmetic.to_dict(),
                "lattice_width": self.lattice.to_dict(),
                "relation": self.relation}


def divergence_report(P: RationalPolytope, bound: int = 10, cap: int = DEFAULT_CAP) -> DivergenceReport:
    """Compare the minimizer sets of arithmetic and lattice width."""
    aw = arithmetic_width(P, cap)
    lw = lattice_width_bounded(P, bound)
    a, b = set(aw.minimizers), set(lw.minimizers)
    if a == b:
        relation = "equal"
    elif a & b:
        relation = "overlapping"
    else:
        relation = "disjoint"
    return DivergenceReport(aw, lw, relation)
test_directions.__test__ = False

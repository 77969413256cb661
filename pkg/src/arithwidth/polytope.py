"""V-represented rational polytopes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import _simplex
from .exact import (
    IntMatrix,
    IntVector,
    PreconditionError,
    RationalVector,
    dot,
    integer_kernel,
    lcm_denominators,
    parse_rational,
    rational_rank,
    scale_to_integers,
    solve_integer_system,
)


@dataclass(frozen=True)
class AffineLatticeData:
    """Integer structure of the affine hull of a polytope.

    ``direction_lattice`` is a basis of the integer points of the linear
    space parallel to aff(P); it exists even when aff(P) misses Z^d.
    ``base_point`` and ``lattice_basis`` are set only when aff(P) contains an
    integer point.
    """

    has_lattice_point: bool
    affine_dim: int
    base_point: IntVector | None
    lattice_basis: IntMatrix | None
    direction_lattice: IntMatrix
    normals: IntMatrix


@dataclass(frozen=True)
class RationalPolytope:
    """Convex hull of a finite list of rational points.

    The stored list is deduplicated and sorted; it is not hull-reduced, so
    :attr:`denominator` is the denominator of the stored V-description.
    Build instances with :func:`make_polytope`.
    """

    vertices: tuple[RationalVector, ...]
    dim: int
    denominator: int = field(init=False, compare=False, repr=False)
    affine: AffineLatticeData = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "denominator",
                           lcm(*(lcm_denominators(v) for v in self.vertices)))
        object.__setattr__(self, "affine", _affine_data(self.vertices, self.dim))

    def __len__(self):
        return len(self.vertices)


def make_polytope(points: Iterable[Sequence]) -> RationalPolytope:
    pts = [tuple(parse_rational(x) if isinstance(x, str) else Fraction(x) for x in p)
           for p in points]
    if not pts:
        raise PreconditionError("make_polytope: need at least one point")
    d = len(pts[0])
    if d < 1 or any(len(p) != d for p in pts):
        raise PreconditionError("make_polytope: points must share a positive length")
    return RationalPolytope(tuple(sorted(set(pts))), d)


def dilate(P: RationalPolytope, n) -> RationalPolytope:
    n = Fraction(n)
    if n < 0:
        raise PreconditionError("dilate: factor must be nonnegative")
    return make_polytope([tuple(n * x for x in v) for v in P.vertices])


def translate(P: RationalPolytope, t: Sequence) -> RationalPolytope:
    if len(t) != P.dim:
        raise PreconditionError("translate: dimension mismatch")
    t = [Fraction(x) for x in t]
    return make_polytope([tuple(a + b for a, b in zip(v, t)) for v in P.vertices])


def denominator(P: RationalPolytope) -> int:
    return P.denominator


def _check_direction(P: RationalPolytope, c: Sequence[int]) -> None:
    if len(c) != P.dim:
        raise PreconditionError(f"direction has length {len(c)}, expected {P.dim}")
    if not any(c):
        raise PreconditionError("direction must be nonzero")


def support(P: RationalPolytope, c: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Exact ``(min, max)`` of ``c.x`` over P."""
    _check_direction(P, c)
    vals = [dot(c, v) for v in P.vertices]
    return Fraction(min(vals)), Fraction(max(vals))


def _combination_system(P: RationalPolytope, fixed: Sequence[tuple[int, Fraction]]):
    # lambda >= 0, sum lambda = 1, sum lambda_i v_i[axis] = value for each fixed axis
    A = [[1] * len(P.vertices)]
    b = [1]
    for axis, value in fixed:
        A.append([v[axis] for v in P.vertices])
        b.append(value)
    return A, b


def contains(P: RationalPolytope, x: Sequence) -> bool:
    """Exact membership, decided as LP feasibility of a convex combination."""
    if len(x) != P.dim:
        raise PreconditionError("contains: dimension mismatch")
    A, b = _combination_system(P, list(enumerate(Fraction(a) for a in x)))
    return _simplex.feasible(A, b)


def coordinate_range(P: RationalPolytope, prefix: Sequence) -> tuple[Fraction, Fraction] | None:
    """Range of coordinate ``len(prefix)`` over the slice of P where the
    leading coordinates equal ``prefix``; ``None`` if that slice is empty."""
    j = len(prefix)
    if j == 0:
        col = [v[0] for v in P.vertices]
        return min(col), max(col)
    A, b = _combination_system(P, list(enumerate(prefix)))
    col = [v[j] for v in P.vertices]
    status, lo, _ = _simplex.solve(A, b, col)
    if status != _simplex.OPTIMAL:
        return None
    _, neg_hi, _ = _simplex.solve(A, b, [-a for a in col])
    return lo, -neg_hi


def _affine_data(vertices: Sequence[RationalVector], d: int) -> AffineLatticeData:
    v0 = vertices[0]
    diffs = [scale_to_integers([a - b for a, b in zip(v, v0)]) for v in vertices[1:]]
    affine_dim = rational_rank(diffs)
    normals = integer_kernel(diffs, d) if affine_dim < d else []
    direction = integer_kernel(normals, d)
    # aff(P) = {z : N z = N v0}
    rhs = [dot(row, v0) for row in normals]
    if any(Fraction(h).denominator != 1 for h in rhs):
        return AffineLatticeData(False, affine_dim, None, None, direction, normals)
    base, _ = solve_integer_system(normals, [int(h) for h in rhs], d)
    if base is None:
        return AffineLatticeData(False, affine_dim, None, None, direction, normals)
    return AffineLatticeData(True, affine_dim, base, direction, direction, normals)


def affine_lattice(P: RationalPolytope) -> AffineLatticeData:
    return P.affine


def in_affine_hull(P: RationalPolytope, x: Sequence) -> bool:
    v0 = P.vertices[0]
    return all(dot(row, x) == dot(row, v0) for row in P.affine.normals)

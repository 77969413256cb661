"""Arithmetic range, arithmetic width and lattice width in a fixed direction."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Sequence

from .exact import IntVector, PreconditionError, canonical_direction, dot, primitive
from .lattice_points import DEFAULT_CAP, enumerate_lattice_points
from .polytope import RationalPolytope, _check_direction, support


@dataclass(frozen=True)
class ArithmeticRange:
    values: tuple[int, ...]
    direction: IntVector

    def __len__(self):
        return len(self.values)

    def __contains__(self, x):
        return x in set(self.values)


@dataclass(frozen=True)
class AlmostAP:
    m: int
    M: int
    step: int
    gaps_left: tuple[int, ...]
    gaps_right: tuple[int, ...]
    t: int
    t_prime: int

    @property
    def gaps(self) -> tuple[int, ...]:
        return self.gaps_left + self.gaps_right

    def reconstruct(self) -> list[int]:
        """The progression from m to M minus all gaps."""
        missing = set(self.gaps)
        return [x for x in range(self.m, self.M + 1, self.step) if x not in missing]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["gaps_left"] = list(self.gaps_left)
        d["gaps_right"] = list(self.gaps_right)
        return d


def functional_values(points: Iterable[Sequence[int]], c: Sequence[int]) -> list[int]:
    """Sorted distinct values of ``c.z`` over ``points``."""
    return sorted({dot(c, z) for z in points})


def arithmetic_range(P: RationalPolytope, c: Sequence[int], cap: int = DEFAULT_CAP) -> ArithmeticRange:
    """AR of P in the canonical direction parallel to ``c``."""
    _check_direction(P, c)
    cc = canonical_direction(c)
    return ArithmeticRange(tuple(functional_values(enumerate_lattice_points(P, cap), cc)), cc)


def arithmetic_width_dir(P: RationalPolytope, c: Sequence[int], cap: int = DEFAULT_CAP) -> int:
    return len(arithmetic_range(P, c, cap))


def functional_is_constant(P: RationalPolytope, c: Sequence[int]) -> bool:
    """True when ``c.x`` is constant on aff(P)."""
    _check_direction(P, c)
    return all(dot(c, b) == 0 for b in P.affine.direction_lattice)


def step_size(P: RationalPolytope, c: Sequence[int]) -> int:
    """Generator of the image of the affine-span lattice under the primitive
    part of ``c``. Returns 1 when the functional is constant on aff(P); use
    :func:`functional_is_constant` to tell that case apart."""
    _check_direction(P, c)
    if not P.affine.has_lattice_point:
        raise PreconditionError("step_size: aff(P) contains no lattice point")
    c0, _ = primitive(c)
    g = 0
    for b in P.affine.direction_lattice:
        g = gcd(g, dot(c0, b))
    return g or 1


def decompose_almost_ap(S: Iterable[int]) -> AlmostAP:
    """Split a finite integer set into progression, left gaps and right gaps.

    The step is the gcd of offsets from the minimum. Gaps at or below the
    midpoint ``(m + M) / 2`` count as left gaps.
    """
    vals = sorted(set(S))
    if not vals:
        raise PreconditionError("decompose_almost_ap: empty set")
    m, M = vals[0], vals[-1]
    step = 0
    for s in vals:
        step = gcd(step, s - m)
    step = step or 1
    present = set(vals)
    gaps = [x for x in range(m, M + 1, step) if x not in present]
    left = tuple(g for g in gaps if 2 * g <= m + M)
    right = tuple(g for g in gaps if 2 * g > m + M)
    t = left[-1] - m if left else 0
    t_prime = M - right[0] if right else 0
    return AlmostAP(m, M, step, left, right, t, t_prime)


def lattice_width_dir(P: RationalPolytope, c: Sequence[int]) -> Fraction:
    """``max c.x - min c.x`` over P, for ``c`` exactly as given."""
    lo, hi = support(P, c)
    return hi - lo


def moment_vector(z: int, d: int) -> IntVector:
    return tuple(z ** i for i in range(d))


def separating_direction(P: RationalPolytope, cap: int = DEFAULT_CAP) -> IntVector:
    """Smallest moment-curve point ``(1, z, ..., z^(d-1))`` that takes
    distinct values on all lattice points of P."""
    pts = enumerate_lattice_points(P, cap)
    if not pts:
        raise PreconditionError("separating_direction: P has no lattice points")
    bound = (P.dim - 1) * comb(len(pts), 2) + 1
    for z in range(bound + 1):
        c = moment_vector(z, P.dim)
        if len({dot(c, x) for x in pts}) == len(pts):
            return c
    raise AssertionError("no separating moment direction within the guaranteed bound")

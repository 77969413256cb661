"""Arithmetic width, arithmetic range and lattice width of rational polytopes."""

from .arithmetic_range import (
    AlmostAP,
    ArithmeticRange,
    arithmetic_range,
    arithmetic_width_dir,
    decompose_almost_ap,
    lattice_width_dir,
    separating_direction,
    step_size,
)
from .exact import PreconditionError, canonical_direction, gcd_vector, primitive
from .lattice_points import (
    EnumerationCapExceeded,
    bounding_box,
    count_lattice_points,
    enumerate_lattice_points,
)
from .polytope import (
    RationalPolytope,
    affine_lattice,
    contains,
    denominator,
    dilate,
    make_polytope,
    support,
    translate,
)
from .semigroup import factorizations, length_set, numerical_semigroup, semigroup_polytope
from .width import WidthResult, arithmetic_width, divergence_report, lattice_width_bounded

__version__ = "0.1.0"

"""Exact reduced open Gromov-Witten invariants of K3 surfaces.

The boundary condition is a rigid special-Lagrangian rational curve: a
primitive class L of square -2.  The library computes, in exact integer and
rational arithmetic,

* the Yau-Zaslow series q/Delta(q) and its coefficients (``series``),
* reduced closed invariants via the multiple-cover formula (``closed``),
* relative classes, their valid liftings, strong primitivity (``relative``),
* rational period points, central charges, hyperkahler rotation (``periods``),
* chamber sums, wall-crossing, and BPS integers (``walls``).

There are no floats anywhere in the computational paths; all comparisons are
exact, so results carry no tolerance caveats.
"""

from .closed import ClosedInvariant, reduced_gw, reduced_gw_profile, two_divisible_check
from .errors import (
    OMEGA_BOUNDARY,
    OMEGA_NORM,
    OMEGA_SQUARE,
    ConsistencyError,
    K3dwError,
    LatticeError,
    NormalizationError,
    OnWallError,
    PeriodError,
    SchemaError,
    SeriesCapError,
    ValidationError,
)
from .lattice import (
    DIM,
    GRAM,
    Vector,
    content,
    extend_to_unimodular_basis,
    gram_matrix,
    pair,
    reflect,
    square,
)
from .periods import (
    GaussianRational,
    PeriodPoint,
    UnitAngle,
    central_charge,
    disc_angle_direction,
    is_on_wall_pair,
    rotate,
    twistor_form,
    validate_period,
    wall_decompositions,
)
from .relative import (
    BoundaryClass,
    RelativeClass,
    divide,
    relative_divisibility,
    same_class,
    strongly_primitive,
    valid_liftings,
)
from .series import SeriesTable, default_table, yz_coefficient, yz_coefficients
from .walls import (
    KahlerVector,
    WallRecord,
    bps_invariant,
    chamber_check,
    crossing_delta,
    multiple_cover_reconstruction,
    open_invariant,
    valid_hyperplanes,
    validate_kahler,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryClass",
    "ClosedInvariant",
    "ConsistencyError",
    "DIM",
    "GRAM",
    "GaussianRational",
    "K3dwError",
    "KahlerVector",
    "LatticeError",
    "NormalizationError",
    "OMEGA_BOUNDARY",
    "OMEGA_NORM",
    "OMEGA_SQUARE",
    "OnWallError",
    "PeriodError",
    "PeriodPoint",
    "RelativeClass",
    "SchemaError",
    "SeriesCapError",
    "SeriesTable",
    "UnitAngle",
    "ValidationError",
    "Vector",
    "WallRecord",
    "bps_invariant",
    "central_charge",
    "chamber_check",
    "content",
    "crossing_delta",
    "default_table",
    "disc_angle_direction",
    "divide",
    "extend_to_unimodular_basis",
    "gram_matrix",
    "is_on_wall_pair",
    "multiple_cover_reconstruction",
    "open_invariant",
    "pair",
    "reduced_gw",
    "reduced_gw_profile",
    "reflect",
    "relative_divisibility",
    "rotate",
    "same_class",
    "square",
    "strongly_primitive",
    "twistor_form",
    "two_divisible_check",
    "valid_hyperplanes",
    "valid_liftings",
    "validate_kahler",
    "validate_period",
    "wall_decompositions",
    "yz_coefficient",
    "yz_coefficients",
]

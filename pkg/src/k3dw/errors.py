"""Exception types shared across the library.

Everything user-facing derives from K3dwError.  Input problems (malformed
vectors, bad preconditions, schema violations) are ValidationError, which is
also a ValueError so that callers using plain ``except ValueError`` keep
working.  ConsistencyError is reserved for the case where two independent
routes to the same number disagree; it should never fire on valid input.
"""

from __future__ import annotations


class K3dwError(Exception):
    """Base class for all library errors."""


class ValidationError(K3dwError, ValueError):
    """A precondition on user-supplied data failed."""


class LatticeError(ValidationError):
    """Malformed lattice data: wrong length, non-integral entries, bad root."""


# Codes for the three period-point constraints, checked in this order.
OMEGA_SQUARE = "OMEGA_SQUARE"
OMEGA_NORM = "OMEGA_NORM"
OMEGA_BOUNDARY = "OMEGA_BOUNDARY"


class PeriodError(ValidationError):
    """A period point violates one of its defining constraints.

    The ``code`` attribute says which one: OMEGA_SQUARE (the holomorphic
    two-form does not square to zero), OMEGA_NORM (its norm is not positive),
    or OMEGA_BOUNDARY (it is not orthogonal to the boundary class).
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class NormalizationError(ValidationError):
    """A Kahler-type form fails its normalization against a period point."""


class SchemaError(ValidationError):
    """A JSON payload does not match the documented schema."""


class OnWallError(K3dwError):
    """The Kahler class pairs to zero with a wall that carries weight.

    ``offsets`` lists the integer offsets k of the offending walls.
    """

    def __init__(self, offsets):
        self.offsets = tuple(offsets)
        super().__init__(f"Kahler class lies on wall(s) at k={list(self.offsets)}")


class SeriesCapError(K3dwError):
    """A series coefficient beyond the configured cap was requested."""


class ConsistencyError(K3dwError):
    """Two independent computations of the same quantity disagree."""

"""Relative curve classes: the lattice modulo its rigid boundary class.

A boundary condition is a primitive (-2)-class L (a rigid rational curve; its
special-Lagrangian representative is unique, so relative classes need no
extra framing data).  Classes of disks ending on it live in the quotient
lattice by Z*L, and each relative class gamma has a fiber of liftings
gamma~ = representative + k*L back in the full lattice.

A lifting is *valid* when it supports honest holomorphic curves, i.e. when
its primitive reduction satisfies the rational-curve bound:

    square(gamma~) >= -2 * content(gamma~)^2.

Only finitely many liftings are valid: the left side is a downward parabola
in k while the right side is bounded below by -2*D^2, D the divisibility of
gamma in the quotient (the content of any lifting divides D).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .arith import divisors
from .errors import LatticeError, ValidationError
from .intlinalg import integer_kernel, rational_kernel_integer_basis
from .lattice import Vector, _completion, content, pair, square

QUOTIENT_RANK = 21


@dataclass(frozen=True)
class BoundaryClass:
    """A primitive class of square -2, the boundary curve class."""

    L: Vector

    def __post_init__(self):
        if not self.L.is_integral:
            raise LatticeError("boundary class must be integral")
        if square(self.L) != -2:
            raise LatticeError(
                f"boundary class must have square -2, got {square(self.L)}"
            )
        if content(self.L) != 1:
            raise LatticeError(
                f"boundary class must be primitive, got content {content(self.L)}"
            )


@lru_cache(maxsize=128)
def _quotient_data(l_coords: tuple):
    """Completion data for L: (basis columns, inverse rows) as Vectors/rows.

    Column 0 of the basis is L itself; the remaining 21 columns project to a
    basis of the quotient.  Row i of the inverse reads off the coefficient
    of column i, so rows 1..21 compute quotient coordinates.
    """
    cols, urows = _completion(l_coords)
    basis = [Vector(c) for c in cols]
    return basis, urows


def _quotient_coords(v: Vector, boundary: BoundaryClass) -> tuple[int, ...]:
    _, urows = _quotient_data(boundary.L.coords)
    return tuple(
        sum(r * c for r, c in zip(row, v.coords)) for row in urows[1:]
    )


def _lift_quotient(qcoords, boundary: BoundaryClass) -> Vector:
    """A representative in the lattice with the given quotient coordinates."""
    basis, _ = _quotient_data(boundary.L.coords)
    v = Vector.zero()
    for c, b in zip(qcoords, basis[1:]):
        if c:
            v = v + c * b
    return v


@dataclass(frozen=True, eq=False)
class RelativeClass:
    """A class in the quotient lattice, carried by an explicit representative.

    Two instances are equal when they have the same boundary and their
    representatives differ by an integer multiple of L.  Lifting offsets k
    are always counted from the instance's own representative.
    """

    representative: Vector
    boundary: BoundaryClass

    def __post_init__(self):
        if not self.representative.is_integral:
            raise ValidationError("relative classes must have integral representatives")

    @property
    def quotient_coords(self) -> tuple[int, ...]:
        return _quotient_coords(self.representative, self.boundary)

    @property
    def is_zero(self) -> bool:
        return not any(self.quotient_coords)

    def lifting(self, k: int) -> Vector:
        return self.representative + k * self.boundary.L

    def __eq__(self, other) -> bool:
        if not isinstance(other, RelativeClass):
            return NotImplemented
        return (
            self.boundary == other.boundary
            and self.quotient_coords == other.quotient_coords
        )

    def __hash__(self) -> int:
        return hash((self.boundary.L.coords, self.quotient_coords))

    def __add__(self, other: "RelativeClass") -> "RelativeClass":
        self._require_same_boundary(other)
        return RelativeClass(self.representative + other.representative, self.boundary)

    def __sub__(self, other: "RelativeClass") -> "RelativeClass":
        self._require_same_boundary(other)
        return RelativeClass(self.representative - other.representative, self.boundary)

    def __neg__(self) -> "RelativeClass":
        return RelativeClass(-self.representative, self.boundary)

    def __mul__(self, c: int) -> "RelativeClass":
        return RelativeClass(c * self.representative, self.boundary)

    __rmul__ = __mul__

    def _require_same_boundary(self, other: "RelativeClass") -> None:
        if self.boundary != other.boundary:
            raise ValidationError("relative classes have different boundary classes")


def same_class(u: Vector, v: Vector, boundary: BoundaryClass) -> bool:
    """Whether two lattice vectors represent the same relative class."""
    d = u - v
    if d.is_zero:
        return True
    if not d.is_integral:
        raise ValidationError("representatives must be integral")
    L = boundary.L.coords
    i = next(i for i, c in enumerate(L) if c)
    if d.coords[i] % L[i]:
        return False
    k = d.coords[i] // L[i]
    return d == k * boundary.L


def relative_divisibility(gamma: RelativeClass) -> int:
    """Largest m with gamma = m * (integral class); error on the zero class."""
    qc = gamma.quotient_coords
    m = gcd(*qc)
    if m == 0:
        raise ValidationError("the zero relative class has no divisibility")
    return m


def divide(gamma: RelativeClass, d: int) -> RelativeClass:
    """The relative class gamma/d; d must divide the divisibility."""
    if d < 1:
        raise ValidationError(f"divisor must be a positive integer, got {d}")
    qc = gamma.quotient_coords
    m = gcd(*qc)
    if m == 0:
        raise ValidationError("cannot divide the zero relative class")
    if m % d:
        raise ValidationError(f"{d} does not divide the class divisibility {m}")
    return RelativeClass(
        _lift_quotient(tuple(c // d for c in qc), gamma.boundary), gamma.boundary
    )


def valid_liftings(gamma: RelativeClass) -> list[tuple[int, Vector]]:
    """All liftings gamma~ = representative + k*L passing the curve bound.

    Returns (k, lifting) pairs sorted by k.  The window of candidate k comes
    from an integer square root of the discriminant b^2 + 2*square(rep) +
    4*D^2 (b the L-pairing of the representative, D the divisibility); each
    candidate is then tested against the exact inequality, so the bound only
    needs to be safe, not sharp.
    """
    rep = gamma.representative
    L = gamma.boundary.L
    D = relative_divisibility(gamma)
    sq0 = square(rep)
    b = pair(rep, L)
    disc = b * b + 2 * sq0 + 4 * D * D
    if disc < 0:
        return []
    s = isqrt(disc)
    out = []
    for k in range((b - s) // 2 - 2, (b + s) // 2 + 3):
        lifting = rep + k * L
        c = content(lifting)
        if sq0 + 2 * b * k - 2 * k * k >= -2 * c * c:
            out.append((k, lifting))
    return out


def _strongly_primitive_given_kernel(qgamma, kernel_rows) -> bool:
    """Core of the strong-primitivity test, on quotient coordinates.

    kernel_rows spans the (saturated) sublattice N of charge-silent classes.
    With N = 0 no decomposition gamma = k*gamma' + gamma'' with a nonzero
    silent part exists at all.  Otherwise gamma is decomposable exactly when
    its image in the free quotient by N is divisible by some k >= 2 (or is
    zero), and that divisibility equals the gcd of a dual basis of the
    annihilator of N evaluated on gamma.
    """
    if not kernel_rows:
        return True
    annihilator = integer_kernel([list(r) for r in kernel_rows])
    if not annihilator:
        # N of full rank: the quotient by N is finite, so k*x = gamma is
        # solvable for any k prime to the order; never strongly primitive.
        return False
    dbar = gcd(*(sum(f * c for f, c in zip(phi, qgamma)) for phi in annihilator))
    return dbar == 1


def strongly_primitive(gamma: RelativeClass, period, *, strict: bool = False) -> bool:
    """Whether gamma admits no splitting k*gamma' + gamma'' (k >= 2) with
    gamma'' nonzero and charge-silent for the given period point.

    With strict=True, splittings with gamma'' = 0 also count, i.e. the class
    must in addition be primitive in the quotient.  The two readings agree
    whenever the silent sublattice is nonzero, which for rational period
    points is always; the flag matters only for the degenerate kernel-free
    case reachable through the internal helper.
    """
    from . import periods  # deferred; periods imports this module

    periods.validate_period(period)
    if period.boundary != gamma.boundary:
        raise ValidationError("period point and class have different boundary classes")
    if gamma.is_zero:
        raise ValidationError("strong primitivity applies to nonzero classes")
    basis, _ = _quotient_data(gamma.boundary.L.coords)
    charge_rows = [
        [pair(b, period.re) for b in basis[1:]],
        [pair(b, period.im) for b in basis[1:]],
    ]
    kernel_rows = rational_kernel_integer_basis(charge_rows)
    result = _strongly_primitive_given_kernel(gamma.quotient_coords, kernel_rows)
    if strict:
        result = result and relative_divisibility(gamma) == 1
    return result


def content_divisors(gamma: RelativeClass) -> list[int]:
    """Divisors of the class divisibility, ascending."""
    return divisors(relative_divisibility(gamma))

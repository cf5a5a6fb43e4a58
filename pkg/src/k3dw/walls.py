"""Valid hyperplanes, chamber sums, wall-crossing, and BPS extraction.

Each valid lifting gamma~ of a relative class cuts the hyperplane
pair(kappa, gamma~) = 0 in the cone of Kahler classes kappa.  Off these
walls the reduced open invariant is the chamber sum

    open(gamma, kappa) = sum over valid liftings with pair(kappa, gamma~) > 0
                         of pair(L, gamma~) * reduced_gw(gamma~),

the symmetric convention: liftings pair up under reflection in L with equal
closed invariant and opposite L-pairing, so this equals the antisymmetrized
half-sum and the jump across a wall is

    delta = (sgn(pair(kappa1, gamma~)) - sgn(pair(kappa0, gamma~))) / 2
            * pair(L, gamma~) * reduced_gw(gamma~),

summed over walls, which telescopes along any chamber path.  The same
convention makes open(-gamma) = open(gamma) on the nose.

BPS numbers come out by stripping multiple covers:

    open(gamma, kappa) = sum_{d | D} d^(-2) * bps(gamma/d, kappa),

with D the divisibility of gamma.  bps_invariant computes the inversion of
this relation and, independently, the direct sum over liftings satisfying
the primitive curve bound square(gamma~) >= -2; the two must agree and be
an integer, else a ConsistencyError is raised.

Walls whose lifting pairs to zero with L carry weight zero; they are listed
(they are genuine boundaries) but never block a chamber evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors, mobius
from .closed import reduced_gw
from .errors import ConsistencyError, OnWallError, ValidationError
from .lattice import Vector, pair, square
from .relative import RelativeClass, divide, relative_divisibility, valid_liftings
from .series import SeriesTable, yz_coefficient


@dataclass(frozen=True)
class KahlerVector:
    """A rational Kahler class kappa, kept as its coordinate vector."""

    coords: Vector


@dataclass(frozen=True)
class WallRecord:
    """One valid hyperplane: the lifting, its L-pairing, and its invariant."""

    k: int
    lifting: Vector
    pairing_with_L: int
    closed_invariant: Fraction


def _as_kahler(kappa) -> KahlerVector:
    if isinstance(kappa, KahlerVector):
        return kappa
    if isinstance(kappa, Vector):
        return KahlerVector(kappa)
    raise ValidationError(
        f"expected a KahlerVector or Vector, got {type(kappa).__name__}"
    )


def validate_kahler(
    kappa,
    boundary,
    *,
    period=None,
    allow_nonpositive_boundary: bool = False,
) -> KahlerVector:
    """Check the Kahler-vector invariants against a boundary class.

    square(kappa) > 0 always; pair(kappa, L) > 0 unless the caller opts out
    (chambers on the far side of the boundary wall are legitimate, but the
    default guards against accidental sign slips); and orthogonality to both
    parts of a period point when one is supplied (the (1,1) condition).
    """
    kappa = _as_kahler(kappa)
    v = kappa.coords
    if square(v) <= 0:
        raise ValidationError(f"Kahler class needs positive square, got {square(v)}")
    bl = pair(v, boundary.L)
    if bl <= 0 and not allow_nonpositive_boundary:
        raise ValidationError(
            f"Kahler class pairs nonpositively ({bl}) with the boundary class; "
            "pass allow_nonpositive_boundary=True if this chamber is intended"
        )
    if period is not None:
        if pair(v, period.re) != 0 or pair(v, period.im) != 0:
            raise ValidationError(
                "Kahler class must pair to zero with the period point, got "
                f"({pair(v, period.re)}, {pair(v, period.im)})"
            )
    return kappa


def valid_hyperplanes(
    gamma: RelativeClass, *, table: SeriesTable | None = None
) -> list[WallRecord]:
    """One WallRecord per valid lifting of gamma, sorted by offset k."""
    L = gamma.boundary.L
    records = []
    for k, lifting in valid_liftings(gamma):
        records.append(
            WallRecord(
                k=k,
                lifting=lifting,
                pairing_with_L=pair(L, lifting),
                closed_invariant=Fraction(reduced_gw(lifting, table=table)),
            )
        )
    return records


def chamber_check(
    gamma: RelativeClass,
    kappa,
    *,
    period=None,
    allow_nonpositive_boundary: bool = False,
    table: SeriesTable | None = None,
    records: list[WallRecord] | None = None,
) -> list[WallRecord]:
    """Verify kappa avoids every weight-carrying wall of gamma.

    Returns the wall records for reuse.  Raises OnWallError listing the
    offsets k of the violated walls; walls with pairing_with_L == 0 have
    weight zero and never raise.
    """
    kappa = validate_kahler(
        kappa,
        gamma.boundary,
        period=period,
        allow_nonpositive_boundary=allow_nonpositive_boundary,
    )
    if records is None:
        records = valid_hyperplanes(gamma, table=table)
    on = [
        r.k
        for r in records
        if r.pairing_with_L != 0 and pair(kappa.coords, r.lifting) == 0
    ]
    if on:
        raise OnWallError(on)
    return records


def open_invariant(
    gamma: RelativeClass,
    kappa,
    *,
    period=None,
    allow_nonpositive_boundary: bool = False,
    table: SeriesTable | None = None,
) -> Fraction:
    """Reduced open invariant of gamma in the chamber of kappa."""
    kappa = validate_kahler(
        kappa,
        gamma.boundary,
        period=period,
        allow_nonpositive_boundary=allow_nonpositive_boundary,
    )
    records = chamber_check(
        gamma,
        kappa,
        period=period,
        allow_nonpositive_boundary=True,
        table=table,
    )
    total = Fraction(0)
    for r in records:
        if r.pairing_with_L and pair(kappa.coords, r.lifting) > 0:
            total += r.pairing_with_L * r.closed_invariant
    return total


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def crossing_delta(
    gamma: RelativeClass,
    kappa0,
    kappa1,
    *,
    period=None,
    allow_nonpositive_boundary: bool = False,
    table: SeriesTable | None = None,
) -> Fraction:
    """Total wall-crossing jump from the chamber of kappa0 to that of kappa1.

    Sum over walls of (sgn(pair(kappa1, gamma~)) - sgn(pair(kappa0, gamma~)))/2
    * pair(L, gamma~) * reduced_gw(gamma~).  Equals the difference of the two
    chamber sums, and is antisymmetric in its endpoints.
    """
    records = chamber_check(
        gamma,
        kappa0,
        period=period,
        allow_nonpositive_boundary=allow_nonpositive_boundary,
        table=table,
    )
    chamber_check(
        gamma,
        kappa1,
        period=period,
        allow_nonpositive_boundary=allow_nonpositive_boundary,
        table=table,
        records=records,
    )
    k0 = _as_kahler(kappa0).coords
    k1 = _as_kahler(kappa1).coords
    total = Fraction(0)
    for r in records:
        if r.pairing_with_L == 0:
            continue
        flip = _sgn(pair(k1, r.lifting)) - _sgn(pair(k0, r.lifting))
        if flip:
            total += Fraction(flip, 2) * r.pairing_with_L * r.closed_invariant
    return total


def bps_invariant(
    gamma: RelativeClass,
    kappa,
    *,
    period=None,
    allow_nonpositive_boundary: bool = False,
    table: SeriesTable | None = None,
) -> int:
    """The BPS integer of gamma in the chamber of kappa, computed twice.

    Route (a): Mobius inversion of the multiple-cover relation, i.e.
    sum_{d | D} mu(d) * d^(-2) * open(gamma/d, kappa).  Route (b): the direct
    sum over liftings gamma~ satisfying the primitive curve bound
    square(gamma~) >= -2 with pair(kappa, gamma~) > 0 of
    pair(L, gamma~) * G_{square(gamma~)/2 + 1}.  A chamber of gamma is a
    chamber of every gamma/d, so the inner evaluations cannot hit a wall.
    """
    kappa = validate_kahler(
        kappa,
        gamma.boundary,
        period=period,
        allow_nonpositive_boundary=allow_nonpositive_boundary,
    )
    records = chamber_check(
        gamma, kappa, period=period, allow_nonpositive_boundary=True, table=table
    )

    d_total = relative_divisibility(gamma)
    by_inversion = Fraction(0)
    for d in divisors(d_total):
        mu = mobius(d)
        if mu == 0:
            continue
        part = open_invariant(
            divide(gamma, d),
            kappa,
            period=period,
            allow_nonpositive_boundary=True,
            table=table,
        )
        by_inversion += Fraction(mu, d * d) * part

    direct = Fraction(0)
    for r in records:
        if r.pairing_with_L == 0 or square(r.lifting) < -2:
            continue
        if pair(kappa.coords, r.lifting) > 0:
            g = yz_coefficient(Fraction(square(r.lifting), 2) + 1, table=table)
            direct += r.pairing_with_L * g

    if by_inversion != direct or by_inversion.denominator != 1:
        raise ConsistencyError(
            "BPS extraction disagrees: Mobius inversion gives "
            f"{by_inversion}, direct lifting sum gives {direct}"
        )
    return int(by_inversion)


def multiple_cover_reconstruction(
    gamma: RelativeClass,
    kappa,
    *,
    period=None,
    allow_nonpositive_boundary: bool = False,
    table: SeriesTable | None = None,
) -> Fraction:
    """sum_{d | D} d^(-2) * bps(gamma/d, kappa); equals open_invariant."""
    total = Fraction(0)
    for d in divisors(relative_divisibility(gamma)):
        total += Fraction(1, d * d) * bps_invariant(
            divide(gamma, d),
            kappa,
            period=period,
            allow_nonpositive_boundary=allow_nonpositive_boundary,
            table=table,
        )
    return total

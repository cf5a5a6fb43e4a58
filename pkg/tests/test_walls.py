"""Chamber sums, wall-crossing, and BPS integers on worked examples.

The hand-frozen numbers below all live over the boundary class L = first
simple root of the leading E8 block.  Kahler classes are built from the
hyperbolic planes plus small root-block corrections, tuned to land in a
named chamber; the chamber of a class [v] is determined by the signs of the
pairings with its valid liftings.
"""

from fractions import Fraction

import pytest

from k3dw import (
    BoundaryClass,
    ConsistencyError,
    KahlerVector,
    OnWallError,
    RelativeClass,
    ValidationError,
    Vector,
    WallRecord,
    bps_invariant,
    chamber_check,
    crossing_delta,
    divide,
    multiple_cover_reconstruction,
    open_invariant,
    relative_divisibility,
    valid_hyperplanes,
    validate_kahler,
)
from k3dw.sampling import (
    chamber_threshold,
    kahler_in_chamber,
    random_boundary,
    random_relative_class,
    seeded,
)

A1, A3, A5 = Vector.basis(0), Vector.basis(2), Vector.basis(4)
E1, F1 = Vector.basis(16), Vector.basis(17)
E2, F2 = Vector.basis(18), Vector.basis(19)
E3, F3 = Vector.basis(20), Vector.basis(21)

L = BoundaryClass(A1)
W = 3 * (E1 + F1)

# chambers for [A3], indexed by the pairing signs with the two liftings
# (x, y) = (pair(kappa, A3), pair(kappa, A1)); liftings pair to x and x + y
KAPPA_PLUS_PLUS = W - 2 * A1 - 3 * A3  # x = 4, y = 1
KAPPA_ZERO_PLUS = W - A1 - A3  # x = 1, y = 1
KAPPA_MINUS = W - A1  # x = -1, y = 2
KAPPA_FLIP = W + A1  # x = 1, y = -2: beyond the boundary wall


def rel(v):
    return RelativeClass(v, L)


def test_wall_records_frozen():
    assert valid_hyperplanes(rel(A3)) == [
        WallRecord(0, A3, 1, Fraction(1)),
        WallRecord(1, A3 + A1, -1, Fraction(1)),
    ]
    assert valid_hyperplanes(rel(2 * A3)) == [
        WallRecord(0, 2 * A3, 2, Fraction(1, 8)),
        WallRecord(2, 2 * A3 + 2 * A1, -2, Fraction(1, 8)),
    ]
    assert valid_hyperplanes(rel(2 * E1)) == [
        WallRecord(-2, 2 * E1 - 2 * A1, 4, Fraction(1, 8)),
        WallRecord(-1, 2 * E1 - A1, 2, Fraction(1)),
        WallRecord(0, 2 * E1, 0, Fraction(27)),
        WallRecord(1, 2 * E1 + A1, -2, Fraction(1)),
        WallRecord(2, 2 * E1 + 2 * A1, -4, Fraction(1, 8)),
    ]
    assert valid_hyperplanes(rel(A3 + A5)) == []


def test_validate_kahler():
    assert isinstance(validate_kahler(KAPPA_MINUS, L), KahlerVector)
    assert validate_kahler(KahlerVector(KAPPA_MINUS), L).coords == KAPPA_MINUS
    with pytest.raises(ValidationError):
        validate_kahler(A3, L)  # negative square
    with pytest.raises(ValidationError):
        validate_kahler(KAPPA_FLIP, L)  # pairs negatively with L
    validate_kahler(KAPPA_FLIP, L, allow_nonpositive_boundary=True)
    with pytest.raises(ValidationError):
        validate_kahler("kappa", L)


def test_validate_kahler_against_period():
    from k3dw import PeriodPoint

    period = PeriodPoint(re=E1 + F1, im=E2 + F2, boundary=L)
    omega = E3 + F3
    validate_kahler(2 * omega - A1, L, period=period)
    with pytest.raises(ValidationError):
        validate_kahler(2 * omega + E1 - A1, L, period=period)


def test_open_invariant_four_chambers():
    gamma = rel(A3)
    assert open_invariant(gamma, KAPPA_PLUS_PLUS) == 0
    assert open_invariant(gamma, KAPPA_ZERO_PLUS) == 0
    assert open_invariant(gamma, KAPPA_MINUS) == -1
    assert (
        open_invariant(gamma, KAPPA_FLIP, allow_nonpositive_boundary=True) == 1
    )


def test_open_invariant_imprimitive_chamber():
    gamma = rel(2 * A3)
    assert (
        open_invariant(gamma, KAPPA_FLIP, allow_nonpositive_boundary=True)
        == Fraction(1, 4)
    )
    assert open_invariant(gamma, KAPPA_PLUS_PLUS) == 0


def test_no_wall_class_is_chamber_free():
    gamma = rel(A3 + A5)
    for kappa in (KAPPA_PLUS_PLUS, KAPPA_ZERO_PLUS, KAPPA_MINUS):
        assert chamber_check(gamma, kappa) == []
        assert open_invariant(gamma, kappa) == 0
        assert bps_invariant(gamma, kappa) == 0


def test_on_wall_error():
    # pair(kappa, A3) = 0 puts kappa exactly on the k = 0 wall of [A3]
    kappa = W + Fraction(-2, 3) * A1 + Fraction(-1, 3) * A3
    with pytest.raises(OnWallError) as e:
        chamber_check(rel(A3), kappa)
    assert e.value.offsets == (0,)
    with pytest.raises(OnWallError):
        open_invariant(rel(A3), kappa)
    with pytest.raises(OnWallError):
        bps_invariant(rel(A3), kappa)
    with pytest.raises(OnWallError):
        crossing_delta(rel(A3), KAPPA_MINUS, kappa)


def test_weightless_wall_never_blocks():
    # kappa pairs to zero with the k = 0 lifting of [E1], whose L-pairing
    # vanishes; that wall carries no weight and must not raise
    kappa = 3 * (E2 + F2) - A1
    records = chamber_check(rel(E1), kappa)
    assert [r.k for r in records] == [-1, 0, 1]
    assert open_invariant(rel(E1), kappa) == -2


def test_chamber_check_reuses_records():
    records = valid_hyperplanes(rel(A3))
    assert chamber_check(rel(A3), KAPPA_MINUS, records=records) is records


def test_crossing_matches_chamber_difference():
    gamma = rel(A3)
    assert crossing_delta(gamma, KAPPA_MINUS, KAPPA_MINUS) == 0
    assert crossing_delta(gamma, KAPPA_ZERO_PLUS, KAPPA_MINUS) == -1
    assert crossing_delta(gamma, KAPPA_MINUS, KAPPA_ZERO_PLUS) == 1
    assert (
        crossing_delta(gamma, KAPPA_MINUS, KAPPA_FLIP, allow_nonpositive_boundary=True)
        == 2
    )
    assert crossing_delta(gamma, KAPPA_PLUS_PLUS, KAPPA_ZERO_PLUS) == 0


def kappa_scanning(p):
    """pair(kappa, 2*E1 + k*A1) = 2*p + 4*k: positive liftings are k > -p/2."""
    return 3 * (E2 + F2) - 2 * A1 + p * F1


def test_bps_jumps_wall_by_wall():
    gamma = rel(2 * E1)
    half = kappa_scanning(-1)  # threshold 1/2
    three_halves = kappa_scanning(-3)
    five_halves = kappa_scanning(-5)

    assert open_invariant(gamma, half) == Fraction(-5, 2)
    assert open_invariant(gamma, three_halves) == Fraction(-1, 2)
    assert open_invariant(gamma, five_halves) == 0

    assert bps_invariant(gamma, half) == -2
    assert bps_invariant(gamma, three_halves) == 0
    assert bps_invariant(gamma, five_halves) == 0

    sub = divide(gamma, 2)
    assert bps_invariant(sub, half) == -2
    assert bps_invariant(sub, three_halves) == -2
    assert bps_invariant(sub, five_halves) == 0

    # crossing the k = 1 wall moves the primitive BPS number only; crossing
    # the k = 2 wall moves only the imprimitive one (its lifting has square
    # -8, below the primitive curve bound)
    assert crossing_delta(gamma, half, three_halves) == 2
    assert crossing_delta(sub, half, three_halves) == 0
    assert crossing_delta(sub, three_halves, five_halves) == 2


def test_bps_worked_double_class():
    gamma = rel(2 * A3)
    assert bps_invariant(gamma, KAPPA_FLIP, allow_nonpositive_boundary=True) == 0
    assert (
        bps_invariant(divide(gamma, 2), KAPPA_FLIP, allow_nonpositive_boundary=True)
        == 1
    )
    assert (
        multiple_cover_reconstruction(
            gamma, KAPPA_FLIP, allow_nonpositive_boundary=True
        )
        == Fraction(1, 4)
    )


def test_reconstruction_equals_open():
    for gamma, kappa in (
        (rel(2 * E1), kappa_scanning(-1)),
        (rel(2 * E1), kappa_scanning(-3)),
        (rel(A3), KAPPA_MINUS),
        (rel(3 * A3), KAPPA_MINUS),
    ):
        assert multiple_cover_reconstruction(gamma, kappa) == open_invariant(
            gamma, kappa
        )


def test_reality_of_bps():
    for gamma, kappa in (
        (rel(2 * E1), kappa_scanning(-1)),
        (rel(A3), KAPPA_MINUS),
        (rel(2 * A3), KAPPA_PLUS_PLUS),
    ):
        assert open_invariant(-gamma, kappa) == open_invariant(gamma, kappa)
        assert bps_invariant(-gamma, kappa) == bps_invariant(gamma, kappa)


def test_random_chambers_reconstruct():
    rng = seeded(51)
    for _ in range(12):
        boundary = random_boundary(rng)
        gamma = random_relative_class(rng, boundary, divisibility=rng.choice((1, 2)))
        kappa = kahler_in_chamber(rng, gamma, chamber_threshold(rng, gamma))
        opened = open_invariant(gamma, kappa)
        assert multiple_cover_reconstruction(gamma, kappa) == opened
        assert open_invariant(-gamma, kappa) == opened
        d = relative_divisibility(gamma)
        if d == 1:
            assert bps_invariant(gamma, kappa) == opened


def test_bps_consistency_guard_is_quiet_on_valid_input():
    # ConsistencyError exists for internal disagreement; exercising every
    # worked chamber here documents that it stays silent on honest input
    try:
        for kappa in (KAPPA_PLUS_PLUS, KAPPA_ZERO_PLUS, KAPPA_MINUS):
            for v in (A3, 2 * A3, 3 * A3, 2 * E1, E1 + F2):
                bps_invariant(rel(v), kappa)
    except ConsistencyError as exc:  # pragma: no cover
        pytest.fail(f"consistency guard fired on valid input: {exc}")

"""Period points, central charges, walls, and exact rotation."""

from fractions import Fraction

import pytest

from k3dw import (
    OMEGA_BOUNDARY,
    OMEGA_NORM,
    OMEGA_SQUARE,
    BoundaryClass,
    GaussianRational,
    NormalizationError,
    PeriodError,
    PeriodPoint,
    RelativeClass,
    UnitAngle,
    ValidationError,
    Vector,
    central_charge,
    disc_angle_direction,
    is_on_wall_pair,
    pair,
    reflect,
    rotate,
    square,
    twistor_form,
    validate_period,
    wall_decompositions,
)
from k3dw.sampling import (
    random_boundary,
    random_period,
    random_relative_class,
    random_rotation_instance,
    random_unit_angle,
    seeded,
)

A1, A4 = Vector.basis(0), Vector.basis(3)
E1, F1 = Vector.basis(16), Vector.basis(17)
E2, F2 = Vector.basis(18), Vector.basis(19)
E3, F3 = Vector.basis(20), Vector.basis(21)

L = BoundaryClass(A1)
PERIOD = PeriodPoint(re=E1 + F1, im=E2 + F2, boundary=L)
OMEGA = E3 + F3


def rel(v):
    return RelativeClass(v, L)


def test_gaussian_rational():
    z = GaussianRational(1, 2) * GaussianRational(3, 4)
    assert z == GaussianRational(-5, 10)
    w = GaussianRational(3, 4)
    assert w.inverse() == GaussianRational(Fraction(3, 25), Fraction(-4, 25))
    assert (w * w.inverse()) == GaussianRational(1, 0)
    assert w.conjugate() == GaussianRational(3, -4)
    assert w.norm_square() == 25
    assert -w == GaussianRational(-3, -4)
    assert w - w == GaussianRational(0, 0)
    assert not GaussianRational(0, 0)
    assert GaussianRational(0, 1)
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0, 0).inverse()
    with pytest.raises(ValidationError):
        GaussianRational(0.5, 0)


def test_unit_angle():
    UnitAngle(Fraction(3, 5), Fraction(4, 5))
    UnitAngle(1, 0)
    UnitAngle(0, -1)
    with pytest.raises(ValidationError):
        UnitAngle(1, 1)
    with pytest.raises(ValidationError):
        UnitAngle(1.0, 0.0)
    with pytest.raises(ValidationError):
        UnitAngle.from_parameter(0.5)
    assert UnitAngle.from_parameter(Fraction(1, 2)) == UnitAngle(
        Fraction(3, 5), Fraction(4, 5)
    )
    assert UnitAngle.from_parameter(0) == UnitAngle(1, 0)
    assert UnitAngle(0, 1).as_complex() == GaussianRational(0, 1)


def test_validate_period_ok():
    assert validate_period(PERIOD) is PERIOD


def test_validate_period_square_code():
    # unequal squares
    with pytest.raises(PeriodError) as e:
        validate_period(PeriodPoint(re=E1 + F1, im=2 * E2 + 2 * F2, boundary=L))
    assert e.value.code == OMEGA_SQUARE
    # nonzero cross pairing
    with pytest.raises(PeriodError) as e:
        validate_period(PeriodPoint(re=E1 + F1, im=E1 + F1, boundary=L))
    assert e.value.code == OMEGA_SQUARE


def test_validate_period_norm_code():
    with pytest.raises(PeriodError) as e:
        validate_period(PeriodPoint(re=E1 - F1, im=E2 - F2, boundary=L))
    assert e.value.code == OMEGA_NORM


def test_validate_period_boundary_code():
    # a (-2)-class meeting the U planes: reflect A1 through the root A1 + E1
    tilted = reflect(A1, A1 + E1)
    assert tilted == -A1 - 2 * E1
    with pytest.raises(PeriodError) as e:
        validate_period(
            PeriodPoint(re=E1 + F1, im=E2 + F2, boundary=BoundaryClass(tilted))
        )
    assert e.value.code == OMEGA_BOUNDARY


def test_central_charge_values():
    assert central_charge(PERIOD, rel(E1)) == GaussianRational(1, 0)
    assert central_charge(PERIOD, rel(F2)) == GaussianRational(0, 1)
    assert central_charge(PERIOD, rel(A4)) == GaussianRational(0, 0)
    assert central_charge(PERIOD, rel(3 * E1 - 2 * F2)) == GaussianRational(3, -2)


def test_central_charge_representative_independence():
    rng = seeded(41)
    for _ in range(30):
        gamma = random_relative_class(rng, L)
        shifted = RelativeClass(gamma.representative + 9 * A1, L)
        assert central_charge(PERIOD, gamma) == central_charge(PERIOD, shifted)


def test_central_charge_linearity():
    rng = seeded(42)
    for _ in range(30):
        g1 = random_relative_class(rng, L)
        g2 = random_relative_class(rng, L)
        lhs = central_charge(PERIOD, g1 + g2)
        assert lhs == central_charge(PERIOD, g1) + central_charge(PERIOD, g2)


def test_central_charge_boundary_mismatch():
    other = BoundaryClass(Vector.basis(4))
    with pytest.raises(ValidationError):
        central_charge(PERIOD, RelativeClass(E1, other))


def test_on_wall_pair():
    assert is_on_wall_pair(PERIOD, rel(E1), rel(E1))
    assert is_on_wall_pair(PERIOD, rel(E1), rel(3 * E1 + A4))
    assert not is_on_wall_pair(PERIOD, rel(E1), rel(F2))
    # anti-aligned rays are not walls
    assert not is_on_wall_pair(PERIOD, rel(E1), rel(-E1))
    with pytest.raises(ValidationError):
        is_on_wall_pair(PERIOD, rel(E1), rel(A4))


def test_wall_decompositions():
    gamma = rel(2 * E1)
    candidates = [rel(E1), rel(F2), rel(A4), rel(2 * E1)]
    assert wall_decompositions(PERIOD, gamma, candidates) == [rel(E1)]
    assert wall_decompositions(PERIOD, rel(E1 + F2), [rel(E1)]) == []


def test_rotate_axis_angles():
    # quarter turn: the real part becomes the Kahler form
    omega_theta, (re_t, im_t) = rotate(OMEGA, PERIOD, UnitAngle(0, 1))
    assert omega_theta == E1 + F1
    assert re_t == OMEGA
    assert im_t == -(E2 + F2)
    # zero angle: the imaginary part flips sign into the Kahler slot
    omega_theta, (re_t, im_t) = rotate(OMEGA, PERIOD, UnitAngle(1, 0))
    assert omega_theta == -(E2 + F2)
    assert re_t == OMEGA
    assert im_t == -(E1 + F1)


def test_rotate_output_is_again_a_rotation_input():
    rng = seeded(43)
    for _ in range(15):
        boundary = random_boundary(rng)
        omega, s = random_rotation_instance(rng, boundary)
        theta = random_unit_angle(rng)
        omega_theta, (re_t, im_t) = rotate(omega, s, theta)
        rotated = PeriodPoint(re=re_t, im=im_t, boundary=boundary)
        validate_period(rotated)
        assert pair(omega_theta, re_t) == 0
        assert pair(omega_theta, im_t) == 0
        assert 2 * square(omega_theta) == square(re_t) + square(im_t)
        # rotating the rotated data is legal again
        rotate(omega_theta, rotated, theta)


def test_rotate_rejects_bad_kahler_form():
    with pytest.raises(NormalizationError):
        rotate(E1, PERIOD, UnitAngle(0, 1))  # not orthogonal to Omega
    with pytest.raises(NormalizationError):
        rotate(2 * OMEGA, PERIOD, UnitAngle(0, 1))  # wrong normalization


def test_twistor_matches_rotation_on_unit_circle():
    re_t, im_t = twistor_form(OMEGA, PERIOD, GaussianRational(0, 1))
    assert (re_t, im_t) == (OMEGA, -(E2 + F2))
    rng = seeded(44)
    for _ in range(15):
        boundary = random_boundary(rng)
        omega, s = random_rotation_instance(rng, boundary)
        theta = random_unit_angle(rng)
        _, expected = rotate(omega, s, theta)
        assert twistor_form(omega, s, theta.as_complex()) == expected


def test_twistor_squares_to_zero_off_the_circle():
    rng = seeded(45)
    for zeta in (
        GaussianRational(2, 3),
        GaussianRational(Fraction(1, 2), 0),
        GaussianRational(-1, 7),
    ):
        boundary = random_boundary(rng)
        omega, s = random_rotation_instance(rng, boundary)
        re_t, im_t = twistor_form(omega, s, zeta)
        assert square(re_t) == square(im_t)
        assert pair(re_t, im_t) == 0
    with pytest.raises(ValidationError):
        twistor_form(OMEGA, PERIOD, GaussianRational(0, 0))


def test_disc_angle_direction():
    assert disc_angle_direction(PERIOD, rel(E1)) == GaussianRational(0, 1)
    rng = seeded(46)
    for _ in range(25):
        gamma = random_relative_class(rng, L)
        z = central_charge(PERIOD, gamma)
        if z.is_zero:
            continue
        d = disc_angle_direction(PERIOD, gamma)
        w = d.conjugate() * z
        assert w.re == 0
        assert w.im < 0
    with pytest.raises(ValidationError):
        disc_angle_direction(PERIOD, rel(A4))

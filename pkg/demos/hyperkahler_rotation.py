"""Exact hyperkahler rotation on rational period data.

A period point Omega = re + i*im together with a normalized Kahler form
omega spans the positive 3-space; rotating by a rational point (c, s) on
the unit circle permutes the roles of the three directions without ever
leaving exact arithmetic.  The twistor-family form at zeta = c + i*s gives
the same answer by a different formula.
"""

from fractions import Fraction

from k3dw import (
    BoundaryClass,
    GaussianRational,
    PeriodPoint,
    UnitAngle,
    Vector,
    rotate,
    square,
    twistor_form,
)

A1 = Vector.basis(0)
E1, F1 = Vector.basis(16), Vector.basis(17)
E2, F2 = Vector.basis(18), Vector.basis(19)
E3, F3 = Vector.basis(20), Vector.basis(21)


def show(name, v):
    nonzero = ", ".join(f"{i}: {c}" for i, c in enumerate(v.coords) if c)
    print(f"  {name} = {{{nonzero}}}")


def main():
    boundary = BoundaryClass(A1)
    period = PeriodPoint(re=E1 + F1, im=E2 + F2, boundary=boundary)
    omega = E3 + F3

    print("quarter turn (c, s) = (0, 1): re becomes the Kahler form")
    omega_t, (re_t, im_t) = rotate(omega, period, UnitAngle(0, 1))
    show("omega_theta", omega_t)
    show("re_theta", re_t)
    show("im_theta", im_t)

    theta = UnitAngle.from_parameter(Fraction(1, 2))  # (3/5, 4/5)
    print(f"\npythagorean angle (c, s) = ({theta.c}, {theta.s}):")
    omega_t, (re_t, im_t) = rotate(omega, period, theta)
    show("omega_theta", omega_t)
    show("im_theta", im_t)
    print(f"  square(omega_theta) = {square(omega_t)} (was {square(omega)})")
    print(f"  Omega_theta^2 = {square(re_t) - square(im_t)} (holomorphic)")

    zeta = theta.as_complex()
    assert twistor_form(omega, period, zeta) == (re_t, im_t)
    print(f"  twistor form at zeta = {zeta.re} + {zeta.im}i agrees")

    # off the unit circle the twistor form still squares to zero
    zeta = GaussianRational(2, 3)
    re_z, im_z = twistor_form(omega, period, zeta)
    print("\noff-circle twistor fiber at zeta = 2 + 3i:")
    print(f"  square(re) - square(im) = {square(re_z) - square(im_z)}")
    from k3dw import pair

    print(f"  pair(re, im) = {pair(re_z, im_z)}")


if __name__ == "__main__":
    main()

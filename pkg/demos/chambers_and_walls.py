"""Chamber structure of open invariants for one simple disk class.

Boundary condition: L = first simple root of the leading E8 block.  The
relative class [A3] (third simple root) has exactly two valid liftings,
A3 and A3 + L, so its Kahler cone is cut by two walls into chambers where
the open invariant takes the values 0, -1, and (past the boundary wall) +1.
"""

from k3dw import (
    BoundaryClass,
    OnWallError,
    RelativeClass,
    Vector,
    chamber_check,
    crossing_delta,
    open_invariant,
    valid_hyperplanes,
)

A1, A3 = Vector.basis(0), Vector.basis(2)
E1, F1 = Vector.basis(16), Vector.basis(17)

L = BoundaryClass(A1)
W = 3 * (E1 + F1)  # positive direction clear of both walls


def main():
    gamma = RelativeClass(A3, L)
    print("walls of [A3]:")
    for r in valid_hyperplanes(gamma):
        print(
            f"  k = {r.k}: lifting pairs {r.pairing_with_L} with L, "
            f"closed invariant {r.closed_invariant}"
        )

    # pairings with the two liftings are (x, x + y) where
    # x = kappa . A3 and y = kappa . L > 0; three chambers as x slides down
    chambers = [
        ("x > 0, both liftings in ", W - 2 * A1 - 3 * A3),
        ("-y < x < 0, only k=1 in ", W - A1),
        ("x < -y, no liftings in  ", W + A1 + 3 * A3),
    ]
    print("\nopen invariant by chamber:")
    for label, kappa in chambers:
        value = open_invariant(gamma, kappa)
        print(f"  {label}: {value}")

    flipped = W + A1  # kappa . L < 0: beyond the boundary wall
    value = open_invariant(gamma, flipped, allow_nonpositive_boundary=True)
    print(f"  past the boundary wall: {value}")

    print("\ncrossing the k=0 wall:")
    delta = crossing_delta(gamma, W - 2 * A1 - 3 * A3, W - A1)
    print(f"  delta = {delta} (= open difference -1 - 0)")

    print("\nlanding exactly on a wall is refused:")
    from fractions import Fraction

    on_wall = W + Fraction(-2, 3) * A1 + Fraction(-1, 3) * A3
    try:
        chamber_check(gamma, on_wall)
    except OnWallError as err:
        print(f"  OnWallError: {err}")


if __name__ == "__main__":
    main()

"""BPS integers from rational open invariants.

The class [2 E1] (twice a hyperbolic generator) has divisibility 2, five
valid liftings, and genuinely fractional open invariants.  Sliding the
Kahler class across its walls shows the invariant jumping; Mobius inversion
of the multiple-cover sum turns each chamber value into a pair of integers,
one for the class and one for its half.
"""

from k3dw import (
    BoundaryClass,
    RelativeClass,
    Vector,
    bps_invariant,
    divide,
    multiple_cover_reconstruction,
    open_invariant,
    valid_hyperplanes,
)

A1 = Vector.basis(0)
E1, F1 = Vector.basis(16), Vector.basis(17)
E2, F2 = Vector.basis(18), Vector.basis(19)

L = BoundaryClass(A1)


def kappa_with_threshold(p):
    # pair(kappa, 2E1 + k L) = 2p + 4k: positive liftings are k > -p/2
    return 3 * (E2 + F2) - 2 * A1 + p * F1


def main():
    gamma = RelativeClass(2 * E1, L)
    half = divide(gamma, 2)

    print("walls of [2 E1]:")
    for r in valid_hyperplanes(gamma):
        print(
            f"  k = {r.k:2}: L-pairing {r.pairing_with_L:2}, "
            f"closed invariant {r.closed_invariant}"
        )

    print("\nsliding the chamber across the positive walls:")
    print(f"  {'threshold':>9} | {'open':>5} | {'bps':>3} | {'bps half':>8}")
    for p, threshold in ((-1, "1/2"), (-3, "3/2"), (-5, "5/2")):
        kappa = kappa_with_threshold(p)
        opened = open_invariant(gamma, kappa)
        b = bps_invariant(gamma, kappa)
        bh = bps_invariant(half, kappa)
        recon = multiple_cover_reconstruction(gamma, kappa)
        assert recon == opened
        print(f"  {threshold:>9} | {str(opened):>5} | {b:3} | {bh:8}")

    print("\nreading the table:")
    print("  crossing k=1 (a square -2 lifting) moves bps by 2;")
    print("  crossing k=2 (square -8, a pure double cover) moves only")
    print("  the half-class number, and open = bps + bps_half/4 throughout.")

    kappa = kappa_with_threshold(-1)
    print("\nreality check: open(-gamma) == open(gamma):", end=" ")
    print(open_invariant(-gamma, kappa) == open_invariant(gamma, kappa))


if __name__ == "__main__":
    main()

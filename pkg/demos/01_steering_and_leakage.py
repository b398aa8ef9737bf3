"""Steering vectors and the interference leakage factor.

A base station with a circular array sees each user through a steering
vector: one unit-modulus phase per antenna element.  With a matched-filter
receiver, everything that can go wrong between two users is captured by a
single complex number

    alpha = <h_1, h_i> / N

the normalized inner product of their steering vectors.  |alpha| = 1 means
the array cannot tell the users apart; |alpha| -> 0 as N grows means the
channels become orthogonal and simple per-user processing works.

This script builds the vectors, computes alpha the obvious way, and shows
that the packaged Bessel-series evaluation returns the same number without
ever materializing the N-dimensional vectors.
"""

import math

from arrayfp import (
    AngleOfArrival,
    UcaGeometry,
    alpha_direct,
    alpha_series_2d,
    alpha_series_3d,
    deltas_3d,
    steering_uca_2d,
    steering_uca_3d,
    uca_radius,
)

user_1 = 0.0                 # azimuth of the user we decode, radians
user_2 = 2 * math.pi / 10    # a neighbor 36 degrees away


def main():
    print("circle radius grows linearly with N (spacing d = 0.5 wavelengths):")
    for n in (8, 64, 512):
        print(f"  N = {n:4d}: R = {uca_radius(UcaGeometry(n, 0.5)):8.3f} wavelengths")

    print("\nin-plane leakage between users 36 degrees apart:")
    print(f"{'N':>6} {'|alpha| direct':>16} {'|alpha| series':>16} {'difference':>12}")
    for n in (8, 32, 128, 512, 2048):
        g = UcaGeometry(n, 0.5)
        direct = alpha_direct(steering_uca_2d(g, user_1), steering_uca_2d(g, user_2))
        series = alpha_series_2d(g, user_2 - user_1)
        print(f"{n:6d} {abs(direct):16.10f} {abs(series):16.10f} "
              f"{abs(direct - series):12.2e}")

    print("\nsame machinery off the horizon (elevations 70 and 40 degrees):")
    a1 = AngleOfArrival.from_degrees(0.0, 70.0)
    a2 = AngleOfArrival.from_degrees(36.0, 40.0)
    for n in (16, 256):
        g = UcaGeometry(n, 0.5)
        direct = alpha_direct(steering_uca_3d(g, a1), steering_uca_3d(g, a2))
        dd = deltas_3d(a1, a2, g)
        series = alpha_series_3d(g, dd)
        print(f"  N = {n:4d}: |alpha| = {abs(direct):.10f}  "
              f"(series agrees to {abs(direct - series):.2e}; "
              f"effective separation delta = {dd.delta:.4f})")

    print("\nThe series route is how the package reasons about N in the millions")
    print("without ever allocating a vector that long.")


if __name__ == "__main__":
    main()

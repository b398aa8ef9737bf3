"""Sizing an array: how many antennas buy a given interference margin?

The leakage decay bound falls off like (N * d * separation)^(-1/3), so it
only bites once that product is comfortably past 1.  The budget

    N >= margin / (d * min_i |sin((phi_i - phi_1) / 2)|)

makes the product at least `margin` for the worst (closest) interferer --
margin is the "how far into the decay regime" dial, not a leakage value.
After sizing, the SINR report shows the dial doing its job.

The shell equivalent of the first section:

    arrayfp min-n --config demos/configs/two_users_opposite.json --margin 10
"""

import math
import warnings

from arrayfp import (
    AngleOfArrival,
    MultiUserScenario,
    UcaGeometry,
    User,
    min_antennas,
    min_antennas_uniform,
    sinr_matched_filter,
    to_db,
)

M = 10
D = 0.5


def main():
    aoas = [AngleOfArrival(2 * math.pi * i / M) for i in range(M)]

    print(f"{M} uniform users, d = {D}; budget vs margin:")
    print(f"{'margin':>8} {'exact':>7} {'uniform shortcut':>17}")
    for margin in (2.0, 10.0, 100.0):
        print(f"{margin:8.0f} {min_antennas(aoas, D, margin):7d} "
              f"{min_antennas_uniform(M, D, margin):17d}")

    print("\ntwo users back to back (the easiest possible layout):")
    pair = [AngleOfArrival(0.0), AngleOfArrival(math.pi)]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # 2 users < k1 head terms: loose bound
        n_pair = min_antennas(pair, D, 10.0)
    print(f"  margin 10 -> N >= {n_pair}")

    print("\nSINR at 20 dB per-user SNR as the margin dial turns:")
    n_budget = min_antennas(aoas, D, 10.0)
    for n in (8, n_budget, 4 * n_budget, 16 * n_budget):
        users = tuple(User(a, 100.0) for a in aoas)
        rep = sinr_matched_filter(MultiUserScenario(UcaGeometry(n, D), users))
        print(f"  N = {n:5d}: aggregate leakage^2 = {rep.aggregate_leakage_sq:.5f}, "
              f"SINR = {to_db(rep.sinr):6.2f} dB")
    print("\n(20 dB is the interference-free ceiling; past the budget point,")
    print("growing N keeps squeezing the residual leakage toward it.)")


if __name__ == "__main__":
    main()

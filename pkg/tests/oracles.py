"""Extended-precision reference values for the test suite.

``series_j`` sums the ascending series for J_n(x) in mpmath with working
precision raised enough to absorb the catastrophic cancellation at large
|x| (terms peak near e^|x| while the result is O(1), so ~0.4343*|x| extra
decimal digits are burned before the first correct one).  It shares no code
or algorithm with arrayfp.bessel: plain term recurrence, no backward pass,
no envelopes.

This is slow on purpose -- seconds per value at |x| ~ 5e4 -- which is why
the big reference suites under tests/data/ are frozen by
scripts/generate_test_data.py and only spot-checked live.
"""

from __future__ import annotations

import math

import mpmath as mp


def series_j(n: int, x, target_dps: int = 50) -> mp.mpf:
    """J_n(x) by ascending series at adaptive precision (n >= 0 integer)."""
    if n < 0 or n != int(n):
        raise ValueError(f"order must be a nonnegative integer, got {n!r}")
    ax = abs(float(x))
    work = target_dps + int(math.log10(math.e) * ax) + 12
    with mp.workdps(work):
        xm = mp.mpf(x)
        half = xm / 2
        t = half**n / mp.factorial(n)
        q = half * half
        total = t
        peak = abs(t)
        floor = mp.mpf(10) ** (-(work - 2))
        k = 0
        while True:
            t = -t * q / ((k + 1) * (n + k + 1))
            total += t
            peak = max(peak, abs(t))
            k += 1
            # terms grow until k ~ |x|/2; only trust smallness after that
            if abs(t) < floor * peak and k > ax / 2:
                break
        result = +total
    return result


def series_j_float(n: int, x, target_dps: int = 50) -> float:
    return float(series_j(n, x, target_dps))

#!/usr/bin/env python3
"""Regenerate the frozen reference data under tests/data/.

Everything here comes from the extended-precision series oracle in
tests/oracles.py.  Values are frozen because the oracle needs thousands of
decimal digits at |x| ~ 1e4..1e5 (seconds to minutes per value on one
core); the suite re-verifies a cheap random subsample live on every run.

Outputs:
  tests/data/bessel_grid.csv    curated (n, x, J_n(x)) accuracy grid
  tests/data/kapteyn_pairs.npz   n in 1..200, x in [-1, 1]: |J_n(n x)|
  tests/data/landau_pairs.npz   k in 0..100, x log-uniform [0.1, 1e4]: |J_k(x)|

Run from anywhere:  python scripts/generate_test_data.py
"""

from __future__ import annotations

import csv
import math
import pathlib
import sys
import time

import mpmath as mp
import numpy as np

HERE = pathlib.Path(__file__).resolve().parent
sys.path.insert(0, str(HERE.parent / "tests"))
from oracles import series_j  # noqa: E402

DATA = HERE.parent / "tests" / "data"

# pairs whose |J| is certifiably below this teach nothing about accuracy
GRID_FLOOR = 1e-250


def _cross_check(n: int, x: float, value: mp.mpf, dps: int) -> None:
    # independent mpmath algorithm (hypergeometric machinery)
    with mp.workdps(dps):
        ref = mp.besselj(n, mp.mpf(x))
        err = abs(value - ref)
        scale = max(abs(ref), mp.mpf(10) ** (-dps))
    assert err <= scale * mp.mpf(10) ** (-(dps - 6)), (n, x, float(err))


def gen_grid() -> None:
    pairs: list[tuple[int, float]] = []
    base_n = [0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    base_x = [1e-3, 0.1, 0.5, 1.0, 2.0, 4.0, 7.9, 8.0, 8.1, 10.0, 15.0,
              25.0, 50.0, 100.0, 316.0, 1000.0]
    pairs += [(n, x) for n in base_n for x in base_x]
    # parity / negative arguments
    pairs += [(n, x) for n in (0, 1, 2, 5, 10) for x in (-0.7, -8.0, -25.3, -1000.0)]
    # straddle the series/recurrence switch at |x| = 8
    pairs += [(n, x) for n in range(11) for x in (7.5, 7.75, 8.0, 8.25, 8.5)]
    # deep exponential-decay region (tiny but not certified-zero values)
    pairs += [(50, 1.0), (100, 10.0), (150, 40.0), (200, 50.0), (300, 100.0)]
    # large arguments (long backward recurrences)
    pairs += [(n, x) for x in (2000.0, 5000.0, 10000.0) for n in (0, 1, 7, 50, 137)]
    pairs += [(0, 5e4), (3, 5e4), (0, 1e5), (3, 1e5)]

    rng = np.random.default_rng(12345)
    for _ in range(500):
        n = int(rng.integers(0, 81))
        x = float(np.exp(rng.uniform(np.log(1e-3), np.log(2000.0))))
        if rng.random() < 0.5:
            x = -x
        pairs.append((n, x))

    seen = set()
    rows = []
    dropped = 0
    t0 = time.time()
    for i, (n, x) in enumerate(pairs):
        if (n, x) in seen:
            continue
        seen.add((n, x))
        v = series_j(n, x, target_dps=40)
        if abs(v) < GRID_FLOOR:
            dropped += 1
            continue
        if abs(x) <= 1000.0 and len(rows) % 7 == 0:
            _cross_check(n, x, v, 40)
        rows.append((n, x, float(v)))
        if (i + 1) % 100 == 0:
            print(f"  grid {i + 1}/{len(pairs)} ({time.time() - t0:.0f}s)")

    rows.sort(key=lambda r: (abs(r[1]), r[1], r[0]))
    with open(DATA / "bessel_grid.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["n", "x", "j"])
        for n, x, j in rows:
            w.writerow([n, repr(x), repr(j)])
    print(f"bessel_grid.csv: {len(rows)} rows ({dropped} certified-tiny dropped, "
          f"{time.time() - t0:.0f}s)")


def gen_kapteyn() -> None:
    rng = np.random.default_rng(2718)
    n = rng.integers(1, 201, size=9900)
    x = rng.uniform(-1.0, 1.0, size=9900)
    # force the envelope's worst corners
    edge_n = list(range(1, 26)) + [50, 100, 150, 200]
    extra_n = np.array(edge_n * 2 + list(range(1, 22)) * 2, dtype=np.int64)
    extra_x = np.array([1.0] * len(edge_n) + [-1.0] * len(edge_n)
                       + [0.999] * 21 + [-0.999] * 21)
    n = np.concatenate([n, extra_n])
    x = np.concatenate([x, extra_x])

    t0 = time.time()
    j_abs = np.empty(n.size)
    for i in range(n.size):
        j_abs[i] = abs(float(series_j(int(n[i]), float(n[i] * x[i]), target_dps=30)))
        if (i + 1) % 2000 == 0:
            print(f"  kapteyn {i + 1}/{n.size} ({time.time() - t0:.0f}s)")
    np.savez_compressed(DATA / "kapteyn_pairs.npz", n=n, x=x, j_abs=j_abs)
    print(f"kapteyn_pairs.npz: {n.size} pairs ({time.time() - t0:.0f}s)")


def gen_landau() -> None:
    rng = np.random.default_rng(577)
    k = rng.integers(0, 101, size=9980)
    x = np.exp(rng.uniform(math.log(0.1), math.log(1e4), size=9980))
    extra_k = np.array(list(range(10)) + [0, 1, 2, 50, 100] + [0, 25, 50, 75, 100],
                       dtype=np.int64)
    extra_x = np.array([0.1] * 10 + [1e4] * 5 + [0.5, 3.0, 29.0, 311.0, 2948.0])
    k = np.concatenate([k, extra_k])
    x = np.concatenate([x, extra_x])

    t0 = time.time()
    j_abs = np.empty(k.size)
    for i in range(k.size):
        j_abs[i] = abs(float(series_j(int(k[i]), float(x[i]), target_dps=30)))
        if (i + 1) % 1000 == 0:
            print(f"  landau {i + 1}/{k.size} ({time.time() - t0:.0f}s)")
    np.savez_compressed(DATA / "landau_pairs.npz", k=k, x=x, j_abs=j_abs)
    print(f"landau_pairs.npz: {k.size} pairs ({time.time() - t0:.0f}s)")


if __name__ == "__main__":
    DATA.mkdir(parents=True, exist_ok=True)
    print("backend:", mp.libmp.BACKEND)
    gen_grid()
    gen_kapteyn()
    gen_landau()

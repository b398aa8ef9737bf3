"""How fast does a circular array orthogonalize a cell full of users?

Ten users spread uniformly around the horizon, half-wavelength spacing.
The aggregate leakage (root-sum-square of per-interferer |alpha|) must
fall toward zero for matched filtering to be enough.  It does -- but not
monotonically: |alpha| rings like a Bessel function, so only the envelope
decays.  The SINR column shows what the leakage costs at 20 dB per-user SNR.

Writes the sweep as CSV and as a small standalone SVG plot.  The same run
is available from the shell:

    arrayfp sweep --config demos/configs/uniform_m10.json \
        --out demos/out/uniform_m10.csv --svg demos/out/uniform_m10.svg
"""

from pathlib import Path

from arrayfp import emit_csv, emit_svg, load_scenario, sweep_n, verify_bounds

HERE = Path(__file__).parent


def main():
    config = load_scenario(HERE / "configs" / "uniform_m10.json")
    rows = sweep_n(config)

    print(f"{'N':>6} {'alpha_total':>12} {'alpha_2':>12} {'bound_2':>12} "
          f"{'SINR (dB)':>10}")
    for r in rows:
        print(f"{r.n:6d} {r.alpha_total:12.6f} {r.alpha_2:12.6f} "
              f"{min(r.bound_total, 99.0):12.6f} {r.sinr_db:10.3f}")

    # the ringing is why acceptance tests the envelope, not the raw curve
    a = [r.alpha_total for r in rows]
    rises = sum(b > x for x, b in zip(a, a[1:]))
    print(f"\nraw curve rises {rises} times across the sweep, yet the")
    print("pairwise envelope is non-increasing from N = 32 on.")

    report = verify_bounds(config)
    print(f"\nclosed-form decay bound checked on {len(report.checks)} "
          f"(N, user) pairs: min slack {report.min_slack:.3f} "
          f"({'all hold' if report.ok else 'VIOLATED'})")

    out = HERE / "out"
    emit_csv(rows, out / "uniform_m10.csv")
    emit_svg(rows, out / "uniform_m10.svg")
    print(f"\nwrote {out / 'uniform_m10.csv'} and {out / 'uniform_m10.svg'}")


if __name__ == "__main__":
    main()

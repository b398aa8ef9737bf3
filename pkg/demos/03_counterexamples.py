"""Two ways a growing array can fail to separate its users.

Adding antennas is not a cure-all.  If an interferer's angle closes in on
the decoded user exactly as fast as the aperture grows (azimuth 2*pi/N),
the leakage converges to |J_0(2*pi*d)| -- a fixed, predictable number --
instead of zero.  And if the user count grows with the array (M = N,
uniformly spread), the nearest interferer always sits one element step
away, so the aggregate leakage never drops below that same floor.

The classifier names both failure modes and quotes the limit in advance;
the sweeps then confirm it numerically.
"""

from pathlib import Path

from arrayfp import (
    classify_scenario,
    load_scenario,
    predicted_limit_shrinking,
    sweep_n,
)

HERE = Path(__file__).parent


def show(config_name):
    config = load_scenario(HERE / "configs" / config_name)
    verdict = classify_scenario(config)
    print(f"--- {config_name} ---")
    print(f"favorable propagation holds: {verdict.holds}")
    print(f"violated condition: {verdict.violated_condition.value}")
    print(f"predicted limiting |alpha_2|: {verdict.predicted_limit:.12f}")
    for note in verdict.notes:
        print(f"note: {note}")
    return config


def main():
    config = show("shrinking.json")
    print(f"\n{'N':>6} {'|alpha_2|':>14} {'|limit - alpha_2|':>18}")
    limit = predicted_limit_shrinking(config.d)
    for r in sweep_n(config):
        print(f"{r.n:6d} {r.alpha_2:14.10f} {abs(r.alpha_2 - limit):18.2e}")
    print("more antennas buy nothing here: the limit is |J_0(pi)| = "
          f"{limit:.10f}")

    print()
    config = show("dense.json")
    rows = sweep_n(config)
    print(f"\n{'N':>6} {'users':>6} {'alpha_total':>12}")
    for r in rows:
        print(f"{r.n:6d} {r.n:6d} {r.alpha_total:12.6f}")
    floor = min(r.alpha_total for r in rows)
    print(f"aggregate leakage floor across the sweep: {floor:.6f} "
          f"(never below {limit:.6f} - 0.02)")


if __name__ == "__main__":
    main()

"""Scenario harness: JSON configs in, sweeps/verdicts/CSV/SVG out.

A scenario file describes one growing-array experiment:

    {
      "kind": "uca2d" | "uca3d" | "ucla",
      "d": 0.5,                       // in-circle element spacing, wavelengths
      "aoa_mode": "uniform" | "explicit" | "shrinking" | "dense",
      "m": 10,                        // uniform: user count ("M" also accepted)
      "aoas": [[az], [az, el], ...],  // explicit: DEGREES, users[0] = main
      "n_values": [8, 16, ...],       // optional, default dyadic 8..4096
      "gamma": 100.0,                 // optional per-user linear SNR
      "tol": 1e-12,                   // optional series tolerance
      "n_c": 8, "d_v": 0.4,           // ucla only: vertical count/spacing
      "expansion": "horizontal"       // ucla only, for classification
    }

Angles live in degrees inside files (human-editable) and are converted to
radians on load.  Unknown keys are rejected by name; so are mode/kind
mismatches (the two counterexample modes are planar constructions, hence
uca2d only).  Sweeps always grow the circle; `expansion` feeds the limit
classifier.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .arrays import AngleOfArrival, UcaGeometry, UclaGeometry, UlaGeometry, steering_uca_3d, steering_ucla
from .leakage import (
    DELTA_EPS,
    Expansion,
    FpCondition,
    FpVerdict,
    alpha_direct,
    deltas_3d,
    fp_classify,
    leakage_bound,
    predicted_limit_shrinking,
)
from .sinr import to_db

__all__ = [
    "ScenarioConfigError",
    "SweepConfig",
    "SweepRow",
    "BoundCheck",
    "BoundReport",
    "CSV_HEADER",
    "default_n_values",
    "load_scenario",
    "sweep_n",
    "verify_bounds",
    "classify_scenario",
    "emit_csv",
    "emit_svg",
]

TWO_PI = 2.0 * math.pi

KINDS = ("uca2d", "uca3d", "ucla")
AOA_MODES = ("uniform", "explicit", "shrinking", "dense")

CSV_HEADER = "N,alpha_total,alpha_2,bound_total,sinr_db,predicted_limit"


class ScenarioConfigError(ValueError):
    """Raised for unreadable, unparsable, or schema-violating scenarios."""


def default_n_values() -> tuple[int, ...]:
    return tuple(2**k for k in range(3, 13))  # 8 .. 4096


@dataclass(frozen=True)
class SweepConfig:
    kind: str
    d: float
    aoa_mode: str
    n_values: tuple[int, ...]
    gamma: float = 100.0
    tol: float = 1e-12
    m: int | None = None
    aoas: tuple[AngleOfArrival, ...] | None = None
    n_c: int | None = None
    d_v: float | None = None
    expansion: Expansion = Expansion.HORIZONTAL


def _fail(key: str, why: str):
    raise ScenarioConfigError(f"config key '{key}': {why}")


def _need_number(raw: dict, key: str, *, positive=False) -> float:
    v = raw[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        _fail(key, f"must be a number, got {v!r}")
    v = float(v)
    if not math.isfinite(v):
        _fail(key, "must be finite")
    if positive and v <= 0.0:
        _fail(key, f"must be > 0, got {v}")
    return v


def _need_int(raw: dict, key: str, minimum: int) -> int:
    v = raw[key]
    if isinstance(v, bool) or not isinstance(v, int):
        _fail(key, f"must be an integer, got {v!r}")
    if v < minimum:
        _fail(key, f"must be >= {minimum}, got {v}")
    return v


def _parse_aoas(raw_list) -> tuple[AngleOfArrival, ...]:
    if not isinstance(raw_list, list) or not raw_list:
        raise ScenarioConfigError("config key 'aoas': must be a non-empty list")
    out = []
    for idx, entry in enumerate(raw_list):
        key = f"aoas[{idx}]"
        if not isinstance(entry, list) or not 1 <= len(entry) <= 2:
            _fail(key, "must be [azimuth] or [azimuth, elevation] in degrees")
        for v in entry:
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(float(v)):
                _fail(key, f"angles must be finite numbers, got {v!r}")
        try:
            out.append(AngleOfArrival.from_degrees(*map(float, entry)))
        except ValueError as e:
            _fail(key, str(e))
    return tuple(out)


def load_scenario(path) -> SweepConfig:
    """Read and validate a scenario JSON file; errors name the bad key."""
    try:
        with open(path, encoding="utf-8") as f:
            raw = json.load(f)
    except OSError as e:
        raise ScenarioConfigError(f"cannot read scenario {path!r}: {e}") from e
    except json.JSONDecodeError as e:
        raise ScenarioConfigError(f"scenario {path!r} is not valid JSON: {e}") from e
    if not isinstance(raw, dict):
        raise ScenarioConfigError("scenario must be a JSON object")

    if "M" in raw:  # accept either spelling of the user count
        if "m" in raw:
            raise ScenarioConfigError("give either 'm' or 'M', not both")
        raw["m"] = raw.pop("M")
    known = {"kind", "d", "aoa_mode", "m", "aoas", "n_values", "gamma", "tol",
             "n_c", "d_v", "expansion"}
    for key in raw:
        if key not in known:
            raise ScenarioConfigError(f"unknown config key '{key}'")
    for key in ("kind", "d", "aoa_mode"):
        if key not in raw:
            raise ScenarioConfigError(f"missing required key '{key}'")

    kind = raw["kind"]
    if kind not in KINDS:
        _fail("kind", f"must be one of {KINDS}, got {kind!r}")
    d = _need_number(raw, "d", positive=True)
    mode = raw["aoa_mode"]
    if mode not in AOA_MODES:
        _fail("aoa_mode", f"must be one of {AOA_MODES}, got {mode!r}")

    if "n_values" in raw:
        nv = raw["n_values"]
        if not isinstance(nv, list) or not nv:
            _fail("n_values", "must be a non-empty list of integers")
        n_values = tuple(_need_int({"n_values": n}, "n_values", 2) for n in nv)
        if any(b <= a for a, b in zip(n_values, n_values[1:])):
            _fail("n_values", "must be strictly increasing")
    else:
        n_values = default_n_values()

    gamma = _need_number(raw, "gamma", positive=True) if "gamma" in raw else 100.0
    tol = _need_number(raw, "tol", positive=True) if "tol" in raw else 1e-12

    m = aoas = None
    if mode == "uniform":
        if "m" not in raw:
            raise ScenarioConfigError("missing required key 'm' (uniform mode)")
        m = _need_int(raw, "m", 1)
        if "aoas" in raw:
            _fail("aoas", "not allowed in uniform mode")
    elif mode == "explicit":
        if "aoas" not in raw:
            raise ScenarioConfigError("missing required key 'aoas' (explicit mode)")
        aoas = _parse_aoas(raw["aoas"])
        if "m" in raw and _need_int(raw, "m", 1) != len(aoas):
            _fail("m", f"does not match the {len(aoas)} aoas entries")
        if kind == "uca2d":
            for idx, a in enumerate(aoas):
                if abs(a.elevation - 0.5 * math.pi) > 1e-12:
                    _fail(f"aoas[{idx}]", "uca2d users must be in-plane (elevation pi/2)")
    else:  # counterexample constructions are planar by definition
        if kind != "uca2d":
            _fail("aoa_mode", f"{mode!r} mode requires kind 'uca2d'")
        if "aoas" in raw:
            _fail("aoas", f"not allowed in {mode} mode")
        if mode == "shrinking":
            if "m" in raw and raw["m"] != 2:
                _fail("m", "shrinking mode is a two-user construction")
            m = 2
        elif "m" in raw:
            _fail("m", "dense mode pins m = N per sweep point")

    n_c = d_v = None
    expansion = Expansion.HORIZONTAL
    if kind == "ucla":
        for key in ("n_c", "d_v"):
            if key not in raw:
                raise ScenarioConfigError(f"missing required key '{key}' (ucla)")
        n_c = _need_int(raw, "n_c", 1)
        d_v = _need_number(raw, "d_v", positive=True)
        if "expansion" in raw:
            try:
                expansion = Expansion(raw["expansion"])
            except ValueError:
                _fail("expansion", f"must be 'horizontal' or 'vertical', got {raw['expansion']!r}")
    else:
        for key in ("n_c", "d_v", "expansion"):
            if key in raw:
                _fail(key, "only allowed for kind 'ucla'")

    return SweepConfig(kind=kind, d=d, aoa_mode=mode, n_values=n_values,
                       gamma=gamma, tol=tol, m=m, aoas=aoas, n_c=n_c, d_v=d_v,
                       expansion=expansion)


def _aoas_for(config: SweepConfig, n: int) -> tuple[AngleOfArrival, ...]:
    if config.aoa_mode == "uniform":
        return tuple(AngleOfArrival(TWO_PI * i / config.m) for i in range(config.m))
    if config.aoa_mode == "explicit":
        return config.aoas
    if config.aoa_mode == "shrinking":
        return (AngleOfArrival(0.0), AngleOfArrival(TWO_PI / n))
    return tuple(AngleOfArrival(TWO_PI * i / n) for i in range(n))  # dense


def _geometry_for(config: SweepConfig, n: int):
    uca = UcaGeometry(n, config.d)
    if config.kind == "ucla":
        return UclaGeometry(uca, UlaGeometry(config.n_c, config.d_v))
    return uca


def _steering(geometry, aoa):
    if isinstance(geometry, UclaGeometry):
        return steering_ucla(geometry, aoa)
    return steering_uca_3d(geometry, aoa)


def _pair_bound(config: SweepConfig, geometry, aoas) -> float | None:
    """Decay bound for the first interferer, None where undefined."""
    if len(aoas) < 2:
        return None
    uca = geometry.uca if isinstance(geometry, UclaGeometry) else geometry
    if config.kind == "uca2d":
        sep = aoas[1].azimuth - aoas[0].azimuth
        if 2.0 * abs(math.sin(0.5 * sep)) <= DELTA_EPS:
            return None
        return leakage_bound(uca, sep).total
    dd = deltas_3d(aoas[0], aoas[1], uca)
    if dd.delta <= DELTA_EPS:
        return None
    return leakage_bound(uca, dd).total


@dataclass(frozen=True)
class SweepRow:
    """One sweep point; None fields land as empty CSV cells."""

    n: int
    alpha_total: float
    alpha_2: float | None
    bound_total: float | None
    sinr_db: float
    predicted_limit: float | None


def _predicted_limit(config: SweepConfig) -> float | None:
    # both counterexamples put an interferer one element step away, so the
    # first interferer's leakage tends to |J_0(2 pi d)| in either mode
    if config.aoa_mode in ("shrinking", "dense"):
        return predicted_limit_shrinking(config.d)
    return None


def sweep_n(config: SweepConfig) -> list[SweepRow]:
    """Leakage/ SINR trajectory over the configured array sizes.

    alpha_total is the root-sum-square of all interferer leakages (the
    quantity that must vanish for favorable propagation); alpha_2 tracks the
    first interferer alone; sinr assumes every user at the configured gamma.
    """
    limit = _predicted_limit(config)
    rows = []
    for n in config.n_values:
        try:
            aoas = _aoas_for(config, n)
            geom = _geometry_for(config, n)
            h1 = _steering(geom, aoas[0])
            abs2 = [abs(alpha_direct(h1, _steering(geom, a))) ** 2 for a in aoas[1:]]
            total = math.sqrt(math.fsum(abs2))
            sinr = config.gamma / (config.gamma * math.fsum(abs2) + 1.0)
            rows.append(SweepRow(
                n=n,
                alpha_total=total,
                alpha_2=math.sqrt(abs2[0]) if abs2 else None,
                bound_total=_pair_bound(config, geom, aoas),
                sinr_db=to_db(sinr),
                predicted_limit=limit,
            ))
        except ValueError as e:
            raise ValueError(f"sweep point N={n}: {e}") from e
    return rows


@dataclass(frozen=True)
class BoundCheck:
    n: int
    user_index: int
    alpha_abs: float
    bound_total: float
    slack: float  # bound - |alpha|; negative would disprove the bound


@dataclass(frozen=True)
class BoundReport:
    checks: tuple[BoundCheck, ...]
    violations: tuple[BoundCheck, ...]
    undefined: int  # pairs with zero projected separation: no bound exists

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def min_slack(self) -> float:
        return min((c.slack for c in self.checks), default=math.inf)

    @property
    def max_slack(self) -> float:
        return max((c.slack for c in self.checks), default=0.0)


def verify_bounds(config: SweepConfig) -> BoundReport:
    """Check |alpha_i| <= closed-form bound for every pair at every N."""
    checks = []
    undefined = 0
    for n in config.n_values:
        aoas = _aoas_for(config, n)
        geom = _geometry_for(config, n)
        uca = geom.uca if isinstance(geom, UclaGeometry) else geom
        h1 = _steering(geom, aoas[0])
        for i, a in enumerate(aoas[1:], start=1):
            dd = deltas_3d(aoas[0], a, uca)
            if dd.delta <= DELTA_EPS:
                undefined += 1
                continue
            alpha = abs(alpha_direct(h1, _steering(geom, a)))
            bound = leakage_bound(uca, dd).total
            checks.append(BoundCheck(n, i, alpha, bound, bound - alpha))
    checks = tuple(checks)
    return BoundReport(checks, tuple(c for c in checks if c.slack < 0.0), undefined)


def classify_scenario(config: SweepConfig) -> FpVerdict:
    """Limit verdict for a scenario, including the counterexample modes."""
    if config.aoa_mode == "shrinking":
        return FpVerdict(
            False, FpCondition.SHRINKING_AOA,
            predicted_limit=predicted_limit_shrinking(config.d),
            violating_user_indices=(1,),
            notes=("interferer azimuth 2*pi/N collapses onto the main user "
                   "exactly as fast as the aperture grows",))
    if config.aoa_mode == "dense":
        return FpVerdict(
            False, FpCondition.DENSE_AOAS,
            predicted_limit=predicted_limit_shrinking(config.d),
            notes=("user count grows with the array; the nearest interferer "
                   "is always one element step away",))
    aoas = _aoas_for(config, config.n_values[0])
    geom = _geometry_for(config, config.n_values[0])
    return fp_classify(geom, aoas, config.expansion)


def _cell(v) -> str:
    return "" if v is None else format(v, ".12g")


def emit_csv(rows, path) -> None:
    """Write sweep rows; fixed header, %.12g floats, empty for undefined."""
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(CSV_HEADER + "\n")
        for r in rows:
            f.write(",".join([
                str(r.n),
                _cell(r.alpha_total),
                _cell(r.alpha_2),
                _cell(r.bound_total),
                _cell(r.sinr_db),
                _cell(r.predicted_limit),
            ]) + "\n")


# -- svg ----------------------------------------------------------------
# hand-rolled on purpose: a plotting dependency would make the artifact
# nondeterministic (ids, timestamps) and ~100x larger

_W, _H = 720, 420
_ML, _MR, _MT, _MB = 64, 16, 16, 48


def _svg_xy(rows, ymax):
    n_lo = math.log2(rows[0].n)
    n_hi = math.log2(rows[-1].n)
    span = (n_hi - n_lo) or 1.0
    xs = [_ML + (_W - _ML - _MR) * (math.log2(r.n) - n_lo) / span for r in rows]

    def y(v):
        return _H - _MB - (_H - _MT - _MB) * (v / ymax)

    return xs, y


def emit_svg(rows, path) -> None:
    """Deterministic |alpha|-vs-N plot: log2 x-axis, linear y-axis.

    Two polylines (aggregate and first-interferer leakage) plus a dashed
    reference line when the scenario predicts a nonzero limit.
    """
    rows = list(rows)
    if not rows:
        raise ValueError("no rows to plot")
    vals = [r.alpha_total for r in rows]
    vals += [r.alpha_2 for r in rows if r.alpha_2 is not None]
    vals += [r.predicted_limit for r in rows if r.predicted_limit is not None]
    ymax = 1.05 * max(max(vals), 1e-6)
    xs, y = _svg_xy(rows, ymax)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<line x1="{_ML}" y1="{_H - _MB}" x2="{_W - _MR}" y2="{_H - _MB}" stroke="black"/>',
        f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_H - _MB}" stroke="black"/>',
    ]
    for r, x in zip(rows, xs):
        parts.append(f'<line x1="{x:.2f}" y1="{_H - _MB}" x2="{x:.2f}" '
                     f'y2="{_H - _MB + 4}" stroke="black"/>')
        parts.append(f'<text x="{x:.2f}" y="{_H - _MB + 18}" font-size="11" '
                     f'text-anchor="middle">{r.n}</text>')
    for k in range(5):
        v = ymax * k / 4.0
        parts.append(f'<text x="{_ML - 6}" y="{y(v) + 4:.2f}" font-size="11" '
                     f'text-anchor="end">{v:.3g}</text>')
    parts.append(f'<text x="{(_ML + _W - _MR) / 2:.2f}" y="{_H - 8}" font-size="12" '
                 f'text-anchor="middle">array size N</text>')

    pts = " ".join(f"{x:.2f},{y(r.alpha_total):.2f}" for r, x in zip(rows, xs))
    parts.append(f'<polyline class="alpha-total" points="{pts}" fill="none" '
                 f'stroke="#1f77b4" stroke-width="1.5"/>')
    pts2 = " ".join(f"{x:.2f},{y(r.alpha_2):.2f}"
                    for r, x in zip(rows, xs) if r.alpha_2 is not None)
    if pts2:
        parts.append(f'<polyline class="alpha-2" points="{pts2}" fill="none" '
                     f'stroke="#d62728" stroke-width="1.5"/>')
    limits = [r.predicted_limit for r in rows if r.predicted_limit is not None]
    if limits:
        yl = y(limits[0])
        parts.append(f'<line id="predicted-limit" x1="{_ML}" y1="{yl:.2f}" '
                     f'x2="{_W - _MR}" y2="{yl:.2f}" stroke="#2ca02c" '
                     f'stroke-dasharray="6 4"/>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write("\n".join(parts) + "\n")

"""Favorable propagation for circular and cylindrical antenna arrays.

Quantifies how fast inter-user interference (the normalized steering-vector
inner product alpha) dies as a constant-spacing circular array grows, when
it provably cannot die, and what that means for matched-filter SINR.

Layers, bottom to top:

* :mod:`arrayfp.bessel`  -- J_n evaluation plus certified decay envelopes
* :mod:`arrayfp.arrays`  -- geometries and steering vectors
* :mod:`arrayfp.leakage` -- alpha series/bounds/limits, FP classification
* :mod:`arrayfp.sinr`    -- matched-filter SINR from leakages
* :mod:`arrayfp.harness` -- JSON scenarios, sweeps, CSV/SVG artifacts
* :mod:`arrayfp.cli`     -- `arrayfp` command wrapping the harness
"""

from .arrays import (
    AngleOfArrival,
    UcaGeometry,
    UclaGeometry,
    UlaGeometry,
    steering_uca_2d,
    steering_uca_3d,
    steering_ucla,
    steering_ula_vertical,
    uca_radius,
)
from .bessel import BesselValue, bessel_j, bessel_j_many, kapteyn_bound, landau_bound
from .leakage import (
    ANGLE_EPS,
    DELTA_EPS,
    BoundBreakdown,
    Deltas,
    Expansion,
    FpCondition,
    FpVerdict,
    alpha_direct,
    alpha_series_2d,
    alpha_series_3d,
    alpha_ucla_factored,
    alpha_ula,
    deltas_3d,
    fp_classify,
    leakage_bound,
    min_antennas,
    min_antennas_uniform,
    predicted_limit_shrinking,
    truncation_k,
)
from .sinr import MultiUserScenario, SinrReport, User, sinr_matched_filter, to_db
from .harness import (
    BoundCheck,
    BoundReport,
    CSV_HEADER,
    ScenarioConfigError,
    SweepConfig,
    SweepRow,
    classify_scenario,
    default_n_values,
    emit_csv,
    emit_svg,
    load_scenario,
    sweep_n,
    verify_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "ANGLE_EPS",
    "DELTA_EPS",
    "CSV_HEADER",
    "AngleOfArrival",
    "BesselValue",
    "BoundBreakdown",
    "BoundCheck",
    "BoundReport",
    "Deltas",
    "Expansion",
    "FpCondition",
    "FpVerdict",
    "MultiUserScenario",
    "ScenarioConfigError",
    "SinrReport",
    "SweepConfig",
    "SweepRow",
    "UcaGeometry",
    "UclaGeometry",
    "UlaGeometry",
    "User",
    "alpha_direct",
    "alpha_series_2d",
    "alpha_series_3d",
    "alpha_ucla_factored",
    "alpha_ula",
    "bessel_j",
    "bessel_j_many",
    "classify_scenario",
    "default_n_values",
    "deltas_3d",
    "emit_csv",
    "emit_svg",
    "fp_classify",
    "kapteyn_bound",
    "landau_bound",
    "leakage_bound",
    "load_scenario",
    "min_antennas",
    "min_antennas_uniform",
    "predicted_limit_shrinking",
    "sinr_matched_filter",
    "steering_uca_2d",
    "steering_uca_3d",
    "steering_ucla",
    "steering_ula_vertical",
    "sweep_n",
    "to_db",
    "truncation_k",
    "uca_radius",
    "verify_bounds",
]

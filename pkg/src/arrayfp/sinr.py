"""Matched-filter uplink SINR for one cell of co-located array users.

With maximum-ratio combining toward user 1 and unit noise power, the
achieved SINR is

    gamma_1 / (sum_{i>=2} |alpha_i|^2 gamma_i + 1)

where gamma_i are the per-user SNRs and alpha_i the normalized steering
inner products from :mod:`arrayfp.leakage`.  The whole favorable-propagation
story is the denominator: as the array grows, every well-separated
interferer's |alpha_i|^2 collapses and the SINR climbs to gamma_1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arrays import AngleOfArrival, UcaGeometry, UclaGeometry, steering_uca_3d, steering_ucla
from .leakage import alpha_direct

__all__ = ["User", "MultiUserScenario", "SinrReport", "sinr_matched_filter", "to_db"]


@dataclass(frozen=True)
class User:
    """One user: arrival direction plus linear SNR gamma >= 0."""

    aoa: AngleOfArrival
    snr: float

    def __post_init__(self):
        if not isinstance(self.aoa, AngleOfArrival):
            raise ValueError("aoa must be an AngleOfArrival")
        g = float(self.snr)
        if not math.isfinite(g) or g < 0.0:
            raise ValueError(f"snr must be finite and >= 0, got {self.snr!r}")
        object.__setattr__(self, "snr", g)


@dataclass(frozen=True)
class MultiUserScenario:
    """A geometry plus users; users[0] is the one being detected."""

    geometry: UcaGeometry | UclaGeometry
    users: tuple[User, ...]

    def __post_init__(self):
        if not isinstance(self.geometry, (UcaGeometry, UclaGeometry)):
            raise ValueError("geometry must be a UcaGeometry or UclaGeometry")
        users = tuple(self.users)
        if not users:
            raise ValueError("need at least the detected user")
        for u in users:
            if not isinstance(u, User):
                raise ValueError(f"expected User, got {type(u).__name__}")
        object.__setattr__(self, "users", users)

    @property
    def n_users(self) -> int:
        return len(self.users)


@dataclass(frozen=True)
class SinrReport:
    """Linear-scale report; sinr = gamma_1 / (sum |alpha_i|^2 gamma_i + 1).

    aggregate_leakage_sq is the *unweighted* sum of squared leakages (the
    quantity the convergence figures track); per_user_leakage_sq holds the
    individual |alpha_i|^2, i >= 2, in user order.
    """

    sinr: float
    gamma_1: float
    aggregate_leakage_sq: float
    per_user_leakage_sq: tuple[float, ...]


def _steering(geometry, aoa: AngleOfArrival):
    if isinstance(geometry, UclaGeometry):
        return steering_ucla(geometry, aoa)
    return steering_uca_3d(geometry, aoa)


def sinr_matched_filter(scenario: MultiUserScenario) -> SinrReport:
    """Matched-filter SINR toward users[0], noise power normalized to 1.

    sinr <= gamma_1 always, with equality exactly when no interference
    leaks through (single user, or all alphas zero).
    """
    main = scenario.users[0]
    h1 = _steering(scenario.geometry, main.aoa)
    leak_sq = []
    weighted = []
    for u in scenario.users[1:]:
        a = alpha_direct(h1, _steering(scenario.geometry, u.aoa))
        l2 = abs(a) ** 2
        leak_sq.append(l2)
        weighted.append(l2 * u.snr)
    return SinrReport(
        sinr=main.snr / (math.fsum(weighted) + 1.0),
        gamma_1=main.snr,
        aggregate_leakage_sq=math.fsum(leak_sq),
        per_user_leakage_sq=tuple(leak_sq),
    )


def to_db(x) -> float:
    """Linear power ratio to dB; x = 0 maps to -inf."""
    x = float(x)
    if not (x >= 0.0):  # also rejects nan
        raise ValueError(f"need x >= 0, got {x!r}")
    if x == 0.0:
        return -math.inf
    return 10.0 * math.log10(x)

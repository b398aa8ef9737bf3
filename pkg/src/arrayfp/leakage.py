"""Interference leakage between users of a growing circular/cylindrical array.

The central object is ``alpha = h_1^H h_i / N``: the normalized inner product
between the main user's steering vector and an interferer's.  Matched-filter
interference is proportional to ``|alpha|^2``, so favorable propagation is
exactly ``alpha -> 0`` as the array grows.

For a circle the inner product collapses, via the Jacobi-Anger expansion and
the roots-of-unity sift, to a lacunary Bessel series

    alpha = J_0(z) + sum_{k>=1} J_{kN}(z) * (e^{+j k N beta} + (-1)^{kN} e^{-j k N beta})

with ``z = 2 pi R delta`` and ``(delta, beta)`` the polar form of the
difference of the two users' direction projections onto the array plane.
Everything else here is bookkeeping around that identity: rigorous
truncation, a closed-form decay bound, limit classification, and the two
boundary cases where favorable propagation genuinely fails (an interferer
whose angle collapses onto the main user as N grows, and a user population
that grows as fast as the array).
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .arrays import (
    AngleOfArrival,
    UcaGeometry,
    UclaGeometry,
    UlaGeometry,
    steering_uca_3d,
    uca_radius,
)
from .bessel import bessel_j, bessel_j_many

__all__ = [
    "ANGLE_EPS",
    "DELTA_EPS",
    "Deltas",
    "BoundBreakdown",
    "Expansion",
    "FpCondition",
    "FpVerdict",
    "alpha_direct",
    "deltas_3d",
    "alpha_series_2d",
    "alpha_series_3d",
    "alpha_ula",
    "alpha_ucla_factored",
    "leakage_bound",
    "truncation_k",
    "fp_classify",
    "predicted_limit_shrinking",
    "min_antennas",
    "min_antennas_uniform",
]

TWO_PI = 2.0 * math.pi

# Below these, an angle difference / projected separation counts as zero.
ANGLE_EPS = 1e-12
DELTA_EPS = 1e-12


def alpha_direct(h1, hi) -> complex:
    """Normalized inner product ``h1^H hi / N`` of two steering vectors.

    Summed with error-free compensated summation (math.fsum) on the real and
    imaginary parts separately, so the result is faithful even when N is
    large and the phasors cancel almost completely -- which is precisely the
    regime this package cares about.
    """
    h1 = np.asarray(h1, dtype=np.complex128)
    hi = np.asarray(hi, dtype=np.complex128)
    if h1.ndim != 1 or hi.ndim != 1:
        raise ValueError("steering vectors must be 1-D")
    if h1.shape != hi.shape:
        raise ValueError(f"length mismatch: {h1.shape} vs {hi.shape}")
    n = h1.size
    if n == 0:
        raise ValueError("empty steering vectors")
    prod = np.conj(h1) * hi
    re = math.fsum(prod.real.tolist())
    im = math.fsum(prod.imag.tolist())
    return complex(re / n, im / n)


@dataclass(frozen=True)
class Deltas:
    """Planar projection difference between two arrival directions.

    d1/d2 are the x/y components of ``u_i - u_1`` where ``u = sin(theta) *
    (cos phi, sin phi)``; ``delta = |u_i - u_1|``, ``beta = arg(d2 + j d1)``,
    and ``z = 2 pi R delta`` is the argument every Bessel order is evaluated
    at for the given circle.
    """

    d1: float
    d2: float
    delta: float
    beta: float
    z: float


def deltas_3d(aoa_1: AngleOfArrival, aoa_i: AngleOfArrival,
              geometry: UcaGeometry) -> Deltas:
    s1 = math.sin(aoa_1.elevation)
    si = math.sin(aoa_i.elevation)
    d1 = si * math.cos(aoa_i.azimuth) - s1 * math.cos(aoa_1.azimuth)
    d2 = si * math.sin(aoa_i.azimuth) - s1 * math.sin(aoa_1.azimuth)
    delta = math.hypot(d1, d2)
    beta = math.atan2(d1, d2)  # arg(d2 + j*d1)
    z = TWO_PI * uca_radius(geometry) * delta
    return Deltas(d1, d2, delta, beta, z)


def _check_tol(tol) -> float:
    tol = float(tol)
    if not math.isfinite(tol) or tol <= 0.0:
        raise ValueError(f"tol must be a positive finite real, got {tol!r}")
    return tol


def _head_order(spacing: float) -> int:
    # smallest k with e*pi*d/(2k) <= 1/2; beyond it the Kapteyn envelope
    # of J_{kN}(z) decays at least geometrically (z <= N*pi*d always)
    return math.ceil(math.e * math.pi * spacing)


def truncation_k(geometry: UcaGeometry, tol=1e-12) -> int:
    """Smallest K >= ceil(e*pi*d) whose series tail is provably below tol.

    Tail estimate: for k >= k1, |J_{kN}(z)| <= q**(kN) with
    q = e*pi*d/(2*k1) <= 1/2, so the tail from K on is at most
    2*q**(N*K) / (1 - q**N).
    """
    tol = _check_tol(tol)
    n = geometry.n_elements
    k1 = _head_order(geometry.spacing)
    q = math.e * math.pi * geometry.spacing / (2.0 * k1)
    qn = q**n
    k = k1
    while 2.0 * q ** (n * k) / (1.0 - qn) >= tol:
        k += 1
    return k


def _series_terms(n_elements: int, z: float, phase: complex, k_max: int) -> complex:
    """J_0(z) + sum_{k=1..k_max} J_{kN}(z) (phase^k + (-1)^{kN} phase^-k)."""
    orders = [k * n_elements for k in range(k_max + 1)]
    j = bessel_j_many(orders, z)
    total = complex(j[0])
    fwd = 1.0 + 0.0j
    for k in range(1, k_max + 1):
        fwd *= phase
        back = fwd.conjugate()  # |phase| = 1
        if (k * n_elements) % 2:
            back = -back
        total += j[k] * (fwd + back)
    return total


def alpha_series_2d(geometry: UcaGeometry, phi_rel, tol=1e-12) -> complex:
    """Leakage between in-plane users at azimuths 0 and phi_rel.

    Bessel-series form with ``z = 4 pi R sin(phi_rel/2)``; truncated at the
    rigorously sufficient K for the requested tolerance.  The magnitude is
    rotation-invariant; the complex phase is for a main user at azimuth 0.
    """
    phi = float(phi_rel)
    if not math.isfinite(phi):
        raise ValueError(f"phi_rel must be finite, got {phi_rel!r}")
    tol = _check_tol(tol)
    z = 2.0 * TWO_PI * uca_radius(geometry) * math.sin(0.5 * phi)
    k_max = truncation_k(geometry, tol)
    # e^{-j k N phi/2} phase per step; beta-form equivalent of the 3-D series
    phase = cmath.exp(-1j * geometry.n_elements * 0.5 * phi)
    return _series_terms(geometry.n_elements, z, phase, k_max)


def alpha_series_3d(geometry: UcaGeometry, deltas: Deltas, tol=1e-12) -> complex:
    """Leakage between two elevated users of a circle, from their Deltas.

    Exact for arbitrary azimuth pairs (the phase reference travels inside
    beta).  delta = 0 means the projections coincide and alpha is exactly 1.
    """
    tol = _check_tol(tol)
    if deltas.delta == 0.0:
        return 1.0 + 0.0j
    k_max = truncation_k(geometry, tol)
    phase = cmath.exp(1j * geometry.n_elements * deltas.beta)
    return _series_terms(geometry.n_elements, deltas.z, phase, k_max)


def alpha_ula(geometry: UlaGeometry, elevation_1, elevation_i) -> complex:
    """Leakage of the vertical line factor: a Dirichlet kernel in cos(theta).

    alpha_v = e^{j u (M-1)/2} sin(M u / 2) / (M sin(u/2)) with
    u = 2 pi d_v (cos theta_i - cos theta_1).  The removable singularity
    (coincident elevations, or a grating alias when d_v >= 1/2) evaluates
    to exactly 1: every element phasor coincides.
    """
    for name, el in (("elevation_1", elevation_1), ("elevation_i", elevation_i)):
        el = float(el)
        if not (math.isfinite(el) and 0.0 <= el <= math.pi):
            raise ValueError(f"{name} must be in [0, pi], got {el!r}")
    m = geometry.n_elements
    u = TWO_PI * geometry.spacing * (math.cos(float(elevation_i)) - math.cos(float(elevation_1)))
    half = 0.5 * u
    s = math.sin(half)
    if abs(s) < 1e-12:
        return 1.0 + 0.0j
    ratio = math.sin(m * half) / (m * s)
    return cmath.exp(1j * half * (m - 1)) * ratio


def alpha_ucla_factored(geometry: UclaGeometry, aoa_1: AngleOfArrival,
                        aoa_i: AngleOfArrival) -> complex:
    """Cylinder leakage as horizontal-factor x vertical-factor product.

    Because the steering vector is a Kronecker product, the N*N_c-element
    inner product factors exactly; this only ever touches the two short
    factor vectors.  |alpha| <= min(|alpha_h|, |alpha_v|) follows since
    both factors are <= 1 in magnitude.
    """
    a_h = alpha_direct(steering_uca_3d(geometry.uca, aoa_1),
                       steering_uca_3d(geometry.uca, aoa_i))
    a_v = alpha_ula(geometry.ula, aoa_1.elevation, aoa_i.elevation)
    return a_h * a_v


@dataclass(frozen=True)
class BoundBreakdown:
    """Closed-form decay bound on |alpha|, split into head and tail.

    a1 bounds orders below k1 = ceil(e*pi*d) via the uniform |J| <= |z|^(-1/3)
    envelope evaluated at the worst-case (smallest) z = N*d*delta; a2 bounds
    the geometric tail.  k_max records the 1e-12 series truncation depth for
    the same geometry.  total = a1 + a2 >= |alpha| whenever delta > 0.
    """

    a1: float
    a2: float
    k1: int
    k_max: int
    total: float


def leakage_bound(geometry: UcaGeometry, separation) -> BoundBreakdown:
    """Decay bound for a user pair, from a Deltas or an in-plane phi_rel.

    Undefined (raises) when the projected separation is below DELTA_EPS:
    coincident projections have |alpha| = 1 and nothing decays.
    """
    if isinstance(separation, Deltas):
        delta = separation.delta
    else:
        phi = float(separation)
        if not math.isfinite(phi):
            raise ValueError(f"phi_rel must be finite, got {separation!r}")
        delta = 2.0 * abs(math.sin(0.5 * phi))
    if delta <= DELTA_EPS:
        raise ValueError("bound undefined: projected separation is zero")
    n, d = geometry.n_elements, geometry.spacing
    k1 = _head_order(d)
    z_lo = n * d * delta  # z = 2 pi R delta >= N d delta
    a1 = 2.0 * k1 * z_lo ** (-1.0 / 3.0)
    a2 = 2.0 * 0.5 ** (n * k1) / (1.0 - 0.5**n)
    return BoundBreakdown(a1, a2, k1, truncation_k(geometry, 1e-12), a1 + a2)


class Expansion(Enum):
    """Which dimension of a cylinder grows in the N -> infinity limit."""

    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class FpCondition(Enum):
    SAME_AZIMUTH_2D = "same-azimuth-2d"
    DELTA_ZERO_3D = "delta-zero-3d"
    ON_AXIS_PAIR = "on-axis-pair"
    VERTICAL_SAME_ELEVATION = "vertical-same-elevation"
    VERTICAL_SPACING_TOO_LARGE = "vertical-spacing-too-large"
    SHRINKING_AOA = "shrinking-aoa"
    DENSE_AOAS = "dense-aoas"


@dataclass(frozen=True)
class FpVerdict:
    """Does favorable propagation hold in the growing-array limit?

    violated_condition describes the first violating pair when holds is
    False; predicted_limit is the nonzero limiting |alpha| when a
    counterexample construction pins one down; notes carry warnings that do
    not change the verdict (e.g. an on-axis user whose leakage still
    vanishes because the projected separation is nonzero).
    """

    holds: bool
    violated_condition: FpCondition | None = None
    predicted_limit: float | None = None
    violating_user_indices: tuple[int, ...] = ()
    notes: tuple[str, ...] = ()


def _circular_close(a: float, b: float) -> bool:
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d) <= ANGLE_EPS


def _classify_horizontal(uca: UcaGeometry, aoas) -> FpVerdict:
    main = aoas[0]
    planar = all(abs(a.elevation - 0.5 * math.pi) <= ANGLE_EPS for a in aoas)
    bad: list[int] = []
    notes: list[str] = []
    first_cond = None
    for i, a in enumerate(aoas[1:], start=1):
        if planar:
            if _circular_close(a.azimuth, main.azimuth):
                bad.append(i)
                first_cond = first_cond or FpCondition.SAME_AZIMUTH_2D
            continue
        dd = deltas_3d(main, a, uca)
        on_axis_main = math.sin(main.elevation) <= ANGLE_EPS
        on_axis_i = math.sin(a.elevation) <= ANGLE_EPS
        if dd.delta <= DELTA_EPS:
            bad.append(i)
            if first_cond is None:
                first_cond = (FpCondition.ON_AXIS_PAIR
                              if on_axis_main and on_axis_i
                              else FpCondition.DELTA_ZERO_3D)
        elif on_axis_main or on_axis_i:
            notes.append(
                f"user {i}: on-axis elevation but projected separation "
                f"{dd.delta:.3e} > 0; leakage still vanishes")
    if bad:
        return FpVerdict(False, first_cond,
                         violating_user_indices=tuple(bad), notes=tuple(notes))
    return FpVerdict(True, notes=tuple(notes))


def _classify_vertical(ula: UlaGeometry, aoas) -> FpVerdict:
    # grating check first: with d_v >= 1/2 some elevation pair aliases onto
    # coincidence, so the limit cannot be trusted regardless of the users
    if ula.spacing >= 0.5:
        return FpVerdict(False, FpCondition.VERTICAL_SPACING_TOO_LARGE)
    main = aoas[0]
    bad = [i for i, a in enumerate(aoas[1:], start=1)
           if abs(a.elevation - main.elevation) <= ANGLE_EPS]
    if bad:
        return FpVerdict(False, FpCondition.VERTICAL_SAME_ELEVATION,
                         violating_user_indices=tuple(bad))
    return FpVerdict(True)


def fp_classify(geometry, aoas, expansion: Expansion = Expansion.HORIZONTAL) -> FpVerdict:
    """Classify whether leakage to every interferer vanishes as N grows.

    aoas[0] is the main user.  For a circle (or a cylinder growing
    horizontally) the criterion is a nonzero projected separation delta for
    every interferer; for a cylinder growing vertically it is distinct
    elevations plus sub-half-wavelength vertical spacing.
    """
    aoas = tuple(aoas)
    if not aoas:
        raise ValueError("need at least the main user's angle")
    for a in aoas:
        if not isinstance(a, AngleOfArrival):
            raise ValueError(f"expected AngleOfArrival, got {type(a).__name__}")
    if not isinstance(expansion, Expansion):
        raise ValueError(f"expected Expansion, got {expansion!r}")
    if isinstance(geometry, UclaGeometry):
        if expansion is Expansion.VERTICAL:
            return _classify_vertical(geometry.ula, aoas)
        return _classify_horizontal(geometry.uca, aoas)
    if isinstance(geometry, UcaGeometry):
        if expansion is not Expansion.HORIZONTAL:
            raise ValueError("a plain circle only grows horizontally")
        return _classify_horizontal(geometry, aoas)
    raise ValueError(f"unsupported geometry {type(geometry).__name__}")


def predicted_limit_shrinking(spacing) -> float:
    """Limiting |alpha| when the interferer sits one element step away.

    With phi_i = 2*pi/N the series argument is identically z = 2*pi*d for
    every N (the shrinking angle exactly cancels the growing radius), and
    all k >= 1 terms die, leaving |J_0(2*pi*d)|.
    """
    d = float(spacing)
    if not math.isfinite(d) or d <= 0.0:
        raise ValueError(f"spacing must be > 0, got {spacing!r}")
    return abs(bessel_j(0, TWO_PI * d).value)


def _warn_if_head_heavy(spacing: float, n_users: int) -> None:
    if math.e * math.pi * spacing >= n_users:
        warnings.warn(
            f"bound head has k1 = {_head_order(spacing)} terms but only "
            f"{n_users} users; the antenna-count guidance is loose here",
            UserWarning, stacklevel=3)


def min_antennas(aoas, spacing, margin) -> int:
    """Smallest N with N*d >= margin / min_i |sin((phi_i - phi_1)/2)|.

    margin >= 1 scales how deep into the decay regime the array must be;
    raises if any interferer shares the main user's azimuth (no finite N
    helps then).
    """
    aoas = tuple(aoas)
    if len(aoas) < 2:
        raise ValueError("need the main user and at least one interferer")
    d = float(spacing)
    if not math.isfinite(d) or d <= 0.0:
        raise ValueError(f"spacing must be > 0, got {spacing!r}")
    margin = float(margin)
    if not math.isfinite(margin) or margin < 1.0:
        raise ValueError(f"margin must be >= 1, got {margin!r}")
    main = aoas[0]
    sins = []
    for i, a in enumerate(aoas[1:], start=1):
        if _circular_close(a.azimuth, main.azimuth):
            raise ValueError(f"user {i} shares the main user's azimuth")
        sins.append(abs(math.sin(0.5 * (a.azimuth - main.azimuth))))
    _warn_if_head_heavy(d, len(aoas))
    return math.ceil(margin / (d * min(sins)))


def min_antennas_uniform(n_users, spacing, margin) -> int:
    """min_antennas specialized to n_users uniformly spread azimuths.

    The closest interferer sits at 2*pi/M, so min |sin| ~ pi/M and the
    requirement collapses to N >= margin * M / (pi * d).
    """
    if not isinstance(n_users, int) or n_users < 2:
        raise ValueError(f"n_users must be an int >= 2, got {n_users!r}")
    d = float(spacing)
    if not math.isfinite(d) or d <= 0.0:
        raise ValueError(f"spacing must be > 0, got {spacing!r}")
    margin = float(margin)
    if not math.isfinite(margin) or margin < 1.0:
        raise ValueError(f"margin must be >= 1, got {margin!r}")
    _warn_if_head_heavy(d, n_users)
    return math.ceil(margin * n_users / (math.pi * d))

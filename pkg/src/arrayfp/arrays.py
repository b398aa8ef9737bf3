"""Array geometries and steering vectors.

All arrays are parameterized by adjacent-element spacing ``d`` in wavelengths
(the carrier wavelength is normalized to 1).  A uniform circular array with
``N`` elements and spacing ``d`` therefore has radius ``d / (2 sin(pi/N))``,
which grows like ``N d / (2 pi)``: growing the array keeps the aperture
expanding instead of cramming elements together.

Steering-vector conventions (element index n = 0..N-1, m = 0..N_c-1):

* circle, in-plane sources:        exp(j 2 pi R cos(phi - 2 pi n / N))
* circle, elevated sources:        exp(j 2 pi R sin(theta) cos(phi - 2 pi n/N))
* vertical line (z-axis):          exp(j 2 pi m d_v cos(theta))
* cylinder (circle x line):        Kronecker product of the two factors

theta is measured from the vertical axis, so theta = pi/2 is the horizontal
plane and the elevated-source vector reduces to the in-plane one there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "AngleOfArrival",
    "UcaGeometry",
    "UlaGeometry",
    "UclaGeometry",
    "uca_radius",
    "steering_uca_2d",
    "steering_uca_3d",
    "steering_ula_vertical",
    "steering_ucla",
]

TWO_PI = 2.0 * math.pi


def _check_finite(name: str, v) -> float:
    v = float(v)
    if not math.isfinite(v):
        raise ValueError(f"{name} must be finite, got {v!r}")
    return v


@dataclass(frozen=True)
class AngleOfArrival:
    """Azimuth/elevation pair in radians.

    Azimuth is normalized into [0, 2*pi); elevation is measured from the
    vertical axis and must lie in [0, pi].  The default elevation pi/2 puts
    the source in the array plane, so planar problems can ignore the field.
    """

    azimuth: float
    elevation: float = math.pi / 2.0

    def __post_init__(self):
        az = _check_finite("azimuth", self.azimuth) % TWO_PI
        el = _check_finite("elevation", self.elevation)
        if not 0.0 <= el <= math.pi:
            raise ValueError(f"elevation must be in [0, pi], got {el!r}")
        object.__setattr__(self, "azimuth", az)
        object.__setattr__(self, "elevation", el)

    @classmethod
    def from_degrees(cls, azimuth_deg, elevation_deg=90.0) -> "AngleOfArrival":
        return cls(math.radians(azimuth_deg), math.radians(elevation_deg))


@dataclass(frozen=True)
class UcaGeometry:
    """Uniform circular array: n_elements on a circle, spacing d wavelengths."""

    n_elements: int
    spacing: float

    def __post_init__(self):
        if not isinstance(self.n_elements, int) or self.n_elements < 2:
            raise ValueError(f"n_elements must be an int >= 2, got {self.n_elements!r}")
        d = _check_finite("spacing", self.spacing)
        if d <= 0.0:
            raise ValueError(f"spacing must be > 0, got {d!r}")
        object.__setattr__(self, "spacing", d)

    @property
    def radius(self) -> float:
        return uca_radius(self)


@dataclass(frozen=True)
class UlaGeometry:
    """Uniform linear array along the vertical axis."""

    n_elements: int
    spacing: float

    def __post_init__(self):
        if not isinstance(self.n_elements, int) or self.n_elements < 1:
            raise ValueError(f"n_elements must be an int >= 1, got {self.n_elements!r}")
        d = _check_finite("spacing", self.spacing)
        if d <= 0.0:
            raise ValueError(f"spacing must be > 0, got {d!r}")
        object.__setattr__(self, "spacing", d)


@dataclass(frozen=True)
class UclaGeometry:
    """Cylinder: a circular array replicated along a vertical line.

    Element (n, m) sits at circle position n, height m*d_v; the steering
    vector is the Kronecker product circle-factor (x) line-factor, which is
    what makes per-factor leakage analysis possible.
    """

    uca: UcaGeometry
    ula: UlaGeometry

    def __post_init__(self):
        if not isinstance(self.uca, UcaGeometry):
            raise ValueError("uca must be a UcaGeometry")
        if not isinstance(self.ula, UlaGeometry):
            raise ValueError("ula must be a UlaGeometry")

    @property
    def n_total(self) -> int:
        return self.uca.n_elements * self.ula.n_elements


def uca_radius(geometry: UcaGeometry) -> float:
    """Circle radius (wavelengths) giving adjacent-element spacing d.

    R = d / (2 sin(pi/N)); sandwiched by N*d/(2*pi) <= R <= N*d/4 for N >= 2.
    """
    n = geometry.n_elements
    return geometry.spacing / (2.0 * math.sin(math.pi / n))


def _element_angles(n: int) -> np.ndarray:
    return TWO_PI * np.arange(n) / n


def steering_uca_2d(geometry: UcaGeometry, azimuth: float) -> np.ndarray:
    """Unit-modulus steering vector for an in-plane source at the azimuth."""
    azimuth = _check_finite("azimuth", azimuth)
    r = uca_radius(geometry)
    phases = TWO_PI * r * np.cos(azimuth - _element_angles(geometry.n_elements))
    return np.exp(1j * phases)


def steering_uca_3d(geometry: UcaGeometry, aoa: AngleOfArrival) -> np.ndarray:
    """Steering vector for a source at (azimuth, elevation).

    Reduces to the in-plane vector at elevation pi/2; collapses to all-ones
    on the vertical axis (sin(theta) = 0), where the circle cannot resolve
    azimuth at all.
    """
    r = uca_radius(geometry)
    proj = math.sin(aoa.elevation)  # aperture seen by an elevated source
    phases = TWO_PI * r * proj * np.cos(aoa.azimuth - _element_angles(geometry.n_elements))
    return np.exp(1j * phases)


def steering_ula_vertical(geometry: UlaGeometry, elevation: float) -> np.ndarray:
    """Steering vector of the vertical line; depends on elevation only."""
    elevation = _check_finite("elevation", elevation)
    if not 0.0 <= elevation <= math.pi:
        raise ValueError(f"elevation must be in [0, pi], got {elevation!r}")
    m = np.arange(geometry.n_elements)
    return np.exp(1j * TWO_PI * geometry.spacing * math.cos(elevation) * m)


def steering_ucla(geometry: UclaGeometry, aoa: AngleOfArrival) -> np.ndarray:
    """Cylindrical steering vector: kron(circle factor, vertical factor)."""
    h_h = steering_uca_3d(geometry.uca, aoa)
    h_v = steering_ula_vertical(geometry.ula, aoa.elevation)
    return np.kron(h_h, h_v)

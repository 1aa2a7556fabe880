"""Continuous entropies and information energy of sampled radial densities.

Densities are spherically symmetric and normalized to one with the measure
``4 pi r**2 dr``. Integrals use the composite trapezoid rule on the caller's
grid, without resampling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

SPACES = ("position", "momentum")

NORMALIZATION_TOLERANCE = 1e-3


def _radial_integral(radii: np.ndarray, integrand: np.ndarray) -> float:
    return 4.0 * math.pi * float(np.trapezoid(integrand * radii**2, radii))


def _xlogx(values: np.ndarray) -> np.ndarray:
    out = np.zeros_like(values)
    mask = values > 0
    out[mask] = values[mask] * np.log(values[mask])
    return out


@dataclass(frozen=True, eq=False)
class RadialDensity:
    """Samples ``rho(r_i)`` of a spherically symmetric density.

    Parameters
    ----------
    radii : array_like
        Strictly increasing, non-negative grid.
    values : array_like
        Non-negative density samples on ``radii``.
    space : {"position", "momentum"}
    tolerance : float
        Allowed deviation of ``4 pi int rho r^2 dr`` from 1.
    """

    radii: np.ndarray
    values: np.ndarray
    space: str = "position"
    tolerance: float = NORMALIZATION_TOLERANCE

    def __post_init__(self):
        r = np.array(self.radii, dtype=float)
        rho = np.array(self.values, dtype=float)
        if r.ndim != 1 or r.shape != rho.shape or r.size < 2:
            raise ValueError("radii and values must be 1D arrays of equal length >= 2")
        if self.space not in SPACES:
            raise ValueError(f"space must be one of {SPACES}, got {self.space!r}")
        if not np.all(np.isfinite(r)) or not np.all(np.isfinite(rho)):
            raise ValueError("radii and values must be finite")
        if r[0] < 0 or np.any(np.diff(r) <= 0):
            raise ValueError("radii must be non-negative and strictly increasing")
        if np.any(rho < 0):
            raise ValueError("density samples must be non-negative")
        r.flags.writeable = False
        rho.flags.writeable = False
        object.__setattr__(self, "radii", r)
        object.__setattr__(self, "values", rho)
        norm = self.normalization()
        if abs(norm - 1.0) > self.tolerance:
            raise ValueError(
                f"{self.space} density integrates to {norm:.6g}, not 1 within {self.tolerance:g}"
            )

    @classmethod
    def from_function(
        cls, radii: Sequence[float], func: Callable, space: str = "position", **kwargs
    ) -> "RadialDensity":
        r = np.asarray(radii, dtype=float)
        return cls(r, func(r), space, **kwargs)

    def normalization(self) -> float:
        return _radial_integral(self.radii, self.values)

    def scaled(self, factor: float) -> "RadialDensity":
        """The density of ``factor * r``: radii stretched, values divided by ``factor**3``."""
        if not factor > 0:
            raise ValueError("scale factor must be positive")
        return RadialDensity(
            self.radii * factor, self.values / factor**3, self.space, self.tolerance
        )


def gaussian_density(
    sigma: float, radii: Sequence[float], space: str = "position"
) -> RadialDensity:
    """Isotropic 3D Gaussian with standard deviation ``sigma`` per axis."""
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    r = np.asarray(radii, dtype=float)
    rho = (2.0 * math.pi * sigma**2) ** -1.5 * np.exp(-(r**2) / (2.0 * sigma**2))
    return RadialDensity(r, rho, space)


@dataclass(frozen=True)
class ContinuousEntropyReport:
    s_position: float
    s_momentum: float

    @property
    def s_total(self) -> float:
        return self.s_position + self.s_momentum


def differential_entropy(density: RadialDensity) -> float:
    """``-4 pi int rho ln rho r^2 dr``; samples with ``rho = 0`` contribute nothing."""
    return -_radial_integral(density.radii, _xlogx(density.values))


def total_entropy(position: RadialDensity, momentum: RadialDensity) -> ContinuousEntropyReport:
    if position.space != "position" or momentum.space != "momentum":
        raise ValueError(
            "total_entropy needs one position-space and one momentum-space density, "
            f"got {position.space!r} and {momentum.space!r}"
        )
    return ContinuousEntropyReport(differential_entropy(position), differential_entropy(momentum))


def continuous_information_energy(density: RadialDensity) -> float:
    """``4 pi int rho^2 r^2 dr``."""
    return _radial_integral(density.radii, density.values**2)


def _check_1d(x, values, tolerance):
    x = np.asarray(x, dtype=float)
    rho = np.asarray(values, dtype=float)
    if x.ndim != 1 or x.shape != rho.shape or x.size < 2 or np.any(np.diff(x) <= 0):
        raise ValueError("x must be strictly increasing and match values in length")
    if np.any(rho < 0):
        raise ValueError("density samples must be non-negative")
    norm = float(np.trapezoid(rho, x))
    if abs(norm - 1.0) > tolerance:
        raise ValueError(f"density integrates to {norm:.6g}, not 1 within {tolerance:g}")
    return x, rho


def information_energy_1d(x, values, tolerance: float = NORMALIZATION_TOLERANCE) -> float:
    """``int rho(x)^2 dx`` for a density of one variable sampled on ``x``."""
    x, rho = _check_1d(x, values, tolerance)
    return float(np.trapezoid(rho**2, x))


def differential_entropy_1d(x, values, tolerance: float = NORMALIZATION_TOLERANCE) -> float:
    x, rho = _check_1d(x, values, tolerance)
    return -float(np.trapezoid(_xlogx(rho), x))


@dataclass(frozen=True)
class LogLinearFit:
    """``S = intercept + slope * ln Z``."""

    intercept: float
    slope: float
    rms_residual: float
    point_count: int

    def __call__(self, Z):
        return self.intercept + self.slope * np.log(Z)


def fit_log_linear(points: Iterable[tuple[float, float]]) -> LogLinearFit:
    """Ordinary least squares of ``S`` against ``ln Z``."""
    pts = [(float(z), float(s)) for z, s in points]
    if any(z < 1 for z, _ in pts):
        raise ValueError("Z values must be >= 1")
    if len({z for z, _ in pts}) < 2:
        raise ValueError("a log-linear fit needs at least two distinct Z values")
    lnz = np.log([z for z, _ in pts])
    s = np.array([s for _, s in pts])
    design = np.column_stack([np.ones_like(lnz), lnz])
    (a, b), *_ = np.linalg.lstsq(design, s, rcond=None)
    residual = s - (a + b * lnz)
    return LogLinearFit(float(a), float(b), float(np.sqrt(np.mean(residual**2))), len(pts))


# --- radial density files ----------------------------------------------------


def read_radial_density(path, space: str = "position", **kwargs) -> RadialDensity:
    """Two-column ``r,rho`` CSV with a header line; ``#`` lines are comments."""
    data = np.loadtxt(path, delimiter=",", comments="#", skiprows=_header_row(path), ndmin=2)
    if data.shape[1] != 2:
        raise ValueError(f"{path}: expected two columns r,rho")
    return RadialDensity(data[:, 0], data[:, 1], space, **kwargs)


def _header_row(path) -> int:
    # Number of lines up to and including the first non-comment line.
    with open(path, encoding="utf-8") as fh:
        for i, line in enumerate(fh, 1):
            if line.strip() and not line.lstrip().startswith("#"):
                if line.strip().replace(" ", "").lower() != "r,rho":
                    raise ValueError(f"{path}:{i}: expected header 'r,rho', got {line.strip()!r}")
                return i
    raise ValueError(f"{path}: no header line")


def write_radial_density(density: RadialDensity, path, units: Optional[str] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# {density.space}-space radial density, 4 pi int rho r^2 dr = 1\n")
        if units:
            fh.write(f"# units: {units}\n")
        fh.write("r,rho\n")
        for r, rho in zip(density.radii, density.values):
            fh.write(f"{float(r)!r},{float(rho)!r}\n")

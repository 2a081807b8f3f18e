"""Sampling grids: polar interior grids and equispaced boundary quadrature."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ConfigError

__all__ = ["PolarGrid", "BoundaryQuadrature", "boundary_quadrature"]


@dataclass(frozen=True)
class PolarGrid:
    """Tensor grid r_i * exp(i theta_j) on the disk of radius r_max.

    Radii exclude 0 (the origin would repeat n_theta times); angles are
    the n_theta-th roots of unity directions.
    """

    n_r: int = 128
    n_theta: int = 256
    r_max: float = 0.995

    def __post_init__(self):
        if self.n_r < 2 or self.n_theta < 3:
            raise ConfigError("polar grid needs n_r >= 2 and n_theta >= 3")
        if not 0.0 < self.r_max < 1.0:
            raise ConfigError("r_max must lie in (0, 1)")

    @cached_property
    def radii(self) -> np.ndarray:
        return np.linspace(0.0, self.r_max, self.n_r + 1)[1:]

    @cached_property
    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.n_theta) / self.n_theta

    @cached_property
    def points(self) -> np.ndarray:
        """Flattened complex points, radius-major, shape (n_r * n_theta,)."""
        r = self.radii[:, None]
        t = self.angles[None, :]
        return (r * np.exp(1j * t)).ravel()

    @property
    def spacing(self) -> float:
        """Largest cell diameter scale: max of radial and tangential steps."""
        dr = self.r_max / self.n_r
        dt = self.r_max * (2.0 * np.pi / self.n_theta)
        return max(dr, dt)


@dataclass(frozen=True)
class BoundaryQuadrature:
    """N equispaced nodes on the unit circle with normalized arc measure.

    Weights sum to 1 (the measure dtheta / 2 pi); the periodic trapezoid
    rule, spectrally accurate for smooth boundary data.
    """

    n: int = 256

    def __post_init__(self):
        if self.n < 4:
            raise ConfigError("boundary quadrature needs n >= 4")

    @cached_property
    def theta(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.n) / self.n

    @cached_property
    def nodes(self) -> np.ndarray:
        return np.exp(1j * self.theta)

    @cached_property
    def weights(self) -> np.ndarray:
        return np.full(self.n, 1.0 / self.n)


def boundary_quadrature(n: int) -> BoundaryQuadrature:
    """Quadrature rule with enough nodes for spectral accuracy claims."""
    if n < 8:
        raise ConfigError("boundary quadrature needs at least 8 nodes")
    return BoundaryQuadrature(n)

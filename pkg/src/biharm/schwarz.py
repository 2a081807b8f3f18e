"""Growth and derivative bounds for clamped-extension self-maps.

The harmonic self-map bound (4/pi) arctan r extends to the biharmonic
setting as (4/pi) arctan r + r, with the origin derivative bound 6/pi;
both require exact hypotheses (H a harmonic self-map, u(0) = 0), so the
random test maps are built from unimodular boundary data with exact
antipodal symmetry rather than recentred afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .biharmonic import BiharmonicMap, clamped_extension
from .errors import ConfigError, ContractError, DomainError
from .grids import PolarGrid
from .harmonic import HarmonicMap, harmonic_from_boundary, heinz_bound

__all__ = [
    "BoundReport",
    "biharmonic_schwarz_bound",
    "lambda_at_zero",
    "schwarz_check",
    "heinz_check",
    "bloch_seminorm",
    "antipodal_selfmap_boundary",
    "random_selfmap",
]


@dataclass(frozen=True)
class BoundReport:
    """Outcome of a pointwise bound scan; violation <= 0 means pass."""

    bound_name: str
    max_violation: float
    witness: Optional[complex]
    hypothesis_failed: bool = False

    @property
    def passed(self) -> bool:
        return (not self.hypothesis_failed) and self.max_violation <= 0.0


def biharmonic_schwarz_bound(r):
    """(4/pi) arctan r + r, the growth bound for clamped-extension
    self-maps vanishing at the origin."""
    rr = np.asarray(r, dtype=np.float64)
    if np.any((rr < 0.0) | (rr > 1.0)):
        raise DomainError("radius must lie in [0, 1]")
    v = heinz_bound(rr) + rr
    return float(v) if np.isscalar(r) or rr.ndim == 0 else v


def lambda_at_zero(u: BiharmonicMap) -> float:
    """|u_z(0)| + |u_zbar(0)| = (3/2)(|w1'(0)| + |w2'(0)|).

    The identity holds for clamped extensions only; other companions
    are rejected rather than silently mis-measured.
    """
    if not getattr(u, "from_clamped_extension", False):
        raise ContractError(
            "origin derivative identity requires a clamped extension"
        )
    c1 = u.H.w1.coef
    c2 = u.H.w2.coef
    d1 = abs(c1[1]) if c1.size > 1 else 0.0
    d2 = abs(c2[1]) if c2.size > 1 else 0.0
    return 1.5 * (d1 + d2)


_DEFAULT_GRID = PolarGrid(n_r=64, n_theta=128, r_max=0.995)


def schwarz_check(u: BiharmonicMap, grid: PolarGrid | None = None,
                  slack: float = 1e-9) -> BoundReport:
    """Scan |u(z)| - ((4/pi) arctan |z| + |z|) over a polar grid.

    Hypotheses are verified numerically first: u must be a clamped
    extension with H(0) = 0 and |H| <= 1 + 1e-9 on the grid; failures
    flag the report instead of producing a bound verdict.
    """
    if grid is None:
        grid = _DEFAULT_GRID
    z = grid.points
    hyip_ok = getattr(u, "from_clamped_extension", False)
    if hyip_ok:
        scale = max(u.H.scale(), 1.0)
        h0 = abs(u.H.w1.coef[0] + np.conj(u.H.w2.coef[0]))
        hyip_ok = h0 <= 1e-12 * scale
    if hyip_ok:
        hvals = np.abs(u.H(z))
        hyip_ok = bool(np.max(hvals) <= 1.0 + 1e-9)
    if not hyip_ok:
        return BoundReport(
            bound_name="biharmonic-schwarz",
            max_violation=np.inf,
            witness=None,
            hypothesis_failed=True,
        )
    gap = np.abs(u(z)) - biharmonic_schwarz_bound(np.abs(z))
    k = int(np.argmax(gap))
    worst = float(gap[k])
    return BoundReport(
        bound_name="biharmonic-schwarz",
        max_violation=worst,
        witness=complex(z[k]) if worst > slack else None,
    )


def heinz_check(H: HarmonicMap, grid: PolarGrid | None = None,
                slack: float = 1e-9) -> BoundReport:
    """Scan |H(z)| - (4/pi) arctan |z| for a harmonic self-map fixing 0."""
    if grid is None:
        grid = _DEFAULT_GRID
    z = grid.points
    gap = np.abs(H(z)) - heinz_bound(np.abs(z))
    k = int(np.argmax(gap))
    worst = float(gap[k])
    return BoundReport(
        bound_name="heinz",
        max_violation=worst,
        witness=complex(z[k]) if worst > slack else None,
    )


def bloch_seminorm(u, grid: PolarGrid | None = None) -> float:
    """sup over the grid of (1-|z|^2)(|u_z| + |u_zbar|).

    Finite for every clamped-extension self-map (they are Bloch); the
    constant itself is reported, not asserted against a closed form.
    """
    if grid is None:
        grid = _DEFAULT_GRID
    if grid.r_max > 0.999:
        raise ConfigError("Bloch scan grids must stay within r <= 0.999")
    z = grid.points
    du_dz, du_dzbar = u.wirtinger(z)
    weight = 1.0 - (z.real * z.real + z.imag * z.imag)
    return float(np.max(weight * (np.abs(du_dz) + np.abs(du_dzbar))))


def antipodal_selfmap_boundary(rng: np.random.Generator, n_nodes: int = 512,
                               n_modes: int = 4, amplitude: float = 0.5):
    """Unimodular boundary samples with exact antipodal symmetry.

    f(e^{i theta}) = e^{i (theta + p(theta))} with p a random
    trigonometric polynomial of period pi (even harmonics only), so
    f(-zeta) = -f(zeta); the second half of the samples is mirrored
    from the first bitwise, making the discrete mean (and hence the
    extension's value at 0) exactly zero.
    """
    if n_nodes % 2:
        raise ConfigError("antipodal sampling needs an even node count")
    theta = 2.0 * np.pi * np.arange(n_nodes) / n_nodes
    k = 2.0 * np.arange(1, n_modes + 1)
    decay = 1.0 / (1.0 + np.arange(n_modes))
    a = amplitude * rng.uniform(-1.0, 1.0, n_modes) * decay
    b = amplitude * rng.uniform(-1.0, 1.0, n_modes) * decay
    p = (
        a[None, :] * np.cos(k[None, :] * theta[:, None])
        + b[None, :] * np.sin(k[None, :] * theta[:, None])
    ).sum(axis=1)
    f = np.exp(1j * (theta + p))
    half = n_nodes // 2
    f[half:] = -f[:half]
    return f


def random_selfmap(rng: np.random.Generator, n_nodes: int = 512,
                   n_modes: int = 4, amplitude: float = 0.5,
                   n_terms: int = 64) -> BiharmonicMap:
    """Clamped extension of a random harmonic self-map fixing the origin.

    The harmonic part is recovered from antipodal unimodular boundary
    samples by Fourier truncation; the boundary function is analytic, so
    the truncation tail is far below the bound-check slack.
    """
    f = antipodal_selfmap_boundary(rng, n_nodes, n_modes, amplitude)
    H = harmonic_from_boundary(f, n_terms=n_terms)
    return clamped_extension(H)

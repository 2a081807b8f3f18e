"""Harmonic maps H = w1 + conj(w2) with analytic w1, w2.

Construction from coefficient series or from sampled boundary data by
Poisson extension, pointwise evaluation, radial derivative, and the
Heinz self-map bound.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import _core
from .errors import AccuracyWarning, ConfigError, DomainError
from .grids import BoundaryQuadrature
from .series import AnalyticSeries

__all__ = [
    "HarmonicMap",
    "BoundaryData",
    "poisson_extend",
    "eval_harmonic",
    "radial_derivative",
    "harmonic_from_boundary",
    "heinz_bound",
]


@dataclass(frozen=True)
class HarmonicMap:
    """H(z) = w1(z) + conj(w2(z)); d/dz is w1', d/dzbar is conj(w2')."""

    w1: AnalyticSeries
    w2: AnalyticSeries

    @staticmethod
    def from_coefficients(
        w1: Sequence[complex], w2: Sequence[complex] = (0,)
    ) -> "HarmonicMap":
        return HarmonicMap(AnalyticSeries(w1), AnalyticSeries(w2))

    def __call__(self, z):
        return self.w1(z) + np.conj(self.w2(z))

    @cached_property
    def dw1(self) -> AnalyticSeries:
        return self.w1.derivative()

    @cached_property
    def dw2(self) -> AnalyticSeries:
        return self.w2.derivative()

    def dz(self, z):
        """Wirtinger d/dz: w1'(z)."""
        return self.dw1(z)

    def dzbar(self, z):
        """Wirtinger d/dzbar: conj(w2'(z))."""
        return np.conj(self.dw2(z))

    def scale(self) -> float:
        """Coefficient magnitude scale (for relative tolerances)."""
        return float(
            max(np.max(np.abs(self.w1.coef)), np.max(np.abs(self.w2.coef)))
        )

    def __neg__(self) -> "HarmonicMap":
        return HarmonicMap(
            AnalyticSeries(-self.w1.coef), AnalyticSeries(-self.w2.coef)
        )

    def __add__(self, other: "HarmonicMap") -> "HarmonicMap":
        return HarmonicMap(
            AnalyticSeries(_pad_add(self.w1.coef, other.w1.coef)),
            AnalyticSeries(_pad_add(self.w2.coef, other.w2.coef)),
        )


def _pad_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = max(a.size, b.size)
    out = np.zeros(n, dtype=np.complex128)
    out[: a.size] = a
    out[: b.size] += b
    return out


@dataclass(frozen=True)
class BoundaryData:
    """Sampled clamped-problem data on quadrature nodes.

    phi is the boundary trace, psi the normal derivative in the
    EXTERIOR convention (the solver owns the one documented sign flip).
    """

    quad: BoundaryQuadrature
    phi: np.ndarray
    psi: np.ndarray

    def __init__(self, quad: BoundaryQuadrature, phi, psi=None):
        phi = np.ascontiguousarray(phi, dtype=np.complex128)
        if psi is None:
            psi = np.zeros(quad.n, dtype=np.complex128)
        psi = np.ascontiguousarray(psi, dtype=np.complex128)
        if phi.shape != (quad.n,) or psi.shape != (quad.n,):
            raise ConfigError(
                "boundary samples must match the quadrature node count"
            )
        object.__setattr__(self, "quad", quad)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "psi", psi)


def _check_inside(z, limit: float = 1.0):
    zz = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(zz) >= limit):
        raise DomainError("point outside the open unit disk")
    return zz


def poisson_extend(data: BoundaryData, z):
    """Harmonic extension of the trace samples by the Poisson integral.

    Direct quadrature summation; spectrally accurate for smooth data but
    degrades as |z| -> 1 at fixed node count: beyond |z| = 0.999 an
    AccuracyWarning is emitted.
    """
    zz = _check_inside(z)
    if np.any(np.abs(zz) > 0.999):
        warnings.warn(
            "Poisson quadrature loses accuracy for |z| > 0.999",
            AccuracyWarning,
            stacklevel=2,
        )
    flat = _core.poisson_matvec(
        data.quad.nodes, data.quad.weights, data.phi, zz.ravel()
    )
    return complex(flat[0]) if zz.ndim == 0 else flat.reshape(zz.shape)


def eval_harmonic(H: HarmonicMap, z):
    """w1(z) + conj(w2(z)); defined for |z| < 1 (closed-disk traces use H(z))."""
    return H(_check_inside(z))


def radial_derivative(H: HarmonicMap, z):
    """r dH/dr = z*w1'(z) + conj(z*w2'(z)), the radial scaling derivative.

    Evaluated as the series sum n c_n z^n (one Horner pass per part)
    rather than as an explicit z * w1'(z) product: the companion built
    by the clamped extension carries coefficients n c_n / 2, and sharing
    the evaluation path makes the boundary identity -2h + r dH/dr = 0
    hold to the last bit, not just to rounding.
    """
    zz = np.asarray(z, dtype=np.complex128)
    s1 = AnalyticSeries(np.arange(H.w1.coef.size) * H.w1.coef)
    s2 = AnalyticSeries(np.arange(H.w2.coef.size) * H.w2.coef)
    return s1(zz) + np.conj(s2(zz))


def harmonic_from_boundary(samples, n_terms: int | None = None) -> HarmonicMap:
    """Recover a truncated HarmonicMap from equispaced boundary samples.

    Discrete Fourier coefficients: nonnegative frequencies go to w1,
    conjugated negative frequencies to w2 (w2 has no constant term).
    Truncation defaults to N//2 - 1.
    """
    f = np.ascontiguousarray(samples, dtype=np.complex128)
    n = f.size
    if n < 8:
        raise ConfigError("need at least 8 boundary samples")
    m = n // 2 - 1 if n_terms is None else int(n_terms)
    if not 1 <= m <= n // 2 - 1:
        raise ConfigError("truncation must lie in [1, N//2 - 1]")
    c = np.fft.fft(f) / n
    w1 = np.zeros(m + 1, dtype=np.complex128)
    w2 = np.zeros(m + 1, dtype=np.complex128)
    w1[1:] = c[1 : m + 1]
    w2[1:] = np.conj(c[n - 1 : n - m - 1 : -1])
    # Constant term: mean of the samples.  Data generated with exact
    # antipodal symmetry f(-zeta) = -f(zeta) has mean zero; write the
    # exact zero rather than the FFT's rounding residue so H(0) = 0
    # holds bitwise for such data.
    mean = c[0]
    w1[0] = 0.0 if _antipodal(f) else mean
    return HarmonicMap(AnalyticSeries(w1), AnalyticSeries(w2))


def _antipodal(f: np.ndarray) -> bool:
    half = f.size // 2
    return f.size % 2 == 0 and bool(np.all(f[half:] == -f[:half]))


def heinz_bound(r):
    """Harmonic self-map bound (4/pi) * arctan(r) for maps fixing the origin."""
    rr = np.asarray(r, dtype=np.float64)
    if np.any((rr < 0.0) | (rr > 1.0)):
        raise DomainError("radius must lie in [0, 1]")
    v = (4.0 / np.pi) * np.arctan(rr)
    return float(v) if np.isscalar(r) or rr.ndim == 0 else v

"""Closed-form kernels on the unit disk.

Five kernels: the Green function of the Laplacian, the biharmonic Green
function, the Poisson kernel, the harmonic compensator, and the
biharmonic Poisson kernel.  All are real-valued; the two boundary
kernels take their circle argument FIRST, matching the solver's
integral pairing.

Stability: the Green function is computed as log1p(-q) with
q = (1-|z|^2)(1-|zeta|^2) / |1-z*conj(zeta)|^2 via the identity
|1-z*conj(zeta)|^2 = |z-zeta|^2 + (1-|z|^2)(1-|zeta|^2), which keeps
full relative accuracy near the boundary where the naive form cancels.
"""

from __future__ import annotations

import numpy as np

from . import _core
from .errors import DomainError, SingularityError

__all__ = [
    "green_laplace",
    "green_biharmonic",
    "poisson_kernel",
    "harmonic_compensator",
    "biharmonic_poisson",
]

CIRCLE_TOL = 1e-12


def _as_points(x) -> np.ndarray:
    a = np.asarray(x, dtype=np.complex128)
    if not np.all(np.isfinite(a)):
        raise DomainError("kernel argument has non-finite components")
    return a


def _pair(a, b):
    """Broadcast two point sets; return flat copies, shape, scalar flag."""
    av, bv = np.broadcast_arrays(_as_points(a), _as_points(b))
    scalar = av.ndim == 0
    return (
        np.ascontiguousarray(av.ravel()),
        np.ascontiguousarray(bv.ravel()),
        av.shape,
        scalar,
    )


def _require_interior(x: np.ndarray, who: str) -> None:
    if np.any(np.abs(x) >= 1.0):
        raise DomainError(f"{who} must lie strictly inside the unit disk")


def _require_circle(x: np.ndarray) -> np.ndarray:
    """Check |x| = 1 within tolerance and renormalize onto the circle."""
    r = np.abs(x)
    if np.any(np.abs(r - 1.0) > CIRCLE_TOL):
        raise DomainError("boundary argument must lie on the unit circle")
    return x / r


def _finish(v: np.ndarray, shape, scalar: bool):
    return float(v[0]) if scalar else v.reshape(shape)


def green_laplace(z, zeta):
    """G(z, zeta) = log |(z-zeta)/(1-z*conj(zeta))|^2, nonpositive on the bidisk."""
    zf, wf, shape, scalar = _pair(z, zeta)
    _require_interior(zf, "z")
    _require_interior(wf, "zeta")
    dre = zf.real - wf.real
    dim = zf.imag - wf.imag
    d2 = dre * dre + dim * dim
    if np.any(d2 == 0.0):
        raise SingularityError("Green function is -inf on the diagonal z = zeta")
    pz = 1.0 - (zf.real * zf.real + zf.imag * zf.imag)
    pw = 1.0 - (wf.real * wf.real + wf.imag * wf.imag)
    pp = pz * pw
    g = np.log1p(-(pp / (d2 + pp)))
    return _finish(g, shape, scalar)


def green_biharmonic(z, zeta):
    """Gamma(z, zeta) = |z-zeta|^2 G(z, zeta) + (1-|z|^2)(1-|zeta|^2) > 0.

    On the diagonal the x*log(x) term vanishes in the limit, leaving
    (1-|z|^2)^2; a branch within 1e-8 of the diagonal returns that limit
    directly (the naive form loses positivity to cancellation there).
    """
    zf, wf, shape, scalar = _pair(z, zeta)
    _require_interior(zf, "z")
    _require_interior(wf, "zeta")
    v = _core.gamma_pairs(zf, wf)
    return _finish(v, shape, scalar)


def poisson_kernel(z, zeta):
    """P(z, zeta) = (1-|z|^2)/|1-conj(z)*zeta|^2 for zeta on the circle."""
    zf, wf, shape, scalar = _pair(z, zeta)
    _require_interior(zf, "z")
    wf = _require_circle(wf)
    pz = 1.0 - (zf.real * zf.real + zf.imag * zf.imag)
    d = 1.0 - np.conj(zf) * wf
    den = d.real * d.real + d.imag * d.imag
    return _finish(pz / den, shape, scalar)


def harmonic_compensator(zeta, z):
    """Hc(zeta, z) = (1-|z|^2) P(z, zeta) = (1-|z|^2)^2/|1-conj(z)*zeta|^2.

    Boundary kernel pairing with the normal-derivative data; note the
    circle argument comes first.
    """
    wf, zf, shape, scalar = _pair(zeta, z)
    _require_interior(zf, "z")
    wf = _require_circle(wf)
    pz = 1.0 - (zf.real * zf.real + zf.imag * zf.imag)
    d = 1.0 - np.conj(zf) * wf
    den = d.real * d.real + d.imag * d.imag
    return _finish(pz * pz / den, shape, scalar)


def biharmonic_poisson(zeta, z):
    """Fk(zeta, z) = (1-|z|^2)^2/(2|1-conj(z)*zeta|^2) + (1-|z|^2)^3/(2|1-conj(z)*zeta|^4).

    Boundary kernel pairing with the trace data; unit mean over the
    circle for every interior z.
    """
    wf, zf, shape, scalar = _pair(zeta, z)
    _require_interior(zf, "z")
    wf = _require_circle(wf)
    pz = 1.0 - (zf.real * zf.real + zf.imag * zf.imag)
    d = 1.0 - np.conj(zf) * wf
    den = d.real * d.real + d.imag * d.imag
    v = 0.5 * pz * pz / den + 0.5 * pz ** 3 / (den * den)
    return _finish(v, shape, scalar)

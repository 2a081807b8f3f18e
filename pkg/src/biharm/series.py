"""Analytic functions on the unit disk: truncated power series and
closed-form wrappers.

Power series are the wire format for maps (coefficient lists); closed
forms exist because radius scans push evaluation points to |z| = 0.999
where a truncated series of, say, z/(1-z) is useless.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import _core
from .errors import DomainError

__all__ = [
    "AnalyticSeries",
    "ClosedFormAnalytic",
    "as_analytic",
    "eval_series",
    "derivative_series",
]

_EDGE_TOL = 1e-12


def _check_disk(z: np.ndarray | complex) -> None:
    a = np.abs(z)
    if not np.all(np.isfinite(a)):
        raise DomainError("evaluation point is not finite")
    if np.any(a > 1.0 + _EDGE_TOL):
        raise DomainError("evaluation point outside the closed unit disk")


@dataclass(frozen=True)
class AnalyticSeries:
    """f(z) = sum_n coef[n] * z**n, truncated power series.

    Evaluation is Horner's scheme over complex128; scalars in, scalar
    out, arrays in, array out.  Points must lie in the closed disk.
    """

    coef: np.ndarray

    def __init__(self, coef: Sequence[complex] | np.ndarray):
        c = np.ascontiguousarray(coef, dtype=np.complex128)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficient array must be 1-d and non-empty")
        object.__setattr__(self, "coef", c)

    @property
    def degree(self) -> int:
        return int(self.coef.size - 1)

    def __call__(self, z):
        zz = np.asarray(z, dtype=np.complex128)
        _check_disk(zz)
        out = _core.horner(self.coef, zz.ravel()).reshape(zz.shape)
        return complex(out) if np.isscalar(z) or zz.shape == () else out

    def derivative(self) -> "AnalyticSeries":
        if self.coef.size == 1:
            return AnalyticSeries(np.zeros(1, dtype=np.complex128))
        n = np.arange(1, self.coef.size)
        return AnalyticSeries(self.coef[1:] * n)

    def __eq__(self, other) -> bool:
        return isinstance(other, AnalyticSeries) and np.array_equal(
            self.coef, other.coef
        )


@dataclass(frozen=True)
class ClosedFormAnalytic:
    """Analytic function given by callables for f, f', f''.

    Used for test families whose series truncations misbehave near the
    boundary.  Callables must accept and return complex numpy arrays.
    """

    f: Callable
    df: Callable
    d2f: Callable
    label: str = field(default="closed-form")

    def __call__(self, z):
        zz = np.asarray(z, dtype=np.complex128)
        _check_disk(zz)
        out = np.asarray(self.f(zz), dtype=np.complex128)
        return complex(out) if np.isscalar(z) or zz.shape == () else out

    def derivative(self) -> "ClosedFormAnalytic":
        return ClosedFormAnalytic(
            self.df, self.d2f, _no_third, label=self.label + "'"
        )


def _no_third(z):
    raise NotImplementedError("third derivative not provided")


def as_analytic(obj) -> AnalyticSeries | ClosedFormAnalytic:
    """Coerce a coefficient sequence or analytic object to a callable form."""
    if isinstance(obj, (AnalyticSeries, ClosedFormAnalytic)):
        return obj
    return AnalyticSeries(obj)


def eval_series(series, z):
    """Evaluate on the open disk; |z| >= 1 is rejected.

    The callable forms themselves tolerate the closed disk (boundary
    traces need |z| = 1); this wrapper is the strict-interior entry
    point.
    """
    s = as_analytic(series)
    zz = np.asarray(z, dtype=np.complex128)
    a = np.abs(zz)
    if not np.all(np.isfinite(a)):
        raise DomainError("evaluation point is not finite")
    if np.any(a >= 1.0):
        raise DomainError("eval_series requires |z| < 1")
    return s(z)


def derivative_series(series) -> AnalyticSeries | ClosedFormAnalytic:
    """Derivative of a coefficient sequence or analytic object."""
    return as_analytic(series).derivative()

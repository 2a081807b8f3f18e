"""Biharmonic maps u = H + (1-|z|^2) h with harmonic H and companion h.

Covers the clamped-extension family (companion h = half the radial
derivative of H, exactly the solutions with vanishing exterior normal
derivative), conversion to the |z|^2 A + B form, closed-form Wirtinger
derivatives and Jacobian, the boundary-integral solver for the clamped
Dirichlet problem, and boundary-trace extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _core
from .errors import DomainError
from .grids import BoundaryQuadrature
from .harmonic import BoundaryData, HarmonicMap, radial_derivative
from .series import AnalyticSeries

__all__ = [
    "BiharmonicMap",
    "WirtingerPair",
    "clamped_extension",
    "to_AB_form",
    "eval_biharmonic",
    "wirtinger",
    "jacobian",
    "solve_dirichlet",
    "boundary_trace",
]

SOLVER_RADIUS = 0.99  # fixed-N quadrature is unreliable beyond this


class WirtingerPair(NamedTuple):
    du_dz: complex
    du_dzbar: complex


@dataclass(frozen=True)
class BiharmonicMap:
    """u(z) = H(z) + (1-|z|^2) h(z).

    from_clamped_extension marks maps built by clamped_extension (their
    exterior normal derivative vanishes identically on the circle).
    max_radius restricts evaluation for maps whose series are only
    trustworthy on a subdisk.
    """

    H: HarmonicMap
    h: HarmonicMap
    from_clamped_extension: bool = False
    max_radius: float = 1.0

    def __call__(self, z):
        zz = self._checked(z)
        one_m_r2 = 1.0 - (zz.real * zz.real + zz.imag * zz.imag)
        out = self.H(zz) + one_m_r2 * self.h(zz)
        return complex(out) if zz.ndim == 0 else out

    def _checked(self, z) -> np.ndarray:
        zz = np.asarray(z, dtype=np.complex128)
        if np.any(np.abs(zz) > self.max_radius + 1e-12):
            raise DomainError(
                f"point outside this map's evaluation disk "
                f"(|z| <= {self.max_radius})"
            )
        return zz

    def wirtinger(self, z) -> tuple:
        """Closed-form (du/dz, du/dzbar); arrays in, arrays out.

        With h = p + conj(q):
          u_z    = w1'(z) + (1-|z|^2) p'(z) - conj(z) h(z)
          u_zbar = conj(w2'(z)) + (1-|z|^2) conj(q'(z)) - z h(z)
        """
        zz = self._checked(z)
        one_m_r2 = 1.0 - (zz.real * zz.real + zz.imag * zz.imag)
        hval = self.h(zz)
        du_dz = self.H.dw1(zz) + one_m_r2 * self.h.dw1(zz) - np.conj(zz) * hval
        du_dzbar = (
            np.conj(self.H.dw2(zz))
            + one_m_r2 * np.conj(self.h.dw2(zz))
            - zz * hval
        )
        return du_dz, du_dzbar

    def jacobian(self, z):
        """|u_z|^2 - |u_zbar|^2; positive where u is sense-preserving."""
        du_dz, du_dzbar = self.wirtinger(z)
        return (du_dz.real * du_dz.real + du_dz.imag * du_dz.imag) - (
            du_dzbar.real * du_dzbar.real + du_dzbar.imag * du_dzbar.imag
        )

    def scale(self) -> float:
        return max(self.H.scale(), self.h.scale())


def clamped_extension(H: HarmonicMap) -> BiharmonicMap:
    """Extend H by its clamped biharmonic companion.

    u = H + (1-|z|^2) * (1/2) * r dH/dr, realized through the analytic
    pair h = (z w1'/2, z w2'/2).  These are exactly the solutions of the
    clamped problem with trace H and zero exterior normal derivative.
    """
    n1 = np.arange(H.w1.coef.size)
    n2 = np.arange(H.w2.coef.size)
    hw1 = 0.5 * n1 * H.w1.coef
    hw2 = 0.5 * n2 * H.w2.coef
    return BiharmonicMap(
        H,
        HarmonicMap(AnalyticSeries(hw1), AnalyticSeries(hw2)),
        from_clamped_extension=True,
    )


def to_AB_form(u: BiharmonicMap) -> tuple:
    """Rewrite u = H + (1-|z|^2) h as |z|^2 A + B with A = -h, B = H + h."""
    return -u.h, u.H + u.h


def eval_biharmonic(u: BiharmonicMap, z):
    """H(z) + (1-|z|^2) h(z); the closed disk is allowed (traces)."""
    return u(z)


def wirtinger(u: BiharmonicMap, z) -> WirtingerPair:
    """Closed-form Wirtinger pair at a single point."""
    du_dz, du_dzbar = u.wirtinger(z)
    return WirtingerPair(complex(du_dz), complex(du_dzbar))


def jacobian(u: BiharmonicMap, z):
    """|u_z|^2 - |u_zbar|^2 at z (scalar or array)."""
    v = u.jacobian(z)
    return float(v) if np.isscalar(z) or getattr(v, "ndim", 0) == 0 else v


def solve_dirichlet(data: BoundaryData, z):
    """Interior values of the clamped problem from boundary data.

    u(z) = sum_k w_k [ Fk(node_k, z) phi_k - (1/2) Hc(node_k, z) psi_k ]

    with psi stored in the exterior-normal convention; the minus sign is
    the interior-to-exterior flip of the Green identity.  Evaluation is
    restricted to |z| <= 0.99 (kernel peaking defeats fixed-N quadrature
    near the circle).
    """
    zz = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(zz) > SOLVER_RADIUS):
        raise DomainError(f"solver restricted to |z| <= {SOLVER_RADIUS}")
    flat = _core.dirichlet_matvec(
        data.quad.nodes, data.quad.weights, data.phi, data.psi, zz.ravel()
    )
    return complex(flat[0]) if zz.ndim == 0 else flat.reshape(zz.shape)


def boundary_trace(u: BiharmonicMap, quad: BoundaryQuadrature) -> BoundaryData:
    """Sample the trace and exterior normal derivative on the circle.

    phi = H on the nodes; psi = -2 h + r dH/dr there.  For maps from
    clamped_extension the two companion terms cancel to exact zeros.
    """
    nodes = quad.nodes
    phi = u.H(nodes)
    psi = -2.0 * u.h(nodes) + radial_derivative(u.H, nodes)
    return BoundaryData(quad, phi, psi)

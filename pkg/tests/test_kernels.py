"""Disk kernels: Green functions, Poisson kernel, and clamped boundary kernels."""

import numpy as np
import pytest

from biharm import (
    DomainError,
    SingularityError,
    biharmonic_poisson,
    boundary_quadrature,
    green_biharmonic,
    green_laplace,
    harmonic_compensator,
    poisson_kernel,
)

RNG = np.random.default_rng(20260816)


def _interior(rng, n, r_max=0.95):
    r = r_max * np.sqrt(rng.uniform(size=n))
    t = rng.uniform(0, 2 * np.pi, size=n)
    return r * np.exp(1j * t)


def test_frozen_values():
    assert green_laplace(0.5, 0.0) == pytest.approx(-1.3862943611198906, abs=1e-15)
    assert green_biharmonic(0.5, 0.0) == pytest.approx(0.40342640972002736, abs=1e-15)
    assert poisson_kernel(0.5, 1.0) == pytest.approx(3.0, abs=1e-15)
    assert harmonic_compensator(1.0, 0.5) == pytest.approx(2.25, abs=1e-15)
    assert biharmonic_poisson(1.0, 0.5) == pytest.approx(4.5, abs=1e-15)


def test_green_laplace_sign_and_symmetry():
    z = _interior(RNG, 200)
    w = _interior(RNG, 200)
    keep = np.abs(z - w) > 1e-6
    z, w = z[keep], w[keep]
    g = green_laplace(z, w)
    assert np.all(g < 0.0)
    assert np.allclose(g, green_laplace(w, z), rtol=0, atol=1e-13)


def test_green_biharmonic_positive_and_symmetric():
    z = _interior(RNG, 500, r_max=0.999)
    w = _interior(RNG, 500, r_max=0.999)
    gam = green_biharmonic(z, w)
    assert np.all(gam > 0.0)
    assert np.allclose(gam, green_biharmonic(w, z), rtol=1e-12, atol=1e-15)


def test_green_biharmonic_diagonal_branch():
    """On the diagonal the kernel reduces to (1 - |z|^2)^2."""
    z = _interior(RNG, 50)
    gam = green_biharmonic(z, z)
    assert np.allclose(gam, (1 - np.abs(z) ** 2) ** 2, rtol=0, atol=1e-14)
    # and it is continuous there: a tiny off-diagonal step barely moves it
    eps = 1e-9
    assert np.allclose(green_biharmonic(z, z + eps), gam, atol=1e-7)


def test_green_laplace_diagonal_is_singular():
    with pytest.raises(SingularityError):
        green_laplace(0.3, 0.3)
    with pytest.raises(SingularityError):
        green_laplace(np.array([0.1, 0.3]), np.array([0.5, 0.3]))


def test_poisson_kernel_positivity_and_mean():
    quad = boundary_quadrature(4096)
    z = _interior(RNG, 100)
    P = poisson_kernel(z[:, None], quad.nodes[None, :])
    assert np.all(P > 0.0)
    means = P @ quad.weights
    assert np.max(np.abs(means - 1.0)) < 1e-10


def test_clamped_kernel_means():
    """Hc integrates to 1 - |z|^2 and Fk to 1 over the boundary."""
    quad = boundary_quadrature(4096)
    z = _interior(RNG, 100)
    hc = harmonic_compensator(quad.nodes[None, :], z[:, None])
    fk = biharmonic_poisson(quad.nodes[None, :], z[:, None])
    hc_mean = hc @ quad.weights
    fk_mean = fk @ quad.weights
    assert np.max(np.abs(hc_mean - (1 - np.abs(z) ** 2))) < 1e-10
    assert np.max(np.abs(fk_mean - 1.0)) < 1e-10


def test_kernel_relation():
    """Fk = P + Hc / (1 - |z|^2) scaled: check Fk against its closed combination."""
    z = _interior(RNG, 64)
    zeta = np.exp(1j * RNG.uniform(0, 2 * np.pi, size=64))
    fk = biharmonic_poisson(zeta, z)
    p = poisson_kernel(z, zeta)
    hc = harmonic_compensator(zeta, z)
    assert np.allclose(hc, (1 - np.abs(z) ** 2) * p, rtol=1e-13)
    assert np.all(fk > 0.0)


def test_domain_errors():
    with pytest.raises(DomainError):
        green_laplace(1.5, 0.2)
    with pytest.raises(DomainError):
        green_biharmonic(0.2, 1.0 + 0j)
    with pytest.raises(DomainError):
        poisson_kernel(0.5, 0.5)  # boundary argument off the circle
    with pytest.raises(DomainError):
        harmonic_compensator(0.5, 0.5)
    with pytest.raises(DomainError):
        biharmonic_poisson(1.0, 1.2)

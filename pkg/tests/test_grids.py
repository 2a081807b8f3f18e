"""Polar grids and boundary quadrature."""

import numpy as np
import pytest

from biharm import BoundaryQuadrature, ConfigError, PolarGrid, boundary_quadrature


def test_polar_grid_shapes():
    grid = PolarGrid(n_r=10, n_theta=16, r_max=0.9)
    assert grid.radii.shape == (10,)
    assert grid.angles.shape == (16,)
    assert grid.points.shape == (160,)
    assert grid.radii[0] > 0.0
    assert grid.radii[-1] == pytest.approx(0.9)


def test_polar_grid_points_layout():
    """Points are radius-major: first n_theta entries share the smallest radius."""
    grid = PolarGrid(n_r=4, n_theta=8, r_max=0.8)
    pts = grid.points
    first_ring = pts[:8]
    assert np.allclose(np.abs(first_ring), grid.radii[0])
    assert np.allclose(np.angle(first_ring[1]), grid.angles[1])


def test_polar_grid_invariants():
    with pytest.raises(ConfigError):
        PolarGrid(n_r=1, n_theta=16)
    with pytest.raises(ConfigError):
        PolarGrid(n_r=8, n_theta=2)
    with pytest.raises(ConfigError):
        PolarGrid(r_max=1.0)
    with pytest.raises(ConfigError):
        PolarGrid(r_max=0.0)
    with pytest.raises(ConfigError):
        PolarGrid(r_max=-0.5)


def test_polar_grid_spacing():
    grid = PolarGrid(n_r=100, n_theta=628, r_max=0.5)
    # radial step 0.005, tangential step 0.5 * 2 pi / 628 ~ 0.005003
    assert grid.spacing == pytest.approx(0.5 * 2 * np.pi / 628)


def test_quadrature_weights_normalized():
    quad = BoundaryQuadrature(n=64)
    assert quad.weights.sum() == pytest.approx(1.0, abs=1e-15)
    assert quad.nodes.shape == (64,)
    assert np.allclose(np.abs(quad.nodes), 1.0)


def test_quadrature_trapezoid_exactness():
    """Periodic trapezoid integrates e^{ik theta} exactly for |k| < n."""
    quad = boundary_quadrature(32)
    for k in (1, 5, 31):
        val = np.sum(np.exp(1j * k * quad.theta) * quad.weights)
        assert abs(val) < 1e-14
    # k = n aliases to the constant
    val = np.sum(np.exp(1j * 32 * quad.theta) * quad.weights)
    assert val == pytest.approx(1.0)


def test_quadrature_node_minimum():
    with pytest.raises(ConfigError):
        boundary_quadrature(7)
    assert boundary_quadrature(8).n == 8
    # the dataclass itself allows down to 4
    assert BoundaryQuadrature(4).n == 4
    with pytest.raises(ConfigError):
        BoundaryQuadrature(3)

"""Parity between the compiled core and the numpy fallback."""

import os
import subprocess
import sys

import numpy as np
import pytest

import biharm
import biharm._core.numpy_backend as nb

try:
    import biharm._core._speedups as sp
except ImportError:
    sp = None

needs_speedups = pytest.mark.skipif(sp is None, reason="compiled core unavailable")

RNG = np.random.default_rng(271828)


def _points(n, r=0.9):
    return r * np.sqrt(RNG.uniform(size=n)) * np.exp(1j * RNG.uniform(0, 2 * np.pi, n))


@needs_speedups
@pytest.mark.parametrize("size", [1, 2, 3, 8, 65, 1025])
def test_horner_bitwise_equality(size):
    coef = RNG.normal(size=size) + 1j * RNG.normal(size=size)
    z = _points(257, r=0.999)
    a = nb.horner(coef, z)
    b = sp.horner(coef, z)
    assert np.array_equal(a, b), f"size {size}: max dev {np.max(np.abs(a - b))}"


@needs_speedups
def test_gamma_pairs_parity():
    z = _points(4000, r=0.999)
    w = _points(4000, r=0.999)
    a = nb.gamma_pairs(z, w)
    b = sp.gamma_pairs(z, w)
    rel = np.max(np.abs(a - b) / np.maximum(np.abs(a), 1e-300))
    assert rel < 1e-11


@needs_speedups
def test_poisson_matvec_parity():
    n = 512
    theta = 2 * np.pi * np.arange(n) / n
    nodes = np.exp(1j * theta)
    weights = np.full(n, 1.0 / n)
    vals = np.exp(2j * theta) + 0.3 * np.exp(-1j * theta)
    z = _points(300)
    a = nb.poisson_matvec(nodes, weights, vals, z)
    b = sp.poisson_matvec(nodes, weights, vals, z)
    assert np.max(np.abs(a - b)) < 1e-13 * np.max(np.abs(a))


@needs_speedups
def test_dirichlet_matvec_parity():
    n = 512
    theta = 2 * np.pi * np.arange(n) / n
    nodes = np.exp(1j * theta)
    weights = np.full(n, 1.0 / n)
    phi = np.exp(1j * theta) + 0.25 * np.exp(-2j * theta)
    psi = 0.5 * np.exp(3j * theta)
    z = _points(300)
    a = nb.dirichlet_matvec(nodes, weights, phi, psi, z)
    b = sp.dirichlet_matvec(nodes, weights, phi, psi, z)
    assert np.max(np.abs(a - b)) < 1e-13 * np.max(np.abs(a))


@needs_speedups
def test_criterion_min_scan_same_argmin():
    C = RNG.normal(size=(400, 24)) + 1j * RNG.normal(size=(400, 24))
    D = RNG.normal(size=(24, 96))
    a = nb.criterion_min_scan(C, D)
    b = sp.criterion_min_scan(C, D)
    assert a[1:] == b[1:]
    assert a[0] == pytest.approx(b[0], rel=1e-12)


@needs_speedups
def test_near_pairs_set_equality():
    pts = _points(2000)
    radii = np.abs(RNG.normal(scale=0.01, size=2000))
    a = nb.near_pairs(pts, radii)
    b = sp.near_pairs(pts, radii)
    assert np.array_equal(a, b)


@needs_speedups
def test_near_pairs_empty():
    pts = np.array([0.0 + 0j, 1.0 + 0j])
    radii = np.array([1e-9, 1e-9])
    a = nb.near_pairs(pts, radii)
    b = sp.near_pairs(pts, radii)
    assert a.shape == (0, 2)
    assert np.array_equal(a, b)


def test_backend_flag_consistency():
    assert biharm.BACKEND in ("speedups", "numpy")
    assert biharm.have_speedups == (biharm.BACKEND == "speedups")


def test_pure_python_env_forces_fallback():
    env = dict(os.environ, BIHARM_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import biharm; print(biharm.BACKEND, biharm.have_speedups)"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    ).stdout.split()
    assert out == ["numpy", "False"]


@needs_speedups
def test_end_to_end_svg_identical_across_backends(tmp_path):
    """A rendered figure is byte-identical under the fallback backend."""
    script = (
        "from biharm import example2_map, render_map\n"
        "import sys\n"
        "sys.stdout.write(render_map(example2_map(4)))\n"
    )
    base = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True, check=True,
        env=dict(os.environ, BIHARM_PURE_PYTHON="0"),
    ).stdout
    pure = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True, check=True,
        env=dict(os.environ, BIHARM_PURE_PYTHON="1"),
    ).stdout
    assert base == pure

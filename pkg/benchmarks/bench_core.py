"""Timing comparison of the compiled core against the numpy fallback.

Run as: python3 benchmarks/bench_core.py [--repeat 5] [--size-scale 1.0]

Each kernel is timed over the best of `repeat` runs on identical inputs,
and the table reports both absolute times and the speedup factor.
"""

import argparse
import time

import numpy as np

import biharm._core.numpy_backend as numpy_core

try:
    import biharm._core._speedups as speedups
except ImportError:
    speedups = None


def _disk(rng, n, r=0.99):
    return r * np.sqrt(rng.uniform(size=n)) * np.exp(1j * rng.uniform(0, 2 * np.pi, n))


def build_cases(scale: float):
    rng = np.random.default_rng(1729)
    n_pts = int(20_000 * scale)
    n_nodes = 4096
    theta = 2 * np.pi * np.arange(n_nodes) / n_nodes
    nodes = np.exp(1j * theta)
    weights = np.full(n_nodes, 1.0 / n_nodes)
    phi = np.exp(1j * theta) + 0.25 * np.exp(-2j * theta)
    psi = 0.5 * np.exp(3j * theta)
    coef = rng.normal(size=1025) + 1j * rng.normal(size=1025)
    z = _disk(rng, n_pts)
    w = _disk(rng, n_pts)
    C = rng.normal(size=(int(2000 * scale), 64)) + 1j * rng.normal(size=(int(2000 * scale), 64))
    D = rng.normal(size=(64, 256))
    pts = _disk(rng, int(50_000 * scale))
    radii = np.abs(rng.normal(scale=1e-3, size=pts.size))
    return [
        ("horner deg-1024", lambda m: m.horner(coef, z)),
        ("gamma_pairs", lambda m: m.gamma_pairs(z, w)),
        ("poisson_matvec", lambda m: m.poisson_matvec(nodes, weights, phi, z[:2000])),
        ("dirichlet_matvec", lambda m: m.dirichlet_matvec(nodes, weights, phi, psi, z[:2000])),
        ("criterion_min_scan", lambda m: m.criterion_min_scan(C, D)),
        ("near_pairs", lambda m: m.near_pairs(pts, radii)),
    ]


def best_time(fn, module, repeat: int) -> float:
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(module)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--size-scale", type=float, default=1.0)
    args = parser.parse_args()

    cases = build_cases(args.size_scale)
    print(f"{'kernel':<20} {'numpy':>12} {'compiled':>12} {'speedup':>9}")
    for name, fn in cases:
        t_np = best_time(fn, numpy_core, args.repeat)
        if speedups is None:
            print(f"{name:<20} {t_np * 1e3:>10.2f}ms {'n/a':>12} {'n/a':>9}")
            continue
        t_sp = best_time(fn, speedups, args.repeat)
        print(
            f"{name:<20} {t_np * 1e3:>10.2f}ms {t_sp * 1e3:>10.2f}ms "
            f"{t_np / t_sp:>8.1f}x"
        )
    if speedups is None:
        print("compiled extension not available; showing fallback only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface.

Subcommands: kernel, solve-dirichlet, check-univalence, radius,
schwarz-verify, render, verify. Exit codes: 0 success, 1 a checked
property failed, 2 usage or configuration error, 3 numeric domain
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .biharmonic import boundary_trace, solve_dirichlet
from .errors import (
    ConfigError,
    ContractError,
    DomainError,
    SingularityError,
)
from .grids import BoundaryQuadrature, PolarGrid
from .kernels import (
    biharmonic_poisson,
    green_biharmonic,
    green_laplace,
    harmonic_compensator,
    poisson_kernel,
)
from .mapspec import load_boundary_data, load_map
from .render import RenderConfig, render_map
from .schwarz import (
    bloch_seminorm,
    lambda_at_zero,
    random_selfmap,
    schwarz_check,
)
from .univalence import (
    AnalyticClampedMap,
    analyze_univalence,
    convex_family,
    example1_map,
    example2_map,
    example3_map,
    half_plane_map,
    jacobian_radius,
    koebe_map,
    log_map,
    univalence_radius_formula,
)
from .verify import DEFAULT_SEED, SUITE_NAMES, format_report, run_suite

_KERNELS = {
    "green": "pair",
    "biharmonic-green": "pair",
    "poisson": "boundary",
    "compensator": "boundary",
    "biharmonic-poisson": "boundary",
}


def _complex_arg(text: str) -> complex:
    s = text.strip().replace(" ", "")
    try:
        return complex(s)
    except ValueError:
        pass
    if "," in s:
        a, _, b = s.partition(",")
        try:
            return complex(float(a), float(b))
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}")


def _c2l(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _emit(text: str, args) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    raw = os.environ.get("BIHARM_SEED", "")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(
                f"BIHARM_SEED must be an integer, got {raw!r}"
            ) from None
    return DEFAULT_SEED


def _load_requested_map(args):
    """Resolve --map / --example into a map object."""
    if getattr(args, "map", None):
        return load_map(_read_text(args.map))
    example = getattr(args, "example", None)
    if example is None:
        raise ConfigError("pass --map FILE or --example {1,2,3}")
    param = getattr(args, "param", None)
    if example == 1:
        return example1_map(0.5 if param is None else float(param))
    if example == 2:
        return example2_map(3 if param is None else int(param))
    return example3_map()


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_kernel(args) -> int:
    if args.mean:
        if _KERNELS[args.name] != "boundary":
            raise ConfigError(
                "--mean applies to the boundary kernels only "
                "(poisson, compensator, biharmonic-poisson)"
            )
        quad = BoundaryQuadrature(args.nodes)
        if args.name == "poisson":
            vals = poisson_kernel(args.z, quad.nodes)
        elif args.name == "compensator":
            vals = harmonic_compensator(quad.nodes, args.z)
        else:
            vals = biharmonic_poisson(quad.nodes, args.z)
        value = float(np.sum(quad.weights * vals))
        doc = {
            "kernel": args.name,
            "z": _c2l(args.z),
            "mean": value,
            "nodes": args.nodes,
        }
        text = f"mean {args.name}(., z={args.z}) = {value!r}"
    else:
        if args.zeta is None:
            raise ConfigError("pointwise evaluation needs --zeta")
        if args.name == "green":
            value = green_laplace(args.z, args.zeta)
        elif args.name == "biharmonic-green":
            value = green_biharmonic(args.z, args.zeta)
        elif args.name == "poisson":
            value = poisson_kernel(args.z, args.zeta)
        elif args.name == "compensator":
            value = harmonic_compensator(args.zeta, args.z)
        else:
            value = biharmonic_poisson(args.zeta, args.z)
        doc = {
            "kernel": args.name,
            "z": _c2l(args.z),
            "zeta": _c2l(args.zeta),
            "value": value,
        }
        text = f"{args.name}(z={args.z}, zeta={args.zeta}) = {value!r}"
    _emit(json.dumps(doc, indent=2) if args.json else text, args)
    return 0


def _cmd_solve_dirichlet(args) -> int:
    if not args.at:
        raise ConfigError("pass at least one evaluation point with --at")
    z = np.array(args.at, dtype=np.complex128)
    if args.data:
        data = load_boundary_data(_read_text(args.data))
    else:
        u = _load_requested_map(args)
        data = boundary_trace(u, BoundaryQuadrature(args.nodes))
    values = np.atleast_1d(solve_dirichlet(data, z))
    if args.json:
        doc = {
            "points": [_c2l(p) for p in z],
            "values": [_c2l(v) for v in values],
        }
        _emit(json.dumps(doc, indent=2), args)
    else:
        lines = [f"u({p}) = {v}" for p, v in zip(z, values)]
        _emit("\n".join(lines), args)
    return 0


def _cmd_check_univalence(args) -> int:
    u = _load_requested_map(args)
    r_max = args.r_max
    if r_max is None:
        r_max = min(0.995, getattr(u, "max_radius", 1.0))
    rep = analyze_univalence(u, r_max=r_max)
    doc = {
        "oracle_injective": rep.oracle_injective,
        "criterion_holds": rep.criterion_holds,
        "min_abs_S": rep.min_abs_S,
        "argmin_z": _c2l(rep.argmin[0]),
        "argmin_t": float(rep.argmin[1]),
        "r_max_tested": rep.r_max_tested,
        "note": rep.note,
        "first_collision": None,
    }
    if rep.first_collision is not None:
        pair = rep.first_collision
        doc["first_collision"] = {
            "z1": _c2l(pair.z1),
            "z2": _c2l(pair.z2),
            "u1": _c2l(pair.u1),
            "u2": _c2l(pair.u2),
            "distance": pair.distance,
        }
    if args.json:
        _emit(json.dumps(doc, indent=2), args)
    else:
        lines = [
            f"injectivity oracle (r <= {r_max}): "
            + ("injective" if rep.oracle_injective else "collision found"),
            f"series criterion: min |S| = {rep.min_abs_S:.6e} "
            + ("(holds)" if rep.criterion_holds else "(fails)"),
        ]
        if rep.first_collision is not None:
            pair = rep.first_collision
            lines.append(f"collision: u({pair.z1}) = u({pair.z2})")
        if rep.note:
            lines.append("note: " + rep.note)
        _emit("\n".join(lines), args)
    return 0 if rep.oracle_injective else 1


_NAMED_H = {
    "koebe": koebe_map,
    "halfplane": half_plane_map,
    "log": log_map,
}


def _cmd_radius(args) -> int:
    chosen = [
        x for x in (args.alpha, args.h, getattr(args, "map", None))
        if x is not None
    ]
    if len(chosen) != 1:
        raise ConfigError("pass exactly one of --alpha, --h, --map")
    if args.alpha is not None:
        value = univalence_radius_formula(args.alpha)
        label = f"univalence radius (convex of order {args.alpha})"
    else:
        if args.h is not None:
            name = args.h
            if name.startswith("convex:"):
                h = convex_family(float(name.partition(":")[2]))
            elif name in _NAMED_H:
                h = _NAMED_H[name]()
            else:
                raise ConfigError(
                    "unknown --h; use koebe, halfplane, log, or convex:ALPHA"
                )
            u = AnalyticClampedMap(h)
        else:
            u = _load_requested_map(args)
        value = jacobian_radius(u, tol=args.tol)
        label = "certified Jacobian-positivity radius"
    if args.json:
        _emit(json.dumps({"radius": value, "what": label}, indent=2), args)
    else:
        _emit(f"{label}: {value!r}", args)
    return 0


def _cmd_schwarz_verify(args) -> int:
    grid = PolarGrid(n_r=64, n_theta=128, r_max=0.995)
    if getattr(args, "map", None) or getattr(args, "example", None):
        u = _load_requested_map(args)
        rep = schwarz_check(u, grid)
        lam = lambda_at_zero(u) if u.from_clamped_extension else None
        doc = {
            "hypothesis_failed": bool(rep.hypothesis_failed),
            "max_violation": float(rep.max_violation),
            "witness": None if rep.witness is None else _c2l(rep.witness),
            "lambda_at_zero": None if lam is None else float(lam),
            "bloch_seminorm": float(bloch_seminorm(u, grid)),
            "pass": bool(
                rep.passed and (lam is None or lam <= 6 / np.pi + 1e-12)
            ),
        }
        text = (
            f"growth bound violation: {rep.max_violation:.3e} "
            f"(hypotheses {'failed' if rep.hypothesis_failed else 'ok'})"
        )
    else:
        rng = np.random.default_rng(_resolve_seed(args))
        worst = -np.inf
        lam_worst = -np.inf
        failures = 0
        for _ in range(args.count):
            u = random_selfmap(rng)
            rep = schwarz_check(u, grid)
            if rep.hypothesis_failed:
                failures += 1
                continue
            worst = max(worst, rep.max_violation)
            lam_worst = max(lam_worst, lambda_at_zero(u))
        ok = failures == 0 and worst <= 1e-9 and lam_worst <= 6 / np.pi + 1e-12
        doc = {
            "maps": args.count,
            "hypothesis_failures": failures,
            "max_violation": float(worst),
            "lambda_at_zero_max": float(lam_worst),
            "lambda_bound": 6 / np.pi,
            "pass": bool(ok),
        }
        text = (
            f"{args.count} random self-maps: worst growth violation "
            f"{worst:.3e}, worst origin derivative {lam_worst:.12f} "
            f"(bound {6 / np.pi:.12f})"
        )
    if args.json:
        _emit(json.dumps(doc, indent=2), args)
    else:
        _emit(text, args)
    return 0 if doc["pass"] else 1


def _cmd_render(args) -> int:
    u = _load_requested_map(args)
    r_max = args.r_max
    if r_max is None:
        r_max = min(0.995, getattr(u, "max_radius", 1.0))
    cfg = RenderConfig(
        n_circles=args.circles,
        n_rays=args.rays,
        samples_per_curve=args.samples,
        r_max=r_max,
    )
    _emit(render_map(u, cfg), args)
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=_resolve_seed(args))
    if args.json:
        _emit(json.dumps(report.to_dict(), indent=2), args)
    else:
        _emit(format_report(report), args)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nodes", type=int, default=4096,
                        help="boundary quadrature nodes (default 4096)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized checks "
                             "(fallback: BIHARM_SEED, then built-in)")
    common.add_argument("--out", default=None,
                        help="write output to this file instead of stdout")
    common.add_argument("--json", action="store_true",
                        help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="biharm",
        description="Biharmonic mappings of the unit disk: kernels, "
                    "clamped Dirichlet solver, univalence analysis, "
                    "bound verification, and SVG rendering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel", parents=[common],
                       help="evaluate a boundary or Green kernel")
    p.add_argument("name", choices=sorted(_KERNELS))
    p.add_argument("--z", type=_complex_arg, required=True,
                   help="interior point, e.g. '0.3+0.4j' or '0.3,0.4'")
    p.add_argument("--zeta", type=_complex_arg, default=None,
                   help="second point (on the circle for boundary kernels)")
    p.add_argument("--mean", action="store_true",
                   help="quadrature mean over the circle instead of a "
                        "pointwise value")
    p.set_defaults(fn=_cmd_kernel)

    p = sub.add_parser("solve-dirichlet", parents=[common],
                       help="evaluate the clamped-problem solution")
    p.add_argument("--data", default=None,
                   help="boundary-data JSON file ('-' for stdin)")
    p.add_argument("--map", default=None,
                   help="map-spec JSON; its boundary trace is used as data")
    p.add_argument("--example", type=int, choices=(1, 2, 3), default=None)
    p.add_argument("--param", default=None,
                   help="example parameter (alpha or n)")
    p.add_argument("--at", type=_complex_arg, action="append", default=[],
                   help="evaluation point (repeatable)")
    p.set_defaults(fn=_cmd_solve_dirichlet)

    p = sub.add_parser("check-univalence", parents=[common],
                       help="injectivity oracle plus series criterion")
    p.add_argument("--map", default=None, help="map-spec JSON file")
    p.add_argument("--example", type=int, choices=(1, 2, 3), default=None)
    p.add_argument("--param", default=None,
                   help="example parameter (alpha or n)")
    p.add_argument("--r-max", type=float, default=None,
                   help="largest tested radius (default 0.995)")
    p.set_defaults(fn=_cmd_check_univalence)

    p = sub.add_parser("radius", parents=[common],
                       help="univalence/sense-preservation radii")
    p.add_argument("--alpha", type=float, default=None,
                   help="closed-form univalence radius for convex order "
                        "alpha")
    p.add_argument("--h", default=None,
                   help="named analytic part: koebe, halfplane, log, "
                        "convex:ALPHA")
    p.add_argument("--map", default=None, help="map-spec JSON file")
    p.add_argument("--tol", type=float, default=1e-4,
                   help="bisection tolerance on the radius")
    p.set_defaults(fn=_cmd_radius)

    p = sub.add_parser("schwarz-verify", parents=[common],
                       help="growth/derivative bounds for self-maps")
    p.add_argument("--map", default=None, help="map-spec JSON file")
    p.add_argument("--example", type=int, choices=(1, 2, 3), default=None)
    p.add_argument("--param", default=None)
    p.add_argument("--count", type=int, default=50,
                   help="number of random self-maps when no map is given")
    p.set_defaults(fn=_cmd_schwarz_verify)

    p = sub.add_parser("render", parents=[common],
                       help="SVG image of the polar mesh under a map")
    p.add_argument("--map", default=None, help="map-spec JSON file")
    p.add_argument("--example", type=int, choices=(1, 2, 3), default=None)
    p.add_argument("--param", default=None,
                   help="example parameter (alpha or n)")
    p.add_argument("--circles", type=int, default=12)
    p.add_argument("--rays", type=int, default=24)
    p.add_argument("--samples", type=int, default=720)
    p.add_argument("--r-max", type=float, default=None,
                   help="outer radius (default: map's evaluable radius, "
                        "capped at 0.995)")
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("verify", parents=[common],
                       help="run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, SingularityError) as exc:
        print(f"numeric domain error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

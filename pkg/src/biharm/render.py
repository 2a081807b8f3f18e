"""Deterministic SVG rendering of disk images under biharmonic maps.

The drawing is a polar mesh: images of concentric circles and of radial
rays, sampled densely and emitted as polylines. Output is byte-stable
across runs and across the compiled/pure evaluation cores, so rendered
files can serve as regression goldens; every coordinate is formatted
through a single rounding helper and no step in the pipeline depends on
dict ordering or platform-specific float printing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DomainError

__all__ = ["RenderConfig", "render_map"]


@dataclass(frozen=True)
class RenderConfig:
    """Mesh density, canvas size, and stroke styling for `render_map`.

    The canvas height defaults to whatever preserves the image's aspect
    ratio for the given width.
    """

    n_circles: int = 12
    n_rays: int = 24
    samples_per_curve: int = 720
    r_max: float = 0.995
    width: float = 640.0
    height: float | None = None
    circle_color: str = "#004488"
    ray_color: str = "#bb5566"

    def __post_init__(self):
        if self.n_circles < 1 or self.n_rays < 1:
            raise ConfigError("need at least one circle and one ray")
        if self.samples_per_curve < 64:
            raise ConfigError("curves need at least 64 samples")
        if not 0.0 < self.r_max < 1.0:
            raise ConfigError("r_max must lie in (0, 1)")
        if self.width <= 0.0:
            raise ConfigError("width must be positive")
        if self.height is not None and self.height <= 0.0:
            raise ConfigError("height must be positive")


def _fmt(v: float) -> str:
    # round() then +0.0 folds -0.0 into 0.0 so output never depends on
    # the sign of a zero produced upstream
    return f"{round(float(v), 6) + 0.0:.6f}"


def _eval_curve(u, z: np.ndarray) -> np.ndarray:
    try:
        return u(z)
    except DomainError as exc:
        worst = complex(z[np.argmax(np.abs(z))])
        raise DomainError(
            f"render failed at mesh point {worst}: {exc}"
        ) from None


def _curves(u, config: RenderConfig):
    m = config.samples_per_curve
    curves = []
    theta = np.linspace(0.0, 2.0 * np.pi, m + 1)
    ring = np.cos(theta) + 1j * np.sin(theta)
    for i in range(1, config.n_circles + 1):
        r = config.r_max * i / config.n_circles
        curves.append((config.circle_color, _eval_curve(u, r * ring)))
    rr = np.linspace(0.0, config.r_max, m)
    for j in range(config.n_rays):
        phi = 2.0 * np.pi * j / config.n_rays
        direction = complex(np.cos(phi), np.sin(phi))
        curves.append((config.ray_color, _eval_curve(u, rr * direction)))
    return curves


def render_map(u, config: RenderConfig | None = None) -> str:
    """Return an SVG document showing the image mesh of the map `u`.

    `u` is any callable accepting a complex array; map classes from this
    package qualify. The viewport is fitted to the image with a five
    percent margin, and the vertical axis is flipped so the picture uses
    the usual mathematical orientation.
    """
    if config is None:
        config = RenderConfig()
    curves = _curves(u, config)

    xs = np.concatenate([w.real for _, w in curves])
    ys = np.concatenate([w.imag for _, w in curves])
    x0, x1 = float(np.min(xs)), float(np.max(xs))
    y0, y1 = float(np.min(ys)), float(np.max(ys))
    span_x = x1 - x0
    span_y = y1 - y0
    pad = 0.05 * max(span_x, span_y, 1e-12)
    x0 -= pad
    x1 += pad
    y0 -= pad
    y1 += pad
    span_x = x1 - x0
    span_y = y1 - y0
    if config.height is None:
        height = config.width * span_y / span_x
    else:
        height = config.height
    stroke = 0.003 * max(span_x, span_y)

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(config.width)}" height="{_fmt(height)}" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(span_x)} {_fmt(span_y)}">',
        '<g fill="none" stroke-linejoin="round" stroke-linecap="round" '
        f'stroke-width="{_fmt(stroke)}">',
    ]
    for color, w in curves:
        pts = " ".join(
            f"{_fmt(re)},{_fmt(-im)}" for re, im in zip(w.real, w.imag)
        )
        lines.append(f'<polyline stroke="{color}" points="{pts}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

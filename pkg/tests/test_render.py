"""SVG rendering: determinism, config guards, golden images."""

import pathlib

import pytest

from biharm import (
    BiharmonicMap,
    ConfigError,
    DomainError,
    HarmonicMap,
    RenderConfig,
    example2_map,
    example3_map,
    render_map,
)

GOLDEN = pathlib.Path(__file__).parent / "golden"


def test_render_is_deterministic():
    u = example2_map(3)
    assert render_map(u) == render_map(u)


def test_polyline_count_matches_config():
    svg = render_map(example2_map(2))
    assert svg.count("<polyline") == 12 + 24
    small = render_map(example2_map(2), RenderConfig(n_circles=3, n_rays=5))
    assert small.count("<polyline") == 8


def test_config_invariants():
    with pytest.raises(ConfigError):
        RenderConfig(samples_per_curve=63)
    with pytest.raises(ConfigError):
        RenderConfig(r_max=1.0)
    with pytest.raises(ConfigError):
        RenderConfig(r_max=0.0)
    with pytest.raises(ConfigError):
        RenderConfig(n_circles=0)
    with pytest.raises(ConfigError):
        RenderConfig(n_rays=0)


def test_domain_error_carries_mesh_point():
    clipped = BiharmonicMap(
        HarmonicMap.from_coefficients([0, 1]),
        HarmonicMap.from_coefficients([0.0]),
        max_radius=0.5,
    )
    with pytest.raises(DomainError, match="mesh point"):
        render_map(clipped)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 10, 11])
def test_golden_gallery(n):
    svg = render_map(example2_map(n))
    expect = (GOLDEN / f"example2_n{n}.svg").read_text()
    assert svg == expect


@pytest.mark.parametrize(
    "tag,r_max", [("025", 0.25), ("050", 0.5), ("075", 0.75), ("099", 0.99)]
)
def test_golden_log_map(tag, r_max):
    svg = render_map(example3_map(), RenderConfig(r_max=r_max))
    expect = (GOLDEN / f"example3_r{tag}.svg").read_text()
    assert svg == expect

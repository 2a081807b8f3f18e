"""Univalence machinery: ratio, series criterion, grid oracle, radii."""

import numpy as np
import pytest

from biharm import (
    AnalyticClampedMap,
    AnalyticSeries,
    CriterionInput,
    DomainError,
    HarmonicMap,
    analyze_univalence,
    clamped_extension,
    convex_family,
    criterion_scan,
    criterion_value,
    eval_biharmonic,
    example1_map,
    example2_inequality,
    example2_map,
    example3_map,
    half_plane_map,
    injectivity_oracle,
    jacobian_radius,
    koebe_map,
    univalence_radius_formula,
)
from biharm.univalence import default_t_grid, dirichlet_ratio, ratio_table


def test_dirichlet_ratio_frozen_value():
    assert dirichlet_ratio(5, 0.3) == pytest.approx(3.3753867387727032, abs=1e-15)
    # n = 1 reduces to 1 for every admissible angle
    for t in (0.1, 0.7, np.pi / 2):
        assert dirichlet_ratio(1, t) == pytest.approx(1.0)


def test_dirichlet_ratio_guards():
    with pytest.raises(DomainError):
        dirichlet_ratio(0, 0.3)
    with pytest.raises(DomainError):
        dirichlet_ratio(5, 0.0)
    with pytest.raises(DomainError):
        dirichlet_ratio(5, 2.0)


def test_ratio_table_matches_scalar():
    t = np.linspace(0.01, np.pi / 2, 50)
    tab = ratio_table(8, t)
    assert tab.shape == (8, 50)
    for n in (1, 4, 8):
        for j in (0, 20, 49):
            assert tab[n - 1, j] == dirichlet_ratio(n, t[j])
    with pytest.raises(DomainError):
        ratio_table(8, np.linspace(0.01, np.pi, 10))


def test_default_t_grid_range():
    g = default_t_grid()
    assert g.size == 256
    assert g[0] > 0.0
    assert g[-1] == pytest.approx(np.pi / 2)
    assert np.all(np.diff(g) > 0)


def test_criterion_value_frozen():
    inp = CriterionInput.from_map(example2_map(2))
    assert criterion_value(inp, 0.5, np.pi / 2) == pytest.approx(0.6875, abs=1e-15)


def test_criterion_homogeneity_is_exact():
    """Scaling both components by 2 scales S by exactly 2, bitwise."""
    inp = CriterionInput.from_map(example2_map(2))

    def scale(F, c):
        return HarmonicMap(AnalyticSeries(c * F.w1.coef), AnalyticSeries(c * F.w2.coef))

    inp2 = CriterionInput(scale(inp.F1, 2.0), scale(inp.F2, 2.0))
    z, t = 0.37 + 0.2j, 1.3
    assert criterion_value(inp2, z, t) == 2.0 * criterion_value(inp, z, t)


def test_criterion_rejects_fold_map():
    """F2 = z - conj(z) collapses horizontal lines; S vanishes."""
    fold = CriterionInput(
        HarmonicMap.from_coefficients([0.0]),
        HarmonicMap(AnalyticSeries([0, 1]), AnalyticSeries([0, -1])),
    )
    rep = criterion_scan(fold)
    assert not rep.holds
    assert rep.min_abs < rep.threshold


def test_criterion_holds_for_gallery_maps():
    for n in (2, 3):
        rep = criterion_scan(CriterionInput.from_map(example2_map(n)))
        assert rep.holds
        assert rep.min_abs > rep.threshold


def test_criterion_input_requires_vanishing_origin():
    from biharm import ContractError

    with pytest.raises(ContractError):
        CriterionInput(
            HarmonicMap.from_coefficients([1.0, 1.0]),
            HarmonicMap.from_coefficients([0.0]),
        )


def test_oracle_accepts_injective_maps():
    ident = clamped_extension(HarmonicMap.from_coefficients([0, 1]))
    rep = injectivity_oracle(ident, n_r=48, n_theta=96)
    assert rep.injective
    assert rep.first_collision is None
    rep1 = injectivity_oracle(example1_map(0.5), n_r=48, n_theta=96)
    assert rep1.injective


def test_oracle_detects_radial_fold():
    """alpha = 1 folds across r = sqrt(2/3); the witness must straddle it."""
    rep = injectivity_oracle(example1_map(1.0), n_r=64, n_theta=128)
    assert not rep.injective
    pair = rep.first_collision
    assert pair is not None
    u = example1_map(1.0)
    direct = abs(complex(u(pair.z1)) - complex(u(pair.z2)))
    assert direct < rep.value_tol
    assert abs(pair.z1 - pair.z2) > rep.domain_sep
    r_crit = np.sqrt(2.0 / 3.0)
    assert min(abs(pair.z1), abs(pair.z2)) < r_crit < max(abs(pair.z1), abs(pair.z2))


def test_oracle_is_deterministic():
    a = injectivity_oracle(example1_map(1.0), n_r=48, n_theta=96)
    b = injectivity_oracle(example1_map(1.0), n_r=48, n_theta=96)
    assert a == b


def test_radius_formula_values():
    assert univalence_radius_formula(0.0) == pytest.approx(np.sqrt(2) - 1, abs=1e-12)
    assert univalence_radius_formula(0.5) == 1.0
    assert 0.41 < univalence_radius_formula(0.25) < 1.0
    with pytest.raises(DomainError):
        univalence_radius_formula(-0.1)
    with pytest.raises(DomainError):
        univalence_radius_formula(1.0)


def test_jacobian_radius_values():
    assert jacobian_radius(AnalyticClampedMap(koebe_map())) == pytest.approx(
        0.6456853693181818, abs=1e-12
    )
    assert jacobian_radius(AnalyticClampedMap(convex_family(0.0))) == 1.0
    assert jacobian_radius(AnalyticClampedMap(convex_family(0.5))) == 1.0
    assert jacobian_radius(AnalyticClampedMap(half_plane_map())) == 1.0
    # anti-analytic input is sense-reversing everywhere: radius collapses
    anti = clamped_extension(HarmonicMap.from_coefficients([0.0], [0.0, 1.0]))
    assert jacobian_radius(anti) == 0.0


def test_example2_inequality_grid():
    r = np.arange(0.05, 1.0, 0.05)
    for n in (2, 3, 7, 50):
        assert all(example2_inequality(n, float(x)) for x in r)
    with pytest.raises(DomainError):
        example2_inequality(1, 0.5)
    with pytest.raises(DomainError):
        example2_inequality(3, 0.0)
    with pytest.raises(DomainError):
        example2_inequality(3, 1.0)


def test_analyze_univalence_discrepancy_note():
    """Gallery maps pass the circle-wise criterion yet fold radially.

    The combined report must flag that tension explicitly and side with
    the oracle.
    """
    rep = analyze_univalence(example2_map(2), n_r=64, n_theta=128)
    assert rep.criterion_holds
    assert not rep.oracle_injective
    assert rep.first_collision is not None
    assert "circle" in rep.note
    clean = analyze_univalence(example1_map(0.5), n_r=48, n_theta=96)
    assert clean.criterion_holds
    assert clean.oracle_injective
    assert clean.note == ""


def test_example3_regression_value():
    u = example3_map()
    assert eval_biharmonic(u, 0.5) == pytest.approx(1.4487943611198906, abs=1e-12)

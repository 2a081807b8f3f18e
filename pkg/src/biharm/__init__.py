"""Biharmonic mappings of the unit disk.

Kernels (Green functions and boundary kernels), a clamped Dirichlet
solver, the clamped-extension map family, univalence and
sense-preservation analysis with certified radii, Schwarz-type growth
bounds, and deterministic SVG rendering of map images.
"""

from ._core import BACKEND, have_speedups
from .biharmonic import (
    BiharmonicMap,
    WirtingerPair,
    boundary_trace,
    clamped_extension,
    eval_biharmonic,
    jacobian,
    solve_dirichlet,
    to_AB_form,
    wirtinger,
)
from .errors import (
    AccuracyWarning,
    BiharmError,
    ConfigError,
    ContractError,
    DomainError,
    SingularityError,
)
from .grids import BoundaryQuadrature, PolarGrid, boundary_quadrature
from .harmonic import (
    BoundaryData,
    HarmonicMap,
    eval_harmonic,
    harmonic_from_boundary,
    heinz_bound,
    poisson_extend,
    radial_derivative,
)
from .kernels import (
    biharmonic_poisson,
    green_biharmonic,
    green_laplace,
    harmonic_compensator,
    poisson_kernel,
)
from .mapspec import (
    dump_boundary_data,
    dump_map,
    load_boundary_data,
    load_map,
)
from .render import RenderConfig, render_map
from .schwarz import (
    BoundReport,
    biharmonic_schwarz_bound,
    bloch_seminorm,
    heinz_check,
    lambda_at_zero,
    random_selfmap,
    schwarz_check,
)
from .series import (
    AnalyticSeries,
    ClosedFormAnalytic,
    derivative_series,
    eval_series,
)
from .univalence import (
    AnalyticClampedMap,
    CollisionPair,
    CriterionInput,
    CriterionReport,
    OracleReport,
    UnivalenceReport,
    analyze_univalence,
    convex_family,
    criterion_scan,
    criterion_value,
    dirichlet_ratio,
    example1_map,
    example2_inequality,
    example2_map,
    example3_map,
    half_plane_map,
    injectivity_oracle,
    jacobian_radius,
    koebe_map,
    log_map,
    univalence_radius_formula,
)
from .verify import (
    DEFAULT_SEED,
    SUITE_NAMES,
    CheckRecord,
    VerificationReport,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyWarning",
    "AnalyticClampedMap",
    "AnalyticSeries",
    "BACKEND",
    "BiharmError",
    "BiharmonicMap",
    "BoundReport",
    "BoundaryData",
    "BoundaryQuadrature",
    "CheckRecord",
    "ClosedFormAnalytic",
    "CollisionPair",
    "ConfigError",
    "ContractError",
    "CriterionInput",
    "CriterionReport",
    "DEFAULT_SEED",
    "DomainError",
    "HarmonicMap",
    "OracleReport",
    "PolarGrid",
    "RenderConfig",
    "SUITE_NAMES",
    "SingularityError",
    "UnivalenceReport",
    "VerificationReport",
    "WirtingerPair",
    "analyze_univalence",
    "biharmonic_poisson",
    "biharmonic_schwarz_bound",
    "bloch_seminorm",
    "boundary_quadrature",
    "boundary_trace",
    "clamped_extension",
    "convex_family",
    "criterion_scan",
    "criterion_value",
    "derivative_series",
    "dirichlet_ratio",
    "dump_boundary_data",
    "dump_map",
    "eval_biharmonic",
    "eval_harmonic",
    "eval_series",
    "example1_map",
    "example2_inequality",
    "example2_map",
    "example3_map",
    "green_biharmonic",
    "green_laplace",
    "half_plane_map",
    "harmonic_compensator",
    "harmonic_from_boundary",
    "have_speedups",
    "heinz_bound",
    "heinz_check",
    "injectivity_oracle",
    "jacobian",
    "jacobian_radius",
    "koebe_map",
    "lambda_at_zero",
    "load_boundary_data",
    "load_map",
    "log_map",
    "poisson_extend",
    "poisson_kernel",
    "radial_derivative",
    "random_selfmap",
    "render_map",
    "run_suite",
    "schwarz_check",
    "solve_dirichlet",
    "to_AB_form",
    "univalence_radius_formula",
    "wirtinger",
]

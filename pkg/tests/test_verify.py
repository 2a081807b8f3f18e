"""Verification suites: determinism, composition, report formats."""

import numpy as np
import pytest

from biharm import (
    DEFAULT_SEED,
    SUITE_NAMES,
    ConfigError,
    run_suite,
)
from biharm.verify import format_report


def test_suite_names_cover_all():
    assert "all" in SUITE_NAMES
    for name in ("kernels", "dirichlet", "maxprinciple", "univalence", "radii", "schwarz"):
        assert name in SUITE_NAMES


def test_kernels_suite_passes():
    rep = run_suite("kernels")
    assert rep.passed
    assert rep.suite == "kernels"
    assert rep.seed == DEFAULT_SEED
    assert len(rep.checks) > 0
    assert all(c.passed or c.informational for c in rep.checks)


def test_seed_reproducibility():
    a = run_suite("schwarz", seed=424242)
    b = run_suite("schwarz", seed=424242)
    assert [(c.name, c.value, c.bound) for c in a.checks] == [
        (c.name, c.value, c.bound) for c in b.checks
    ]
    c = run_suite("schwarz", seed=424243)
    assert [x.value for x in a.checks] != [x.value for x in c.checks]


def test_standalone_suite_embeds_identically_in_all():
    """Records in 'all' equal the standalone runs check for check."""
    whole = run_suite("all", seed=99)
    part = run_suite("dirichlet", seed=99)
    names = {c.name for c in part.checks}
    embedded = [c for c in whole.checks if c.name in names]
    assert [(c.name, c.value, c.bound, c.passed) for c in embedded] == [
        (c.name, c.value, c.bound, c.passed) for c in part.checks
    ]


def test_report_dict_schema():
    rep = run_suite("radii")
    doc = rep.to_dict()
    assert doc["pass"] is True
    assert doc["suite"] == "radii"
    assert doc["backend"] in ("speedups", "numpy")
    assert isinstance(doc["runtime_seconds"], float)
    for check in doc["checks"]:
        assert set(check) == {"name", "value", "bound", "tol", "pass", "informational"}


def test_format_report_text():
    rep = run_suite("kernels")
    txt = format_report(rep)
    lines = txt.splitlines()
    assert lines[0].startswith("suite kernels")
    assert lines[-1].startswith("PASS")
    # one line per check plus header and footer
    assert len(lines) == len(rep.checks) + 2


def test_unknown_suite_rejected():
    with pytest.raises(ConfigError):
        run_suite("nosuch")

"""End-to-end CLI behavior through the installed console script."""

import json
import os
import pathlib
import subprocess
import sys

import numpy as np
import pytest

from biharm import RenderConfig, example2_map, render_map

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run_cli(*args, env_extra=None, expect=0):
    env = dict(os.environ)
    env.pop("BIHARM_SEED", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [sys.executable, "-c", "from biharm.cli import main; raise SystemExit(main())", *args],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == expect, (args, proc.returncode, proc.stderr)
    return proc


def test_kernel_text_output():
    proc = run_cli("kernel", "green", "--z", "0.5", "--zeta", "0")
    assert "-1.3862943611198906" in proc.stdout


def test_kernel_json_output():
    proc = run_cli("kernel", "green", "--z", "0.5", "--zeta", "0", "--json")
    doc = json.loads(proc.stdout)
    assert doc["kernel"] == "green"
    assert doc["value"] == pytest.approx(-1.3862943611198906, abs=1e-15)


def test_kernel_mean_flag():
    proc = run_cli("kernel", "poisson", "--z", "0.3+0.1j", "--mean", "--json")
    doc = json.loads(proc.stdout)
    assert doc["mean"] == pytest.approx(1.0, abs=1e-10)
    assert doc["nodes"] == 4096


def test_kernel_domain_error_exit_code():
    proc = run_cli("kernel", "green", "--z", "1.5", "--zeta", "0", expect=3)
    assert "domain" in proc.stderr.lower()


def test_solve_dirichlet_example():
    proc = run_cli(
        "solve-dirichlet", "--example", "1", "--param", "0.5", "--at", "0.3+0j", "--json"
    )
    doc = json.loads(proc.stdout)
    val = complex(*doc["values"][0])
    assert val == pytest.approx(0.4365, abs=1e-8)


def test_check_univalence_clean_map():
    proc = run_cli("check-univalence", "--example", "1", "--param", "0.5", "--json")
    doc = json.loads(proc.stdout)
    assert doc["oracle_injective"] is True
    assert doc["criterion_holds"] is True
    assert doc["note"] == ""


def test_check_univalence_fold_exit_code():
    proc = run_cli("check-univalence", "--example", "2", "--param", "2", "--json", expect=1)
    doc = json.loads(proc.stdout)
    assert doc["oracle_injective"] is False
    assert doc["criterion_holds"] is True
    assert "circle" in doc["note"]
    pair = doc["first_collision"]
    assert abs(complex(*pair["u1"]) - complex(*pair["u2"])) < 1e-6


def test_radius_formula_and_certified():
    doc = json.loads(run_cli("radius", "--alpha", "0", "--json").stdout)
    assert doc["radius"] == pytest.approx(np.sqrt(2) - 1, abs=1e-12)
    doc = json.loads(run_cli("radius", "--h", "koebe", "--json").stdout)
    assert doc["radius"] == pytest.approx(0.6456853693181818, abs=1e-9)


def test_schwarz_verify_seed_sources():
    base = run_cli("schwarz-verify", "--count", "2", "--seed", "777", "--json").stdout
    via_env = run_cli(
        "schwarz-verify", "--count", "2", "--json", env_extra={"BIHARM_SEED": "777"}
    ).stdout
    assert json.loads(base) == json.loads(via_env)
    # explicit flag wins over the environment
    flag_wins = run_cli(
        "schwarz-verify",
        "--count",
        "2",
        "--seed",
        "777",
        "--json",
        env_extra={"BIHARM_SEED": "123"},
    ).stdout
    assert json.loads(flag_wins) == json.loads(base)
    assert json.loads(base)["pass"] is True


def test_invalid_env_seed_is_usage_error():
    run_cli("schwarz-verify", "--count", "2", env_extra={"BIHARM_SEED": "bogus"}, expect=2)


def test_verify_suite_pass_and_unknown():
    proc = run_cli("verify", "kernels", "--json")
    doc = json.loads(proc.stdout)
    assert doc["pass"] is True
    assert doc["suite"] == "kernels"
    run_cli("verify", "nosuch", expect=2)


def test_render_out_matches_golden(tmp_path):
    out = tmp_path / "n2.svg"
    proc = run_cli("render", "--example", "2", "--param", "2", "--out", str(out))
    assert proc.stdout == ""
    expect = (GOLDEN / "example2_n2.svg").read_text()
    assert out.read_text() == expect


def test_render_respects_config_flags(tmp_path):
    out = tmp_path / "small.svg"
    run_cli(
        "render", "--example", "2", "--param", "3",
        "--circles", "3", "--rays", "5", "--samples", "64", "--out", str(out),
    )
    svg = out.read_text()
    expect = render_map(example2_map(3), RenderConfig(n_circles=3, n_rays=5, samples_per_curve=64))
    assert svg == expect


def test_usage_error_for_bad_flags():
    run_cli("kernel", "green", expect=2)  # --z is required
    run_cli("no-such-command", expect=2)

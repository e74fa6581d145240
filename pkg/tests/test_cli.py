"""CLI contract tests: exit codes, determinism, witness replay, emitters."""

import csv
import json
import math
import os
import subprocess
import sys

import numpy as np
import pytest

from robertson_kit.cli import main, replay_witness
from robertson_kit.radii import ConcavitySetting, phi_quadratic, phi_value
from robertson_kit.robertson import make_params


def run_cli(*argv, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [sys.executable, "-m", "robertson_kit", *argv],
        capture_output=True,
        text=True,
        env=env,
    )
    return proc


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------


def test_verify_asserted_suite_passes(tmp_path):
    out = tmp_path / "r.json"
    proc = run_cli(
        "verify", "--theorem", "2.3", "--alpha", "0", "--beta", "0",
        "--samples", "10", "--seed", "7", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    rep = json.loads(out.read_text())
    assert rep["summary"]["violated"] == 0
    assert rep["checks"][0]["status"] == "holds"


def test_verify_printed_bound_yields_finding(tmp_path):
    out = tmp_path / "r.json"
    proc = run_cli(
        "verify", "--theorem", "2.1iii", "--mode", "paper",
        "--samples", "1", "--seed", "7", "--out", str(out),
    )
    assert proc.returncode == 3, proc.stderr
    rep = json.loads(out.read_text())
    rec = rep["checks"][0]
    assert rec["status"] == "violated" and not rec["asserted"]
    assert rec["worst"]["margin"] < 0


def test_verify_usage_error_exit_2():
    proc = run_cli("verify", "--theorem", "nope")
    assert proc.returncode == 2
    proc2 = run_cli("bogus-command")
    assert proc2.returncode == 2


def test_verify_invalid_params_exit_2():
    proc = run_cli("verify", "--theorem", "2.3", "--alpha", "2.0")
    assert proc.returncode == 2


def test_classical_checks_hold(tmp_path):
    out = tmp_path / "r.json"
    proc = run_cli(
        "verify", "--theorem", "22.4", "--samples", "8", "--seed", "3",
        "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr


def test_corrected_concavity_asserted_holds(tmp_path):
    out = tmp_path / "r.json"
    proc = run_cli(
        "verify", "--theorem", "concavity", "--mode", "corrected",
        "--samples", "10", "--seed", "5", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr


def test_paper_concavity_is_finding(tmp_path):
    out = tmp_path / "r.json"
    proc = run_cli(
        "verify", "--theorem", "concavity", "--mode", "paper",
        "--samples", "10", "--seed", "5", "--out", str(out),
    )
    # the printed radius is unsound; the canonical rotation member
    # witnesses it, so this must come back as a finding
    assert proc.returncode == 3, proc.stderr
    rep = json.loads(out.read_text())
    assert rep["checks"][0]["status"] == "violated"


# ---------------------------------------------------------------------------
# determinism and replay
# ---------------------------------------------------------------------------


def _strip_timestamp(report: dict) -> dict:
    report = dict(report)
    report.pop("generated_at", None)
    return report


def test_report_determinism(tmp_path):
    args = (
        "verify", "--theorem", "2.1ii", "--alpha", "0.3", "--beta", "0.2",
        "--samples", "6", "--seed", "21",
    )
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli(*args, "--out", str(a)).returncode == 0
    assert run_cli(*args, "--out", str(b)).returncode == 0
    ra = _strip_timestamp(json.loads(a.read_text()))
    rb = _strip_timestamp(json.loads(b.read_text()))
    assert json.dumps(ra, sort_keys=True) == json.dumps(rb, sort_keys=True)


def test_parallel_map_matches_serial(tmp_path):
    args = (
        "verify", "--theorem", "2.3", "--samples", "6", "--seed", "4",
    )
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli(*args, "--out", str(a)).returncode == 0
    assert (
        run_cli(*args, "--out", str(b), env_extra={"ROBERTSON_KIT_THREADS": "4"}).returncode
        == 0
    )
    ra = _strip_timestamp(json.loads(a.read_text()))
    rb = _strip_timestamp(json.loads(b.read_text()))
    assert json.dumps(ra, sort_keys=True) == json.dumps(rb, sort_keys=True)


def test_witness_replay_within_tolerance(tmp_path):
    out = tmp_path / "r.json"
    run_cli(
        "verify", "--theorem", "2.1iii", "--mode", "paper",
        "--samples", "5", "--seed", "19", "--out", str(out),
    )
    rep = json.loads(out.read_text())
    w = rep["checks"][0]["worst"]
    assert abs(replay_witness(w) - w["margin"]) < 1e-12


def test_witness_replay_norm_check(tmp_path):
    out = tmp_path / "r.json"
    proc = run_cli(
        "verify", "--theorem", "2.4", "--alpha", "0.7853981633974483",
        "--beta", "0.25", "--samples", "5", "--seed", "7", "--out", str(out),
    )
    assert proc.returncode == 3  # printed Schwarzian bound fails off axis
    rep = json.loads(out.read_text())
    w = rep["checks"][0]["worst"]
    assert w["margin"] < 0
    assert abs(replay_witness(w) - w["margin"]) < 1e-12


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------


def test_emit_growth_with_oracles(tmp_path):
    out = tmp_path / "g.csv"
    proc = run_cli(
        "emit", "growth", "--alpha", "0", "--beta", "0",
        "--rmax", "0.9", "--step", "0.05", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    raw = out.read_bytes().decode("utf-8")
    assert "\r" not in raw
    rows = list(csv.DictReader(raw.splitlines()))
    assert rows[0].keys() == {"r", "lower", "upper", "oracle_lower", "oracle_upper"}
    for row in rows:
        assert abs(float(row["lower"]) - float(row["oracle_lower"])) < 1e-10
        assert abs(float(row["upper"]) - float(row["oracle_upper"])) < 1e-10
        r = float(row["r"])
        assert abs(float(row["upper"]) - (math.atanh(r) if r < 1 else 0)) < 1e-9


def test_emit_phi_curves(tmp_path):
    out = tmp_path / "phi.csv"
    proc = run_cli(
        "emit", "phi", "--Aco", "2", "--alpha", "0", "--beta", "0",
        "--step", "0.125", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    rows = list(csv.DictReader(out.read_text().splitlines()))
    p = make_params(0, 0)
    st = ConcavitySetting(2.0)
    cp = phi_quadratic(p, st, "paper")
    cc = phi_quadratic(p, st, "corrected")
    for row in rows:
        r = float(row["r"])
        assert abs(float(row["phi_paper"]) - phi_value(cp, r)) < 1e-9
        assert abs(float(row["phi_corrected"]) - phi_value(cc, r)) < 1e-9


def test_emit_member_roundtrip(tmp_path):
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(
        json.dumps(
            {
                "kind": "blaschke_product",
                "zeros": [[0.0, 0.0], [0.3, -0.2]],
                "rotation": [0.0, 1.0],
            }
        )
    )
    out = tmp_path / "member.json"
    proc = run_cli(
        "emit", "member", "--spec", str(spec_path), "--order", "64",
        "--alpha", "0.2", "--beta", "0.1", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    d = json.loads(out.read_text())
    from robertson_kit.robertson import generate_member, member_from_json, SchwarzSpec

    member = member_from_json(d)
    rebuilt = generate_member(
        make_params(0.2, 0.1), SchwarzSpec.from_json(d["provenance"]), order=64
    )
    assert np.array_equal(member.f.coeffs, rebuilt.f.coeffs)
    assert np.array_equal(member.f_prime.coeffs, rebuilt.f_prime.coeffs)


def test_emit_member_missing_spec_exit_2(tmp_path):
    proc = run_cli("emit", "member", "--spec", str(tmp_path / "absent.json"))
    assert proc.returncode == 2


def test_emit_norm_json():
    proc = run_cli(
        "emit", "norm", "--alpha", "0", "--beta", "0.5",
        "--variant", "disk_symmetric", "--weight", "2",
    )
    assert proc.returncode == 0, proc.stderr
    d = json.loads(proc.stdout)
    assert abs(d["value"] - 1.5) < 5e-3


# ---------------------------------------------------------------------------
# radii subcommands
# ---------------------------------------------------------------------------


def test_radii_concavity_cli():
    proc = run_cli(
        "radii", "concavity", "--alpha", "0", "--beta", "0", "--Aco", "2",
        "--mode", "both",
    )
    assert proc.returncode == 0
    d = json.loads(proc.stdout)
    assert abs(d["paper"]["value"] - 0.1270166538) < 1e-9
    assert abs(d["corrected"]["value"] - 0.1010205144) < 1e-9


def test_radii_convexity_cli_degenerate_warning():
    proc = run_cli("radii", "convexity", "--alpha", "0", "--beta", "0")
    assert proc.returncode == 0
    assert "degenerate" in proc.stderr
    d = json.loads(proc.stdout)
    assert d["degenerate"] is True


def test_radii_probe_cli():
    proc = run_cli(
        "radii", "probe", "--alpha", "0", "--beta", "0", "--Aco", "2",
        "--seed", "11", "--budget", "6000",
    )
    assert proc.returncode == 0, proc.stderr
    d = json.loads(proc.stdout)
    assert d["violation_found"]
    assert abs(d["empirical_radius"] - d["radius_corrected"]) < 5e-6
    assert d["gap_to_paper"] < 0  # the printed radius overshoots the class radius
    assert d["witness_spec"]["kind"] == "unit_constant_times_z"


def test_main_callable_in_process(tmp_path):
    # the console entry point is importable and returns exit codes directly
    out = tmp_path / "r.json"
    code = main(
        [
            "verify", "--theorem", "2.1ii", "--samples", "4", "--seed", "2",
            "--out", str(out),
        ]
    )
    assert code == 0
    assert out.exists()

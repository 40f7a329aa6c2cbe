"""End-to-end tests of the bathsim CLI binary.

Requires BATHSIM_CLI (path to the built binary) and BATHSIM_CONFIGS
(path to the reference configs); both are set by ctest.
"""

import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("BATHSIM_CLI")
CONFIGS = Path(os.environ.get("BATHSIM_CONFIGS", "configs"))

pytestmark = pytest.mark.skipif(CLI is None, reason="BATHSIM_CLI not set")


def run_cli(*args, cwd=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, cwd=cwd)


def test_check_stability_prints_limit_and_pass():
    proc = run_cli("check-stability", str(CONFIGS / "continuous_source_1d.json"))
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0].startswith("dt_stable_max_s ")
    assert lines[1].startswith("dt_config_s ")
    assert lines[-1] == "PASS"


def test_run_emits_the_three_files(tmp_path):
    out = tmp_path / "out"
    proc = run_cli("run", str(CONFIGS / "local_add_1d_short.json"), "-o", str(out))
    assert proc.returncode == 0, proc.stderr
    for name in ("snapshots.csv", "series.csv", "summary.json"):
        assert (out / name).exists()

    summary = json.loads((out / "summary.json").read_text())
    assert summary["scenario"] == "local_add_1d"
    assert summary["blowup"] is False
    assert summary["steps"] == 500
    assert abs(summary["final_mean"] - 33.0) < 1.0

    series = (out / "series.csv").read_text().splitlines()
    assert series[0] == "t_s,mean,min,max,energy_J"
    # mean column stays at the mass-weighted mean (insulated, conservative)
    first = series[1].split(",")
    assert first[0] == "0"
    assert first[1] == "33.0000"


def test_missing_config_is_a_one_line_config_error(tmp_path):
    proc = run_cli("run", str(tmp_path / "nope.json"), "-o", str(tmp_path / "o"))
    assert proc.returncode == 1
    err_lines = proc.stderr.strip().splitlines()
    assert len(err_lines) == 1
    reason = json.loads(err_lines[0])
    assert reason["error"] == "config"


def test_invalid_config_exits_1(tmp_path):
    bad = tmp_path / "bad.json"
    config = json.loads((CONFIGS / "local_add_1d_short.json").read_text())
    config["material"]["rho"] = -1.0
    bad.write_text(json.dumps(config))
    proc = run_cli("run", str(bad), "-o", str(tmp_path / "o"))
    assert proc.returncode == 1
    reason = json.loads(proc.stderr.strip())
    assert reason["error"] == "config"
    assert "material.rho" in reason["message"]


def test_unstable_dt_exits_2_without_output(tmp_path):
    cfg = json.loads((CONFIGS / "local_add_1d_short.json").read_text())
    cfg["time"]["dt_s"] = 1e9
    cfg["time"]["end_s"] = 2e9
    cfg["time"]["snapshot_s"] = 1e9
    path = tmp_path / "unstable.json"
    path.write_text(json.dumps(cfg))

    out = tmp_path / "out"
    proc = run_cli("run", str(path), "-o", str(out))
    assert proc.returncode == 2
    reason = json.loads(proc.stderr.strip())
    assert reason["error"] == "stability"
    assert not (out / "series.csv").exists()

    check = run_cli("check-stability", str(path))
    assert check.returncode == 2
    assert check.stdout.strip().splitlines()[-1] == "FAIL"


def test_allow_unstable_blowup_exits_3(tmp_path):
    cfg = json.loads((CONFIGS / "local_add_1d_short.json").read_text())
    limit = 0.02 ** 2 / (2 * (41.86 / (1000.0 * 4186.0)))  # dx^2 / (2 alpha)
    cfg["time"]["dt_s"] = 1.1 * limit
    cfg["time"]["end_s"] = 4000 * 1.1 * limit
    cfg["time"]["snapshot_s"] = cfg["time"]["end_s"]
    path = tmp_path / "blowup.json"
    path.write_text(json.dumps(cfg))

    out = tmp_path / "out"
    proc = run_cli("--allow-unstable", "run", str(path), "-o", str(out))
    assert proc.returncode == 3
    reason = json.loads(proc.stderr.strip())
    assert reason["error"] == "blowup"
    # partial output retained, flagged in the summary
    summary = json.loads((out / "summary.json").read_text())
    assert summary["blowup"] is True


def test_sweep_cli_and_parallel_determinism(tmp_path):
    args = ("sweep", str(CONFIGS / "sweep.json"), "--param", "depth",
            "--values", "0.3,0.34,0.4")
    a = run_cli(*args, "-o", str(tmp_path / "a"))
    assert a.returncode == 0, a.stderr
    b = run_cli("--parallel", *args, "-o", str(tmp_path / "b"))
    assert b.returncode == 0, b.stderr
    csv_a = (tmp_path / "a" / "sweep.csv").read_bytes()
    csv_b = (tmp_path / "b" / "sweep.csv").read_bytes()
    assert csv_a == csv_b

    rows = csv_a.decode().strip().splitlines()[1:]
    assert len(rows) == 3
    steadies = [float(r.split(",")[2]) for r in rows]
    assert steadies == sorted(steadies)


def test_run_byte_stability(tmp_path):
    args = ("run", str(CONFIGS / "surface_cooling_2d.json"))
    a = run_cli(*args, "-o", str(tmp_path / "a"))
    b = run_cli(*args, "-o", str(tmp_path / "b"))
    assert a.returncode == 0 and b.returncode == 0
    for name in ("snapshots.csv", "series.csv", "summary.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_design_cli_in_fahrenheit(tmp_path):
    out = tmp_path / "design"
    proc = run_cli("--units", "F", "design", str(CONFIGS / "design_depth.json"),
                   "--target", "101", "--tol", "0.5", "-o", str(out))
    assert proc.returncode == 0, proc.stderr
    design = json.loads((out / "design.json").read_text())
    assert abs(design["water_depth_m"] - 0.34) <= 0.02
    assert abs(design["total_depth_m"] - 0.42) <= 0.03
    assert abs(design["target_temperature"] - 101.0) < 1e-9
    assert abs(design["steady_temperature"] - 101.0) <= 0.5


def test_units_flag_converts_output(tmp_path):
    # The surface config declares F; --units C re-emits it in Celsius.
    out_f = tmp_path / "f"
    out_c = tmp_path / "c"
    assert run_cli("run", str(CONFIGS / "surface_cooling_2d.json"), "-o", str(out_f)).returncode == 0
    assert run_cli("--units", "C", "run", str(CONFIGS / "surface_cooling_2d.json"),
                   "-o", str(out_c)).returncode == 0
    first_f = float((out_f / "series.csv").read_text().splitlines()[1].split(",")[1])
    first_c = float((out_c / "series.csv").read_text().splitlines()[1].split(",")[1])
    assert abs(first_f - 88.4) < 1e-3
    assert abs(first_c - (88.4 - 32) * 5 / 9) < 1e-3

"""Smoke tests for the bathsim python module."""

import math
import os
from pathlib import Path

import pytest

bathsim = pytest.importorskip("bathsim")

CONFIGS = Path(os.environ.get("BATHSIM_CONFIGS", "configs"))


def test_version():
    assert bathsim.__version__


def test_material_and_diffusivity():
    w = bathsim.water()
    assert w.density == 1000.0
    assert math.isclose(bathsim.diffusivity(w), 0.6 / (1000.0 * 4186.0))
    with pytest.raises(ValueError):
        bathsim.Material(-1.0, 4186.0, 0.6)


def test_temperature_conversion():
    f, c = bathsim.TempUnit.Fahrenheit, bathsim.TempUnit.Celsius
    assert bathsim.convert_temperature(113.0, f, c) == pytest.approx(45.0)
    assert bathsim.convert_temperature(45.0, c, f) == pytest.approx(113.0)


def test_newton_cooling_inverts():
    spec = bathsim.NewtonCoolingSpec(initial_c=40.0, ambient_c=25.0, time_constant_s=1200.0)
    t = 3000.0
    temp = bathsim.newton_temperature(spec, t)
    assert bathsim.newton_time_to_reach(spec, temp) == pytest.approx(t, rel=1e-9)


def test_faucet_chain():
    w = bathsim.water()
    area = bathsim.pipe_area_from_diameter(0.010)
    q2 = bathsim.faucet_heat_requirement(80.0, 18.126)
    assert q2 == pytest.approx(98.126)
    assert bathsim.faucet_velocity(q2, w, 7.1, area) == pytest.approx(0.042, abs=5e-4)
    assert bathsim.water_level_rise(0.070, 0.9) == pytest.approx(0.0778, abs=5e-4)


def test_stability_limit_and_step():
    grid = bathsim.GridSpec([1.0], [10])
    m = bathsim.Material(1.0, 1.0, 1.0)
    limit = bathsim.stability_limit(m, grid)
    assert limit == pytest.approx(0.005)

    field = bathsim.TemperatureField(grid, [0.0] * 4 + [1.0] * 2 + [0.0] * 4)
    bcs = bathsim.FaceBoundaries.insulated()
    out = bathsim.step(field, m, [], bcs, 0.4 * limit)
    assert sum(out.values) == pytest.approx(sum(field.values), rel=1e-12)
    assert max(out.values) < 1.0


def test_run_conserves_energy():
    grid = bathsim.GridSpec([1.5], [32])
    w = bathsim.water()
    cfg = bathsim.SolverConfig(dt_s=200.0, end_s=100000.0, snapshot_s=50000.0)
    field = bathsim.TemperatureField(grid, [30.0 + (i % 5) for i in range(32)])
    result = bathsim.run(field, w, [], bathsim.FaceBoundaries.insulated(), cfg)
    energies = [s.energy_j for s in result.series]
    assert max(abs(e - energies[0]) / energies[0] for e in energies) <= 1e-9


def test_parse_round_trip_and_scenario():
    text = (CONFIGS / "local_add_1d_short.json").read_text()
    spec = bathsim.parse_config(text)
    again = bathsim.parse_config(bathsim.serialize_config(spec))
    assert spec == again

    result = bathsim.local_add_1d(spec)
    assert result.series[-1].mean_c == pytest.approx(33.0, abs=1e-9)
    assert not result.blew_up


def test_detect_steady_finds_constant_series():
    grid = bathsim.GridSpec([1.0], [4])
    cfg = bathsim.SolverConfig(dt_s=1.0, end_s=50.0, snapshot_s=50.0, window_s=10.0)
    field = bathsim.TemperatureField(grid, 33.0)
    result = bathsim.run(field, bathsim.water(), [], bathsim.FaceBoundaries.insulated(), cfg)
    assert result.steady is not None
    assert result.steady.temperature_c == pytest.approx(33.0)
    assert result.steady.time_s == pytest.approx(10.0)


def test_unstable_step_raises():
    grid = bathsim.GridSpec([1.0], [16])
    m = bathsim.Material(1.0, 1.0, 1.0)
    cfg = bathsim.SolverConfig(dt_s=1.0, end_s=10.0, snapshot_s=10.0)
    field = bathsim.TemperatureField(grid, 21.0)
    with pytest.raises(RuntimeError):
        bathsim.run(field, m, [], bathsim.FaceBoundaries.insulated(), cfg)

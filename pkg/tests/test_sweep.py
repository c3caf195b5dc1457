import json
import math
import pytest
from contextlib import nullcontext as does_not_raise

from interferometer.constants import METHOD_HYPERGEOMETRIC, METHOD_SQL_THRESHOLD
from interferometer.crossing import cmd_crossing
from interferometer.curve import cmd_curve, phase_grid, sensitivity_curve
from interferometer.exceptions import InvalidConfig, InvalidParameter, SweepPointFailed
from interferometer.figure import cmd_figure, figure_config, threshold_rows
from interferometer.models import DimensionlessParams, SweepConfig
from interferometer.sweep import cmd_sweep, sweep_points, sweep_rows, validate_sweep_config


def small_config(**changes) -> SweepConfig:
    values = dict(xi_min=0.0, xi_max=2.0, xi_steps=5, nus=[0.0, 1.0], mus=[0.0], n_seed=100.0)
    return SweepConfig(**(values | changes))


test_sweep_configs = [
    ({}, does_not_raise()),
    ({"xi_min": -0.1}, pytest.raises(InvalidConfig)),
    ({"xi_max": 0.0}, pytest.raises(InvalidConfig)),
    ({"xi_steps": 1}, pytest.raises(InvalidConfig)),
    ({"nus": []}, pytest.raises(InvalidConfig)),
    ({"mus": [0.0, -1.0]}, pytest.raises(InvalidConfig)),
    ({"n_seed": 0.0}, pytest.raises(InvalidConfig)),
    ({"method": "euler"}, pytest.raises(InvalidConfig)),
]


@pytest.mark.parametrize("changes,expectation", test_sweep_configs)
def test_validate_sweep_config(changes: dict, expectation) -> None:
    with expectation:
        validate_sweep_config(small_config(**changes))


def test_sweep_points_order() -> None:
    points = sweep_points(small_config(nus=[0.0, 1.0], mus=[0.0, 0.5]))

    assert len(points) == 20
    assert points[:5] == [(xi, 0.0, 0.0) for xi in (0.0, 0.5, 1.0, 1.5, 2.0)]
    assert points[5] == (0.0, 0.0, 0.5)
    assert points[10] == (0.0, 1.0, 0.0)


def test_sweep_rows() -> None:
    rows = sweep_rows(small_config(), workers=3)

    assert [(row.xi, row.nu, row.mu) for row in rows] == sweep_points(small_config())

    assert math.isinf(rows[0].rho) and math.isinf(rows[0].dphi_min_times_sqrt_ns)
    assert rows[0].g0_per_photon == 1.0
    assert rows[1].rho == pytest.approx(0.4603369, abs=1e-7)
    assert rows[6].method == METHOD_HYPERGEOMETRIC


def test_sweep_row_count() -> None:
    config = SweepConfig(xi_min=0.0, xi_max=2.0, xi_steps=200, nus=[0.0, 1.0], mus=[0.0], n_seed=1.0)
    assert len(sweep_rows(config)) == 400


def test_sweep_failure_names_the_point(mocker) -> None:
    mocker.patch("interferometer.sweep.evaluate", side_effect=InvalidParameter("xi", 1.0))
    with pytest.raises(SweepPointFailed) as err:
        sweep_rows(small_config(), workers=2)

    assert (err.value.xi, err.value.nu, err.value.mu) == (0.0, 0.0, 0.0)
    assert isinstance(err.value.error, InvalidParameter)


def test_sweep_output_is_reproducible(tmp_path) -> None:
    first, second = tmp_path / "first" / "sweep.csv", tmp_path / "second.csv"
    cmd_sweep(small_config(out=str(first)), workers=1)
    cmd_sweep(small_config(out=str(second)), workers=4)

    lines = first.read_text(encoding="utf8").splitlines()
    assert first.read_bytes() == second.read_bytes()
    assert lines[0].startswith("xi,nu,mu,")
    assert len(lines) == 11
    assert lines[1] == "0.0,0.0,0.0,1.0,0.0,inf,inf,closed-form"


def test_sweep_prints_without_out(capsys) -> None:
    cmd_sweep(small_config(nus=[0.0]), workers=1)
    lines = [line for line in capsys.readouterr().out.splitlines() if line.startswith(("xi,", "0.", "1.", "2."))]
    assert lines[0].startswith("xi,")
    assert len(lines) == 6


def test_figure_config() -> None:
    nu_family = figure_config("nu")
    mu_family = figure_config("mu")

    assert nu_family.nus == [0.0, 0.25, 0.5, 1.0, 2.0] and nu_family.mus == [0.0]
    assert mu_family.mus == [0.0, 0.25, 0.5, 1.0, 2.0] and mu_family.nus == [0.0]
    with pytest.raises(InvalidConfig):
        figure_config("pump")


def test_threshold_rows() -> None:
    rows = threshold_rows(0.0, 2.0)
    assert [row.xi for row in rows] == [0.0, 2.0]
    assert all(row.rho == 1.0 and row.method == METHOD_SQL_THRESHOLD for row in rows)


def test_cmd_figure(mocker, tmp_path) -> None:
    mocker.patch("interferometer.figure.FIGURE_XI_RANGE", (0.0, 2.0, 5))
    out = tmp_path / "figure_nu.csv"
    rows = cmd_figure("nu", str(out), workers=2)

    lines = out.read_text(encoding="utf8").splitlines()
    assert len(rows) == 5 * 5 + 2
    assert len(lines) == len(rows) + 1
    assert lines[-1] == "2.0,nan,nan,nan,nan,1.0,1.0,sql-threshold"


test_phase_grids = [
    (2, [0.0, math.pi]),
    (4, [-math.pi / 2, 0.0, math.pi / 2, math.pi]),
]


@pytest.mark.parametrize("steps,expected", test_phase_grids)
def test_phase_grid(steps: int, expected: list[float]) -> None:
    assert phase_grid(steps) == pytest.approx(expected, abs=1e-15)


def test_phase_grid_needs_two_steps() -> None:
    with pytest.raises(InvalidParameter):
        phase_grid(1)


def test_sensitivity_curve_marks_singular_phases() -> None:
    params = DimensionlessParams(xi=0.5, nu=0.0, mu=0.0, n_seed=100.0, pump_phase_2=math.pi / 2)
    curve = dict(sensitivity_curve(params, 8))

    assert math.isinf(curve[phase_grid(8)[4]])
    assert curve[0.0] == pytest.approx(2.1191e-3, rel=1e-4)
    # phi0 = pi / 4 + k pi / 2 has no fringe slope
    assert sum(math.isinf(value) for value in curve.values()) == 4


def test_sensitivity_curve_needs_squeezing() -> None:
    with pytest.raises(InvalidParameter):
        sensitivity_curve(DimensionlessParams(xi=0.0, nu=0.0, mu=0.0, n_seed=1.0), 8)


def test_cmd_curve(tmp_path) -> None:
    params = DimensionlessParams(xi=0.5, nu=1.0, mu=0.0, n_seed=4.0, pump_phase_2=math.pi / 2)
    out = tmp_path / "curve.csv"
    cmd_curve(params, 12, str(out))

    lines = out.read_text(encoding="utf8").splitlines()
    assert lines[0] == "phi0,dphi0_sq"
    assert len(lines) == 13


def test_cmd_crossing_report(capsys) -> None:
    report = cmd_crossing(0.0, 0.0)

    assert report["xi_star"] == pytest.approx(math.log(2) / 2, abs=1e-6)
    assert report["penalty"] == pytest.approx(1.0)
    assert "SQL CROSSING" in capsys.readouterr().out


def test_cmd_crossing_json(capsys) -> None:
    report = cmd_crossing(1.0, 0.0, as_json=True)
    printed = json.loads(capsys.readouterr().out)

    assert printed["penalty"] == pytest.approx(1.405, abs=1e-3)
    assert printed == json.loads(json.dumps(report))

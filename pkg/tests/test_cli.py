import json
import pytest

import main
from interferometer.arguments import argparse_setup, collect_settings
from interferometer.constants import EXIT_INVALID_CONFIG, EXIT_NOT_CONVERGED, EXIT_OK, EXIT_ORACLE_FAILURE
from interferometer.exceptions import (
    GridMismatch,
    InvalidConfig,
    InvalidParameter,
    NoCrossing,
    NumericOverflow,
    SeriesNotConverged,
    SweepPointFailed,
    ZeroSignal,
)

test_valid_arguments = [
    (["sweep", "--xi-min", "0", "--xi-max", "2", "--nu", "0", "1"], "nus", [0.0, 1.0]),
    (["sweep", "--method", "raw-series", "--workers", "2"], "method", "raw-series"),
    (["crossing", "--nu", "1"], "nu", 1.0),
    (["figure", "mu"], "figure_id", "mu"),
    (["curve", "--xi", "0.5", "--phi0-steps", "36"], "phi0_steps", 36),
    (["oracle", "--xi", "0.5", "--grid", "16", "--n-max", "4"], "n_points", 16),
]


@pytest.mark.parametrize("argv,dest,expected", test_valid_arguments)
def test_argparse_setup(argv: list[str], dest: str, expected) -> None:
    args = argparse_setup(argv)
    assert args.command == argv[0]
    assert getattr(args, dest) == expected


test_invalid_arguments = [
    [],
    ["sweep", "--xi-steps", "1"],
    ["sweep", "--workers", "0"],
    ["sweep", "--method", "newton"],
    ["figure", "pump"],
    ["curve", "--phi0-steps", "1"],
    ["oracle", "--grid", "4"],
    ["oracle", "--n-max", "0"],
]


@pytest.mark.parametrize("argv", test_invalid_arguments)
def test_argparse_setup_rejects(argv: list[str]) -> None:
    with pytest.raises(SystemExit) as err:
        argparse_setup(argv)
    assert err.value.code == EXIT_INVALID_CONFIG


def test_collect_settings_flags_override_config(tmp_path) -> None:
    path = tmp_path / "point.json"
    path.write_text(json.dumps({"xi": 0.3, "nu": 1.0, "n_seed": 10.0}), encoding="utf8")

    settings = collect_settings(argparse_setup(["curve", "--config", str(path), "--xi", "0.5", "--json"]))

    assert settings == {"xi": 0.5, "nu": 1.0, "n_seed": 10.0}


def test_sweep_config_from_settings() -> None:
    config = main.sweep_config_from({"xi_max": 1.0, "xi_steps": 3, "nus": [0, 1]})

    assert config.xi_values() == [0.0, 0.5, 1.0]
    assert config.nus == [0.0, 1.0] and config.mus == [0.0]
    with pytest.raises(InvalidConfig):
        main.sweep_config_from({"xi_steps": "many"})


test_exit_codes = [
    (InvalidConfig("xi", "bad"), EXIT_INVALID_CONFIG),
    (ZeroSignal(), EXIT_INVALID_CONFIG),
    (SeriesNotConverged("hyp_1f2", 200), EXIT_NOT_CONVERGED),
    (NoCrossing(1.0, 0.0, 40.0), EXIT_NOT_CONVERGED),
    (GridMismatch(), EXIT_ORACLE_FAILURE),
    (NumericOverflow("closed-form", 800.0), EXIT_NOT_CONVERGED),
    (SweepPointFailed(1.0, 0.0, 0.0, SeriesNotConverged("hyp_1f2", 200)), EXIT_NOT_CONVERGED),
    (SweepPointFailed(1.0, 0.0, 0.0, InvalidParameter("xi", 1.0)), EXIT_INVALID_CONFIG),
]


@pytest.mark.parametrize("err,code", test_exit_codes)
def test_exit_code_for(err: Exception, code: int) -> None:
    assert main.exit_code_for(err) == code


def test_exit_code_for_unknown_error() -> None:
    with pytest.raises(KeyError):
        main.exit_code_for(KeyError("xi"))


def test_main_crossing(capsys) -> None:
    assert main.main(["crossing", "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["penalty"] == pytest.approx(1.0)


def test_main_invalid_point(capsys) -> None:
    assert main.main(["curve", "--xi", "0"]) == EXIT_INVALID_CONFIG
    assert "Error" in capsys.readouterr().err


def test_main_invalid_sweep() -> None:
    assert main.main(["sweep", "--xi-min", "1", "--xi-max", "0.5"]) == EXIT_INVALID_CONFIG


test_failing_sweeps = [
    (["--nu", "0", "--xi-max", "800"], "xi=800.0, nu=0.0, mu=0.0", "overflows"),
    (["--nu", "1", "--xi-max", "300"], "xi=300.0, nu=1.0, mu=0.0", "did not converge"),
]


@pytest.mark.parametrize("flags,point,reason", test_failing_sweeps)
def test_main_sweep_reports_failing_point(capsys, flags: list[str], point: str, reason: str) -> None:
    argv = ["sweep", "--xi-min", "0", "--xi-steps", "2", "--mu", "0", *flags]

    assert main.main(argv) == EXIT_NOT_CONVERGED
    err = capsys.readouterr().err
    assert point in err
    assert reason in err


def test_main_no_crossing(mocker) -> None:
    mocker.patch("interferometer.sensitivity.Config.get_crossing_bracket", return_value=(1e-3, 0.01, 0.02))
    assert main.main(["crossing", "--nu", "1"]) == EXIT_NOT_CONVERGED


def test_main_curve_writes_file(tmp_path) -> None:
    out = tmp_path / "curve.csv"
    argv = ["curve", "--xi", "0.5", "--pump-phase-2", "1.5707963267948966", "--phi0-steps", "8", "--out", str(out)]

    assert main.main(argv) == EXIT_OK
    assert len(out.read_text(encoding="utf8").splitlines()) == 9


def test_main_oracle_passes(tmp_path) -> None:
    out = tmp_path / "oracle.json"
    argv = ["oracle", "--xi", "0.5", "--grid", "8", "--extent", "3", "--n-max", "4", "--out", str(out), "--json"]

    assert main.main(argv) == EXIT_OK
    report = json.loads(out.read_text(encoding="utf8"))
    assert report["passed"] is True
    assert report["residuals"]["purity"] is not None
    assert [entry["n_max"] for entry in report["convergence"]] == [2, 4]


def test_main_oracle_failure_still_writes_report(tmp_path) -> None:
    out = tmp_path / "nested" / "oracle.json"
    # an eight point grid cannot resolve the seed envelope
    argv = ["oracle", "--xi", "0.5", "--nu", "1", "--grid", "8", "--extent", "3", "--n-max", "2", "--out", str(out)]

    assert main.main(argv) == EXIT_ORACLE_FAILURE
    report = json.loads(out.read_text(encoding="utf8"))
    assert report["passed"] is False
    assert "quadrature" in report["failed"]

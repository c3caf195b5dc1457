import logging.config
import logging
import sys
import alive_progress
import interferometer
from interferometer.constants import (
    EXIT_INVALID_CONFIG,
    EXIT_NOT_CONVERGED,
    EXIT_OK,
    EXIT_ORACLE_FAILURE,
    FIGURE_XI_RANGE,
)
from interferometer.exceptions import (
    GridMismatch,
    IllConditionedKernel,
    InvalidConfig,
    InvalidGrid,
    InvalidParameter,
    NoCrossing,
    NumericOverflow,
    OracleToleranceFailure,
    SeriesNotConverged,
    SingularPhase,
    SweepPointFailed,
    UnsupportedOrder,
    ZeroSignal,
)
from interferometer.models import SweepConfig

alive_progress.config_handler.set_global(ctrl_c=False, dual_line=True, theme="classic", stats=False)

DEFAULT_PHI0_STEPS = 72

EXIT_CODES = (
    ((InvalidParameter, InvalidConfig, InvalidGrid, UnsupportedOrder, SingularPhase, ZeroSignal), EXIT_INVALID_CONFIG),
    ((SeriesNotConverged, NoCrossing, NumericOverflow), EXIT_NOT_CONVERGED),
    ((OracleToleranceFailure, GridMismatch, IllConditionedKernel), EXIT_ORACLE_FAILURE),
)


def main(argv: list[str] | None = None) -> int:
    args = interferometer.argparse_setup(argv)

    try:
        run(args)
    except (SweepPointFailed, *(error for errors, _ in EXIT_CODES for error in errors)) as err:
        logging.getLogger(__name__).error(f"{args.command} failed: {err}")
        print(f"Error: {err}", file=sys.stderr)
        return exit_code_for(err)

    return EXIT_OK


def exit_code_for(err: Exception) -> int:
    if isinstance(err, SweepPointFailed):
        return exit_code_for(err.error)

    for errors, code in EXIT_CODES:
        if isinstance(err, errors):
            return code
    raise err


def run(args) -> None:
    settings = interferometer.collect_settings(args)

    if args.command == "sweep":
        interferometer.cmd_sweep(sweep_config_from(settings), args.workers)

    if args.command == "crossing":
        interferometer.cmd_crossing(float(settings.get("nu", 0.0)), float(settings.get("mu", 0.0)), args.json)

    if args.command == "figure":
        interferometer.cmd_figure(args.figure_id, settings.get("out"), args.workers)

    if args.command == "curve":
        params = interferometer.params_from_mapping(point_settings(settings))
        interferometer.cmd_curve(params, int(settings.get("phi0_steps", DEFAULT_PHI0_STEPS)), settings.get("out"))

    if args.command == "oracle":
        params = interferometer.params_from_mapping(point_settings(settings))
        interferometer.cmd_oracle(
            params,
            settings.get("n_points"),
            settings.get("extent"),
            settings.get("n_max"),
            settings.get("out"),
            args.json,
        )


def point_settings(settings: dict) -> dict:
    """Dimensionless defaults for the keys a command line usually leaves out"""
    return {"nu": 0.0, "mu": 0.0, "n_seed": 1.0} | settings


def sweep_config_from(settings: dict) -> SweepConfig:
    xi_min, xi_max, xi_steps = FIGURE_XI_RANGE
    try:
        return SweepConfig(
            xi_min=float(settings.get("xi_min", xi_min)),
            xi_max=float(settings.get("xi_max", xi_max)),
            xi_steps=int(settings.get("xi_steps", xi_steps)),
            nus=[float(value) for value in settings.get("nus", [0.0])],
            mus=[float(value) for value in settings.get("mus", [0.0])],
            n_seed=float(settings.get("n_seed", 1.0)),
            out=settings.get("out"),
            method=settings.get("method"),
        )
    except (TypeError, ValueError) as err:
        raise InvalidConfig("sweep", str(err))


if __name__ == "__main__":
    logging.config.fileConfig(
        fname=interferometer.Filemanager.logging_ini_path,
        defaults={"logfilename": interferometer.Filemanager.logfile_path},
    )

    sys.exit(main())

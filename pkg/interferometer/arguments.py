import argparse

from interferometer.constants import FIGURE_FAMILIES, METHODS
from interferometer.oracle.grids import MIN_POINTS
from interferometer.parameters import read_json_config

# flags whose value is not a setting of the computation
NON_SETTING_DESTS = frozenset(("command", "config", "json", "workers"))


def add_shared_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON file with settings, overridden by explicit flags", type=str, dest="config")
    parser.add_argument("--json", help="print the result as JSON", action="store_true", dest="json")
    parser.add_argument("--out", help="output file path", type=str, dest="out")


def add_point_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--xi", help="squeezing parameter of each crystal", type=float, dest="xi")
    parser.add_argument("--nu", help="squared seed-to-pump waist ratio", type=float, dest="nu")
    parser.add_argument("--mu", help="squared pump-to-seed bandwidth ratio", type=float, dest="mu")
    parser.add_argument("--n-seed", help="number of seed photons", type=float, dest="n_seed")
    parser.add_argument("--phi0", help="common phase between the crystals", type=float, dest="phi0")
    parser.add_argument("--phi-delta", help="relative phase between the beams", type=float, dest="phi_delta")
    parser.add_argument("--pump-phase-1", help="pump phase at the first crystal", type=float, dest="pump_phase_1")
    parser.add_argument("--pump-phase-2", help="pump phase at the second crystal", type=float, dest="pump_phase_2")


def argparse_setup(argv: list[str] | None = None) -> argparse.Namespace:
    """Setup and return argparse."""
    parser = argparse.ArgumentParser(description="Phase sensitivity of the seeded SU(1,1) interferometer")
    subparsers = parser.add_subparsers(dest="command", required=True)

    sweep = subparsers.add_parser("sweep", help="tabulate G0, |G1| and rho over a xi, nu, mu grid")
    add_shared_arguments(sweep)
    sweep.add_argument("--xi-min", help="smallest xi", type=float, dest="xi_min")
    sweep.add_argument("--xi-max", help="largest xi", type=float, dest="xi_max")
    sweep.add_argument("--xi-steps", help="number of xi values", type=int, dest="xi_steps")
    sweep.add_argument("--nu", help="nu value(s)", type=float, nargs="+", dest="nus")
    sweep.add_argument("--mu", help="mu value(s)", type=float, nargs="+", dest="mus")
    sweep.add_argument("--n-seed", help="number of seed photons", type=float, dest="n_seed")
    sweep.add_argument("--method", help="force one evaluation branch", choices=METHODS, dest="method")
    sweep.add_argument("--workers", help="number of worker threads", type=int, dest="workers")

    crossing = subparsers.add_parser("crossing", help="find where rho crosses the standard quantum limit")
    add_shared_arguments(crossing)
    crossing.add_argument("--nu", help="squared seed-to-pump waist ratio", type=float, dest="nu")
    crossing.add_argument("--mu", help="squared pump-to-seed bandwidth ratio", type=float, dest="mu")

    figure = subparsers.add_parser("figure", help="rho curves of one parameter family")
    add_shared_arguments(figure)
    figure.add_argument("figure_id", help="parameter varied between the curves", choices=tuple(FIGURE_FAMILIES))
    figure.add_argument("--workers", help="number of worker threads", type=int, dest="workers")

    curve = subparsers.add_parser("curve", help="phase uncertainty as a function of the common phase")
    add_shared_arguments(curve)
    add_point_arguments(curve)
    curve.add_argument("--phi0-steps", help="number of phases on (-pi, pi]", type=int, dest="phi0_steps")

    oracle = subparsers.add_parser("oracle", help="compare the kernel oracle with the analytic series")
    add_shared_arguments(oracle)
    add_point_arguments(oracle)
    oracle.add_argument("--grid", help="points per axis", type=int, dest="n_points")
    oracle.add_argument("--extent", help="grid half-width in widest Gaussian scales", type=float, dest="extent")
    oracle.add_argument("--n-max", help="truncation order of the kernel series", type=int, dest="n_max")

    args = validate_arguments(parser, argv)

    return args


def validate_arguments(parser: argparse.ArgumentParser, argv: list[str] | None = None) -> argparse.Namespace:
    """Validate arguments"""
    args = parser.parse_args(argv)

    if args.command == "sweep":
        if args.xi_steps is not None and args.xi_steps < 2:
            parser.error("When using --xi-steps, then at least 2 steps are required")
        if args.workers is not None and args.workers < 1:
            parser.error("When using --workers, then at least 1 worker is required")

    if args.command == "curve":
        if args.phi0_steps is not None and args.phi0_steps < 2:
            parser.error("When using --phi0-steps, then at least 2 steps are required")

    if args.command == "oracle":
        if args.n_points is not None and args.n_points < MIN_POINTS:
            parser.error(f"When using --grid, then at least {MIN_POINTS} points are required")
        if args.n_max is not None and args.n_max < 1:
            parser.error("When using --n-max, then n_max must be at least 1")

    return args


def collect_settings(args: argparse.Namespace) -> dict:
    """JSON config values overridden by every flag given on the command line"""
    settings = read_json_config(args.config) if args.config else {}

    for dest, value in vars(args).items():
        if dest in NON_SETTING_DESTS or value is None:
            continue
        settings[dest] = value

    return settings

import logging
import math

from interferometer.constants import CSV_HEADER, FIGURE_FAMILIES, FIGURE_XI_RANGE, METHOD_SQL_THRESHOLD
from interferometer.exceptions import InvalidConfig
from interferometer.format import Format
from interferometer.models import OutputRow, SweepConfig
from interferometer.sweep import sweep_rows, write_lines


def figure_config(figure_id: str, out: str | None = None, n_seed: float = 1.0) -> SweepConfig:
    if figure_id not in FIGURE_FAMILIES:
        raise InvalidConfig("figure", f"expected one of {', '.join(FIGURE_FAMILIES)}, got {figure_id}")

    xi_min, xi_max, xi_steps = FIGURE_XI_RANGE
    family = list(FIGURE_FAMILIES[figure_id])
    nus, mus = (family, [0.0]) if figure_id == "nu" else ([0.0], family)

    return SweepConfig(xi_min=xi_min, xi_max=xi_max, xi_steps=xi_steps, nus=nus, mus=mus, n_seed=n_seed, out=out)


def threshold_rows(xi_min: float, xi_max: float) -> list[OutputRow]:
    """The standard quantum limit rho = 1 as a two-point line over the xi range"""
    return [
        OutputRow(
            xi=xi,
            nu=math.nan,
            mu=math.nan,
            g0_per_photon=math.nan,
            g1_per_photon=math.nan,
            rho=1.0,
            dphi_min_times_sqrt_ns=1.0,
            method=METHOD_SQL_THRESHOLD,
        )
        for xi in (xi_min, xi_max)
    ]


def cmd_figure(figure_id: str, out: str | None = None, workers: int | None = None) -> list[OutputRow]:
    config = figure_config(figure_id, out)
    logging.getLogger(__name__).info(f"Figure data '{figure_id}': {config.n_rows} points")

    rows = sweep_rows(config, workers) + threshold_rows(config.xi_min, config.xi_max)
    lines = [Format.header_line(CSV_HEADER)] + [Format.row_to_line(row) for row in rows]
    write_lines(lines, out)
    return rows

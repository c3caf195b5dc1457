import logging
import math
import os
import threading

import alive_progress

from interferometer.constants import CSV_HEADER, METHODS
from interferometer.exceptions import InvalidConfig, SweepPointFailed, ZeroSignal
from interferometer.filemanager import Config
from interferometer.format import Format
from interferometer.models import DimensionlessParams, OutputRow, SweepConfig
from interferometer.sensitivity import compute_g, evaluate


def validate_sweep_config(config: SweepConfig) -> SweepConfig:
    if not (math.isfinite(config.xi_min) and config.xi_min >= 0):
        raise InvalidConfig("xi_min", f"must be non-negative, got {config.xi_min}")
    if not (math.isfinite(config.xi_max) and config.xi_max > config.xi_min):
        raise InvalidConfig("xi_max", f"must exceed xi_min, got {config.xi_max}")
    if config.xi_steps < 2:
        raise InvalidConfig("xi_steps", f"at least 2 steps are required, got {config.xi_steps}")

    for key in ("nus", "mus"):
        values = getattr(config, key)
        if not values:
            raise InvalidConfig(key, "list must not be empty")
        if any(not (math.isfinite(value) and value >= 0) for value in values):
            raise InvalidConfig(key, f"values must be non-negative, got {values}")

    if not (math.isfinite(config.n_seed) and config.n_seed > 0):
        raise InvalidConfig("n_seed", f"must be positive, got {config.n_seed}")
    if config.method is not None and config.method not in METHODS:
        raise InvalidConfig("method", f"expected one of {', '.join(METHODS)}, got {config.method}")

    return config


def sweep_points(config: SweepConfig) -> list[tuple[float, float, float]]:
    """(xi, nu, mu) in output order: nu outer, mu middle, xi inner"""
    return [(xi, nu, mu) for nu in config.nus for mu in config.mus for xi in config.xi_values()]


def evaluate_point(xi: float, nu: float, mu: float, n_seed: float, method: str | None = None) -> OutputRow:
    params = DimensionlessParams(xi=xi, nu=nu, mu=mu, n_seed=n_seed)
    try:
        return Format.result_to_row(evaluate(params, method))
    except ZeroSignal:
        return Format.zero_signal_row(xi, nu, mu, compute_g(params, method))


def sweep_rows(config: SweepConfig, workers: int | None = None, progress_bar=None) -> list[OutputRow]:
    """Evaluate every point on worker threads; rows come back in output order"""
    validate_sweep_config(config)
    workers = workers or Config.get_sweep_workers()
    points = sweep_points(config)

    rows: list[OutputRow | None] = [None] * len(points)
    errors: list[Exception | None] = [None] * len(points)
    lock = threading.Lock()

    def work(indices: range) -> None:
        for index in indices:
            xi, nu, mu = points[index]
            try:
                rows[index] = evaluate_point(xi, nu, mu, config.n_seed, config.method)
            except Exception as err:
                errors[index] = err
            if progress_bar:
                with lock:
                    progress_bar()

    threads = [threading.Thread(target=work, args=[range(start, len(points), workers)]) for start in range(workers)]

    for thread in threads:
        thread.start()

    for thread in threads:
        thread.join()

    # report the first failing point in output order
    for index, err in enumerate(errors):
        if err is not None:
            xi, nu, mu = points[index]
            logging.getLogger(__name__).error(f"Sweep point xi={xi}, nu={nu}, mu={mu} failed: {err}")
            raise SweepPointFailed(xi, nu, mu, err)

    return rows


def write_lines(lines: list[str], out: str | None) -> None:
    if out is None:
        for line in lines:
            print(line)
        return

    folder = os.path.dirname(out)
    if folder:
        os.makedirs(folder, exist_ok=True)

    with open(out, "w", encoding="utf8", newline="") as file:
        file.write("\n".join(lines) + "\n")


def cmd_sweep(config: SweepConfig, workers: int | None = None) -> list[OutputRow]:
    logger = logging.getLogger(__name__)
    validate_sweep_config(config)
    logger.info(f"Sweep started: {config.n_rows} points")

    with alive_progress.alive_bar(config.n_rows, title="Sweeping") as bar:
        rows = sweep_rows(config, workers, bar)

    lines = [Format.header_line(CSV_HEADER)] + [Format.row_to_line(row) for row in rows]
    write_lines(lines, config.out)
    logger.info(f"Sweep finished: {len(rows)} rows written to {config.out or 'standard output'}")
    return rows

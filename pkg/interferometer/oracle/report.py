"""Comparison report of the kernel oracle against the analytic series"""

from dataclasses import asdict
import json
import logging
import math

import numpy as np

from interferometer.filemanager import Config
from interferometer.models import DimensionlessParams
from interferometer.oracle.grids import GridSet, build_grids
from interferometer.oracle.moments import numeric_g, purity_residual, seeded_moments
from interferometer.oracle.thin_crystal import bogoliubov_uv, compose, seed_field
from interferometer.sensitivity import compute_g

CONVERGENCE_ORDERS = (2, 4, 8, 12)

# relative tolerance of the grid quadrature of the seed envelope
QUADRATURE_TOLERANCE = 1e-6
DERIVATIVE_TOLERANCE = 1e-6


def relative_difference(value: float, reference: float) -> float:
    if value == reference:
        return 0.0
    if reference == 0:
        return math.inf
    return abs(value - reference) / abs(reference)


def seed_quadrature_error(grids: GridSet) -> float:
    """Largest relative error of the grid integral of exp(-r x^2 / 2) over the Gaussian seed axes"""
    error = 0.0
    for axis in grids.axes:
        if axis.seed_ratio <= 0:
            continue
        numeric = axis.integrate(np.exp(-0.5 * axis.seed_ratio * axis.points**2))
        exact = math.sqrt(2 * math.pi / axis.seed_ratio) / (2 * math.pi)
        error = max(error, relative_difference(float(numeric), exact))
    return error


def crystal_residuals(params: DimensionlessParams, n_max: int, grids: GridSet) -> dict[str, float]:
    crystal1 = bogoliubov_uv(params, params.pump_phase_1, n_max, grids)
    crystal2 = bogoliubov_uv(params, params.pump_phase_2, n_max, grids)
    composed = compose(crystal1, crystal2, params.phi0, params.phi_delta)

    identity, identity_cross = crystal1.identity_residuals()
    inversion, inversion_cross = composed.inversion_residuals()
    return {
        "n_max": n_max,
        "identity": identity,
        "identity_cross": identity_cross,
        "inversion": inversion,
        "inversion_cross": inversion_cross,
    }


def build_report(
    params: DimensionlessParams,
    n_points: int | None = None,
    extent: float | None = None,
    n_max: int | None = None,
    settings: dict | None = None,
) -> dict:
    settings = settings or Config.get_oracle_settings()
    n_points = n_points or settings["n_points"]
    extent = extent or settings["extent"]
    n_max = n_max or settings["n_max"]

    logger = logging.getLogger(__name__)
    logger.info(f"Oracle run at xi={params.xi}, nu={params.nu}, mu={params.mu} on {n_points} points, n_max={n_max}")

    grids = build_grids(n_points, extent, params)
    seed = seed_field(grids, params.n_seed)
    crystal1 = bogoliubov_uv(params, params.pump_phase_1, n_max, grids)
    crystal2 = bogoliubov_uv(params, params.pump_phase_2, n_max, grids)
    composed = compose(crystal1, crystal2, params.phi0, params.phi_delta)

    analytic = compute_g(params)
    numeric = numeric_g(seed, crystal1, crystal2)

    # steepest point of the fringe
    phi_slope = 0.5 * numeric.gamma1 + math.pi / 4
    moments = seeded_moments(seed, crystal1, crystal2, phi_slope, params.phi_delta, g=numeric)

    identity, identity_cross = crystal1.identity_residuals()
    inversion, inversion_cross = composed.inversion_residuals()
    hermiticity, symmetry = composed.symmetry_residuals()

    purity = None
    if n_points <= settings["dense_limit"]:
        purity = asdict(purity_residual(composed, settings["dense_limit"]))

    convergence = [crystal_residuals(params, order, grids) for order in CONVERGENCE_ORDERS if order <= n_max]

    gamma_checked = analytic.g1_abs > 0
    errors = {
        "g0": relative_difference(numeric.g0, analytic.g0),
        "g1": relative_difference(numeric.g1_abs, analytic.g1_abs),
        "gamma1": abs(math.remainder(numeric.gamma1 - analytic.gamma1, 2 * math.pi)) if gamma_checked else 0.0,
        "derivative": relative_difference(moments.slope_fd, moments.slope_analytic),
        "quadrature": seed_quadrature_error(grids),
    }
    checks = {
        "g0": errors["g0"] <= settings["g_tolerance"],
        "g1": errors["g1"] <= settings["g_tolerance"],
        "gamma1": errors["gamma1"] <= settings["gamma_tolerance"],
        "derivative": errors["derivative"] <= DERIVATIVE_TOLERANCE,
        "quadrature": errors["quadrature"] <= QUADRATURE_TOLERANCE,
        "identity": max(identity, identity_cross) <= settings["identity_tolerance"],
        "inversion": max(inversion, inversion_cross) <= settings["identity_tolerance"],
    }

    failed = [name for name, passed in checks.items() if not passed]
    if failed:
        logger.warning(f"Oracle checks failed: {', '.join(failed)}")

    return {
        "inputs": asdict(params),
        "grid": {"n_points": n_points, "extent": extent, "n_max": n_max},
        "analytic": {"g0": analytic.g0, "g1_abs": analytic.g1_abs, "gamma1": analytic.gamma1, "method": analytic.method},
        "numeric": {
            "g0": numeric.g0,
            "g1_abs": numeric.g1_abs,
            "g1_contraction": [numeric.g1_contraction.real, numeric.g1_contraction.imag],
            "gamma1": numeric.gamma1,
        },
        "moments": asdict(moments),
        "residuals": {
            "identity": identity,
            "identity_cross": identity_cross,
            "inversion": inversion,
            "inversion_cross": inversion_cross,
            "hermiticity": hermiticity,
            "symmetry": symmetry,
            "purity": purity,
        },
        "convergence": convergence,
        "errors": errors,
        "checks": checks,
        "failed": failed,
        "passed": not failed,
    }


def write_report(report: dict, path: str) -> None:
    with open(path, "w", encoding="utf8") as file:
        json.dump(_serializable(report), file, indent=2)
        file.write("\n")


def _serializable(value: object) -> object:
    """Non-finite floats become the strings 'inf' / '-inf' / 'nan'"""
    if isinstance(value, dict):
        return {key: _serializable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_serializable(item) for item in value]
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value

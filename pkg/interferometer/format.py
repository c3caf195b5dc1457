from dataclasses import astuple
import math

from interferometer.constants import CSV_HEADER
from interferometer.filemanager import Config
from interferometer.models import CrossingResult, GPair, OutputRow, SensitivityResult


class Format:
    @staticmethod
    def number(value: float, digits: int | None = None) -> str:
        """Shortest representation of value rounded to `digits` significant digits"""
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"

        digits = digits or Config.get_significant_digits()
        return repr(float(f"{value:.{digits}g}"))

    @staticmethod
    def header_line(header: tuple[str, ...] = CSV_HEADER) -> str:
        return ",".join(header)

    @staticmethod
    def values_to_line(values: tuple, digits: int | None = None) -> str:
        cells = [value if isinstance(value, str) else Format.number(value, digits) for value in values]
        return ",".join(cells)

    @staticmethod
    def row_to_line(row: OutputRow, digits: int | None = None) -> str:
        return Format.values_to_line(astuple(row), digits)

    @staticmethod
    def result_to_row(result: SensitivityResult) -> OutputRow:
        params = result.params
        return OutputRow(
            xi=params.xi,
            nu=params.nu,
            mu=params.mu,
            g0_per_photon=result.g.g0_per_photon,
            g1_per_photon=result.g.g1_per_photon,
            rho=result.rho,
            dphi_min_times_sqrt_ns=result.dphi_min * math.sqrt(params.n_seed),
            method=result.g.method,
        )

    @staticmethod
    def zero_signal_row(xi: float, nu: float, mu: float, g: GPair) -> OutputRow:
        """Row for a point without a fringe: rho and the minimum uncertainty are infinite"""
        return OutputRow(
            xi=xi,
            nu=nu,
            mu=mu,
            g0_per_photon=g.g0_per_photon,
            g1_per_photon=g.g1_per_photon,
            rho=math.inf,
            dphi_min_times_sqrt_ns=math.inf,
            method=g.method,
        )

    @staticmethod
    def crossing_to_dict(result: CrossingResult, penalty: float) -> dict:
        return {
            "nu": result.nu,
            "mu": result.mu,
            "xi_star": result.xi_star,
            "penalty": penalty,
            "iterations": result.iterations,
            "bracket": list(result.bracket),
            "residual": result.residual,
        }

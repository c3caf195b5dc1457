import math

from interferometer.constants import CURVE_HEADER
from interferometer.exceptions import InvalidParameter, SingularPhase
from interferometer.format import Format
from interferometer.models import DimensionlessParams
from interferometer.sensitivity import compute_g, phase_sensitivity_sq
from interferometer.sweep import write_lines


def phase_grid(steps: int) -> list[float]:
    """`steps` equally spaced phases on (-pi, pi]; even steps include phi0 = 0"""
    if steps < 2:
        raise InvalidParameter("phi0_steps", steps)
    return [-math.pi + 2 * math.pi * (index + 1) / steps for index in range(steps)]


def sensitivity_curve(params: DimensionlessParams, steps: int, method: str | None = None) -> list[tuple[float, float]]:
    if not params.xi > 0:
        raise InvalidParameter("xi", params.xi)

    g = compute_g(params, method)
    curve = []
    for phi0 in phase_grid(steps):
        try:
            value = phase_sensitivity_sq(params, g, phi0)
        except SingularPhase:
            value = math.inf
        curve.append((phi0, value))
    return curve


def cmd_curve(params: DimensionlessParams, steps: int, out: str | None = None) -> list[tuple[float, float]]:
    curve = sensitivity_curve(params, steps)
    lines = [Format.header_line(CURVE_HEADER)] + [Format.values_to_line(point) for point in curve]
    write_lines(lines, out)
    return curve

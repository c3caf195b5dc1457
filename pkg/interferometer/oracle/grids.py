"""Periodic wavevector and frequency grids for the kernel oracle.

Coordinates are nondimensional: transverse axes in units of the pump waist, the frequency
axis in units of the pump bandwidth around the degenerate frequency. Each axis is a uniform
periodic grid with cell-centred points, so the grid is symmetric about zero and x -> -x maps
grid points onto grid points.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from interferometer.exceptions import GridMismatch, InvalidGrid
from interferometer.models import DimensionlessParams

MIN_POINTS = 8
AXIS_NAMES = ("x", "y", "s")

# variance scale of the first-order pump kernel factor
PUMP_SCALE = math.sqrt(2)


@dataclass(frozen=True)
class AxisGrid:
    name: str
    points: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    period: float
    # exponent of the seed envelope exp(-seed_ratio x^2 / 4) on this axis
    seed_ratio: float

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def spacing(self) -> float:
        return self.period / self.n_points

    def integrate(self, values: np.ndarray) -> complex:
        """Discrete form of the integral of values over dx / (2 pi)"""
        return np.dot(self.weights, values)

    def same_as(self, other: "AxisGrid") -> bool:
        return self.n_points == other.n_points and self.period == other.period


@dataclass(frozen=True)
class GridSet:
    axes: tuple[AxisGrid, AxisGrid, AxisGrid]
    extent: float

    @property
    def n_points(self) -> int:
        return self.axes[0].n_points

    @property
    def shape(self) -> tuple[int, int, int]:
        return tuple(axis.n_points for axis in self.axes)

    def check_same(self, other: "GridSet") -> None:
        if self is other:
            return
        if not all(mine.same_as(theirs) for mine, theirs in zip(self.axes, other.axes)):
            raise GridMismatch()


def axis_half_width(extent: float, seed_ratio: float) -> float:
    """Half-width covering `extent` times the widest Gaussian scale on the axis"""
    scale = PUMP_SCALE
    if seed_ratio > 0:
        scale = max(scale, math.sqrt(2 / seed_ratio))
    return extent * scale


def build_axis(name: str, n_points: int, extent: float, seed_ratio: float) -> AxisGrid:
    period = 2 * axis_half_width(extent, seed_ratio)
    spacing = period / n_points
    points = -period / 2 + (np.arange(n_points) + 0.5) * spacing

    return AxisGrid(
        name=name,
        points=points,
        weights=np.full(n_points, spacing / (2 * math.pi)),
        period=period,
        seed_ratio=seed_ratio,
    )


def build_grids(n_points: int, extent: float, params: DimensionlessParams) -> GridSet:
    if n_points < MIN_POINTS:
        raise InvalidGrid(f"at least {MIN_POINTS} points per axis are required, got {n_points}")
    if not (math.isfinite(extent) and extent > 0):
        raise InvalidGrid(f"extent must be positive, got {extent}")

    ratios = (params.nu, params.nu, params.mu)
    axes = tuple(build_axis(name, n_points, extent, ratio) for name, ratio in zip(AXIS_NAMES, ratios))
    return GridSet(axes=axes, extent=extent)

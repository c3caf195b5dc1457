"""Thin-crystal Bogoliubov kernels and the two-crystal composition.

On every axis the m-th order kernel factor is the periodized Gaussian

    f_m(u) = 2 pi / sqrt(4 pi m) * sum_j exp(-(u + j P)^2 / (4 m))

of u = x1 - x2 for even m and u = x1 + x2 for odd m, so odd orders pair the signal with
its conjugate mode (K1 + K2 and the ridge w1 + w2 = w_p) and even orders keep it
(K1 - K2 and w1 = w2). With the dx / (2 pi) measure these factors compose exactly,
f_a <> f_b = f_(a+b), and H_m = xi^m / m! * f_m (x) f_m (x) f_m.
"""

from dataclasses import dataclass
from functools import lru_cache
import cmath
import logging
import math

import numpy as np

from interferometer.exceptions import InvalidParameter
from interferometer.models import DimensionlessParams
from interferometer.oracle.grids import AxisGrid, GridSet
from interferometer.oracle.kernels import FieldVector, SeparableKernel, Term, diamond, diamond_field

# periodic images are kept out to this many standard deviations of f_m
IMAGE_SIGMAS = 6


@lru_cache(maxsize=512)
def _factor(n_points: int, period: float, m: int) -> np.ndarray:
    spacing = period / n_points
    points = -period / 2 + (np.arange(n_points) + 0.5) * spacing
    if m % 2:
        u = points[:, np.newaxis] + points[np.newaxis, :]
    else:
        u = points[:, np.newaxis] - points[np.newaxis, :]

    n_images = math.ceil(IMAGE_SIGMAS * math.sqrt(2 * m) / period) + 1
    shifts = np.arange(-n_images, n_images + 1) * period
    values = np.exp(-((u[..., np.newaxis] + shifts) ** 2) / (4 * m)).sum(axis=-1)

    factor = 2 * math.pi / math.sqrt(4 * math.pi * m) * values
    factor.setflags(write=False)
    return factor


def kernel_factor(axis: AxisGrid, m: int) -> np.ndarray:
    return _factor(axis.n_points, axis.period, m)


def kernel_power(m: int, grids: GridSet) -> SeparableKernel:
    """Unit-coefficient kernel of order m; kernel_power(a) <> kernel_power(b) = kernel_power(a + b)"""
    if m < 1:
        raise InvalidParameter("m", m)
    factors = tuple(kernel_factor(axis, m) for axis in grids.axes)
    return SeparableKernel(grids=grids, terms=(Term(1.0 + 0j, factors),))


def kernel_h(m: int, params: DimensionlessParams, grids: GridSet) -> SeparableKernel:
    return kernel_power(m, grids).scale(params.xi**m / math.factorial(m))


@dataclass(frozen=True)
class CrystalKernels:
    u: SeparableKernel
    v: SeparableKernel
    n_max: int
    pump_phase: float

    def identity_residuals(self) -> tuple[float, float]:
        """Norms of U<>U - V<>V* - 1 and U<>V - V<>U*"""
        u, v = self.u, self.v
        unit = SeparableKernel.unit(u.grids)
        first = diamond(u, u) - diamond(v, v.conj()) - unit
        second = diamond(u, v) - diamond(v, u.conj())
        return first.compress().hs_norm(), second.compress().hs_norm()


def bogoliubov_uv(params: DimensionlessParams, pump_phase: float, n_max: int, grids: GridSet) -> CrystalKernels:
    """U = 1 + sum H_2n / 4^n and V = i exp(i phase) sum 2 H_(2n-1) / 4^n, truncated at n_max"""
    if n_max < 1:
        raise InvalidParameter("n_max", n_max)

    u = SeparableKernel.unit(grids)
    v0 = SeparableKernel.zero(grids)
    for n in range(1, n_max + 1):
        u = u + kernel_h(2 * n, params, grids).scale(1 / 4**n)
        v0 = v0 + kernel_h(2 * n - 1, params, grids).scale(2 / 4**n)

    v = v0.scale(1j * cmath.exp(1j * pump_phase))
    return CrystalKernels(u=u.compress(), v=v.compress(), n_max=n_max, pump_phase=pump_phase)


@dataclass(frozen=True)
class ComposedKernels:
    a0: SeparableKernel
    b0: SeparableKernel
    a1: SeparableKernel
    b1: SeparableKernel
    b2: SeparableKernel
    a: SeparableKernel
    b: SeparableKernel
    phi0: float
    phi_delta: float

    def inversion_residuals(self) -> tuple[float, float]:
        """Norms of A0^+ <> A0 - B0^T <> B0* - 1 and A0^+ <> B0 - B0^T <> A0*"""
        a0_dag, b0_t = self.a0.adjoint(), self.b0.transpose()
        unit = SeparableKernel.unit(self.a0.grids)
        first = diamond(a0_dag, self.a0) - diamond(b0_t, self.b0.conj()) - unit
        second = diamond(a0_dag, self.b0) - diamond(b0_t, self.a0.conj())
        return first.compress().hs_norm(), second.compress().hs_norm()

    def symmetry_residuals(self) -> tuple[float, float]:
        """Norms of A - A^+ and B - B^T"""
        return (self.a - self.a.adjoint()).compress().hs_norm(), (self.b - self.b.transpose()).compress().hs_norm()


def single_crystal(crystal: CrystalKernels) -> tuple[SeparableKernel, SeparableKernel]:
    """A1 = U<>U + V<>V* and B1 = U<>V + V<>U*"""
    u, v = crystal.u, crystal.v
    a1 = (diamond(u, u) + diamond(v, v.conj())).compress()
    b1 = (diamond(u, v) + diamond(v, u.conj())).compress()
    return a1, b1


def modulated_chains(
    crystal1: CrystalKernels, crystal2: CrystalKernels, phi0: float, phi_delta: float = 0.0
) -> tuple[SeparableKernel, SeparableKernel]:
    """A0 and B0 with the beam phases phi0 +- phi_delta / 2 inserted between the crystals"""
    crystal1.u.grids.check_same(crystal2.u.grids)

    phi1 = phi0 + 0.5 * phi_delta
    phi2 = phi0 - 0.5 * phi_delta
    u1, v1, u2, v2 = crystal1.u, crystal1.v, crystal2.u, crystal2.v

    # the retained beam picks up phi1 and the flipped, conjugated beam phi2
    a0 = (diamond(u1, u2).scale(cmath.exp(-1j * phi1)) + diamond(v1, v2.conj()).scale(cmath.exp(1j * phi2))).compress()
    b0 = (diamond(u1, v2).scale(cmath.exp(-1j * phi1)) + diamond(v1, u2.conj()).scale(cmath.exp(1j * phi2))).compress()
    return a0, b0


def compose(crystal1: CrystalKernels, crystal2: CrystalKernels, phi0: float, phi_delta: float = 0.0) -> ComposedKernels:
    logger = logging.getLogger(__name__)
    a0, b0 = modulated_chains(crystal1, crystal2, phi0, phi_delta)

    a1, b1 = single_crystal(crystal1)
    _, b2 = single_crystal(crystal2)

    a0_dag, b0_t = a0.adjoint(), b0.transpose()
    a = (diamond(a0_dag, a0) + diamond(b0_t, b0.conj())).compress()
    b = (diamond(a0_dag, b0) + diamond(b0_t, a0.conj())).compress()
    logger.debug(f"Composed kernels at phi0={phi0}, phi_delta={phi_delta}: rank(A)={a.rank}, rank(B)={b.rank}")

    return ComposedKernels(a0=a0, b0=b0, a1=a1, b1=b1, b2=b2, a=a, b=b, phi0=phi0, phi_delta=phi_delta)


def seed_field(grids: GridSet, n_seed: float) -> FieldVector:
    """Gaussian seed normalized so that its squared norm on the grid is n_seed"""
    if not n_seed > 0:
        raise InvalidParameter("n_seed", n_seed)
    unit = FieldVector.gaussian(grids)
    return unit.scale(math.sqrt(n_seed / unit.norm_sq()))


def chain_on_field(field: FieldVector, *kernels: SeparableKernel) -> FieldVector:
    """Apply the kernels right to left, the last one acting first"""
    for kernel in reversed(kernels):
        field = diamond_field(kernel, field)
    return field

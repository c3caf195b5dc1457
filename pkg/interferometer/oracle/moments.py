from dataclasses import dataclass
import cmath
import logging
import math

import numpy as np
from scipy import linalg

from interferometer.exceptions import IllConditionedKernel, ZeroSignal
from interferometer.oracle.kernels import FieldVector, SeparableKernel, diamond, diamond_field, inner
from interferometer.oracle.thin_crystal import (
    ComposedKernels,
    CrystalKernels,
    chain_on_field,
    compose,
    modulated_chains,
    single_crystal,
)

FD_STEP = 1e-4
PINV_RTOL = 1e-10


@dataclass(frozen=True)
class NumericG:
    g0: float
    # xi* <> U1 <> B2 <> V1* <> xi
    g1_contraction: complex

    @property
    def g1_abs(self) -> float:
        """|G1| in the normalization of the analytic series"""
        return 4 * abs(self.g1_contraction)

    @property
    def gamma1(self) -> float:
        return cmath.phase(self.g1_contraction)


@dataclass(frozen=True)
class SeededMoments:
    phi0: float
    mean: float
    variance: float
    slope_analytic: float
    slope_fd: float

    @property
    def dphi0_sq(self) -> float:
        if self.slope_fd == 0:
            raise ZeroSignal()
        return self.variance / self.slope_fd**2


@dataclass(frozen=True)
class UnseededMoments:
    mean: float
    variance: float


@dataclass(frozen=True)
class PurityResidual:
    residual: float
    condition: float


def numeric_g(seed: FieldVector, crystal1: CrystalKernels, crystal2: CrystalKernels) -> NumericG:
    a1, b1 = single_crystal(crystal1)
    _, b2 = single_crystal(crystal2)

    g0 = diamond_field(a1, seed).norm_sq() + diamond_field(b1.conj(), seed).norm_sq()
    g1 = inner(seed, chain_on_field(seed, crystal1.u, b2, crystal1.v.conj()))
    return NumericG(g0=g0, g1_contraction=g1)


def displacement(seed: FieldVector, a0: SeparableKernel, b0: SeparableKernel) -> tuple[FieldVector, FieldVector]:
    """eta1 = A0^+ <> xi and eta2 = B0^T <> xi*, one register per beam"""
    return diamond_field(a0.adjoint(), seed), diamond_field(b0.transpose(), seed.conj())


def modulated_displacement(seed: FieldVector, composed: ComposedKernels) -> tuple[FieldVector, FieldVector]:
    return displacement(seed, composed.a0, composed.b0)


def mean_photon_number(
    seed: FieldVector, crystal1: CrystalKernels, crystal2: CrystalKernels, phi0: float, phi_delta: float = 0.0
) -> float:
    eta1, eta2 = displacement(seed, *modulated_chains(crystal1, crystal2, phi0, phi_delta))
    return eta1.norm_sq() + eta2.norm_sq()


def seeded_moments(
    seed: FieldVector,
    crystal1: CrystalKernels,
    crystal2: CrystalKernels,
    phi0: float,
    phi_delta: float = 0.0,
    g: NumericG | None = None,
    step: float = FD_STEP,
) -> SeededMoments:
    if g is None:
        g = numeric_g(seed, crystal1, crystal2)

    def mean_at(phase: float) -> float:
        return mean_photon_number(seed, crystal1, crystal2, phase, phi_delta)

    slope_fd = (mean_at(phi0 + step) - mean_at(phi0 - step)) / (2 * step)
    # derivative of const + 2 |G1| cos(2 phi0 - gamma1), raw contraction normalization
    slope_analytic = -4 * abs(g.g1_contraction) * math.sin(2 * phi0 - g.gamma1)
    variance = math.cos(phi0) ** 2 * seed.norm_sq() + math.sin(phi0) ** 2 * g.g0

    return SeededMoments(
        phi0=phi0,
        mean=mean_at(phi0),
        variance=variance,
        slope_analytic=slope_analytic,
        slope_fd=slope_fd,
    )


def unseeded_moments(composed: ComposedKernels) -> UnseededMoments:
    """Half traces of A - 1 and A <> A - 1"""
    unit = SeparableKernel.unit(composed.a.grids)
    mean = 0.5 * (composed.a - unit).compress().trace()
    variance = 0.5 * (diamond(composed.a, composed.a) - unit).compress().trace()
    return UnseededMoments(mean=mean.real, variance=variance.real)


def unseeded_sensitivity_sq(
    crystal1: CrystalKernels, crystal2: CrystalKernels, phi0: float, phi_delta: float = 0.0, step: float = FD_STEP
) -> float:
    """Variance over the squared finite-difference fringe slope without a seed"""

    def moments_at(phase: float) -> UnseededMoments:
        return unseeded_moments(compose(crystal1, crystal2, phase, phi_delta))

    slope = (moments_at(phi0 + step).mean - moments_at(phi0 - step).mean) / (2 * step)
    if slope == 0:
        raise ZeroSignal()
    return moments_at(phi0).variance / slope**2


def purity_residual(composed: ComposedKernels, limit: int) -> PurityResidual:
    """Spectral norm of A<>A - A<>B<>(A*)^-1<>B* - 1 on the dense grid"""
    a = composed.a.operator_matrix(limit)
    b = composed.b.operator_matrix(limit)
    a_conj = composed.a.conj().operator_matrix(limit)
    b_conj = composed.b.conj().operator_matrix(limit)

    condition = float(np.linalg.cond(a_conj))
    inverse = linalg.pinv(a_conj, rtol=PINV_RTOL)
    if not (math.isfinite(condition) and np.all(np.isfinite(inverse))):
        raise IllConditionedKernel(condition)

    residual = a @ a - a @ b @ inverse @ b_conj - np.eye(a.shape[0])
    value = float(np.linalg.norm(residual, 2))
    logging.getLogger(__name__).info(f"Purity residual {value:.3e} at condition {condition:.3e}")
    return PurityResidual(residual=value, condition=condition)

from dataclasses import dataclass, field
import math

from interferometer.constants import SPEED_OF_LIGHT


def normalize_angle(angle: float) -> float:
    """Map an angle in radians onto (-pi, pi]"""
    reduced = math.remainder(angle, 2 * math.pi)
    if reduced <= -math.pi:
        return math.pi
    return reduced


@dataclass(frozen=True)
class PhysicalSetup:
    """Laboratory description of one crystal stage (both crystals are identical)"""

    w_p: float
    w_s: float
    delta_p: float
    delta_s: float
    omega_p: float
    crystal_length: float
    sigma_ooe: float
    psi0_mag: float
    c: float = SPEED_OF_LIGHT


@dataclass(frozen=True)
class SeedSpec:
    xi0_mag: float
    w_s: float
    omega_s: float
    delta_s: float


@dataclass(frozen=True)
class PumpSpec:
    psi0_mag: float
    w_p: float
    omega_p: float
    delta_p: float
    phase: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase", normalize_angle(self.phase))


@dataclass(frozen=True)
class DimensionlessParams:
    """The experiment reduced to the scale parameters of the series results"""

    xi: float
    nu: float
    mu: float
    n_seed: float
    phi0: float = 0.0
    phi_delta: float = 0.0
    pump_phase_1: float = 0.0
    pump_phase_2: float = field(default=math.pi / 2)

    def __post_init__(self) -> None:
        for name in ("phi0", "phi_delta", "pump_phase_1", "pump_phase_2"):
            object.__setattr__(self, name, normalize_angle(getattr(self, name)))

    @property
    def gamma1(self) -> float:
        return normalize_angle(self.pump_phase_2 - self.pump_phase_1)

    @property
    def phi1(self) -> float:
        return self.phi0 + 0.5 * self.phi_delta

    @property
    def phi2(self) -> float:
        return self.phi0 - 0.5 * self.phi_delta

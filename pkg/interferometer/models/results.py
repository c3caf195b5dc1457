from dataclasses import dataclass, field

from interferometer.models.parameters import DimensionlessParams


@dataclass(frozen=True)
class GPair:
    """Seed-weighted contractions G0, |G1| and the fringe phase gamma1"""

    g0: float
    g1_abs: float
    gamma1: float
    method: str
    n_seed: float

    @property
    def g0_per_photon(self) -> float:
        return self.g0 / self.n_seed

    @property
    def g1_per_photon(self) -> float:
        return self.g1_abs / self.n_seed


@dataclass(frozen=True)
class SensitivityResult:
    params: DimensionlessParams
    g: GPair
    dphi_min: float
    mz_min: float
    rho: float

    def dphi0_sq_at(self, phi0: float) -> float:
        from interferometer.sensitivity import phase_sensitivity_sq

        return phase_sensitivity_sq(self.params, self.g, phi0)


@dataclass(frozen=True)
class CrossingResult:
    nu: float
    mu: float
    xi_star: float
    bracket: tuple[float, float]
    iterations: int
    residual: float


@dataclass(frozen=True)
class OutputRow:
    xi: float
    nu: float
    mu: float
    g0_per_photon: float
    g1_per_photon: float
    rho: float
    dphi_min_times_sqrt_ns: float
    method: str


@dataclass
class SweepConfig:
    xi_min: float
    xi_max: float
    xi_steps: int
    nus: list[float] = field(default_factory=lambda: [0.0])
    mus: list[float] = field(default_factory=lambda: [0.0])
    n_seed: float = 1.0
    out: str | None = None
    method: str | None = None

    def xi_values(self) -> list[float]:
        step = (self.xi_max - self.xi_min) / (self.xi_steps - 1)
        return [self.xi_min + index * step for index in range(self.xi_steps)]

    @property
    def n_rows(self) -> int:
        return self.xi_steps * len(self.nus) * len(self.mus)

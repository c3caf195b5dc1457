from .grids import AxisGrid, GridSet, build_grids
from .kernels import FieldVector, SeparableKernel, Term, chain, diamond, diamond_field, inner

from .thin_crystal import (
    ComposedKernels,
    CrystalKernels,
    bogoliubov_uv,
    chain_on_field,
    compose,
    kernel_h,
    kernel_power,
    modulated_chains,
    seed_field,
    single_crystal,
)
from .moments import (
    NumericG,
    PurityResidual,
    SeededMoments,
    UnseededMoments,
    mean_photon_number,
    modulated_displacement,
    numeric_g,
    purity_residual,
    seeded_moments,
    unseeded_moments,
    unseeded_sensitivity_sq,
)
from .report import build_report, write_report

from .filemanager import Filemanager, Config
from .arguments import argparse_setup, collect_settings
from .parameters import derive_dimensionless, params_from_mapping, read_json_config, validate
from .special import gauss_hermite_rule, hyp_1f2, series_term, sum_g_series
from .sensitivity import (
    compute_g,
    evaluate,
    min_sensitivity,
    mz_sensitivity,
    penalty_factor,
    phase_sensitivity_sq,
    rho_ratio,
    sql_crossing,
)
from .format import Format
from .sweep import cmd_sweep
from .crossing import cmd_crossing
from .figure import cmd_figure
from .curve import cmd_curve
from .run_oracle import cmd_oracle
from .exceptions import (
    GridMismatch,
    IllConditionedKernel,
    InvalidConfig,
    InvalidGrid,
    InvalidParameter,
    NoCrossing,
    NumericOverflow,
    OracleToleranceFailure,
    SeriesNotConverged,
    SingularPhase,
    SweepPointFailed,
    UnsupportedOrder,
    ZeroSignal,
)
import interferometer.oracle as oracle

CSV_HEADER = ("xi", "nu", "mu", "g0_per_photon", "g1_per_photon", "rho", "dphi_min_times_sqrt_ns", "method")

CURVE_HEADER = ("phi0", "dphi0_sq")

FIGURE_FAMILIES = {
    "nu": (0.0, 0.25, 0.5, 1.0, 2.0),
    "mu": (0.0, 0.25, 0.5, 1.0, 2.0),
}

FIGURE_XI_RANGE = (0.0, 2.0, 200)

# nu below this is treated as zero (the 1F2 parameters 1/nu diverge)
NU_ZERO_THRESHOLD = 1e-12

THIN_CRYSTAL_WARNING_RATIO = 0.1

SPEED_OF_LIGHT = 299_792_458.0

EXIT_OK = 0
EXIT_INVALID_CONFIG = 2
EXIT_NOT_CONVERGED = 3
EXIT_ORACLE_FAILURE = 4

METHOD_CLOSED_FORM = "closed-form"
METHOD_HYPERGEOMETRIC = "hypergeometric"
METHOD_QUADRATURE = "quadrature"
METHOD_RAW_SERIES = "raw-series"

METHODS = (METHOD_CLOSED_FORM, METHOD_HYPERGEOMETRIC, METHOD_QUADRATURE, METHOD_RAW_SERIES)

# method column of the rho = 1 rows appended to figure data
METHOD_SQL_THRESHOLD = "sql-threshold"

import logging
import math

from scipy import optimize

from interferometer.constants import (
    METHOD_CLOSED_FORM,
    METHOD_HYPERGEOMETRIC,
    METHOD_QUADRATURE,
    METHOD_RAW_SERIES,
    METHODS,
    NU_ZERO_THRESHOLD,
)
from interferometer.exceptions import InvalidParameter, NoCrossing, NumericOverflow, SingularPhase, ZeroSignal
from interferometer.filemanager import Config
from interferometer.models import CrossingResult, DimensionlessParams, GPair, SensitivityResult
from interferometer.parameters import validate
from interferometer.special import (
    QuadratureRule,
    SeriesOptions,
    default_quadrature_rule,
    default_series_options,
    g1_mu_integral,
    hyp_1f2,
    sum_g_series,
)

# sin(2 phi0 - gamma1) below this is treated as a vanishing fringe slope
SINGULAR_SLOPE = 1e-12


def select_method(nu: float, mu: float) -> str:
    nu_zero = nu <= NU_ZERO_THRESHOLD
    mu_zero = mu <= NU_ZERO_THRESHOLD

    if nu_zero and mu_zero:
        return METHOD_CLOSED_FORM
    if mu_zero:
        return METHOD_HYPERGEOMETRIC
    if nu_zero:
        return METHOD_QUADRATURE
    return METHOD_RAW_SERIES


def g1_per_photon(
    xi: float,
    nu: float,
    mu: float,
    method: str | None = None,
    opts: SeriesOptions | None = None,
    rule: QuadratureRule | None = None,
) -> float:
    """|G1| / N_s by the requested branch, or the branch matching (nu, mu)"""
    method = method or select_method(nu, mu)

    try:
        value = _g1_branch(xi, nu, mu, method, opts, rule)
    except OverflowError:
        raise NumericOverflow(method, xi)

    if not math.isfinite(value):
        raise NumericOverflow(method, xi)
    return value


def _g1_branch(
    xi: float, nu: float, mu: float, method: str, opts: SeriesOptions | None, rule: QuadratureRule | None
) -> float:
    nu_zero = nu <= NU_ZERO_THRESHOLD
    mu_zero = mu <= NU_ZERO_THRESHOLD

    if method == METHOD_CLOSED_FORM:
        if not (nu_zero and mu_zero):
            raise InvalidParameter("method", method)
        return 2 * math.sinh(xi) ** 2

    if method == METHOD_HYPERGEOMETRIC:
        if nu_zero or not mu_zero:
            raise InvalidParameter("method", method)
        return hyp_1f2(1 / nu, 0.5, 1 + 1 / nu, xi**2, opts) - 1

    if method == METHOD_QUADRATURE:
        if not nu_zero:
            raise InvalidParameter("method", method)
        return g1_mu_integral(xi, mu, rule)

    if method == METHOD_RAW_SERIES:
        return sum_g_series(xi, nu, mu, start_n=1, opts=opts)

    raise InvalidParameter("method", method)


def compute_g(
    params: DimensionlessParams,
    method: str | None = None,
    opts: SeriesOptions | None = None,
    rule: QuadratureRule | None = None,
) -> GPair:
    validate(params)
    method = method or select_method(params.nu, params.mu)
    if method not in METHODS:
        raise InvalidParameter("method", method)

    g1 = g1_per_photon(params.xi, params.nu, params.mu, method, opts, rule)
    logging.getLogger(__name__).debug(f"compute_g: {method} branch at xi={params.xi}, nu={params.nu}, mu={params.mu}")

    # the G0 and |G1| series differ only in their first term
    return GPair(
        g0=params.n_seed * (1 + g1),
        g1_abs=params.n_seed * g1,
        gamma1=params.gamma1,
        method=method,
        n_seed=params.n_seed,
    )


def phase_sensitivity_sq(params: DimensionlessParams, g: GPair, phi0: float | None = None) -> float:
    phi0 = params.phi0 if phi0 is None else phi0

    if g.g1_abs == 0:
        raise ZeroSignal()

    slope = math.sin(2 * phi0 - g.gamma1)
    if abs(slope) < SINGULAR_SLOPE:
        raise SingularPhase(phi0, g.gamma1)

    numerator = math.cos(phi0) ** 2 * g.n_seed + math.sin(phi0) ** 2 * g.g0
    return numerator / (16 * g.g1_abs**2 * slope**2)


def ideal_sensitivity_sq(xi: float, n_seed: float, phi0: float, gamma1: float) -> float:
    """Closed form of phase_sensitivity_sq for nu = mu = 0"""
    if xi == 0:
        raise ZeroSignal()

    slope = math.sin(2 * phi0 - gamma1)
    if abs(slope) < SINGULAR_SLOPE:
        raise SingularPhase(phi0, gamma1)

    sinh_sq = math.sinh(xi) ** 2
    return (1 + 2 * math.sin(phi0) ** 2 * sinh_sq) / (64 * n_seed * sinh_sq**2 * slope**2)


def min_sensitivity(params: DimensionlessParams, g: GPair) -> float:
    """Minimum of the phase uncertainty, reached at phi0 = 0 with gamma1 = +-pi/2"""
    if g.g1_abs == 0:
        raise ZeroSignal()
    return math.sqrt(g.n_seed) / (4 * g.g1_abs)


def weak_squeezing_scaling(xi_a: float, xi_b: float, n_seed: float) -> float:
    """Order-of-magnitude uncertainty for two crystals of different squeezing; a scaling, not a result"""
    if xi_a == 0 or xi_b == 0:
        raise ZeroSignal()
    return 1 / (4 * xi_a * xi_b * math.sqrt(n_seed))


def mz_sensitivity(n_in: float, phi_delta: float) -> float:
    """Mach-Zehnder phase variance at relative phase phi_delta"""
    if not n_in > 0:
        raise InvalidParameter("n_in", n_in)

    sin_sq = math.sin(phi_delta) ** 2
    cos = math.cos(phi_delta)

    if sin_sq < SINGULAR_SLOPE**2:
        if cos > 0:
            raise SingularPhase(phi_delta, 0.0)
        # 2(1 + c) / (1 - c^2) = 2 / (1 - c) -> 1 at c = -1
        return 1 / n_in

    return 2 * (1 + cos) / (n_in * sin_sq)


def mz_min(n_in: float) -> float:
    if not n_in > 0:
        raise InvalidParameter("n_in", n_in)
    return 1 / math.sqrt(n_in)


def rho_from_g1(g1: float) -> float:
    if g1 == 0:
        raise ZeroSignal()
    return 1 / (4 * g1)


def rho_ratio(params: DimensionlessParams, method: str | None = None) -> float:
    """Ratio of the SU(1,1) minimum to the Mach-Zehnder minimum for N_in = N_s"""
    validate(params)
    if params.xi == 0:
        raise ZeroSignal()
    return rho_from_g1(g1_per_photon(params.xi, params.nu, params.mu, method))


def evaluate(params: DimensionlessParams, method: str | None = None) -> SensitivityResult:
    g = compute_g(params, method)
    return SensitivityResult(
        params=params,
        g=g,
        dphi_min=min_sensitivity(params, g),
        mz_min=mz_min(params.n_seed),
        rho=rho_from_g1(g.g1_per_photon),
    )


def sql_crossing(nu: float, mu: float) -> CrossingResult:
    """Squeezing parameter at which rho falls to the standard quantum limit"""
    for name, value in (("nu", nu), ("mu", mu)):
        if not (math.isfinite(value) and value >= 0):
            raise InvalidParameter(name, value)

    logger = logging.getLogger(__name__)
    lower, upper, max_upper = Config.get_crossing_bracket()
    opts, rule = default_series_options(), default_quadrature_rule()

    def excess(xi: float) -> float:
        return rho_from_g1(g1_per_photon(xi, nu, mu, opts=opts, rule=rule)) - 1

    while excess(upper) > 0:
        if upper * 2 > max_upper:
            raise NoCrossing(nu, mu, upper)
        upper *= 2
        logger.info(f"Expanding crossing bracket to [{lower}, {upper}] for nu={nu}, mu={mu}")

    xi_star, result = optimize.bisect(
        excess, lower, upper, xtol=Config.get_crossing_xtol(), maxiter=200, full_output=True
    )
    residual = abs(excess(xi_star))
    logger.info(f"SQL crossing for nu={nu}, mu={mu}: xi*={xi_star} after {result.iterations} iterations")

    return CrossingResult(
        nu=nu,
        mu=mu,
        xi_star=xi_star,
        bracket=(lower, upper),
        iterations=result.iterations,
        residual=residual,
    )


def penalty_factor(nu: float, mu: float) -> float:
    return sql_crossing(nu, mu).xi_star / sql_crossing(0.0, 0.0).xi_star

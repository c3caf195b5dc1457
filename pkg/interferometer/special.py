"""Series and special-function primitives for the seeded G-series.

All series share the general term (2 xi)^(2n) / [(2n)! (1 + n nu) sqrt(1 + n mu)], evaluated
by recurrence so that neither the power nor the factorial is ever formed on its own.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import math

import numpy as np

from interferometer.exceptions import InvalidParameter, NumericOverflow, SeriesNotConverged, UnsupportedOrder
from interferometer.filemanager import Config


@dataclass(frozen=True)
class SeriesOptions:
    rel_tol: float = 1e-14
    max_terms: int = 200

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise InvalidParameter("rel_tol", self.rel_tol)
        if self.max_terms < 2:
            raise InvalidParameter("max_terms", self.max_terms)

    @classmethod
    def from_settings(cls) -> "SeriesOptions":
        return cls(rel_tol=Config.get_series_rel_tol(), max_terms=Config.get_series_max_terms())


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Hermite rule for the weight exp(-x^2)"""

    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    order: int


def _check_nonnegative(**values: float) -> None:
    for name, value in values.items():
        if not (math.isfinite(value) and value >= 0):
            raise InvalidParameter(name, value)


def _term_ratio(n: int, xi: float, nu: float, mu: float) -> float:
    """t(n+1) / t(n)"""
    return (
        (2 * xi) ** 2
        / ((2 * n + 1) * (2 * n + 2))
        * (1 + n * nu)
        / (1 + (n + 1) * nu)
        * math.sqrt((1 + n * mu) / (1 + (n + 1) * mu))
    )


def series_term(n: int, xi: float, nu: float, mu: float) -> float:
    if n < 0:
        raise InvalidParameter("n", n)
    _check_nonnegative(xi=xi, nu=nu, mu=mu)

    term = 1.0
    for index in range(n):
        term *= _term_ratio(index, xi, nu, mu)
        if math.isinf(term):
            raise NumericOverflow("series_term", xi)
    return term


def sum_g_series(xi: float, nu: float, mu: float, start_n: int = 0, opts: SeriesOptions | None = None) -> float:
    """Sum the G-series from `start_n` (0 gives G0, 1 gives |G1|) per seed photon"""
    if start_n not in (0, 1):
        raise InvalidParameter("start_n", start_n)
    _check_nonnegative(xi=xi, nu=nu, mu=mu)
    opts = opts or default_series_options()

    if xi == 0:
        return 1.0 if start_n == 0 else 0.0

    term = 1.0
    total = term if start_n == 0 else 0.0

    for n in range(opts.max_terms):
        ratio = _term_ratio(n, xi, nu, mu)
        term *= ratio
        total += term

        # terms grow while n is below xi; only a decaying tail may stop the sum
        if ratio < 1 and term <= opts.rel_tol * total:
            return total

    raise SeriesNotConverged("sum_g_series", opts.max_terms)


def hyp_1f2(a: float, b1: float, b2: float, z: float, opts: SeriesOptions | None = None) -> float:
    """Generalized hypergeometric 1F2(a; b1, b2; z) by direct summation"""
    for name, value in (("b1", b1), ("b2", b2)):
        if value <= 0 and float(value).is_integer():
            raise InvalidParameter(name, value)
    if not math.isfinite(z):
        raise InvalidParameter("z", z)
    opts = opts or default_series_options()

    term = 1.0
    total = 1.0

    if z == 0:
        return total

    for n in range(opts.max_terms):
        ratio = (a + n) * z / ((b1 + n) * (b2 + n) * (n + 1))
        term *= ratio
        total += term

        if abs(ratio) < 1 and abs(term) <= opts.rel_tol * abs(total):
            return total

    raise SeriesNotConverged("hyp_1f2", opts.max_terms)


def gauss_hermite_rule(order: int | None = None) -> QuadratureRule:
    order = Config.get_quadrature_order() if order is None else order
    if order < 2:
        raise UnsupportedOrder(order)

    nodes, weights = _hermgauss(order)
    return QuadratureRule(nodes=nodes, weights=weights, order=order)


def g1_mu_integral(xi: float, mu: float, rule: QuadratureRule | None = None) -> float:
    """Bandwidth ensemble average of 2 sinh^2 over xi * exp(-mu x^2 / 2), per seed photon"""
    _check_nonnegative(xi=xi, mu=mu)
    rule = rule or default_quadrature_rule()

    effective_xi = xi * np.exp(-0.5 * mu * rule.nodes**2)
    # cosh(2y) - 1 = 2 sinh^2(y) keeps small xi free of cancellation
    with np.errstate(over="ignore"):
        integrand = 2 * np.sinh(effective_xi) ** 2

    return float(np.dot(rule.weights, integrand) / math.sqrt(math.pi))


@lru_cache(maxsize=16)
def _hermgauss(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.hermite.hermgauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


@lru_cache(maxsize=1)
def default_series_options() -> SeriesOptions:
    """Series options from settings.ini, read once per process"""
    return SeriesOptions.from_settings()


@lru_cache(maxsize=1)
def default_quadrature_rule() -> QuadratureRule:
    return gauss_hermite_rule(Config.get_quadrature_order())

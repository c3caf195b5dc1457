import math
import pytest

from interferometer.curve import phase_grid
from interferometer.exceptions import IllConditionedKernel
from interferometer.models import DimensionlessParams
from interferometer.oracle.grids import build_grids
from interferometer.oracle.moments import (
    mean_photon_number,
    modulated_displacement,
    numeric_g,
    purity_residual,
    seeded_moments,
    unseeded_moments,
    unseeded_sensitivity_sq,
)
from interferometer.oracle.thin_crystal import bogoliubov_uv, compose, seed_field
from interferometer.sensitivity import compute_g

PARAMS = DimensionlessParams(xi=0.5, nu=0.5, mu=0.5, n_seed=4.0, pump_phase_2=math.pi / 2)


def build_setup(params: DimensionlessParams, n_points: int = 24, extent: float = 5.0, n_max: int = 8):
    grids = build_grids(n_points, extent, params)
    seed = seed_field(grids, params.n_seed)
    first = bogoliubov_uv(params, params.pump_phase_1, n_max, grids)
    second = bogoliubov_uv(params, params.pump_phase_2, n_max, grids)
    return seed, first, second


@pytest.fixture(scope="module")
def setup():
    return build_setup(PARAMS)


@pytest.fixture(scope="module")
def unsqueezed():
    return build_setup(DimensionlessParams(xi=0.0, nu=0.5, mu=0.5, n_seed=4.0))


def test_unsqueezed_contractions(unsqueezed) -> None:
    g = numeric_g(*unsqueezed)
    assert g.g0 == pytest.approx(4.0, rel=1e-12)
    assert g.g1_contraction == 0


def test_gamma_follows_pump_phases(setup) -> None:
    assert numeric_g(*setup).gamma1 == pytest.approx(math.pi / 2, abs=1e-6)


def test_contractions_relate_through_crystal_identity(setup) -> None:
    g = numeric_g(*setup)
    assert g.g1_abs == pytest.approx(g.g0 - PARAMS.n_seed, rel=1e-8)


test_analytic_points = [
    (xi, nu, mu) for xi in (0.25, 0.5, 1.0) for nu, mu in ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0))
]


@pytest.mark.parametrize("xi,nu,mu", test_analytic_points)
def test_contractions_match_series(xi: float, nu: float, mu: float) -> None:
    params = DimensionlessParams(xi=xi, nu=nu, mu=mu, n_seed=2.0)
    numeric = numeric_g(*build_setup(params, n_points=48, n_max=10))
    analytic = compute_g(params)

    assert numeric.g0 == pytest.approx(analytic.g0, rel=1e-2)
    assert numeric.g1_abs == pytest.approx(analytic.g1_abs, rel=1e-2)


def test_unsqueezed_seed_passes_unchanged(unsqueezed) -> None:
    seed, first, second = unsqueezed
    moments = seeded_moments(seed, first, second, 0.4)

    assert moments.mean == pytest.approx(4.0, rel=1e-12)
    assert moments.variance == pytest.approx(4.0, rel=1e-12)
    assert moments.slope_analytic == 0
    assert moments.slope_fd == pytest.approx(0.0, abs=1e-8)


def test_displacement_keeps_beams_apart(unsqueezed) -> None:
    seed, first, second = unsqueezed
    eta1, eta2 = modulated_displacement(seed, compose(first, second, 0.3))

    assert eta1.norm_sq() == pytest.approx(seed.norm_sq(), rel=1e-12)
    assert eta2.norm_sq() == 0


@pytest.mark.parametrize("phi0", [0.1, 0.9, 2.0])
def test_fringe_law(setup, phi0: float) -> None:
    g = numeric_g(*setup)
    mean = mean_photon_number(*setup, phi0)
    shifted = mean_photon_number(*setup, phi0 + math.pi / 2)

    assert mean - shifted == pytest.approx(4 * abs(g.g1_contraction) * math.cos(2 * phi0 - g.gamma1), abs=1e-6 * mean)
    assert mean_photon_number(*setup, phi0 + math.pi) == pytest.approx(mean, rel=1e-10)


def test_fringe_amplitude_matches_series(setup) -> None:
    means = [mean_photon_number(*setup, phi0) for phi0 in (math.pi / 4, 3 * math.pi / 4)]
    assert abs(means[0] - means[1]) == pytest.approx(compute_g(PARAMS).g1_abs, rel=1e-2)


@pytest.mark.parametrize("phi_delta", [0.5, 1.7, -2.4])
def test_relative_phase_cancels(setup, phi_delta: float) -> None:
    reference = mean_photon_number(*setup, 0.8)
    assert mean_photon_number(*setup, 0.8, phi_delta) == pytest.approx(reference, rel=1e-12)


@pytest.mark.parametrize("phi0", [0.0, 0.3, -1.1])
def test_derivative_consistency(setup, phi0: float) -> None:
    moments = seeded_moments(*setup, phi0)
    assert moments.slope_fd == pytest.approx(moments.slope_analytic, rel=1e-6)


def test_variance_at_zero_phase_is_seed_number(setup) -> None:
    moments = seeded_moments(*setup, 0.0)

    assert moments.variance == pytest.approx(PARAMS.n_seed, rel=1e-12)
    assert moments.dphi0_sq == pytest.approx(moments.variance / moments.slope_fd**2)


def test_variance_at_quarter_turn_is_g0(setup) -> None:
    g = numeric_g(*setup)
    assert seeded_moments(*setup, math.pi / 2, g=g).variance == pytest.approx(g.g0, rel=1e-12)


WEAK = DimensionlessParams(xi=0.25, nu=0.25, mu=0.25, n_seed=4.0, pump_phase_2=math.pi / 2)


@pytest.fixture(scope="module")
def full_turn():
    setup = build_setup(WEAK, n_points=48, n_max=10)
    g = numeric_g(*setup)
    return setup, g, [seeded_moments(*setup, phi0, g=g) for phi0 in phase_grid(72)]


def test_fringe_law_over_full_turn(full_turn) -> None:
    _, g, moments = full_turn
    const = sum(m.mean for m in moments) / len(moments)
    worst = max(abs(m.mean - const - 2 * abs(g.g1_contraction) * math.cos(2 * m.phi0 - g.gamma1)) for m in moments)

    assert g.gamma1 == pytest.approx(math.pi / 2, abs=1e-6)
    assert worst < 1e-6 * const


def test_slopes_over_full_turn(full_turn) -> None:
    _, g, moments = full_turn
    amplitude = 4 * abs(g.g1_contraction)

    assert max(abs(m.slope_fd - m.slope_analytic) for m in moments) < 1e-6 * amplitude


def test_weak_squeezing_variance_at_zero_phase(full_turn) -> None:
    setup, g, _ = full_turn
    assert seeded_moments(*setup, 0.0, g=g).variance == pytest.approx(WEAK.n_seed, rel=1e-6)


@pytest.mark.parametrize("phi0", [-2.0, 0.4, 1.3])
@pytest.mark.parametrize("phi_delta", [0.5, -2.4])
def test_weak_squeezing_relative_phase_cancels(full_turn, phi0: float, phi_delta: float) -> None:
    setup, _, _ = full_turn
    reference = mean_photon_number(*setup, phi0)
    assert mean_photon_number(*setup, phi0, phi_delta) == pytest.approx(reference, rel=1e-12)


def test_weak_squeezing_photons_grow_quadratically() -> None:
    def excess(xi: float) -> float:
        params = DimensionlessParams(xi=xi, nu=0.5, mu=0.5, n_seed=4.0)
        return numeric_g(*build_setup(params, n_max=4)).g0 - params.n_seed

    assert excess(0.04) / excess(0.02) == pytest.approx(4.0, rel=1e-2)


def test_unseeded_moments_vanish_without_squeezing(unsqueezed) -> None:
    _, first, second = unsqueezed
    moments = unseeded_moments(compose(first, second, 0.5))

    assert moments.mean == pytest.approx(0.0, abs=1e-9)
    assert moments.variance == pytest.approx(0.0, abs=1e-9)


def test_unseeded_mean_has_period_pi(setup) -> None:
    _, first, second = setup
    moments = unseeded_moments(compose(first, second, 0.4))
    shifted = unseeded_moments(compose(first, second, 0.4 + math.pi))

    assert moments.mean > 0
    assert shifted.mean == pytest.approx(moments.mean, rel=1e-9)
    assert shifted.variance == pytest.approx(moments.variance, rel=1e-9)


def test_unseeded_sensitivity(setup) -> None:
    _, first, second = setup
    value = unseeded_sensitivity_sq(first, second, 0.3)
    assert math.isfinite(value) and value > 0


def purity_at(xi: float, n_max: int) -> float:
    params = DimensionlessParams(xi=xi, nu=0.0, mu=0.0, n_seed=1.0, pump_phase_2=math.pi / 2)
    _, first, second = build_setup(params, n_points=8, extent=3.0, n_max=n_max)
    return purity_residual(compose(first, second, 0.2), limit=8).residual


def test_purity_without_squeezing() -> None:
    assert purity_at(0.0, 2) == pytest.approx(0.0, abs=1e-12)


def test_purity_improves_with_truncation_order() -> None:
    assert purity_at(0.5, 1) > purity_at(0.5, 2)
    assert purity_at(0.5, 4) < 1e-5


def test_purity_reports_ill_conditioning(mocker) -> None:
    params = DimensionlessParams(xi=0.5, nu=0.0, mu=0.0, n_seed=1.0)
    _, first, second = build_setup(params, n_points=8, extent=3.0, n_max=2)
    mocker.patch("interferometer.oracle.moments.np.linalg.cond", return_value=math.inf)

    with pytest.raises(IllConditionedKernel):
        purity_residual(compose(first, second, 0.0), limit=8)

import json
import logging
import math
from dataclasses import fields

from interferometer.constants import THIN_CRYSTAL_WARNING_RATIO
from interferometer.exceptions import InvalidConfig, InvalidParameter
from interferometer.models import DimensionlessParams, PhysicalSetup, PumpSpec, SeedSpec

PHYSICAL_KEYS = tuple(f.name for f in fields(PhysicalSetup))
DIMENSIONLESS_KEYS = tuple(f.name for f in fields(DimensionlessParams))
SEED_KEYS = ("xi0_mag",)
SWEEP_KEYS = ("xi_min", "xi_max", "xi_steps", "nus", "mus", "out", "method")
ORACLE_KEYS = ("n_points", "extent", "n_max")
CURVE_KEYS = ("phi0_steps",)

ALLOWED_CONFIG_KEYS = frozenset(PHYSICAL_KEYS + DIMENSIONLESS_KEYS + SEED_KEYS + SWEEP_KEYS + ORACLE_KEYS + CURVE_KEYS)

PHASE_KEYS = ("phi0", "phi_delta", "pump_phase_1", "pump_phase_2")


def derive_dimensionless(
    setup: PhysicalSetup,
    phases: tuple[float, float] = (0.0, math.pi / 2),
    seed: SeedSpec | None = None,
    phi0: float = 0.0,
    phi_delta: float = 0.0,
) -> DimensionlessParams:
    """Reduce a laboratory setup to (xi, nu, mu, n_seed) and the phases.

    The seed magnitude is taken from `seed`; its beam waist and bandwidth must be those of `setup`.
    """
    validate_setup(setup)

    if seed is None:
        raise InvalidParameter("seed", seed)
    if not seed.xi0_mag > 0:
        raise InvalidParameter("xi0_mag", seed.xi0_mag)

    ratio = thin_crystal_ratio(setup)
    if ratio >= THIN_CRYSTAL_WARNING_RATIO:
        logging.getLogger(__name__).warning(f"Crystal length is {ratio:.3f} of the pump Rayleigh range (thin-crystal limit)")

    xi = (
        setup.crystal_length
        * setup.psi0_mag
        * setup.sigma_ooe
        * setup.omega_p**1.5
        * math.sqrt(setup.delta_p)
        / (math.sqrt(2) * math.pi**0.75 * setup.c**2 * setup.w_p)
    )

    return DimensionlessParams(
        xi=xi,
        nu=setup.w_s**2 / setup.w_p**2,
        mu=setup.delta_p**2 / setup.delta_s**2,
        n_seed=seed.xi0_mag**2,
        phi0=phi0,
        phi_delta=phi_delta,
        pump_phase_1=phases[0],
        pump_phase_2=phases[1],
    )


def physical_setup(pump: PumpSpec, seed: SeedSpec, crystal_length: float, sigma_ooe: float) -> PhysicalSetup:
    """One crystal stage from the beams that drive it"""
    return PhysicalSetup(
        w_p=pump.w_p,
        w_s=seed.w_s,
        delta_p=pump.delta_p,
        delta_s=seed.delta_s,
        omega_p=pump.omega_p,
        crystal_length=crystal_length,
        sigma_ooe=sigma_ooe,
        psi0_mag=pump.psi0_mag,
    )


def pump_phases(pumps: tuple[PumpSpec, PumpSpec]) -> tuple[float, float]:
    return pumps[0].phase, pumps[1].phase


def validate_setup(setup: PhysicalSetup) -> PhysicalSetup:
    for name in PHYSICAL_KEYS:
        value = getattr(setup, name)
        if not (math.isfinite(value) and value > 0):
            raise InvalidParameter(name, value)
    return setup


def validate(params: DimensionlessParams) -> DimensionlessParams:
    """Return the params unchanged if every invariant holds"""
    for name in ("xi", "nu", "mu"):
        value = getattr(params, name)
        if not (math.isfinite(value) and value >= 0):
            raise InvalidParameter(name, value)

    # the seeded analysis requires a seed
    if not (math.isfinite(params.n_seed) and params.n_seed > 0):
        raise InvalidParameter("n_seed", params.n_seed)

    for name in PHASE_KEYS:
        if not math.isfinite(getattr(params, name)):
            raise InvalidParameter(name, getattr(params, name))

    return params


def pump_rayleigh_range(setup: PhysicalSetup) -> float:
    return setup.omega_p * setup.w_p**2 / (2 * setup.c)


def thin_crystal_ratio(setup: PhysicalSetup) -> float:
    return setup.crystal_length / pump_rayleigh_range(setup)


def read_json_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf8") as file:
            config = json.load(file)
    except (OSError, json.JSONDecodeError) as err:
        raise InvalidConfig(path, str(err))

    if not isinstance(config, dict):
        raise InvalidConfig(path, "expected a single JSON object")

    for key in config:
        if key not in ALLOWED_CONFIG_KEYS:
            raise InvalidConfig(key, "unknown key")

    return config


def params_from_mapping(mapping: dict) -> DimensionlessParams:
    """Build validated params; physical keys take precedence and are reduced"""
    phases = {key: float(mapping[key]) for key in PHASE_KEYS if key in mapping}

    if any(key in mapping for key in PHYSICAL_KEYS):
        missing = [key for key in PHYSICAL_KEYS if key not in mapping and key != "c"]
        if missing:
            raise InvalidConfig(missing[0], "required when a physical setup is given")

        values = {key: float(mapping[key]) for key in PHYSICAL_KEYS if key in mapping}

        if "xi0_mag" in mapping:
            xi0_mag = float(mapping["xi0_mag"])
        elif "n_seed" in mapping:
            xi0_mag = math.sqrt(float(mapping["n_seed"]))
        else:
            raise InvalidConfig("xi0_mag", "a seed magnitude or n_seed is required")

        pumps = tuple(
            PumpSpec(
                psi0_mag=values["psi0_mag"],
                w_p=values["w_p"],
                omega_p=values["omega_p"],
                delta_p=values["delta_p"],
                phase=phases.get(key, default),
            )
            for key, default in (("pump_phase_1", 0.0), ("pump_phase_2", math.pi / 2))
        )
        seed = SeedSpec(xi0_mag=xi0_mag, w_s=values["w_s"], omega_s=values["omega_p"] / 2, delta_s=values["delta_s"])
        setup = physical_setup(pumps[0], seed, values["crystal_length"], values["sigma_ooe"])
        if "c" in values:
            setup = PhysicalSetup(**{**setup.__dict__, "c": values["c"]})

        params = derive_dimensionless(
            setup,
            phases=pump_phases(pumps),
            seed=seed,
            phi0=phases.get("phi0", 0.0),
            phi_delta=phases.get("phi_delta", 0.0),
        )
        return validate(params)

    try:
        values = {key: float(mapping[key]) for key in ("xi", "nu", "mu", "n_seed")}
    except KeyError as err:
        raise InvalidConfig(err.args[0], "missing dimensionless parameter")

    return validate(DimensionlessParams(**values, **phases))

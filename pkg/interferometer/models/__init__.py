from interferometer.models.parameters import DimensionlessParams, PhysicalSetup, PumpSpec, SeedSpec, normalize_angle
from interferometer.models.results import CrossingResult, GPair, OutputRow, SensitivityResult, SweepConfig

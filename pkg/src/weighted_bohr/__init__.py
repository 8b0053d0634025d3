"""Weighted Bohr-type inequalities: weights, series, functionals, radii and checks."""

from .errors import (BohrError, CapabilityError, DomainError, NoRadiusError,
                     PreconditionError, ToolingError)
from .weights import WeightSequence, tail_sum
from .series import PowerSeries, blaschke, compose, cauchy_product, mobius
from .functionals import (FunctionalValue, QuadraticWeight, bohr_functional, bombieri_bound,
                          carlson_residuals, derivative_majorant, harmonic_functional,
                          majorant, refined_functional)
from .radii import (radius_corollary, radius_general, radius_harmonic, radius_odd,
                    radius_power, radius_schwarz_derivative, solve)
from .families import TestFunctionSpec, gen
from .verify import VerificationReport, run_check

__version__ = "0.1.0"

__all__ = [
    "BohrError", "CapabilityError", "DomainError", "NoRadiusError", "PreconditionError",
    "ToolingError", "WeightSequence", "tail_sum", "PowerSeries", "blaschke", "compose",
    "cauchy_product", "mobius", "FunctionalValue", "QuadraticWeight", "bohr_functional",
    "bombieri_bound", "carlson_residuals", "derivative_majorant", "harmonic_functional",
    "majorant", "refined_functional", "radius_corollary", "radius_general",
    "radius_harmonic", "radius_odd", "radius_power", "radius_schwarz_derivative", "solve",
    "TestFunctionSpec", "gen", "VerificationReport", "run_check",
]

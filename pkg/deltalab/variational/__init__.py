"""Correlation-factor variational bounds on the contact problem."""

from .bounds import (
    bound_sweep,
    excited_overlap,
    gaussian_correction_exact,
    scaling_exponent,
    two_particle_bound,
)
from .factors import (
    NormDefect,
    factor_complement,
    factor_eval,
    kinetic_integral_2d,
    norm_defect_2d,
    oscillator_density_2d,
    two_d_table,
)
from .montecarlo import nbody_bound_mc, nbody_sweep, trial_gradients
from .schemas import CorrelationFactor, FactorKind, VariationalEstimate

__all__ = [
    "CorrelationFactor",
    "FactorKind",
    "NormDefect",
    "VariationalEstimate",
    "bound_sweep",
    "excited_overlap",
    "factor_complement",
    "factor_eval",
    "gaussian_correction_exact",
    "kinetic_integral_2d",
    "nbody_bound_mc",
    "nbody_sweep",
    "norm_defect_2d",
    "oscillator_density_2d",
    "scaling_exponent",
    "trial_gradients",
    "two_d_table",
    "two_particle_bound",
]

"""Special functions and the D-dimensional s-wave oscillator basis."""

from .basis import radial_basis, radial_eigenfunction, sphere_area
from .gamma import log_gamma, psi0_sq, psi0_sq_values, weight_ratio, weight_ratios

__all__ = [
    "log_gamma",
    "psi0_sq",
    "psi0_sq_values",
    "radial_basis",
    "radial_eigenfunction",
    "sphere_area",
    "weight_ratio",
    "weight_ratios",
]

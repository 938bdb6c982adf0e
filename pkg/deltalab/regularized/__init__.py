"""Gaussian regularization of the contact term and the order of limits."""

from .hamiltonian import (
    DEFAULT_EPSILON_GRID,
    contact_matrix,
    contact_overlaps,
    delta_eps_matrix,
    double_limit_study,
    eigen_lowest,
    unperturbed_levels,
)
from .schemas import RegularizedProblem

__all__ = [
    "DEFAULT_EPSILON_GRID",
    "RegularizedProblem",
    "contact_matrix",
    "contact_overlaps",
    "delta_eps_matrix",
    "double_limit_study",
    "eigen_lowest",
    "unperturbed_levels",
]

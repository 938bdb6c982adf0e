"""Exactly solvable well with a central barrier of shrinking radius."""

from .model import (
    expansion_check,
    interior_log_derivative,
    origin_suppression,
    predicted_correction,
    predicted_log_psi0,
    relative_correction,
    solve_well,
    well_table,
    well_wave_function,
)
from .schemas import WellBranch, WellModel, WellSolution

__all__ = [
    "WellBranch",
    "WellModel",
    "WellSolution",
    "expansion_check",
    "interior_log_derivative",
    "origin_suppression",
    "predicted_correction",
    "predicted_log_psi0",
    "relative_correction",
    "solve_well",
    "well_table",
    "well_wave_function",
]

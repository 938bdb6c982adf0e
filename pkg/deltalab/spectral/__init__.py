"""Secular equation of the oscillator + contact problem and its large-K laws."""

from .asymptotics import (
    EULER_GAMMA,
    asymptotic_law,
    richardson_k_half,
    shift_sweep,
    term_exponent_fit,
    term_values,
)
from .perturbation import pt_first_order, pt_second_order_partial
from .schemas import Coupling, SpectralProblem, SpectralSolution
from .secular import secular_lhs, secular_terms, solve_shift

__all__ = [
    "EULER_GAMMA",
    "Coupling",
    "SpectralProblem",
    "SpectralSolution",
    "asymptotic_law",
    "pt_first_order",
    "pt_second_order_partial",
    "richardson_k_half",
    "secular_lhs",
    "secular_terms",
    "shift_sweep",
    "solve_shift",
    "term_exponent_fit",
    "term_values",
]

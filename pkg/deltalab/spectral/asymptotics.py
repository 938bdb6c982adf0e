"""
Large-K behavior of the secular problem.

The k-th secular term behaves like C k^{D/2-2}: the series diverges for D >= 2
and the shift of every level is driven to zero as K grows, while for D < 2 the
shifts converge to finite limits with corrections in K^{-1/2}.
"""

from collections.abc import Callable, Iterable, Sequence
from functools import partial
from typing import NamedTuple

import numpy as np
from scipy.special import gamma

from deltalab.core.exceptions import DomainError
from deltalab.core.tables import ResultTable
from deltalab.specfun import psi0_sq_values

from .schemas import SpectralProblem
from .secular import solve_shift

EULER_GAMMA = 0.5772156649015329


class TermFit(NamedTuple):
    slope: float
    prefactor: float


def term_values(delta: float, k: np.ndarray, D: float) -> np.ndarray:
    """Secular terms b_k = |psi_k(0)|^2 / (Delta - 2k) at selected indices."""
    k = np.asarray(k, dtype=int)
    weights = psi0_sq_values(int(k.max()), D)[k]
    return weights / (delta - 2.0 * k)


def term_exponent_fit(
    D: float,
    k_range: tuple[float, float] = (1e3, 1e6),
    delta: float = 1.0,
    points: int = 40,
) -> TermFit:
    """Least-squares slope (and prefactor) of ln|b_k| against ln k."""
    k_lo, k_hi = k_range
    if not 0 < k_lo < k_hi:
        raise ValueError(f"k_range must be increasing and positive, got {k_range}")
    if not 0 < delta < 2:
        raise ValueError(f"Delta must lie in (0, 2), got {delta}")
    k = np.unique(np.geomspace(k_lo, k_hi, points).astype(int))
    b = term_values(delta, k, D)
    slope, intercept = np.polyfit(np.log(k), np.log(np.abs(b)), 1)
    return TermFit(float(slope), float(np.exp(intercept)))


def asymptotic_law(K: int, D: float) -> float:
    """Leading large-K ground energy in the hard-core limit.

    D > 2: D/2 + (D-2) Gamma(D/2) / (K + D/2)^{(D-2)/2}
    D = 2: 1 + 2 / (ln K + gamma)
    """
    if D < 2:
        raise DomainError(
            f"The vanishing-shift law holds only for D >= 2, got D={D}", {"D": D}
        )
    if K < 2:
        raise DomainError(f"The law needs K >= 2, got K={K}", {"K": K})
    if D == 2:
        return 1.0 + 2.0 / (float(np.log(K)) + EULER_GAMMA)
    tail = (K + 0.5 * D) ** (0.5 * (D - 2.0))
    return 0.5 * D + (D - 2.0) * float(gamma(0.5 * D)) / tail


def _sweep_point(template: SpectralProblem, K: int) -> list[float | int | None]:
    solution = solve_shift(template.with_truncation(K))
    if template.D >= 2 and K >= 2:
        predicted = asymptotic_law(K, template.D)
        ratio = solution.shift / (predicted - 0.5 * template.D)
    else:
        predicted, ratio = None, None
    return [K, solution.shift, predicted, ratio]


def shift_sweep(
    template: SpectralProblem,
    K_grid: Sequence[int],
    mapper: Callable[..., Iterable] = map,
) -> ResultTable:
    """Solve ``template`` at every truncation in ``K_grid``.

    Points are independent; ``mapper`` (e.g. ``executor.map``) may run them
    concurrently. Rows come back in grid order.
    """
    K_grid = [int(K) for K in K_grid]
    if any(b <= a for a, b in zip(K_grid, K_grid[1:], strict=False)):
        raise ValueError("K_grid must be strictly increasing")
    rows = list(mapper(partial(_sweep_point, template), K_grid))
    return ResultTable(
        columns=["K", "shift", "predicted", "ratio"],
        rows=rows,
        meta={
            "D": template.D,
            "coupling": template.coupling.label(),
            "n": template.n,
        },
    )


def richardson_k_half(K_values: Sequence[int], shifts: Sequence[float]) -> float:
    """Extrapolate Delta(K) = Delta_inf + c K^{-1/2} + ... to K -> infinity."""
    if len(K_values) != len(shifts) or len(K_values) < 2:
        raise ValueError("Need at least two (K, shift) pairs")
    x = np.asarray(K_values, dtype=float) ** -0.5
    _, intercept = np.polyfit(x, np.asarray(shifts, dtype=float), 1)
    return float(intercept)

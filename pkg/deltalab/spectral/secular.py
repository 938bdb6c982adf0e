"""
Secular equation of the truncated oscillator + contact problem.

With Delta = E - D/2 the levels solve

    sum_{k=0}^{K} |psi_k(0)|^2 / (Delta - 2k) = 1/g     (hard core: = 0).

The left side has simple poles at Delta = 2k and is strictly decreasing
between them, so every level sits alone in a bracket between two poles.
"""

import numpy as np

from deltalab.config.logging import get_logger
from deltalab.config.settings import settings
from deltalab.core.exceptions import BracketError, PoleError
from deltalab.numerics.roots import bisect
from deltalab.numerics.summation import compensated_sum
from deltalab.specfun import psi0_sq_values

from .schemas import SpectralProblem, SpectralSolution

logger = get_logger(__name__)

# Inset shrink factor when the initial inset overshoots a root hugging a pole
_INSET_SHRINK = 1e-3
_MIN_INSET = 1e-300


def secular_terms(delta: float, K: int, D: float) -> np.ndarray:
    """Terms |psi_k(0)|^2 / (Delta - 2k), k = 0..K."""
    k = np.arange(K + 1, dtype=float)
    denominators = delta - 2.0 * k
    if np.any(denominators == 0.0):
        raise PoleError(
            f"Delta={delta} is a pole of the secular function",
            {"delta": delta, "K": K, "D": D},
        )
    return psi0_sq_values(K, D) / denominators


def secular_lhs(delta: float, K: int, D: float) -> float:
    """Left side of the secular equation, compensated sum in descending k."""
    if K < 0:
        raise ValueError(f"Truncation must be non-negative, got {K}")
    return compensated_sum(secular_terms(delta, K, D), descending=True)


def _bracket(p: SpectralProblem) -> tuple[float, float]:
    if p.n >= p.K:
        raise BracketError(
            f"Level n={p.n} has no two-pole bracket at truncation K={p.K}",
            {"n": p.n, "K": p.K},
        )
    g = p.coupling.g
    if g is not None and g < 0:
        # Attraction (D < 2 only): the level drops one interval
        if p.n == 0:
            return -np.inf, 0.0
        return 2.0 * p.n - 2.0, 2.0 * p.n
    return 2.0 * p.n, 2.0 * p.n + 2.0


def _inset_end(f, pole: float, direction: int, width: float) -> tuple[float, float]:
    """Point just inside a pole where f has the sign expected there.

    Left ends need f > 0, right ends f < 0. Roots closer to the pole than the
    default inset (tiny couplings) shrink the inset until the sign is right.
    """
    inset = settings.bracket_inset
    x = pole + direction * inset * width
    fx = f(x)
    while (fx > 0) != (direction > 0):
        nxt = pole + direction * inset * _INSET_SHRINK * width
        if nxt == pole or inset < _MIN_INSET:
            break
        inset *= _INSET_SHRINK
        x, fx = nxt, f(nxt)
    return x, fx


def solve_shift(p: SpectralProblem) -> SpectralSolution:
    """Solve the secular equation for level ``p.n`` by bisection."""
    g = p.coupling.g
    if g == 0.0:
        shift = 2.0 * p.n
        return SpectralSolution(shift, shift + 0.5 * p.D, 0.0, (shift, shift), 0)

    target = p.coupling.inverse

    def f(delta: float) -> float:
        return secular_lhs(delta, p.K, p.D) - target

    pole_lo, pole_hi = _bracket(p)

    if np.isinf(pole_lo):
        hi, f_hi = _inset_end(f, pole_hi, -1, 2.0)
        lo, f_lo = -2.0, f(-2.0)
        while f_lo <= 0:
            lo *= 2.0
            if lo < -1e300:
                raise BracketError("Bound-state bracket expansion failed", {"g": g})
            f_lo = f(lo)
    else:
        width = pole_hi - pole_lo
        lo, f_lo = _inset_end(f, pole_lo, +1, width)
        hi, f_hi = _inset_end(f, pole_hi, -1, width)

    root = bisect(f, lo, hi, f_lo=f_lo, f_hi=f_hi)
    residual = abs(f(root.x))
    logger.debug(
        "secular root",
        D=p.D,
        K=p.K,
        n=p.n,
        coupling=p.coupling.label(),
        shift=root.x,
        iterations=root.iterations,
        residual=residual,
    )
    return SpectralSolution(
        shift=root.x,
        energy=root.x + 0.5 * p.D,
        residual=residual,
        bracket=(lo, hi),
        iterations=root.iterations,
    )

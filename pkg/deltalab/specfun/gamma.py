"""
Gamma-function quantities of the oscillator basis.

The per-term weight Gamma(k + D/2) / Gamma(k + 1) is always built by the
recurrence ratio_{k+1} = ratio_k * (k + D/2) / (k + 1), never as a difference
of log-gammas, so the weights stay accurate and finite up to k ~ 1e7.
"""

from functools import lru_cache

import numpy as np
from scipy import special

from deltalab.core.exceptions import DomainError

from .schemas import BasisIndex


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(
            f"log_gamma requires a positive argument, got {x}", {"x": x}
        )
    return float(special.gammaln(x))


@lru_cache(maxsize=16)
def _ratio_products(K: int, D: float) -> np.ndarray:
    """prod_{j<k} (j + D/2)/(j + 1) for k = 0..K."""
    j = np.arange(K, dtype=float)
    factors = np.empty(K + 1)
    factors[0] = 1.0
    factors[1:] = (j + 0.5 * D) / (j + 1.0)
    products = np.cumprod(factors)
    products.setflags(write=False)
    return products


def weight_ratios(K: int, D: float) -> np.ndarray:
    """Gamma(k + D/2) / Gamma(k + 1) for k = 0..K."""
    BasisIndex(k=K, D=D)
    return special.gamma(0.5 * D) * _ratio_products(K, float(D))


def weight_ratio(k: int, D: float) -> float:
    """Gamma(k + D/2) / Gamma(k + 1) by recurrence from Gamma(D/2)."""
    BasisIndex(k=k, D=D)
    return float(weight_ratios(k, D)[k])


def psi0_sq_values(K: int, D: float) -> np.ndarray:
    """|psi_k(0)|^2 for k = 0..K.

    Equals weight_ratio(k, D) / (pi^{D/2} Gamma(D/2)); the Gamma(D/2) factors
    cancel, leaving pi^{-D/2} times the recurrence products.
    """
    BasisIndex(k=K, D=D)
    return _ratio_products(K, float(D)) * np.pi ** (-0.5 * D)


def psi0_sq(k: int, D: float) -> float:
    """Squared origin value of the normalized k-th s-wave state."""
    return float(psi0_sq_values(k, D)[k])

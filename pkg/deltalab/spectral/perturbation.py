"""Rayleigh-Schrodinger corrections for the contact term."""

import numpy as np

from deltalab.numerics.summation import compensated_sum
from deltalab.specfun import psi0_sq, psi0_sq_values
from deltalab.specfun.schemas import BasisIndex


def pt_first_order(n: int, g: float, D: float) -> float:
    """E_n to first order: 2n + D/2 + g |psi_n(0)|^2."""
    level = BasisIndex(k=n, D=D)
    return level.energy + g * psi0_sq(n, D)


def pt_second_order_partial(n: int, g: float, D: float, K: int) -> float:
    """Second-order correction summed over intermediate states k <= K, k != n.

    g^2 |psi_n(0)|^2 sum_k |psi_k(0)|^2 / (E_n - E_k). The k-th term decays
    like k^{D/2 - 2}, so the partial sums converge only for D < 2.
    """
    BasisIndex(k=n, D=D)
    if n > K:
        raise ValueError(f"Level n={n} exceeds truncation K={K}")
    weights = psi0_sq_values(K, D)
    k = np.arange(K + 1, dtype=float)
    gaps = 2.0 * (n - k)
    gaps[n] = 1.0
    terms = weights / gaps
    terms[n] = 0.0
    return g * g * float(weights[n]) * compensated_sum(terms)

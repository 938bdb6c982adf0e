"""
Normalized s-wave eigenfunctions of the D-dimensional isotropic oscillator.

psi_k(r) = N_k L_k^{(a)}(r^2) exp(-r^2/2), a = D/2 - 1, with

    N_k^2 = 2 Gamma(k+1) / (S_{D-1} Gamma(k + D/2)),  S_{D-1} = 2 pi^{D/2} / Gamma(D/2).

With x = r^2 the measure S_{D-1} r^{D-1} dr becomes (S_{D-1}/2) x^a dx, so
the Laguerre orthogonality integral Gamma(k+a+1)/k! fixes N_k, and
L_k^{(a)}(0) = Gamma(k+a+1)/(k! Gamma(a+1)) then gives

    psi_k(0)^2 = Gamma(k + D/2) / (Gamma(k+1) pi^{D/2} Gamma(D/2)),

the weight used by the secular equation.

The three-term Laguerre recurrence is run directly on the normalized functions,
so no intermediate L_k (which grows like k^a) or N_k (which decays) is formed.
"""

import numpy as np
from scipy import special

from .schemas import BasisIndex


def sphere_area(D: float) -> float:
    """Surface area S_{D-1} of the unit sphere in D dimensions."""
    return float(2.0 * np.pi ** (0.5 * D) / special.gamma(0.5 * D))


def radial_basis(K: int, D: float, r: np.ndarray | float) -> np.ndarray:
    """Values psi_k(r) for k = 0..K at every radius.

    Returns:
        Array of shape (K + 1, len(r)).
    """
    BasisIndex(k=K, D=D)
    r = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(r < 0):
        raise ValueError("Radii must be non-negative")

    a = 0.5 * D - 1.0
    x = r * r
    out = np.empty((K + 1, r.size))
    out[0] = np.pi ** (-0.25 * D) * np.exp(-0.5 * x)
    if K >= 1:
        out[1] = (1.0 + a - x) * np.sqrt(1.0 / (a + 1.0)) * out[0]
    for k in range(1, K):
        up = np.sqrt((k + 1.0) / (k + a + 1.0))
        down = np.sqrt((k + 1.0) * k / ((k + a + 1.0) * (k + a)))
        out[k + 1] = (
            (2.0 * k + 1.0 + a - x) * up * out[k] - (k + a) * down * out[k - 1]
        ) / (k + 1.0)
    return out


def radial_eigenfunction(
    k: int, D: float, r: np.ndarray | float
) -> np.ndarray | float:
    """Normalized s-wave state psi_k at radius r (scalar in, scalar out)."""
    BasisIndex(k=k, D=D)
    values = radial_basis(k, D, r)[k]
    if np.ndim(r) == 0:
        return float(values[0])
    return values

"""Independent reference solutions used by the tests only."""

import math

import mpmath
import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import eigh_tridiagonal
from scipy.optimize import brentq
from scipy.special import gamma, rgamma


def contact_coupling_1d(nu: float) -> float:
    """Coupling g whose even D=1 ground level sits at E = nu + 1/2.

    The even solution decaying at infinity is D_nu(sqrt(2) x); the jump
    condition psi'(0+) = g psi(0) gives g = -2 Gamma((1-nu)/2) / Gamma(-nu/2).
    """
    return -2.0 * gamma(0.5 * (1.0 - nu)) * rgamma(-0.5 * nu)


def contact_shift_1d(g: float) -> float:
    """Exact shift Delta_0 of the D=1 oscillator with a contact term g."""
    if g > 0:
        lo, hi = 1e-12, 1.0 - 1e-12
    else:
        lo, hi = -60.0, -1e-12
    return brentq(lambda nu: contact_coupling_1d(nu) - g, lo, hi, xtol=1e-15)


def secular_lhs_mp(delta: float, K: int, D: float, dps: int = 50) -> float:
    """Secular sum by brute force in multiprecision arithmetic."""
    with mpmath.workdps(dps):
        half_d = mpmath.mpf(D) / 2
        prefactor = mpmath.pi ** (-half_d) / mpmath.gamma(half_d)
        total = mpmath.mpf(0)
        for k in range(K + 1):
            weight = mpmath.gamma(k + half_d) / mpmath.gamma(k + 1)
            total += weight / (mpmath.mpf(delta) - 2 * k)
        return float(prefactor * total)


def gaussian_ground_1d(g: float, eps: float, h: float, length: float = 10.0) -> float:
    """Even ground level of 1/2 p^2 + 1/2 x^2 + g delta_eps(x) on a grid.

    Cell-centred second-order differences on [0, length] with a reflecting
    end at the origin, so only even states are present.
    """
    n = int(round(length / h))
    x = (np.arange(n) + 0.5) * h
    potential = 0.5 * x * x + g * np.exp(-((x / eps) ** 2)) / (math.sqrt(math.pi) * eps)
    diagonal = 1.0 / (h * h) + potential
    diagonal[0] -= 0.5 / (h * h)
    off = np.full(n - 1, -0.5 / (h * h))
    return float(
        eigh_tridiagonal(
            diagonal, off, eigvals_only=True, select="i", select_range=(0, 0)
        )[0]
    )


def gaussian_ground_1d_extrapolated(g: float, eps: float, h: float = 0.004) -> float:
    """Grid energy with the h^2 error removed by one Richardson step."""
    coarse = gaussian_ground_1d(g, eps, h)
    fine = gaussian_ground_1d(g, eps, 0.5 * h)
    return (4.0 * fine - coarse) / 3.0


def well_energy_shooting(R: float, eps: float, g: float) -> float:
    """Ground energy of the well with a central barrier by ODE shooting.

    u'' = (V - E) u with u(0) = 0, integrated across the barrier edge in two
    pieces; E is the root of u(R).
    """
    height = 3.0 * g / (4.0 * math.pi * eps**3)

    def u_at_wall(E: float) -> float:
        inside = solve_ivp(
            lambda r, y: [y[1], (height - E) * y[0]],
            (0.0, eps),
            [0.0, 1.0],
            method="DOP853",
            rtol=1e-12,
            atol=1e-14,
        )
        start = inside.y[:, -1] / abs(inside.y[0, -1])
        outside = solve_ivp(
            lambda r, y: [y[1], -E * y[0]],
            (eps, R),
            start,
            method="DOP853",
            rtol=1e-12,
            atol=1e-14,
        )
        return float(outside.y[0, -1])

    lo = (math.pi / R) ** 2
    hi = (math.pi / (R - eps)) ** 2
    return brentq(u_at_wall, lo * (1.0 + 1e-12), hi, xtol=1e-14, rtol=1e-14)

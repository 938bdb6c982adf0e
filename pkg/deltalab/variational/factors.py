"""
Pair correlation factors and the two-dimensional integrals built on them.

For the two-dimensional factor f = 1 - exp(-y), y = (beta r)^(1/alpha), every
integral is taken in the log-radius v = ln(beta r). Then y = exp(v/alpha),
r f'(r) = y exp(-y) / alpha and r^2 = exp(2v) / beta^2, so beta never has to be
formed and alpha up to the overflow of exp(alpha) stays usable.
"""

import math
from collections.abc import Callable, Sequence
from typing import NamedTuple

import numpy as np
from scipy.special import gammaln

from deltalab.core.tables import ResultTable
from deltalab.numerics.quadrature import integrate

from .schemas import CorrelationFactor, FactorKind

# Tail cut for y = (beta r)^(1/alpha): exp(-y) y^(2 alpha) is negligible beyond it
_Y_TAIL = 40.0
_LOG_RADIUS_SPAN = 25.0
# exp(-r^2) < 1e-43 past this radius
_R_MAX = 10.0


def _as_radii(r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or not np.all(np.isfinite(r)):
        raise ValueError("Radii must be finite and non-negative")
    return r


def factor_eval(c: CorrelationFactor, r) -> tuple[np.ndarray, np.ndarray]:
    """Value f(r) and radial derivative f'(r), elementwise.

    The two-dimensional derivative diverges like r^(1/alpha - 1) at the origin
    and is returned as inf there.
    """
    r = _as_radii(r)
    if c.kind is FactorKind.IDENTITY:
        return np.ones_like(r), np.zeros_like(r)

    if c.kind is FactorKind.GAUSSIAN:
        x = r / c.b
        complement = np.exp(-x * x)
        return -np.expm1(-x * x), 2.0 * x / c.b * complement

    alpha = c.alpha
    with np.errstate(divide="ignore"):
        log_r = np.log(r)
    y = np.exp((c.log_beta + log_r) / alpha)
    with np.errstate(over="ignore", invalid="ignore"):
        log_slope = (
            -math.log(alpha) + c.log_beta / alpha + (1.0 / alpha - 1.0) * log_r - y
        )
        derivative = np.exp(log_slope)
    derivative = np.where(r == 0.0, np.inf, derivative)
    return -np.expm1(-y), derivative


def factor_complement(c: CorrelationFactor, r) -> np.ndarray:
    """1 - f(r), exact for small f."""
    r = _as_radii(r)
    if c.kind is FactorKind.IDENTITY:
        return np.zeros_like(r)
    if c.kind is FactorKind.GAUSSIAN:
        return np.exp(-((r / c.b) ** 2))
    with np.errstate(divide="ignore"):
        log_r = np.log(r)
    return np.exp(-np.exp((c.log_beta + log_r) / c.alpha))


def _log_radius_window(alpha: float) -> tuple[float, float]:
    return -_LOG_RADIUS_SPAN * alpha, alpha * math.log(_Y_TAIL + 10.0 * alpha)


def _two_d_factor(
    beta: float | None, alpha: float | None, factor: CorrelationFactor | None
) -> CorrelationFactor:
    if factor is not None:
        return factor
    return CorrelationFactor.two_d(beta=beta, alpha=alpha)


def kinetic_integral_2d(beta: float | None = None, alpha: float | None = None) -> float:
    """1/2 int |grad f|^2 d^2r for the two-dimensional factor.

    Equals pi / (4 alpha) whatever beta; computed by quadrature in v = ln(beta r)
    where the integrand is pi (r f')^2 = pi y^2 exp(-2y) / alpha^2.
    """
    c = _two_d_factor(beta, alpha, None)
    a = c.alpha

    def integrand(v: np.ndarray) -> np.ndarray:
        y = np.exp(v / a)
        slope = y * np.exp(-y) / a
        return np.pi * slope * slope

    return integrate(integrand, *_log_radius_window(a))


def oscillator_density_2d(r: np.ndarray) -> np.ndarray:
    """|psi_0|^2 of the two-dimensional oscillator ground state."""
    return np.exp(-r * r) / np.pi


class NormDefect(NamedTuple):
    defect: float
    scale: float | None
    # defect / scale, formed before the common 1/beta^2 is applied
    ratio: float | None = None


def norm_defect_2d(
    beta: float | None = None,
    density: Callable[[np.ndarray], np.ndarray] | None = None,
    factor: CorrelationFactor | None = None,
) -> NormDefect:
    """1 - int |psi_0|^2 f^2 d^2r for a normalized radial density.

    Integrates psi_0^2 (1 - f)(1 + f) so the small defect carries no
    cancellation. For the two-dimensional factor the result comes with the
    reference scale alpha Gamma(2 alpha) / beta^2 and their ratio, which stays
    finite when beta^-2 underflows; other factors report None for both.
    """
    density = density or oscillator_density_2d
    c = _two_d_factor(beta, None, factor)

    if c.kind is not FactorKind.TWO_D:

        def radial(r: np.ndarray) -> np.ndarray:
            g = factor_complement(c, r)
            return 2.0 * np.pi * density(r) * g * (2.0 - g) * r

        breaks = (c.b,) if c.kind is FactorKind.GAUSSIAN else ()
        upper = max(_R_MAX, 8.0 * c.b) if c.b is not None else _R_MAX
        return NormDefect(integrate(radial, 0.0, upper, breakpoints=breaks), None)

    a, log_beta = c.alpha, c.log_beta

    def scaled(v: np.ndarray) -> np.ndarray:
        g = np.exp(-np.exp(v / a))
        r = np.exp(v - log_beta)
        return 2.0 * np.pi * density(r) * g * (2.0 - g) * np.exp(2.0 * v)

    # Both the integral and the scale carry a common 1/beta^2
    unscaled = integrate(scaled, *_log_radius_window(a))
    log_unit = math.log(a) + gammaln(2.0 * a)
    ratio = math.exp(math.log(unscaled) - log_unit) if unscaled > 0.0 else 0.0
    value = unscaled * math.exp(-2.0 * log_beta)
    scale = math.exp(log_unit - 2.0 * log_beta)
    return NormDefect(value, scale, ratio)


def _two_d_point(alpha: float) -> list[float]:
    c = CorrelationFactor.two_d(alpha=alpha)
    kinetic = kinetic_integral_2d(alpha=alpha)
    defect = norm_defect_2d(factor=c)
    ratio = defect.ratio
    return [
        alpha,
        c.log_beta,
        kinetic,
        alpha * kinetic,
        defect.defect,
        defect.scale,
        ratio,
    ]


def two_d_table(alpha_grid: Sequence[float], mapper=map) -> ResultTable:
    """Kinetic integral and norm defect of the two-dimensional factor per alpha."""
    rows = list(mapper(_two_d_point, [float(a) for a in alpha_grid]))
    return ResultTable(
        columns=[
            "alpha",
            "log_beta",
            "kinetic",
            "alpha_kinetic",
            "norm_defect",
            "defect_scale",
            "defect_ratio",
        ],
        rows=rows,
        meta={"D": 2, "density": "oscillator", "alpha_kinetic_exact": math.pi / 4.0},
    )

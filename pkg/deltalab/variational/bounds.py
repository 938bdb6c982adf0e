"""
Variational upper bounds from a correlated trial state f psi_0.

With psi_0 the oscillator ground state and f(0) = 0 the contact term drops
out, leaving

    E <= D/2 + (1/2 int psi_0^2 |f'|^2) / (int psi_0^2 f^2).

For the Gaussian factor the numerator is D b^{D-2} / (b^2 + 2)^{D/2+1}, so the
bound collapses onto the unperturbed energy like b^{D-2}.
"""

from collections.abc import Callable, Iterable, Sequence
from functools import partial

import numpy as np

from deltalab.config.logging import get_logger
from deltalab.core.exceptions import DomainError
from deltalab.core.tables import ResultTable
from deltalab.numerics.quadrature import tanh_sinh
from deltalab.specfun import radial_basis, sphere_area

from .factors import factor_complement, factor_eval
from .schemas import CorrelationFactor, VariationalEstimate

logger = get_logger(__name__)

_R_MAX = 10.0


def _oscillator_density(D: float, r: np.ndarray) -> np.ndarray:
    return np.pi ** (-0.5 * D) * np.exp(-r * r)


def _breakpoints(c: CorrelationFactor) -> tuple[float, ...]:
    if c.b is None:
        return ()
    return (c.b, 4.0 * c.b)


def two_particle_bound(
    D: float, b: float, factor: CorrelationFactor | None = None
) -> VariationalEstimate:
    """Bound for the relative motion of two particles with a Gaussian factor.

    Correction and norm defect come from one vector-valued radial quadrature;
    the norm is formed as 1 - defect so it never exceeds one.
    """
    if D <= 2:
        raise DomainError(
            f"The Gaussian factor bound needs D > 2, got D={D}", {"D": D}
        )
    c = factor or CorrelationFactor.gaussian(b)
    area = sphere_area(D)

    def integrand(r: np.ndarray) -> np.ndarray:
        _, fp = factor_eval(c, r)
        g = factor_complement(c, r)
        measure = area * _oscillator_density(D, r) * r ** (D - 1.0)
        return np.vstack([0.5 * measure * fp * fp, measure * g * (2.0 - g)])

    result = tanh_sinh(integrand, 0.0, _R_MAX, breakpoints=_breakpoints(c))
    correction, defect = (float(v) for v in result.value)
    logger.debug(
        "two particle bound",
        D=D,
        factor=c.label(),
        correction=correction,
        level=result.level,
    )
    return VariationalEstimate(
        E0=0.5 * D,
        correction=max(correction, 0.0),
        norm=1.0 - max(defect, 0.0),
        factor=c.label(),
    )


def excited_overlap(b: float, D: float = 3.0) -> float:
    """<psi_1 | f psi_0> / |f psi_0| for the first excited s-state.

    psi_1 is orthogonal to psi_0, so only the correlation hole 1 - f
    contributes; the overlap vanishes with the correlation radius.
    """
    c = CorrelationFactor.gaussian(b)
    area = sphere_area(D)

    def integrand(r: np.ndarray) -> np.ndarray:
        basis = radial_basis(1, D, r)
        g = factor_complement(c, r)
        measure = area * r ** (D - 1.0)
        overlap = -measure * basis[1] * basis[0] * g
        defect = measure * basis[0] ** 2 * g * (2.0 - g)
        return np.vstack([overlap, defect])

    result = tanh_sinh(integrand, 0.0, _R_MAX, breakpoints=_breakpoints(c))
    overlap, defect = (float(v) for v in result.value)
    return overlap / np.sqrt(1.0 - defect)


def gaussian_correction_exact(D: float, b: float) -> float:
    """Closed form of the Gaussian-factor kinetic correction."""
    return D * b ** (D - 2.0) / (b * b + 2.0) ** (0.5 * D + 1.0)


def scaling_exponent(b_values: Sequence[float], corrections: Sequence[float]) -> float:
    """Least-squares slope of ln(correction) against ln(b)."""
    if len(b_values) != len(corrections) or len(b_values) < 2:
        raise ValueError("Need at least two (b, correction) pairs")
    slope, _ = np.polyfit(np.log(b_values), np.log(corrections), 1)
    return float(slope)


def _bound_point(D: float, b: float) -> VariationalEstimate:
    return two_particle_bound(D, b)


def bound_sweep(
    D: float,
    b_grid: Sequence[float],
    mapper: Callable[..., Iterable] = map,
) -> ResultTable:
    """Two-particle bound across correlation radii with the fitted exponent."""
    b_grid = [float(b) for b in b_grid]
    estimates = list(mapper(partial(_bound_point, D), b_grid))
    corrections = [e.correction for e in estimates]
    slope = scaling_exponent(b_grid, corrections) if len(b_grid) >= 2 else None
    rows = [
        [b, e.correction, e.stderr, e.norm, e.bound, slope]
        for b, e in zip(b_grid, estimates, strict=True)
    ]
    return ResultTable(
        columns=["b", "correction", "stderr", "norm", "bound", "fitted_slope"],
        rows=rows,
        meta={"D": D, "E0": 0.5 * D, "expected_slope": D - 2.0},
    )

"""
Infinite spherical well of radius R with a central barrier of radius eps.

Units with E = k^2 (H = -laplacian + V). The barrier height is
V = 3g / (4 pi eps^3), so the barrier integrates to g. With u = r psi the
s-wave problem is one-dimensional:

    inside   u = c sinh(lambda r),    lambda = sqrt(V - k^2)
    outside  u = sin(k (R - r))

and the log-derivatives match at r = eps:

    lambda coth(lambda eps) = -k cot(k (R - eps)).

Writing delta = pi - k (R - eps), the ground state has delta in
(0, pi eps / R): delta -> 0 is the hard core, delta = pi eps / R the empty
well. The mismatch lambda coth(lambda eps) - k cot(delta) runs from -inf to a
positive value across that interval, so bisection on delta is always
bracketed.
"""

import math
from collections.abc import Callable, Iterable, Sequence
from functools import partial

import numpy as np

from deltalab.config.logging import get_logger
from deltalab.core.exceptions import BranchError
from deltalab.core.tables import ResultTable
from deltalab.numerics.roots import bisect
from deltalab.spectral.schemas import Coupling

from .schemas import WellBranch, WellModel, WellSolution

logger = get_logger(__name__)

_SERIES_CUTOFF = 1e-4
_LN2 = math.log(2.0)


def _x_coth(x: float) -> float:
    """x coth(x), finite at 0 and saturating for large x."""
    if abs(x) < _SERIES_CUTOFF:
        return 1.0 + x * x / 3.0
    return x / math.tanh(x)


def _x_cot(x: float) -> float:
    """x cot(x) for 0 <= x < pi."""
    if abs(x) < _SERIES_CUTOFF:
        return 1.0 - x * x / 3.0
    return x * math.cos(x) / math.sin(x)


def _log_sinh(x: float) -> float:
    if x > 20.0:
        return x - _LN2 + math.log1p(-math.exp(-2.0 * x))
    return math.log(math.sinh(x))


def interior_log_derivative(m: WellModel, k: float) -> float:
    """u'/u at r = eps from inside the barrier, either branch."""
    eps = m.epsilon
    gap = m.barrier_height - k * k
    if gap >= 0:
        return _x_coth(math.sqrt(gap) * eps) / eps
    kappa_eps = math.sqrt(-gap) * eps
    if kappa_eps >= math.pi:
        raise BranchError(
            "Interior wave function has a node inside the barrier",
            {"kappa_eps": kappa_eps, "epsilon": eps},
        )
    return _x_cot(kappa_eps) / eps


def _wave_number(m: WellModel, delta: float) -> float:
    return (math.pi - delta) / (m.R - m.epsilon)


def solve_well(m: WellModel, require_barrier: bool = False) -> WellSolution:
    """Ground state of the well with a central barrier.

    Args:
        m: well geometry and coupling
        require_barrier: reject solutions whose energy exceeds the barrier
            height (the sinh interior branch is then guaranteed)

    Raises:
        BranchError: when ``require_barrier`` is set and k^2 >= V, or the weak
            interior solution would need a node.
    """
    R, eps = m.R, m.epsilon
    if m.coupling.is_hard_core:
        k = math.pi / (R - eps)
        return WellSolution(
            k=k,
            E=k * k,
            delta=0.0,
            residual=0.0,
            interior_amplitude=0.0,
            branch=WellBranch.HARD_CORE,
            log_psi0=-math.inf,
        )

    def mismatch(delta: float) -> float:
        k = _wave_number(m, delta)
        return interior_log_derivative(m, k) - k / math.tan(delta)

    delta_max = math.pi * eps / R
    if m.barrier_height == 0.0:
        root_delta = delta_max
    else:
        root = bisect(mismatch, 0.0, delta_max, f_lo=-math.inf)
        root_delta = root.x

    k = _wave_number(m, root_delta)
    gap = m.barrier_height - k * k
    if require_barrier and gap <= 0:
        raise BranchError(
            f"Barrier height {m.barrier_height} does not exceed k^2={k * k}",
            {"barrier_height": m.barrier_height, "k2": k * k},
        )

    inside = interior_log_derivative(m, k)
    outside = k / math.tan(root_delta)
    residual = abs(inside - outside) / max(abs(inside), abs(outside))

    # Exterior amplitude fixed to 1: u(eps) = sin(delta)
    if gap > 0:
        lam = math.sqrt(gap)
        log_amplitude = math.log(math.sin(root_delta)) - _log_sinh(lam * eps)
        branch = WellBranch.BARRIER
        log_psi0 = log_amplitude + math.log(lam)
    elif gap < 0:
        kappa = math.sqrt(-gap)
        log_amplitude = math.log(math.sin(root_delta) / math.sin(kappa * eps))
        branch = WellBranch.OSCILLATORY
        log_psi0 = log_amplitude + math.log(kappa)
    else:
        log_amplitude = math.log(math.sin(root_delta) / eps)
        branch = WellBranch.BARRIER
        log_psi0 = log_amplitude

    logger.debug(
        "well solved", R=R, epsilon=eps, E=k * k, delta=root_delta, branch=branch.value
    )
    return WellSolution(
        k=k,
        E=k * k,
        delta=root_delta,
        residual=residual,
        interior_amplitude=math.exp(log_amplitude),
        branch=branch,
        log_psi0=log_psi0,
    )


def well_wave_function(
    m: WellModel, sol: WellSolution, r: np.ndarray | float
) -> np.ndarray:
    """psi(r) = u(r)/r with the exterior normalized to sin(k(R - r))/r."""
    r = np.atleast_1d(np.asarray(r, dtype=float))
    eps, k = m.epsilon, sol.k
    gap = m.barrier_height - k * k
    out = np.zeros_like(r)

    outer = (r >= eps) & (r <= m.R)
    out[outer] = np.sin(k * (m.R - r[outer])) / r[outer]

    inner = r < eps
    if sol.branch is WellBranch.HARD_CORE or not np.any(inner):
        return out
    c = sol.interior_amplitude
    ri = r[inner]
    if gap > 0:
        lam = math.sqrt(gap)
        with np.errstate(invalid="ignore", divide="ignore"):
            values = c * np.sinh(lam * ri) / ri
        out[inner] = np.where(ri == 0.0, c * lam, values)
    elif gap < 0:
        kappa = math.sqrt(-gap)
        with np.errstate(invalid="ignore", divide="ignore"):
            values = c * np.sin(kappa * ri) / ri
        out[inner] = np.where(ri == 0.0, c * kappa, values)
    else:
        out[inner] = c
    return out


def predicted_correction(m: WellModel) -> float:
    """Leading relative energy shift -2 sqrt(4 pi eps / 3g) eps / R."""
    if m.coupling.is_hard_core:
        return 0.0
    g = m.coupling.g
    return -2.0 * math.sqrt(4.0 * math.pi * m.epsilon / (3.0 * g)) * m.epsilon / m.R


def predicted_log_psi0(m: WellModel) -> float:
    """ln of (2 pi / R) exp(-sqrt(3g / (4 pi eps)))."""
    if m.coupling.is_hard_core:
        return -math.inf
    g = m.coupling.g
    decay = math.sqrt(3.0 * g / (4.0 * math.pi * m.epsilon))
    return math.log(2.0 * math.pi / m.R) - decay


def relative_correction(sol: WellSolution) -> float:
    """E (R - eps)^2 / pi^2 - 1, formed from delta without cancellation."""
    t = sol.delta / math.pi
    return -t * (2.0 - t)


def _check_decreasing(eps_grid: Sequence[float]) -> list[float]:
    eps_grid = [float(e) for e in eps_grid]
    if any(b >= a for a, b in zip(eps_grid, eps_grid[1:], strict=False)):
        raise ValueError("eps_grid must be strictly decreasing")
    return eps_grid


def _expansion_point(R: float, g, eps: float) -> list[float | None]:
    m = WellModel(R=R, epsilon=eps, coupling=g)
    sol = solve_well(m)
    predicted_rel = predicted_correction(m)
    actual_rel = relative_correction(sol)
    predicted = math.pi**2 / (R - eps) ** 2 * (1.0 + predicted_rel)
    ratio = actual_rel / predicted_rel if predicted_rel != 0.0 else None
    return [eps, sol.E, predicted, ratio]


def expansion_check(
    R: float,
    g,
    eps_grid: Sequence[float],
    mapper: Callable[..., Iterable] = map,
) -> ResultTable:
    """Energy against its small-eps expansion; ratio -> 1 as eps -> 0."""
    eps_grid = _check_decreasing(eps_grid)
    rows = list(mapper(partial(_expansion_point, R, g), eps_grid))
    return ResultTable(
        columns=["epsilon", "E", "predicted", "ratio"],
        rows=rows,
        meta={"R": R, "coupling": Coupling.parse(g).label()},
    )


def _origin_point(R: float, g, eps: float) -> list[float]:
    m = WellModel(R=R, epsilon=eps, coupling=g)
    sol = solve_well(m, require_barrier=True)
    return [eps, math.exp(sol.log_psi0), sol.log_psi0, predicted_log_psi0(m)]


def origin_suppression(
    R: float,
    g,
    eps_grid: Sequence[float],
    mapper: Callable[..., Iterable] = map,
) -> ResultTable:
    """Origin value c*lambda of the ground state against the exponential law."""
    eps_grid = _check_decreasing(eps_grid)
    rows = list(mapper(partial(_origin_point, R, g), eps_grid))
    return ResultTable(
        columns=["epsilon", "psi0", "log_psi0", "predicted_log_psi0"],
        rows=rows,
        meta={"R": R, "coupling": Coupling.parse(g).label()},
    )


def _well_point(R: float, g, eps: float) -> list[float | None]:
    m = WellModel(R=R, epsilon=eps, coupling=g)
    sol = solve_well(m)
    hard = math.pi**2 / (R - eps) ** 2
    predicted_rel = predicted_correction(m)
    ratio = relative_correction(sol) / predicted_rel if predicted_rel else None
    return [
        eps,
        sol.E,
        hard,
        math.pi**2 / R**2,
        math.exp(sol.log_psi0),
        math.exp(predicted_log_psi0(m)),
        ratio,
    ]


def well_table(
    R: float,
    g,
    eps_grid: Sequence[float],
    mapper: Callable[..., Iterable] = map,
) -> ResultTable:
    """Energies, origin values and expansion ratio across the eps grid."""
    eps_grid = _check_decreasing(eps_grid)
    rows = list(mapper(partial(_well_point, R, g), eps_grid))
    return ResultTable(
        columns=[
            "epsilon",
            "E",
            "E_hardcore",
            "E_unperturbed",
            "psi0",
            "predicted_psi0",
            "expansion_ratio",
        ],
        rows=rows,
        meta={"R": R, "coupling": Coupling.parse(g).label()},
    )

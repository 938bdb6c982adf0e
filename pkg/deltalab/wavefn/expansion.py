"""
Truncated-basis wave functions of the contact problem.

At a solved energy E the eigenvector of the rank-one problem is

    c_k = psi_k(0) / (E - E_k) / sqrt(sum_i |psi_i(0)|^2 / (E - E_i)^2),

so psi(r) = sum_k c_k psi_k(r) and, at the origin,
psi(0) = (sum_k |psi_k(0)|^2 / (E - E_k)) / norm = (1/g) / norm.
"""

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from functools import partial

import numpy as np

from deltalab.core.exceptions import PoleError
from deltalab.core.tables import ResultTable
from deltalab.numerics.summation import compensated_rows, compensated_sum
from deltalab.spectral import Coupling, SpectralProblem, SpectralSolution, solve_shift
from deltalab.specfun import psi0_sq_values, radial_basis

FIGURE_TRUNCATIONS = (1, 5, 20, 100, 400)
FIGURE_GRID = (0.0, 4.0, 401)
INSET_GRID = (0.0, 0.2, 201)


@dataclass
class WaveFunctionExpansion:
    """Coefficients c_0..c_K of a state in the oscillator basis."""

    D: float
    K: int
    energy: float
    coeffs: np.ndarray

    @classmethod
    def unperturbed(cls, n: int, K: int, D: float) -> "WaveFunctionExpansion":
        coeffs = np.zeros(K + 1)
        coeffs[n] = 1.0
        return cls(D=D, K=K, energy=2.0 * n + 0.5 * D, coeffs=coeffs)

    @property
    def norm(self) -> float:
        return float(np.sqrt(compensated_sum(self.coeffs * self.coeffs)))


def reconstruct(sol: SpectralSolution, K: int, D: float) -> WaveFunctionExpansion:
    """Build the normalized coefficient vector for a solved level."""
    delta = sol.energy - 0.5 * D
    k = np.arange(K + 1, dtype=float)
    gaps = delta - 2.0 * k
    if np.any(gaps == 0.0):
        raise PoleError(
            f"Energy {sol.energy} coincides with an unperturbed level",
            {"energy": sol.energy, "K": K, "D": D},
        )
    raw = np.sqrt(psi0_sq_values(K, D)) / gaps
    norm = np.sqrt(compensated_sum(raw * raw))
    return WaveFunctionExpansion(D=D, K=K, energy=sol.energy, coeffs=raw / norm)


def ground_state(
    D: float, coupling: Coupling | float | str, K: int
) -> WaveFunctionExpansion:
    """Solve the ground level at truncation K and reconstruct its state."""
    problem = SpectralProblem(D=D, coupling=coupling, K=K, n=0)
    if problem.coupling.g == 0.0:
        return WaveFunctionExpansion.unperturbed(0, K, D)
    return reconstruct(solve_shift(problem), K, D)


def evaluate(
    w: WaveFunctionExpansion, r_grid: Sequence[float] | np.ndarray
) -> np.ndarray:
    """psi(r) = sum_k c_k psi_k(r) at every grid point, compensated per point."""
    r = np.asarray(r_grid, dtype=float)
    if not np.all(np.isfinite(r)):
        raise ValueError("Grid must be finite")
    terms = w.coeffs[:, None] * radial_basis(w.K, w.D, r)
    return compensated_rows(terms.T)


def origin_value(w: WaveFunctionExpansion) -> float:
    """psi(0) = sum_k c_k psi_k(0), compensated."""
    return compensated_sum(w.coeffs * np.sqrt(psi0_sq_values(w.K, w.D)))


def _origin_point(D: float, coupling: Coupling, K: int) -> list[float | int]:
    w = ground_state(D, coupling, K)
    return [K, w.energy, origin_value(w)]


def origin_trace(
    D: float,
    g: Coupling | float | str,
    K_grid: Sequence[int],
    mapper: Callable[..., Iterable] = map,
) -> ResultTable:
    """Ground-state value at the origin as the basis grows."""
    K_grid = [int(K) for K in K_grid]
    if any(b <= a for a, b in zip(K_grid, K_grid[1:], strict=False)):
        raise ValueError("K_grid must be strictly increasing")
    coupling = Coupling.parse(g)
    rows = list(mapper(partial(_origin_point, D, coupling), K_grid))
    return ResultTable(
        columns=["K", "energy", "psi0"],
        rows=rows,
        meta={"D": D, "coupling": coupling.label()},
    )


def nonnegative_from(values: np.ndarray, r_grid: np.ndarray) -> float:
    """Smallest grid radius beyond which every sampled value is >= 0."""
    values = np.asarray(values)
    negative = np.flatnonzero(values < 0)
    if negative.size == 0:
        return float(r_grid[0])
    last = negative[-1]
    if last + 1 >= len(r_grid):
        return float("inf")
    return float(r_grid[last + 1])


def layer_width(
    values: np.ndarray,
    reference: np.ndarray,
    r_grid: np.ndarray,
    fraction: float = 0.95,
) -> float:
    """First grid radius where the state recovers ``fraction`` of the reference."""
    recovered = np.flatnonzero(np.asarray(values) >= fraction * np.asarray(reference))
    return float(r_grid[recovered[0]]) if recovered.size else float("inf")


def figure_grid(which: str = "both") -> np.ndarray:
    """Radial grid of the figure data: main, inset, or their union."""
    main = np.linspace(*FIGURE_GRID[:2], FIGURE_GRID[2])
    inset = np.linspace(*INSET_GRID[:2], INSET_GRID[2])
    if which == "main":
        return main
    if which == "inset":
        return inset
    if which == "both":
        return np.unique(np.round(np.concatenate([main, inset]), 12))
    raise ValueError(f"Unknown grid: {which}")


def figure_table(
    D: float = 3.0,
    g: Coupling | float | str = 1.0,
    truncations: Sequence[int] = FIGURE_TRUNCATIONS,
    grid: str = "both",
) -> ResultTable:
    """Successive ground-state approximations on the figure grid."""
    r = figure_grid(grid)
    truncations = sorted({int(K) for K in truncations})
    reference = evaluate(WaveFunctionExpansion.unperturbed(0, 0, D), r)
    states = {K: ground_state(D, g, K) for K in truncations}
    columns = ["r", *[f"psi_K{K}" for K in truncations], "psi_unperturbed"]
    curves = [evaluate(states[K], r) for K in truncations]
    rows = [
        [float(ri), *[float(curve[i]) for curve in curves], float(reference[i])]
        for i, ri in enumerate(r)
    ]
    widths = {
        str(K): layer_width(curve, reference, r)
        for K, curve in zip(truncations, curves, strict=True)
    }
    return ResultTable(
        columns=columns,
        rows=rows,
        meta={
            "D": D,
            "coupling": Coupling.parse(g).label(),
            "energies": {str(K): states[K].energy for K in truncations},
            "layer_width_95": widths,
        },
    )

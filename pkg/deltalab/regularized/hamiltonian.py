"""
Gaussian-regularized contact term in the truncated oscillator basis.

delta_eps(r) = (sqrt(pi) eps)^{-D} exp(-r^2/eps^2) integrates to one over
D-dimensional space and tends to the contact term as eps -> 0. The
Hamiltonian is a dense (K+1) x (K+1) matrix; at fixed K the eps -> 0 limit is
the rank-one matrix diag(E_k) + g v v^T with v_k = psi_k(0).
"""

from collections.abc import Callable, Iterable, Sequence
from functools import partial

import numpy as np

from deltalab.config.logging import get_logger
from deltalab.core.tables import ResultTable
from deltalab.numerics.jacobi import jacobi_eigh
from deltalab.numerics.quadrature import tanh_sinh_gram
from deltalab.specfun import psi0_sq_values, radial_basis, sphere_area

from .schemas import DEFAULT_EPSILON_GRID, RegularizedProblem

logger = get_logger(__name__)

# exp(-r^2/eps^2) < 1e-18 beyond sqrt(ln 1e18) eps; the margin absorbs r^{D-1}
_CUTOFF = 1.2 * np.sqrt(np.log(1e18))


def unperturbed_levels(K: int, D: float) -> np.ndarray:
    return 2.0 * np.arange(K + 1, dtype=float) + 0.5 * D


def contact_overlaps(p: RegularizedProblem) -> np.ndarray:
    """<psi_i| delta_eps |psi_j> for i, j = 0..K by tanh-sinh quadrature."""
    eps = p.epsilon
    amplitude = sphere_area(p.D) * (np.sqrt(np.pi) * eps) ** (-p.D)

    def weight(r: np.ndarray) -> np.ndarray:
        return amplitude * np.exp(-((r / eps) ** 2)) * r ** (p.D - 1.0)

    result = tanh_sinh_gram(
        lambda r: radial_basis(p.K, p.D, r), weight, 0.0, _CUTOFF * eps
    )
    logger.debug(
        "contact overlaps", K=p.K, D=p.D, epsilon=eps, level=result.level
    )
    return result.value


def delta_eps_matrix(p: RegularizedProblem) -> np.ndarray:
    """Symmetric Hamiltonian matrix diag(2i + D/2) + g <i|delta_eps|j>."""
    matrix = np.diag(unperturbed_levels(p.K, p.D))
    if p.g != 0.0:
        matrix = matrix + p.g * contact_overlaps(p)
    return matrix


def contact_matrix(D: float, g: float, K: int) -> np.ndarray:
    """The eps -> 0 limit at fixed K: diag(E_k) + g psi_k(0) psi_l(0)."""
    v = np.sqrt(psi0_sq_values(K, D))
    return np.diag(unperturbed_levels(K, D)) + g * np.outer(v, v)


def eigen_lowest(matrix: np.ndarray, count: int = 1) -> np.ndarray:
    """The ``count`` smallest eigenvalues, ascending."""
    matrix = np.asarray(matrix, dtype=float)
    if count < 1 or count > matrix.shape[0]:
        raise ValueError(
            f"count must lie in [1, {matrix.shape[0]}], got {count}"
        )
    return jacobi_eigh(matrix).eigenvalues[:count]


def _study_point(D: float, g: float, point: tuple[float, int]) -> list[float | int]:
    eps, K = point
    matrix = delta_eps_matrix(RegularizedProblem(D=D, g=g, epsilon=eps, K=K))
    return [eps, K, float(eigen_lowest(matrix, 1)[0])]


def double_limit_study(
    D: float,
    g: float,
    eps_grid: Sequence[float] = DEFAULT_EPSILON_GRID,
    K_grid: Sequence[int] = (10, 20, 40, 80),
    mapper: Callable[..., Iterable] = map,
) -> ResultTable:
    """Ground energy on the (eps, K) grid, plus the eps -> 0 column per K.

    Rows with epsilon = 0 hold the rank-one (contact) energies at each K.
    """
    eps_grid = [float(e) for e in eps_grid]
    K_grid = [int(K) for K in K_grid]
    if any(e <= 0 for e in eps_grid):
        raise ValueError("Regularization widths must be positive")
    if any(b >= a for a, b in zip(eps_grid, eps_grid[1:], strict=False)):
        raise ValueError("eps_grid must be strictly decreasing")
    if any(b <= a for a, b in zip(K_grid, K_grid[1:], strict=False)):
        raise ValueError("K_grid must be strictly increasing")

    points = [(eps, K) for eps in eps_grid for K in K_grid]
    rows = list(mapper(partial(_study_point, D, g), points))
    for K in K_grid:
        rows.append([0.0, K, float(eigen_lowest(contact_matrix(D, g, K), 1)[0])])
    return ResultTable(
        columns=["epsilon", "K", "E0"],
        rows=rows,
        meta={"D": D, "g": g},
    )

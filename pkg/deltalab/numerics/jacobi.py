"""
Cyclic Jacobi eigensolver for dense real symmetric matrices.

Each sweep visits every off-diagonal pair once in round-robin order: a round
pairs all indices into n/2 disjoint (p, q) couples, and disjoint rotations
commute, so a whole round is applied with a few array operations.
"""

from dataclasses import dataclass

import numpy as np

from deltalab.config.logging import get_logger
from deltalab.config.settings import settings
from deltalab.core.exceptions import ContractViolation, ConvergenceError

logger = get_logger(__name__)


@dataclass
class JacobiResult:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None
    sweeps: int
    off_norm: float


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings covering every (p, q), p < q, exactly once per sweep."""
    players = list(range(n)) if n % 2 == 0 else [*range(n), -1]
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < 0 or b < 0:
                continue
            ps.append(min(a, b))
            qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        # Keep the first player fixed, rotate the rest
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def off_diagonal_norm(a: np.ndarray) -> float:
    upper = np.triu(a, 1)
    return float(np.sqrt(2.0 * np.sum(upper * upper)))


def check_symmetric(a: np.ndarray) -> None:
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolation(
            "Eigensolver requires a square matrix", {"shape": list(a.shape)}
        )
    asym = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    if asym > 64 * np.finfo(float).eps * scale:
        raise ContractViolation(
            "Eigensolver requires a symmetric matrix", {"asymmetry": asym}
        )


def jacobi_eigh(
    matrix: np.ndarray,
    tol: float | None = None,
    max_sweeps: int | None = None,
    vectors: bool = False,
) -> JacobiResult:
    """Diagonalize a symmetric matrix by cyclic Jacobi rotations.

    Converged when the off-diagonal Frobenius norm is at most
    ``tol * max(1, ||A||_F)``.
    """
    tol = settings.jacobi_tol if tol is None else tol
    max_sweeps = settings.jacobi_max_sweeps if max_sweeps is None else max_sweeps

    a = np.array(matrix, dtype=float, copy=True)
    check_symmetric(a)
    n = a.shape[0]
    v = np.eye(n) if vectors else None
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    rounds = _round_robin(n) if n > 1 else []

    off = off_diagonal_norm(a)
    sweeps = 0
    while off > threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                "Jacobi eigensolver did not converge",
                {"sweeps": sweeps, "off_norm": off, "threshold": threshold},
            )
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not np.any(active):
                continue
            p, q, apq = p[active], q[active], apq[active]
            app, aqq = a[p, p], a[q, q]

            theta = (aqq - app) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t = np.where(theta == 0.0, 1.0, t)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            # Columns, then rows: A <- J^T A J
            col_p, col_q = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * col_p - s * col_q
            a[:, q] = s * col_p + c * col_q
            row_p, row_q = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * row_p - s[:, None] * row_q
            a[q, :] = s[:, None] * row_p + c[:, None] * row_q

            a[p, p] = app - t * apq
            a[q, q] = aqq + t * apq
            a[p, q] = 0.0
            a[q, p] = 0.0

            if v is not None:
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1
        off = off_diagonal_norm(a)

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    logger.debug("jacobi converged", n=n, sweeps=sweeps, off_norm=off)
    return JacobiResult(
        eigenvalues=eigenvalues[order],
        eigenvectors=None if v is None else v[:, order],
        sweeps=sweeps,
        off_norm=off,
    )

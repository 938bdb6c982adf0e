"""
Direct-sampling estimate of the N-particle product-factor bound.

Configurations are drawn from |Psi_0|^2, a product of oscillator ground states
(each Cartesian coordinate normal with variance 1/2), so no Markov chain is
involved. With F = prod_{i<j} f(r_ij),

    grad_i F = F sum_{j != i} f'(r_ij) / f(r_ij) (x_i - x_j) / r_ij,

and the bound is N D / 2 + <1/2 sum_i |grad_i F|^2> / <F^2>.

Samples are split into fixed-size blocks; block b draws from
SeedSequence(seed, spawn_key=(b,)) and block sums are merged with fsum in block
order, so the estimate depends on (seed, samples) only and not on how the
blocks are scheduled.
"""

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import partial
from itertools import combinations

import numpy as np

from deltalab.config.logging import get_logger
from deltalab.config.settings import settings
from deltalab.core.exceptions import RejectionRateError
from deltalab.core.tables import ResultTable

from .bounds import scaling_exponent
from .factors import factor_eval
from .schemas import CorrelationFactor, VariationalEstimate

logger = get_logger(__name__)

_COORDINATE_SCALE = math.sqrt(0.5)


def trial_gradients(
    x: np.ndarray, factor: CorrelationFactor
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """F, grad_i F and the smallest pair factor for configurations x.

    Args:
        x: array of shape (samples, N, D)
        factor: pair correlation factor

    Returns:
        (F with shape (samples,), gradients with the shape of x,
        min_ij f(r_ij) with shape (samples,))
    """
    x = np.asarray(x, dtype=float)
    n, N, _ = x.shape
    F = np.ones(n)
    smallest = np.ones(n)
    log_grad = np.zeros_like(x)
    for i, j in combinations(range(N), 2):
        d = x[:, i, :] - x[:, j, :]
        r = np.sqrt(np.einsum("sd,sd->s", d, d))
        f, fp = factor_eval(factor, r)
        F *= f
        smallest = np.minimum(smallest, f)
        with np.errstate(divide="ignore", invalid="ignore"):
            pull = np.where(f > 0.0, fp / (f * r), 0.0)
        step = pull[:, None] * d
        log_grad[:, i, :] += step
        log_grad[:, j, :] -= step
    return F, F[:, None, None] * log_grad, smallest


@dataclass(frozen=True)
class _BlockSums:
    accepted: int
    rejected: int
    kinetic: float
    kinetic_sq: float
    norm: float


def _run_block(
    N: int,
    D: int,
    factor: CorrelationFactor,
    seed: int,
    block_size: int,
    samples: int,
    threshold: float,
    index: int,
) -> _BlockSums:
    size = min(block_size, samples - index * block_size)
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))
    x = rng.normal(scale=_COORDINATE_SCALE, size=(size, N, D))
    F, grads, smallest = trial_gradients(x, factor)
    keep = smallest >= threshold
    kinetic = 0.5 * np.einsum("snd,snd->s", grads, grads)[keep]
    return _BlockSums(
        accepted=int(keep.sum()),
        rejected=int(size - keep.sum()),
        kinetic=math.fsum(kinetic.tolist()),
        kinetic_sq=math.fsum((kinetic * kinetic).tolist()),
        norm=math.fsum((F[keep] ** 2).tolist()),
    )


def nbody_bound_mc(
    N: int,
    D: int,
    b: float,
    samples: int,
    seed: int,
    factor: CorrelationFactor | None = None,
    mapper: Callable[..., Iterable] = map,
    block_size: int | None = None,
) -> VariationalEstimate:
    """Monte Carlo bound for N particles in the oscillator with pair factors.

    Args:
        N: particle count, at least 2
        D: integer dimension, at least 3
        b: Gaussian correlation radius (ignored when ``factor`` is given)
        samples: number of configurations
        seed: master seed
        factor: pair factor override
        mapper: map-like callable used to run blocks, e.g. ``executor.map``
        block_size: samples per block (settings default)

    Raises:
        RejectionRateError: when the share of samples with an underflowing
            pair factor reaches the configured limit.
    """
    if N < 2:
        raise ValueError(f"Need at least two particles, got N={N}")
    if int(D) != D or D < 3:
        raise ValueError(f"Dimension must be an integer >= 3, got D={D}")
    if samples < 2:
        raise ValueError(f"Need at least two samples, got {samples}")
    c = factor or CorrelationFactor.gaussian(b)
    block_size = block_size or settings.mc_block_size
    blocks = math.ceil(samples / block_size)

    run = partial(
        _run_block,
        N,
        int(D),
        c,
        int(seed),
        block_size,
        samples,
        settings.mc_underflow_threshold,
    )
    sums = list(mapper(run, range(blocks)))

    accepted = sum(s.accepted for s in sums)
    rejected = sum(s.rejected for s in sums)
    rate = rejected / samples
    if rate >= settings.mc_max_rejection_rate or accepted < 2:
        raise RejectionRateError(
            f"Rejected {rejected} of {samples} samples (rate {rate:.3g})",
            {"rejected": rejected, "samples": samples, "factor": c.label()},
        )

    kinetic = math.fsum(s.kinetic for s in sums)
    kinetic_sq = math.fsum(s.kinetic_sq for s in sums)
    norm = math.fsum(s.norm for s in sums) / accepted
    mean = kinetic / accepted
    variance = max(kinetic_sq - kinetic * mean, 0.0) / (accepted - 1)
    stderr = math.sqrt(variance / accepted)

    logger.debug(
        "nbody monte carlo",
        N=N,
        D=D,
        factor=c.label(),
        samples=samples,
        blocks=blocks,
        rejected=rejected,
        correction=mean,
        stderr=stderr,
    )
    return VariationalEstimate(
        E0=0.5 * N * D,
        correction=mean,
        norm=norm,
        factor=c.label(),
        stderr=stderr,
        samples=samples,
        seed=int(seed),
        rejected=rejected,
    )


def _nbody_point(
    N: int, D: int, samples: int, seed: int, b: float
) -> VariationalEstimate:
    return nbody_bound_mc(N, D, b, samples, seed)


def nbody_sweep(
    N: int,
    D: int,
    b_grid,
    samples: int,
    seed: int,
    mapper: Callable[..., Iterable] = map,
) -> ResultTable:
    """Monte Carlo bounds across correlation radii, one seed for every radius."""
    b_grid = [float(b) for b in b_grid]
    estimates = list(mapper(partial(_nbody_point, N, D, samples, seed), b_grid))
    slope = (
        scaling_exponent(b_grid, [e.correction for e in estimates])
        if len(b_grid) >= 2
        else None
    )
    rows = [
        [b, e.correction, e.stderr, e.norm, e.bound, e.rejected, slope]
        for b, e in zip(b_grid, estimates, strict=True)
    ]
    return ResultTable(
        columns=[
            "b",
            "correction",
            "stderr",
            "norm",
            "bound",
            "rejected",
            "fitted_slope",
        ],
        rows=rows,
        meta={
            "N": N,
            "D": D,
            "E0": 0.5 * N * D,
            "samples": samples,
            "seed": seed,
            "expected_slope": D - 2.0,
        },
    )

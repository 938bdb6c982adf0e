"""Error-free accumulation of long series.

Every secular sum and partial perturbation series in the lab goes through
``compensated_sum``. ``math.fsum`` keeps the exact running sum as a list of
non-overlapping partials (Shewchuk expansions), so the result is the correctly
rounded value of the exact sum and is independent of term order.
"""

import math
from collections.abc import Iterable

import numpy as np


def compensated_sum(
    terms: np.ndarray | Iterable[float], descending: bool = True
) -> float:
    """Correctly rounded sum of ``terms``.

    Args:
        terms: series terms indexed by k
        descending: feed the terms from the largest index down

    Returns:
        The sum rounded once to double precision.
    """
    if isinstance(terms, np.ndarray):
        values = terms.ravel().tolist()
    else:
        values = list(terms)
    if descending:
        values.reverse()
    return math.fsum(values)


def compensated_rows(matrix: np.ndarray) -> np.ndarray:
    """Correctly rounded sum along the last axis of a 2-D array."""
    arr = np.atleast_2d(np.asarray(matrix, dtype=float))
    return np.array([math.fsum(row) for row in arr.tolist()])

"""Sign-change bisection shared by the secular and matching solvers."""

from collections.abc import Callable
from dataclasses import dataclass

from deltalab.config.settings import settings
from deltalab.core.exceptions import BracketError, ConvergenceError


@dataclass
class Root:
    x: float
    lo: float
    hi: float
    iterations: int


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    rtol: float | None = None,
    max_iter: int | None = None,
    f_lo: float | None = None,
    f_hi: float | None = None,
) -> Root:
    """Bisect a bracketed sign change of ``f`` on [lo, hi].

    Stops when the bracket width is below ``rtol`` times the larger endpoint
    magnitude or when the midpoint is no longer representable between the
    endpoints.

    Raises:
        BracketError: when f(lo) and f(hi) share a sign.
        ConvergenceError: when ``max_iter`` is exhausted.
    """
    rtol = settings.solver_rtol if rtol is None else rtol
    max_iter = settings.max_bisection_iter if max_iter is None else max_iter

    f_lo = f(lo) if f_lo is None else f_lo
    f_hi = f(hi) if f_hi is None else f_hi
    if f_lo == 0.0:
        return Root(lo, lo, lo, 0)
    if f_hi == 0.0:
        return Root(hi, hi, hi, 0)
    if (f_lo > 0) == (f_hi > 0):
        raise BracketError(
            "Root is not bracketed",
            {"lo": lo, "hi": hi, "f_lo": f_lo, "f_hi": f_hi},
        )
    lo_positive = f_lo > 0

    for iteration in range(1, max_iter + 1):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            return Root(mid, lo, hi, iteration)
        f_mid = f(mid)
        if f_mid == 0.0:
            return Root(mid, mid, mid, iteration)
        if (f_mid > 0) == lo_positive:
            lo = mid
        else:
            hi = mid
        if hi - lo <= rtol * max(abs(lo), abs(hi)):
            return Root(0.5 * (lo + hi), lo, hi, iteration)

    raise ConvergenceError(
        "Bisection did not converge", {"lo": lo, "hi": hi, "max_iter": max_iter}
    )

"""
Registry initialization for the spectral module.
Registers the shift, sweep, asymptotics and pt commands.
"""

from deltalab.core.registries import Mapper, Task, task_registry
from deltalab.core.tables import ResultTable

from .asymptotics import shift_sweep, term_exponent_fit
from .perturbation import pt_first_order, pt_second_order_partial
from .schemas import (
    AsymptoticsParams,
    PerturbationParams,
    ShiftParams,
    SpectralProblem,
    SweepParams,
)
from .secular import solve_shift


def run_shift(params: ShiftParams, mapper: Mapper) -> ResultTable:
    problem = SpectralProblem(D=params.D, coupling=params.g, K=params.K, n=params.n)
    sol = solve_shift(problem)
    return ResultTable(
        columns=[
            "D",
            "g",
            "K",
            "n",
            "shift",
            "energy",
            "residual",
            "bracket_lo",
            "bracket_hi",
        ],
        rows=[
            [
                params.D,
                params.g.label(),
                params.K,
                params.n,
                sol.shift,
                sol.energy,
                sol.residual,
                sol.bracket[0],
                sol.bracket[1],
            ]
        ],
        meta={"iterations": sol.iterations},
    )


def run_sweep(params: SweepParams, mapper: Mapper) -> ResultTable:
    template = SpectralProblem(
        D=params.D, coupling=params.g, K=max(params.K), n=params.n
    )
    return shift_sweep(template, sorted(set(params.K)), mapper=mapper)


def run_asymptotics(params: AsymptoticsParams, mapper: Mapper) -> ResultTable:
    table = ResultTable(columns=["D", "slope", "expected_slope", "prefactor"])
    for D in params.D:
        fit = term_exponent_fit(D, (params.k_min, params.k_max), delta=params.delta)
        table.append([D, fit.slope, 0.5 * D - 2.0, fit.prefactor])
    table.meta = {"k_range": [params.k_min, params.k_max], "delta": params.delta}
    return table


def run_pt(params: PerturbationParams, mapper: Mapper) -> ResultTable:
    first = pt_first_order(params.n, params.g, params.D)
    table = ResultTable(
        columns=[
            "K",
            "first_order",
            "second_order_partial",
            "second_order_energy",
            "secular_energy",
        ]
    )
    for K in sorted(set(params.K)):
        second = pt_second_order_partial(params.n, params.g, params.D, K)
        if K > params.n:
            exact = solve_shift(
                SpectralProblem(D=params.D, coupling=params.g, K=K, n=params.n)
            ).energy
        else:
            exact = None
        table.append([K, first, second, first + second, exact])
    table.meta = {"D": params.D, "g": params.g, "n": params.n}
    return table


def init_spectral_registries():
    """Initialize spectral-related registries."""
    task_registry.register(
        "shift",
        Task(ShiftParams, run_shift, ("K",), "Solve one level of the secular equation"),
    )
    task_registry.register(
        "sweep",
        Task(SweepParams, run_sweep, ("K",), "Level shift across truncations"),
    )
    task_registry.register(
        "asymptotics",
        Task(
            AsymptoticsParams,
            run_asymptotics,
            ("D",),
            "Fitted decay exponent of the secular terms",
        ),
    )
    task_registry.register(
        "pt",
        Task(
            PerturbationParams,
            run_pt,
            ("K",),
            "Perturbation theory against the secular solve",
        ),
    )

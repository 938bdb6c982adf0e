"""
Registry initialization for the variational module.
Registers the variational and nbody commands.
"""

from deltalab.core.registries import Mapper, Task, task_registry
from deltalab.core.tables import ResultTable

from .bounds import bound_sweep
from .factors import two_d_table
from .montecarlo import nbody_sweep
from .schemas import NBodyParams, VariationalParams


def run_variational(params: VariationalParams, mapper: Mapper) -> ResultTable:
    if params.mode == "two_d":
        return two_d_table(sorted(set(params.alpha)), mapper=mapper)
    return bound_sweep(params.D, sorted(set(params.b)), mapper=mapper)


def run_nbody(params: NBodyParams, mapper: Mapper) -> ResultTable:
    return nbody_sweep(
        params.N,
        params.D,
        sorted(set(params.b)),
        params.samples,
        params.seed,
        mapper=mapper,
    )


def init_variational_registries():
    """Initialize variational-related registries."""
    task_registry.register(
        "variational",
        Task(
            VariationalParams,
            run_variational,
            ("b", "alpha"),
            "Correlation-factor bounds by quadrature",
        ),
    )
    task_registry.register(
        "nbody",
        Task(
            NBodyParams,
            run_nbody,
            ("b",),
            "N-particle product-factor bound by Monte Carlo",
            seeded=True,
        ),
    )

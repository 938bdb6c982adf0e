"""
Registry initialization for the regularized module.
Registers the regularized command.
"""

from deltalab.core.registries import Mapper, Task, task_registry
from deltalab.core.tables import ResultTable

from .hamiltonian import double_limit_study
from .schemas import RegularizedParams


def run_regularized(params: RegularizedParams, mapper: Mapper) -> ResultTable:
    return double_limit_study(
        params.D,
        params.g,
        eps_grid=sorted(set(params.epsilon), reverse=True),
        K_grid=sorted(set(params.K)),
        mapper=mapper,
    )


def init_regularized_registries():
    """Initialize regularized-related registries."""
    task_registry.register(
        "regularized",
        Task(
            RegularizedParams,
            run_regularized,
            ("epsilon", "K"),
            "Gaussian-regularized contact term on an (epsilon, K) grid",
        ),
    )

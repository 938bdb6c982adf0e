"""
Registry initialization for the wellbarrier module.
Registers the well command.
"""

from deltalab.core.registries import Mapper, Task, task_registry
from deltalab.core.tables import ResultTable

from .model import expansion_check, origin_suppression, well_table
from .schemas import WellParams

_TABLES = {
    "table": well_table,
    "expansion": expansion_check,
    "origin": origin_suppression,
}


def run_well(params: WellParams, mapper: Mapper) -> ResultTable:
    build = _TABLES[params.mode]
    eps_grid = sorted(set(params.epsilon), reverse=True)
    return build(params.R, params.g, eps_grid, mapper=mapper)


def init_wellbarrier_registries():
    """Initialize wellbarrier-related registries."""
    task_registry.register(
        "well",
        Task(
            WellParams,
            run_well,
            ("epsilon",),
            "Spherical well with a shrinking central barrier",
        ),
    )

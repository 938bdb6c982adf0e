"""
Registry initialization for the wavefn module.
Registers the figure command.
"""

from deltalab.core.registries import Mapper, Task, task_registry
from deltalab.core.tables import ResultTable

from .expansion import figure_table, origin_trace
from .schemas import FigureParams


def run_figure(params: FigureParams, mapper: Mapper) -> ResultTable:
    if params.mode == "origin":
        return origin_trace(params.D, params.g, sorted(set(params.K)), mapper=mapper)
    return figure_table(params.D, params.g, params.K, grid=params.grid)


def init_wavefn_registries():
    """Initialize wavefn-related registries."""
    task_registry.register(
        "figure",
        Task(
            FigureParams,
            run_figure,
            ("r", "K"),
            "Ground-state wave functions for growing truncations",
        ),
    )

from typing import Literal

from pydantic import Field

from deltalab.core.params import IntGrid, TaskParams
from deltalab.spectral.schemas import Coupling, CouplingValue

from .expansion import FIGURE_TRUNCATIONS


class FigureParams(TaskParams):
    """Ground-state curves on the figure grid, or the origin value per K."""

    D: float = Field(default=3.0, ge=1, description="Spatial dimension")
    g: CouplingValue = Field(
        default=Coupling(g=1.0), description="Coupling or hardcore"
    )
    K: IntGrid = Field(default=list(FIGURE_TRUNCATIONS), min_length=1)
    grid: Literal["both", "main", "inset"] = Field(default="both")
    mode: Literal["curves", "origin"] = Field(default="curves")

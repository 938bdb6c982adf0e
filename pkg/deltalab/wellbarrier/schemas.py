import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from deltalab.core.exceptions import DomainError
from deltalab.core.params import FloatGrid, TaskParams
from deltalab.spectral.schemas import Coupling, CouplingValue


class WellBranch(str, Enum):
    BARRIER = "barrier"
    OSCILLATORY = "oscillatory"
    HARD_CORE = "hardcore"


class WellModel(BaseModel):
    """Spherical well of radius R with a central barrier of radius epsilon."""

    model_config = {"frozen": True}

    R: float = Field(..., gt=0, description="Well radius")
    epsilon: float = Field(..., gt=0, description="Barrier radius")
    coupling: Coupling = Field(..., description="Barrier strength g or hard core")

    @field_validator("coupling", mode="before")
    @classmethod
    def parse_coupling(cls, v: Any) -> Coupling:
        return Coupling.parse(v)

    @model_validator(mode="after")
    def validate_geometry(self) -> "WellModel":
        if not self.epsilon < self.R:
            raise ValueError(
                f"Barrier radius {self.epsilon} must be smaller than R={self.R}"
            )
        g = self.coupling.g
        if g is not None and g < 0:
            raise DomainError(
                "The well model covers repulsive barriers only", {"g": g}
            )
        return self

    @property
    def barrier_height(self) -> float:
        """3g / (4 pi eps^3); infinite for the hard core."""
        if self.coupling.is_hard_core:
            return math.inf
        return 3.0 * self.coupling.g / (4.0 * math.pi * self.epsilon**3)


@dataclass(frozen=True)
class WellSolution:
    """Ground state: E = k^2, matching defect and interior amplitude."""

    k: float
    E: float
    delta: float
    residual: float
    interior_amplitude: float
    branch: WellBranch
    log_psi0: float

    @property
    def psi0(self) -> float:
        return math.exp(self.log_psi0)


DEFAULT_WELL_EPSILON_GRID = (0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001)


class WellParams(TaskParams):
    """Barrier radii to scan, and which table to produce."""

    R: float = Field(default=1.0, gt=0, description="Well radius")
    g: CouplingValue = Field(
        default=Coupling(g=1.0), description="Barrier strength or hardcore"
    )
    epsilon: FloatGrid = Field(default=list(DEFAULT_WELL_EPSILON_GRID), min_length=1)
    mode: Literal["table", "expansion", "origin"] = Field(default="table")

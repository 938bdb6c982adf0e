import math
from dataclasses import dataclass
from typing import Annotated, Any

from pydantic import (
    BaseModel,
    BeforeValidator,
    Field,
    PlainSerializer,
    field_validator,
    model_validator,
)

from deltalab.core.exceptions import CollapseRegimeError
from deltalab.core.params import Count, FloatGrid, IntGrid, TaskParams

HARD_CORE_TOKENS = {"hardcore", "hard-core", "hard_core", "inf", "infinity"}


class Coupling(BaseModel):
    """Contact strength g, or the hard-core limit g -> infinity (g is None)."""

    model_config = {"frozen": True}

    g: float | None = None

    @field_validator("g")
    @classmethod
    def validate_finite(cls, v: float | None) -> float | None:
        if v is not None and not math.isfinite(v):
            raise ValueError("Finite coupling must be a finite number")
        return v

    @classmethod
    def finite(cls, g: float) -> "Coupling":
        return cls(g=float(g))

    @classmethod
    def hard_core(cls) -> "Coupling":
        return cls(g=None)

    @classmethod
    def parse(cls, value: Any) -> "Coupling":
        """Accept a number, a numeric string, or a hard-core token."""
        if isinstance(value, Coupling):
            return value
        if isinstance(value, str):
            token = value.strip().lower()
            if token in HARD_CORE_TOKENS:
                return cls.hard_core()
            return cls.finite(float(token))
        if isinstance(value, int | float):
            if math.isinf(value) and value > 0:
                return cls.hard_core()
            return cls.finite(value)
        raise ValueError(f"Cannot interpret coupling: {value!r}")

    @property
    def is_hard_core(self) -> bool:
        return self.g is None

    @property
    def inverse(self) -> float:
        """Right-hand side 1/g of the secular equation (0 for hard core)."""
        if self.g is None:
            return 0.0
        return 1.0 / self.g

    def label(self) -> str:
        return "hardcore" if self.g is None else repr(self.g)


class SpectralProblem(BaseModel):
    """Oscillator plus contact term, truncated to states k = 0..K."""

    model_config = {"frozen": True}

    D: float = Field(..., ge=1, description="Spatial dimension")
    coupling: Coupling = Field(..., description="Contact coupling or hard core")
    K: int = Field(..., ge=1, description="Truncation (highest radial index)")
    n: int = Field(default=0, ge=0, description="Level index")

    @field_validator("coupling", mode="before")
    @classmethod
    def parse_coupling(cls, v: Any) -> Coupling:
        return Coupling.parse(v)

    @model_validator(mode="after")
    def reject_collapse(self) -> "SpectralProblem":
        g = self.coupling.g
        if g is not None and g < 0 and self.D >= 2:
            raise CollapseRegimeError(g, self.D)
        return self

    def with_truncation(self, K: int) -> "SpectralProblem":
        return SpectralProblem(D=self.D, coupling=self.coupling, K=K, n=self.n)


@dataclass(frozen=True)
class SpectralSolution:
    """Solved level: shift Delta_n, energy E_n = Delta_n + D/2."""

    shift: float
    energy: float
    residual: float
    bracket: tuple[float, float]
    iterations: int = 0


# Parameter field: parses numbers and hard-core tokens, echoes as a label
CouplingValue = Annotated[
    Coupling,
    BeforeValidator(Coupling.parse),
    PlainSerializer(lambda c: c.label(), return_type=str),
]


class ShiftParams(TaskParams):
    D: float = Field(default=3.0, ge=1, description="Spatial dimension")
    g: CouplingValue = Field(
        default=Coupling(g=None), description="Coupling or hardcore"
    )
    K: Count = Field(default=1000, ge=1, description="Truncation")
    n: Count = Field(default=0, ge=0, description="Level index")


class SweepParams(TaskParams):
    D: float = Field(default=3.0, ge=1)
    g: CouplingValue = Field(default=Coupling(g=None))
    K: IntGrid = Field(default=[10, 100, 1000, 10000, 100000], min_length=1)
    n: Count = Field(default=0, ge=0)


class AsymptoticsParams(TaskParams):
    D: FloatGrid = Field(default=[1.0, 2.0, 3.0, 4.0], min_length=1)
    k_min: float = Field(default=1e3, gt=0, description="Smallest fitted index")
    k_max: float = Field(default=1e6, gt=0, description="Largest fitted index")
    delta: float = Field(default=1.0, gt=0, lt=2, description="Shift inside (0, 2)")


class PerturbationParams(TaskParams):
    D: float = Field(default=3.0, ge=1)
    g: float = Field(default=1.0, description="Finite coupling")
    n: Count = Field(default=0, ge=0)
    K: IntGrid = Field(default=[10, 100, 1000, 10000], min_length=1)

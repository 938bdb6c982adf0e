import math
from dataclasses import dataclass
from enum import Enum
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from deltalab.core.exceptions import DomainError
from deltalab.core.params import Count, FloatGrid, TaskParams


class FactorKind(str, Enum):
    TWO_D = "two_d"
    GAUSSIAN = "gaussian"
    IDENTITY = "identity"


class CorrelationFactor(BaseModel):
    """Pair factor f(r) that vanishes at contact and tends to 1 at large r.

    two_d:    f = 1 - exp(-(beta r)^(1/alpha)),  beta = exp(exp(alpha))
    gaussian: f = 1 - exp(-(r/b)^2)
    identity: f = 1 (no correlation)
    """

    model_config = {"frozen": True}

    kind: FactorKind = Field(..., description="Functional form")
    alpha: float | None = Field(default=None, description="Exponent parameter (two_d)")
    b: float | None = Field(
        default=None, gt=0, description="Correlation radius (gaussian)"
    )

    @model_validator(mode="after")
    def validate_parameters(self) -> "CorrelationFactor":
        if self.kind is FactorKind.TWO_D:
            if self.alpha is None or not math.isfinite(self.alpha):
                raise ValueError("two_d factor needs a finite alpha")
            if self.alpha <= 1.0:
                raise DomainError(
                    "two_d factor needs alpha > 1 (beta > e^e), "
                    f"got alpha={self.alpha}",
                    {"alpha": self.alpha},
                )
        elif self.kind is FactorKind.GAUSSIAN:
            if self.b is None or not math.isfinite(self.b):
                raise ValueError("gaussian factor needs a finite radius b")
        return self

    @classmethod
    def two_d(
        cls, beta: float | None = None, alpha: float | None = None
    ) -> "CorrelationFactor":
        """Two-dimensional factor from beta, or directly from alpha = ln(ln beta)."""
        if (beta is None) == (alpha is None):
            raise ValueError("Give exactly one of beta or alpha")
        if alpha is None:
            if not beta > math.e**math.e:
                raise DomainError(
                    f"two_d factor needs beta > e^e, got beta={beta}", {"beta": beta}
                )
            alpha = math.log(math.log(beta))
        return cls(kind=FactorKind.TWO_D, alpha=alpha)

    @classmethod
    def gaussian(cls, b: float) -> "CorrelationFactor":
        """Gaussian factor; b = inf clamps to the identity."""
        if math.isinf(b) and b > 0:
            return cls.identity()
        return cls(kind=FactorKind.GAUSSIAN, b=b)

    @classmethod
    def identity(cls) -> "CorrelationFactor":
        return cls(kind=FactorKind.IDENTITY)

    @property
    def log_beta(self) -> float:
        """ln beta = exp(alpha); beta itself overflows for alpha above ~6.5."""
        if self.kind is not FactorKind.TWO_D:
            raise ValueError(f"{self.kind.value} factor has no beta")
        return math.exp(self.alpha)

    @property
    def beta(self) -> float:
        return math.exp(self.log_beta)

    def label(self) -> str:
        if self.kind is FactorKind.TWO_D:
            return f"two_d(alpha={self.alpha!r})"
        if self.kind is FactorKind.GAUSSIAN:
            return f"gaussian(b={self.b!r})"
        return "identity"


@dataclass(frozen=True)
class VariationalEstimate:
    """Upper bound E0 + correction / norm with its ingredients.

    ``stderr``, ``samples``, ``seed`` and ``rejected`` are set on Monte Carlo
    estimates only.
    """

    E0: float
    correction: float
    norm: float
    factor: str
    stderr: float | None = None
    samples: int | None = None
    seed: int | None = None
    rejected: int = 0

    @property
    def bound(self) -> float:
        return self.E0 + self.correction / self.norm


class VariationalParams(TaskParams):
    """Two-particle Gaussian-factor bounds, or the two-dimensional factor."""

    mode: Literal["bound", "two_d"] = Field(default="bound")
    D: float = Field(default=3.0, gt=2, description="Dimension of the bound sweep")
    b: FloatGrid = Field(default=[0.02, 0.05, 0.1, 0.2, 0.4], min_length=1)
    alpha: FloatGrid = Field(default=[2.0, 3.0, 4.0, 6.0], min_length=1)

    @field_validator("b")
    @classmethod
    def validate_radii(cls, v: list[float]) -> list[float]:
        if any(b <= 0 for b in v):
            raise ValueError("Correlation radii must be positive")
        return v


class NBodyParams(TaskParams):
    """Monte Carlo product-factor bound across correlation radii."""

    N: Count = Field(default=3, ge=2, description="Particle count")
    D: Count = Field(default=3, ge=3, description="Integer dimension")
    b: FloatGrid = Field(
        default=[0.08, 0.11313708498984762, 0.16, 0.22627416997969524, 0.32],
        min_length=1,
    )
    samples: Count = Field(
        default=100_000, ge=2, description="Configurations per radius"
    )
    seed: Count = Field(default=0, ge=0, description="Master seed")

    @field_validator("b")
    @classmethod
    def validate_radii(cls, v: list[float]) -> list[float]:
        if any(b <= 0 for b in v):
            raise ValueError("Correlation radii must be positive")
        return v

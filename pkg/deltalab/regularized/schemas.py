from pydantic import BaseModel, Field

from deltalab.core.params import FloatGrid, IntGrid, TaskParams

DEFAULT_EPSILON_GRID = (0.5, 0.2, 0.1, 0.05, 0.02, 0.01)


class RegularizedProblem(BaseModel):
    """Oscillator plus Gaussian-smeared contact term of width epsilon."""

    model_config = {"frozen": True}

    D: float = Field(..., ge=1, description="Spatial dimension")
    g: float = Field(..., description="Coupling strength")
    epsilon: float = Field(..., gt=0, description="Regularization width")
    K: int = Field(..., ge=1, description="Truncation (highest radial index)")


class RegularizedParams(TaskParams):
    """Double-limit study over regularization widths and truncations."""

    D: float = Field(default=3.0, ge=1, description="Spatial dimension")
    g: float = Field(default=1.0, description="Coupling strength")
    epsilon: FloatGrid = Field(default=list(DEFAULT_EPSILON_GRID), min_length=1)
    K: IntGrid = Field(default=[10, 20, 40, 80], min_length=1)

from pydantic import BaseModel, Field


class BasisIndex(BaseModel):
    """Radial quantum number and dimension of an s-wave oscillator state."""

    model_config = {"frozen": True}

    k: int = Field(..., ge=0, description="Radial quantum number")
    D: float = Field(..., ge=1, description="Spatial dimension (real allowed)")

    @property
    def energy(self) -> float:
        """Unperturbed level E_k = 2k + D/2."""
        return 2 * self.k + self.D / 2

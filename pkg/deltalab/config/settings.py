from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="DELTALAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="Delta Lab", description="Application name")
    debug: bool = Field(default=False, description="Debug mode (console logs)")

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING", description="Logging level"
    )

    # Root finding
    solver_rtol: float = Field(
        default=1e-12, description="Relative tolerance on bisection roots"
    )
    bracket_inset: float = Field(
        default=1e-9, description="Bracket inset as a fraction of bracket width"
    )
    max_bisection_iter: int = Field(
        default=200, description="Maximum bisection iterations per root"
    )

    # Quadrature
    quadrature_tol: float = Field(
        default=1e-13,
        description="Level-to-level change tolerance, relative to max(1, |I|)",
    )
    quadrature_max_level: int = Field(
        default=12, description="Maximum number of step halvings in tanh-sinh"
    )

    # Eigensolver
    jacobi_tol: float = Field(
        default=1e-12, description="Relative off-diagonal norm for Jacobi convergence"
    )
    jacobi_max_sweeps: int = Field(
        default=60, description="Maximum cyclic Jacobi sweeps"
    )

    # Monte Carlo
    mc_block_size: int = Field(
        default=65536, description="Samples per independently seeded block"
    )
    mc_max_rejection_rate: float = Field(
        default=1e-3, description="Maximum tolerated underflow rejection rate"
    )
    mc_underflow_threshold: float = Field(
        default=1e-300, description="Pair factor below which a sample is rejected"
    )

    # Output
    csv_digits: int = Field(
        default=17, description="Significant digits for floats in CSV/JSON output"
    )
    default_threads: int = Field(
        default=1, description="Worker threads when --threads is not given"
    )

    def model_post_init(self, __context) -> None:
        """Validate settings after initialization."""
        for name in ("solver_rtol", "quadrature_tol", "jacobi_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name.upper()} must be positive")
        if not 0 <= self.bracket_inset < 0.5:
            raise ValueError("BRACKET_INSET must lie in [0, 0.5)")
        if not 1 <= self.csv_digits <= 17:
            raise ValueError("CSV_DIGITS must lie in [1, 17]")
        if self.mc_block_size < 1:
            raise ValueError("MC_BLOCK_SIZE must be at least 1")
        if self.default_threads < 1:
            raise ValueError("DEFAULT_THREADS must be at least 1")


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Return the process-wide settings."""
    return settings

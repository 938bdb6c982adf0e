from datetime import datetime, timezone
from typing import Any

EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_NUMERICAL = 4


class DeltaLabError(Exception):
    """Base exception for Delta Lab."""

    def __init__(
        self,
        message: str,
        exit_code: int = 1,
        details: dict[str, Any] | None = None,
    ):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class ConfigError(DeltaLabError):
    """Raised when a run configuration is invalid."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, EXIT_CONFIG, details)


class DomainRejection(DeltaLabError):
    """Raised when a request lies outside the modeled physics."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, EXIT_DOMAIN, details)


class CollapseRegimeError(DomainRejection):
    """Attractive contact coupling in D >= 2: the Hamiltonian is unbounded below."""

    def __init__(self, g: float, D: float):
        super().__init__(
            f"Attractive coupling g={g} in D={D} >= 2 is the collapse regime: "
            "the spectrum is unbounded below and no ground state exists",
            {"g": g, "D": D},
        )


class DomainError(DomainRejection):
    """Argument outside the domain of a closed-form law or special function."""


class NumericalFailure(DeltaLabError):
    """Raised when a numerical procedure cannot deliver a result."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, EXIT_NUMERICAL, details)


class BracketError(NumericalFailure):
    """No valid root bracket for the requested level."""


class BranchError(NumericalFailure):
    """Solution left the modeled branch (e.g. oscillatory barrier interior)."""


class PoleError(NumericalFailure):
    """Evaluation requested exactly at a pole of the secular function."""


class ConvergenceError(NumericalFailure):
    """Iteration limit reached before the tolerance was met."""


class ContractViolation(NumericalFailure):
    """Input breaks a structural contract (e.g. non-symmetric matrix)."""


class RejectionRateError(NumericalFailure):
    """Too many Monte Carlo samples rejected for factor underflow."""


def create_error_envelope(
    exc: DeltaLabError, run_id: str | None = None
) -> dict[str, Any]:
    """Create standardized error envelope for CLI output."""
    return {
        "ok": False,
        "error": {
            "message": exc.message,
            "code": exc.exit_code,
            "type": exc.__class__.__name__,
            "details": exc.details,
        },
        "run_id": run_id,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }

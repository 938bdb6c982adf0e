"""Shared pieces of the per-command parameter models."""

import math
import re
from typing import Annotated, Any

from pydantic import AfterValidator, BaseModel, BeforeValidator, ConfigDict

_SEPARATORS = re.compile(r"[,\s]+")


def _integral(value: Any) -> Any:
    """Accept 1e6-style spellings for integer parameters."""
    if isinstance(value, str):
        value = value.strip()
        try:
            return int(value)
        except ValueError:
            value = float(value)
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"Expected an integer, got {value!r}")
        return int(value)
    return value


def _split(value: Any) -> Any:
    if isinstance(value, str):
        return [item for item in _SEPARATORS.split(value.strip()) if item]
    if isinstance(value, int | float):
        return [value]
    return value


def _float_list(value: Any) -> Any:
    return [float(v) if isinstance(v, str) else v for v in _split(value)]


def _int_list(value: Any) -> Any:
    return [_integral(v) for v in _split(value)]


def _finite_list(values: list[float]) -> list[float]:
    if not all(math.isfinite(v) for v in values):
        raise ValueError("Grid values must be finite")
    return values


Count = Annotated[int, BeforeValidator(_integral)]
FloatGrid = Annotated[
    list[float], BeforeValidator(_float_list), AfterValidator(_finite_list)
]
IntGrid = Annotated[list[int], BeforeValidator(_int_list)]


class TaskParams(BaseModel):
    """Base for command parameters: unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    def echo(self) -> dict[str, Any]:
        """Parameters as plain JSON values, suitable for feeding back in."""
        return self.model_dump(mode="json")

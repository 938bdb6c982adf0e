from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, Generic, Protocol, TypeVar

from pydantic import BaseModel

from .tables import ResultTable

T = TypeVar("T")


class Registry(Generic[T]):
    """Name-to-implementation table, frozen once startup registration is done."""

    def __init__(self, name: str):
        self.name = name
        self._implementations: dict[str, T] = {}
        self._frozen = False

    def register(self, name: str, implementation: T) -> None:
        """Register an implementation; names are unique."""
        if self._frozen:
            raise RuntimeError(
                f"Cannot register '{name}' in {self.name.lower()} registry: "
                "registry is frozen"
            )
        if name in self._implementations:
            raise ValueError(f"{self.name} '{name}' is already registered")
        self._implementations[name] = implementation

    def get(self, name: str) -> T:
        """Get an implementation by name."""
        if name not in self._implementations:
            raise KeyError(
                f"No {self.name.lower()} implementation registered with name: {name}"
            )
        return self._implementations[name]

    def __contains__(self, name: object) -> bool:
        return name in self._implementations

    def list(self) -> list[str]:
        """Registered names in registration order."""
        return list(self._implementations.keys())

    def freeze(self) -> None:
        """Freeze the registry to prevent further modifications."""
        self._frozen = True

    def is_frozen(self) -> bool:
        """Check if the registry is frozen."""
        return self._frozen


class Mapper(Protocol):
    """map()-compatible callable; executor.map qualifies."""

    def __call__(self, fn: Callable[..., Any], *iterables: Any) -> Any: ...


@dataclass(frozen=True)
class Task:
    """A CLI command backed by a library operation.

    Args:
        params: pydantic model validating the command parameters (extra keys
            are rejected by the model config)
        runner: builds the result table from validated params and a mapper
        sort_keys: columns the rows are sorted by before writing
        description: one-line help text
    """

    params: type[BaseModel]
    runner: Callable[[Any, Mapper], ResultTable]
    sort_keys: tuple[str, ...] = ()
    description: str = ""
    seeded: bool = field(default=False)


class TaskRegistry(Registry[Task]):
    """Registry for CLI tasks (shift, sweep, figure, ...)."""

    def __init__(self):
        super().__init__("Task")


# Global registry instance (singleton)
task_registry = TaskRegistry()

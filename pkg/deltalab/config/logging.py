"""Structured logging for the lab: structlog onto stderr, stdout left to tables."""

import logging
import sys
from typing import Any

import numpy as np
import structlog
from structlog.processors import CallsiteParameter, CallsiteParameterAdder
from structlog.typing import EventDict, WrappedLogger

from .settings import settings


def plain_values(_: WrappedLogger, __: str, event_dict: EventDict) -> EventDict:
    """Turn numpy scalars and small arrays into JSON-ready Python values."""
    for key, value in event_dict.items():
        if isinstance(value, np.generic):
            event_dict[key] = value.item()
        elif isinstance(value, np.ndarray) and value.size <= 16:
            event_dict[key] = value.tolist()
    return event_dict


def _level(level: str | None) -> int:
    return getattr(logging, (level or settings.log_level).upper())


def configure_structlog(level: str | None = None) -> None:
    """Point structlog at stderr with the lab's processors; stdlib untouched."""
    renderer = (
        structlog.dev.ConsoleRenderer(colors=False)
        if settings.debug
        else structlog.processors.JSONRenderer()
    )
    callsite = (
        [CallsiteParameterAdder(parameters=[CallsiteParameter.FUNC_NAME])]
        if settings.debug
        else []
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.add_log_level,
            *callsite,
            plain_values,
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(_level(level)),
        logger_factory=structlog.WriteLoggerFactory(file=sys.stderr),
        # Each CLI invocation reconfigures onto the current stderr
        cache_logger_on_first_use=False,
    )


def setup_logging(level: str | None = None) -> None:
    """Configure structlog and stdlib logging; ``level`` overrides settings."""
    logging.basicConfig(
        format="%(message)s", stream=sys.stderr, level=_level(level), force=True
    )
    configure_structlog(level)


def configure_defaults() -> None:
    """Library use without setup_logging: stderr at the settings level."""
    if not structlog.is_configured():
        configure_structlog()


def get_logger(name: str = __name__) -> structlog.BoundLogger:
    """Logger carrying its module name on every line."""
    return structlog.get_logger(logger_name=name)


def add_run_context(run_id: str, **context: Any) -> None:
    """Bind run identifiers to every log line emitted during a CLI run."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(run_id=run_id, **context)


configure_defaults()

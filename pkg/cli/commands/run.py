"""Run Orchestration - shared by every lab command"""

import json
import os
import time
import uuid
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any

import typer
from pydantic import ValidationError

from deltalab import __version__
from deltalab.config.logging import add_run_context, get_logger
from deltalab.config.settings import settings
from deltalab.core.exceptions import ConfigError, DeltaLabError, create_error_envelope
from deltalab.core.params import TaskParams
from deltalab.core.registries import Task, task_registry
from deltalab.core.tables import ResultTable

from ..utils.config_manager import config_manager
from ..utils.formatting import (
    console,
    create_manifest_panel,
    create_result_table,
    print_error,
)

logger = get_logger(__name__)


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def resolve_threads(value: str | None) -> int:
    """Worker count from ``--threads``: a positive integer or 'auto'"""
    if value is None:
        return settings.default_threads
    if value.strip().lower() == "auto":
        return os.cpu_count() or 1
    try:
        workers = int(value)
    except ValueError:
        raise ConfigError(
            f"--threads must be a positive integer or 'auto', got {value!r}",
            {"threads": value},
        ) from None
    if workers < 1:
        raise ConfigError(
            f"--threads must be at least 1, got {workers}", {"threads": value}
        )
    return workers


def validate_params(command: str, raw: dict[str, Any]) -> TaskParams:
    """Validate raw parameters against the command's model before any work"""
    task = task_registry.get(command)
    try:
        return task.params.model_validate(raw)
    except ValidationError as e:
        problems = [
            {"field": ".".join(str(p) for p in err["loc"]), "message": err["msg"]}
            for err in e.errors()
        ]
        summary = "; ".join(f"{p['field']}: {p['message']}" for p in problems)
        raise ConfigError(
            f"Invalid parameters for '{command}': {summary}", {"errors": problems}
        ) from None


def execute(command: str, params: TaskParams, threads: int) -> ResultTable:
    """Run a task, serially or on a thread pool, and sort its rows"""
    task = task_registry.get(command)
    try:
        if threads == 1:
            table = task.runner(params, map)
        else:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                table = task.runner(params, executor.map)
    except ValueError as e:
        raise ConfigError(str(e), {"command": command}) from None
    return table.sorted_by(task.sort_keys)


def render(table: ResultTable, fmt: OutputFormat) -> str:
    return table.to_json() if fmt is OutputFormat.JSON else table.to_csv()


def manifest_path(out: Path) -> Path:
    return out.with_name(out.name + ".manifest.json")


def build_manifest(
    command: str,
    task: Task,
    params: TaskParams,
    table: ResultTable,
    fmt: OutputFormat,
    threads: int,
    out: Path | None,
    run_id: str,
    started_at: str,
    wall_time: float,
) -> dict[str, Any]:
    echo = params.echo()
    return {
        "command": command,
        "params": echo,
        "format": fmt.value,
        "threads": threads,
        "output": str(out) if out is not None else None,
        "rows": len(table.rows),
        "version": __version__,
        "seed": echo.get("seed") if task.seeded else None,
        "run_id": run_id,
        "started_at": started_at,
        "wall_time_s": wall_time,
    }


def write_outputs(text: str, out: Path, manifest: dict[str, Any]) -> None:
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8", newline="")
        manifest_path(out).write_text(
            json.dumps(manifest, indent=2) + "\n", encoding="utf-8", newline=""
        )
    except OSError as e:
        raise ConfigError(
            f"Cannot write output {out}: {e.strerror or e}", {"path": str(out)}
        ) from None


def run_task(
    command: str,
    config_path: Path | None,
    param_flags: list[str] | None,
    out: Path | None,
    fmt: OutputFormat,
    threads: str | None,
    quiet: bool,
) -> None:
    """Resolve config, run the task, write table and manifest.

    Failures print a JSON error envelope on stderr and exit with the error's
    code: 2 for configuration, 3 for domain rejections, 4 for numerical
    failures.
    """
    run_id = uuid.uuid4().hex[:12]
    add_run_context(run_id, command=command)
    started_at = datetime.now(timezone.utc).isoformat()
    started = time.perf_counter()

    try:
        task = task_registry.get(command)
        raw = config_manager.resolve(command, config_path, param_flags)
        params = validate_params(command, raw)
        workers = resolve_threads(threads)
        logger.info("run started", params=params.echo(), threads=workers)

        table = execute(command, params, workers)
        text = render(table, fmt)
        manifest = build_manifest(
            command,
            task,
            params,
            table,
            fmt,
            workers,
            out,
            run_id,
            started_at,
            time.perf_counter() - started,
        )
        if out is None:
            typer.echo(text, nl=False)
        else:
            write_outputs(text, out, manifest)
    except DeltaLabError as e:
        logger.error(
            "run failed", error=e.message, code=e.exit_code, type=type(e).__name__
        )
        typer.echo(json.dumps(create_error_envelope(e, run_id), default=str), err=True)
        if not quiet:
            print_error(e.message)
        raise typer.Exit(e.exit_code) from None

    logger.info(
        "run finished", rows=len(table.rows), wall_time_s=manifest["wall_time_s"]
    )
    if out is not None and not quiet:
        console.print(create_result_table(table, title=command))
        console.print(create_manifest_panel(manifest))


def _describe(task: Task) -> str:
    lines = [task.description, "", "Parameters (--param key=value):", ""]
    for name, info in task.params.model_fields.items():
        default = info.default
        if isinstance(default, list):
            default = ",".join(str(v) for v in default)
        elif hasattr(default, "label"):
            default = default.label()
        lines.append(f"• {name} = {default}")
    return "\n".join(lines)


def task_command(name: str, task: Task) -> Callable[..., None]:
    """Build the Typer command for one registered task"""

    def command(
        config: Path | None = typer.Option(
            None,
            "--config",
            "-c",
            help="Run config: 'key = value' text, YAML, or a run manifest (.json)",
        ),
        param: list[str] | None = typer.Option(
            None, "--param", "-p", help="Parameter override key=value (repeatable)"
        ),
        out: Path | None = typer.Option(
            None, "--out", "-o", help="Output file; stdout when omitted"
        ),
        fmt: OutputFormat = typer.Option(
            OutputFormat.CSV, "--format", "-f", help="Output format"
        ),
        threads: str | None = typer.Option(
            None, "--threads", "-t", help="Worker threads, or 'auto'"
        ),
        quiet: bool = typer.Option(
            False, "--quiet", "-q", help="No console preview or summary"
        ),
    ):
        run_task(name, config, param, out, fmt, threads, quiet)

    command.__name__ = name
    command.__doc__ = _describe(task)
    return command

"""Configuration Commands - settings and run-config inspection"""

from pathlib import Path

import typer
from rich.console import Console
from rich.panel import Panel

from deltalab.config.settings import get_settings
from deltalab.core.exceptions import DeltaLabError
from deltalab.core.registries import task_registry

from ..utils.config_manager import config_manager
from ..utils.formatting import display_settings, print_error, print_success
from .run import validate_params

console = Console(stderr=True)
app = typer.Typer(name="config", help="Settings and run configuration commands")


@app.command("show")
def show_settings():
    """Show numerical settings (override with DELTALAB_* environment variables)"""
    console.print(
        Panel(
            "[bold cyan]Delta Lab Settings[/bold cyan]\n\n"
            "[dim]Values come from DELTALAB_* environment variables or .env[/dim]",
            title="Configuration",
            border_style="blue",
        )
    )
    display_settings(get_settings().model_dump())


@app.command("check")
def check_config(
    path: Path = typer.Argument(..., help="Run config file to validate"),
    command: str = typer.Option(..., "--command", "-c", help="Command it is for"),
):
    """Validate a run config file against a command's parameters"""
    if command not in task_registry:
        choices = ", ".join(task_registry.list())
        print_error(f"Unknown command '{command}'; choose from {choices}")
        raise typer.Exit(2)

    try:
        raw = config_manager.resolve(command, path, None)
        params = validate_params(command, raw)
    except DeltaLabError as e:
        print_error(e.message)
        raise typer.Exit(e.exit_code) from None

    print_success(f"{path} is a valid '{command}' config")
    for key, value in params.echo().items():
        console.print(f"[cyan]{key}[/cyan] = [yellow]{value}[/yellow]")

"""Delta Lab CLI - Main Entry Point"""

import typer
from rich.console import Console
from rich.panel import Panel

from deltalab.config.logging import setup_logging
from deltalab.core.registries import task_registry
from deltalab.registry_init import init_all_registries

from .commands import config
from .commands.run import task_command

console = Console(stderr=True)

# Create main Typer app
app = typer.Typer(
    name="delta-ineff",
    help="Numerical lab for contact interactions in a harmonic trap",
    rich_markup_mode="rich",
    no_args_is_help=True,
)

app.add_typer(config.app, name="config")

# One command per registered lab task
init_all_registries()
for _name in task_registry.list():
    app.command(_name)(task_command(_name, task_registry.get(_name)))


@app.command()
def version():
    """Show version information"""
    from . import __version__

    console.print(
        Panel(
            f"[bold cyan]Delta Lab[/bold cyan]\n\n"
            f"• Version: [green]{__version__}[/green]\n"
            f"• Commands: [yellow]{', '.join(task_registry.list())}[/yellow]",
            title="Version Info",
            border_style="cyan",
        )
    )


def version_callback(value: bool | None):
    if value:
        from . import __version__

        typer.echo(f"delta-ineff v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    version: bool | None = typer.Option(
        None,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit",
    ),
):
    """
    Delta Lab - contact interactions in a harmonic trap

    Solve secular equations, regularized Hamiltonians, a barrier-in-a-well
    model and correlated variational bounds; every command writes its table
    as CSV or JSON together with a run manifest.
    """
    setup_logging()


if __name__ == "__main__":
    app()

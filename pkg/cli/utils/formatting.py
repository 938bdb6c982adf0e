"""Rich formatting helpers; everything goes to stderr so stdout stays data-only"""

from typing import Any

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from deltalab.core.tables import ResultTable, format_value

console = Console(stderr=True)

PREVIEW_DIGITS = 8


def print_success(message: str):
    """Print success message with green styling"""
    console.print(f"[green]✓ {message}[/green]")


def print_error(message: str):
    """Print error message with red styling"""
    console.print(f"[red]✗ {message}[/red]")


def create_result_table(table: ResultTable, title: str, limit: int = 10) -> Table:
    """Preview of the first rows of a result table"""
    preview = Table(title=title, box=box.ROUNDED)
    for i, name in enumerate(table.columns):
        preview.add_column(name, justify="right", style="cyan" if i == 0 else "white")

    for row in table.rows[:limit]:
        preview.add_row(*[format_value(v, PREVIEW_DIGITS) or "-" for v in row])

    hidden = len(table.rows) - limit
    if hidden > 0:
        preview.caption = f"… {hidden} more rows"
    return preview


def create_manifest_panel(manifest: dict[str, Any]) -> Panel:
    """Summary panel for a finished run"""
    params = ", ".join(f"{k}={v}" for k, v in manifest["params"].items())
    content = (
        f"• Command: [cyan]{manifest['command']}[/cyan]\n"
        f"• Parameters: [yellow]{params}[/yellow]\n"
        f"• Rows: [green]{manifest['rows']}[/green]\n"
        f"• Wall time: [magenta]{manifest['wall_time_s']:.3f} s[/magenta]\n"
        f"• Output: [blue]{manifest['output'] or 'stdout'}[/blue]"
    )
    return Panel(content, title="Run Complete", border_style="green")


def display_settings(values: dict[str, Any]):
    """Show resolved settings as a two-column table"""
    table = Table(title="Settings", box=box.ROUNDED)
    table.add_column("Key", style="cyan", no_wrap=True)
    table.add_column("Value", style="yellow")
    for key, value in values.items():
        table.add_row(key, str(value))
    console.print(table)

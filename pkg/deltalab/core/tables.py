"""Result tables shared by every lab operation and the CLI writers."""

import csv
import io
import json
import math
import numbers
from dataclasses import dataclass, field
from typing import Any

from deltalab.config.settings import settings


def format_value(value: Any, digits: int | None = None) -> str:
    """Render one cell: ints verbatim, floats with fixed significant digits."""
    digits = digits or settings.csv_digits
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return format(float(value), f".{digits}g")
    if value is None:
        return ""
    return str(value)


def _json_value(value: Any, digits: int) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        x = float(value)
        if x != x or x in (float("inf"), float("-inf")):
            return format_value(x, digits)
        return float(format(x, f".{digits}g"))
    return str(value)


def _json_meta(value: Any) -> Any:
    """Metadata as strict JSON: non-finite numbers become strings."""
    if isinstance(value, dict):
        return {str(k): _json_meta(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [_json_meta(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        x = float(value)
        return x if math.isfinite(x) else format_value(x)
    return str(value)


@dataclass
class ResultTable:
    """Column-named rows plus free-form metadata."""

    columns: list[str]
    rows: list[list[Any]] = field(default_factory=list)
    meta: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for row in self.rows:
            self._check(row)

    def _check(self, row: list[Any]) -> None:
        if len(row) != len(self.columns):
            raise ValueError(
                f"Row has {len(row)} cells, table has {len(self.columns)} columns"
            )

    def append(self, row: list[Any]) -> None:
        self._check(row)
        self.rows.append(list(row))

    def column(self, name: str) -> list[Any]:
        """Return all values of one column."""
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]

    def sorted_by(self, keys: tuple[str, ...] | list[str]) -> "ResultTable":
        """Return a copy with rows ordered by those of ``keys`` the table has."""
        idx = [self.columns.index(k) for k in keys if k in self.columns]
        if not idx:
            return ResultTable(list(self.columns), list(self.rows), dict(self.meta))
        rows = sorted(self.rows, key=lambda row: tuple(row[i] for i in idx))
        return ResultTable(list(self.columns), rows, dict(self.meta))

    def to_csv(self, digits: int | None = None) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_value(v, digits) for v in row])
        return buffer.getvalue()

    def to_json(self, digits: int | None = None) -> str:
        digits = digits or settings.csv_digits
        payload = {
            "columns": self.columns,
            "rows": [[_json_value(v, digits) for v in row] for row in self.rows],
            "meta": _json_meta(self.meta),
        }
        return json.dumps(payload, indent=2, sort_keys=False, allow_nan=False) + "\n"

    def records(self) -> list[dict[str, Any]]:
        return [dict(zip(self.columns, row, strict=True)) for row in self.rows]

"""Truncated-basis ground states, origin values and figure data."""

from .expansion import (
    FIGURE_TRUNCATIONS,
    WaveFunctionExpansion,
    evaluate,
    figure_grid,
    figure_table,
    ground_state,
    layer_width,
    nonnegative_from,
    origin_trace,
    origin_value,
    reconstruct,
)

__all__ = [
    "FIGURE_TRUNCATIONS",
    "WaveFunctionExpansion",
    "evaluate",
    "figure_grid",
    "figure_table",
    "ground_state",
    "layer_width",
    "nonnegative_from",
    "origin_trace",
    "origin_value",
    "reconstruct",
]

"""Tests for structured logging setup."""

import json

import numpy as np
import structlog

from deltalab.config.logging import (
    add_run_context,
    configure_defaults,
    get_logger,
    setup_logging,
)
from deltalab.regularized import RegularizedProblem, delta_eps_matrix, eigen_lowest


def last_line(text):
    return json.loads(text.strip().splitlines()[-1])


def test_json_lines_on_stderr(capsys):
    """Test log lines are JSON on stderr and stdout stays empty."""
    setup_logging("INFO")
    get_logger("deltalab.spectral.secular").info(
        "solved", shift=np.float64(0.5), K=np.int64(10), grid=np.array([1.0, 2.0])
    )
    captured = capsys.readouterr()
    assert captured.out == ""
    line = last_line(captured.err)
    assert line["event"] == "solved"
    assert line["logger_name"] == "deltalab.spectral.secular"
    assert line["level"] == "info"
    assert line["shift"] == 0.5
    assert line["K"] == 10
    assert line["grid"] == [1.0, 2.0]


def test_level_threshold(capsys):
    """Test records below the configured level are dropped."""
    setup_logging("WARNING")
    logger = get_logger("deltalab.test")
    logger.info("hidden")
    logger.warning("shown")
    err = capsys.readouterr().err
    assert "hidden" not in err
    assert last_line(err)["event"] == "shown"


def test_run_context(capsys):
    """Test run identifiers are bound to every line."""
    setup_logging("INFO")
    add_run_context("abc123", command="shift")
    try:
        get_logger("deltalab.test").info("run started")
    finally:
        structlog.contextvars.clear_contextvars()
    line = last_line(capsys.readouterr().err)
    assert line["run_id"] == "abc123"
    assert line["command"] == "shift"


def test_library_default_stays_off_stdout(capsys):
    """Test solver debug lines never reach stdout without setup_logging."""
    structlog.reset_defaults()
    configure_defaults()
    logger = get_logger("deltalab.numerics.jacobi")
    logger.debug("jacobi converged", sweeps=7)
    logger.warning("bracket widened")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "jacobi converged" not in captured.err
    assert last_line(captured.err)["event"] == "bracket widened"


def test_library_quadrature_is_quiet(capsys):
    """Test a library solve prints nothing on stdout at the default level."""
    structlog.reset_defaults()
    configure_defaults()
    problem = RegularizedProblem(D=3, g=1.0, epsilon=0.5, K=4)
    eigen_lowest(delta_eps_matrix(problem))
    assert capsys.readouterr().out == ""

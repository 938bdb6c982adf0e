import pytest
from typer.testing import CliRunner

from deltalab.config.logging import setup_logging
from deltalab.registry_init import init_all_registries


@pytest.fixture(autouse=True)
def configure_logging():
    """Route structured logs to the current stderr for every test."""
    setup_logging()
    yield


@pytest.fixture(scope="session", autouse=True)
def registries():
    """Register every lab task once per session."""
    init_all_registries()


@pytest.fixture
def runner():
    """CLI test runner"""
    return CliRunner()

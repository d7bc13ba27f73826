# tests/conftest.py
"""Shared fixtures."""

import pytest

from src.config import Settings, get_settings
from src.enumeration.domain.services.enumerator import enumerate_labeled
from src.enumeration.domain.value_objects.graph_filter import GraphFilter
from src.graphs.domain.value_objects.graph import Graph


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the exhaustive n = 6..7 checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive checks at the largest enumerated orders (minutes)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are cached per process; tests that patch OHMCURVE_* need a clean cache."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture()
def settings() -> Settings:
    return Settings(_env_file=None)


@pytest.fixture(scope="session")
def connected_upto_5() -> list[Graph]:
    """Every labeled connected graph with 1 <= n <= 5."""
    return [g for n in range(1, 6) for g in enumerate_labeled(n, GraphFilter.connected())]


@pytest.fixture(scope="session")
def connected_6() -> list[Graph]:
    """Every labeled connected graph on 6 vertices (26704 of them)."""
    return list(enumerate_labeled(6, GraphFilter.connected()))

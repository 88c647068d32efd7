"""pytest plugins."""

import pytest

from .profiler import ExplorationProfiler
from .store import ReportStore


@pytest.fixture(scope="function")
def exploration_profiler():
    """pytest fixture for the exploration profiler."""
    with ExplorationProfiler() as profiler:
        yield profiler


@pytest.fixture(scope="function")
def report_store():
    """pytest fixture for an in-memory report store."""
    store = ReportStore("sqlite://")
    store.create_all()
    yield store
    store.drop_all()
    store.engine.dispose()

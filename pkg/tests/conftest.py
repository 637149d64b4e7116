"""Shared pytest fixtures and configuration."""

import pytest
from hypothesis import HealthCheck, settings

from common.config import get_settings
from services.combinatorics.partitions import Partition
from services.combinatorics.tableaux import YoungTableau
from services.fock.context import FockContext
from services.fock.weight_space import clear_caches

# exact arithmetic is slow per example; keep property runs short and deterministic
settings.register_profile(
    "paraboson",
    max_examples=25,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("paraboson")


@pytest.fixture(autouse=True, scope="module")
def fresh_caches():
    """Start every test module with empty weight-space caches."""
    clear_caches()
    yield
    clear_caches()


@pytest.fixture
def reset_settings(monkeypatch):
    """Clear the cached Settings so environment overrides take effect."""
    get_settings.cache_clear()
    yield monkeypatch
    get_settings.cache_clear()


@pytest.fixture
def ctx_1_1():
    """A single ordinary boson."""
    return FockContext(n=1, p=1)


@pytest.fixture
def ctx_2_1():
    return FockContext(n=2, p=1)


@pytest.fixture
def ctx_2_2():
    return FockContext(n=2, p=2)


@pytest.fixture
def ctx_2_3():
    return FockContext(n=2, p=3)


@pytest.fixture
def ctx_3_2():
    return FockContext(n=3, p=2)


@pytest.fixture
def ctx_3_3():
    return FockContext(n=3, p=3)


@pytest.fixture
def golden_shape():
    """lambda = (4,2,0), the worked n = 3 example."""
    return Partition.of((4, 2, 0))


@pytest.fixture
def golden_tableaux():
    """The three semistandard tableaux of shape (4,2) and content (2,2,2), in transition order."""
    return [
        YoungTableau.from_rows([[1, 1, 3, 3], [2, 2]]),
        YoungTableau.from_rows([[1, 1, 2, 3], [2, 3]]),
        YoungTableau.from_rows([[1, 1, 2, 2], [3, 3]]),
    ]

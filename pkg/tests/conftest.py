"""Pytest configuration and shared fixtures."""

from collections.abc import Iterator

import pytest

from src.modules.games.scores import clear_caches
from src.shared.config import Config


@pytest.fixture
def small_config() -> Config:
    """Bounds large enough for day-2 Normal-play forms and day-1 scoring universes."""
    return Config(
        environment="test",
        max_day=2,
        pool_limit=100_000,
        konane_max_cells=30,
        log_level="WARNING",
    )


@pytest.fixture
def tight_config() -> Config:
    """Bounds small enough that any real search is refused."""
    return Config(
        environment="test",
        max_day=1,
        pool_limit=50,
        konane_max_cells=6,
        log_level="WARNING",
    )


@pytest.fixture(autouse=True)
def _fresh_caches() -> Iterator[None]:
    """Each test starts from empty memo tables."""
    yield
    clear_caches()

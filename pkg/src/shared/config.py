"""Configuration loader for Scoring Games.

Loads search bounds from environment variables with sensible defaults.
"""

import logging
import os
from dataclasses import dataclass

_LEVEL_NAMES = frozenset(logging.getLevelNamesMapping())


@dataclass(frozen=True)
class Config:
    """Engine configuration loaded from environment variables.

    Attributes:
        environment: Current environment (dev/test/prod).
        max_day: Ceiling on the birthday of enumerated universes.
        pool_limit: Maximum candidate games generated for one enumeration day.
        konane_max_cells: Largest board (width * height) expanded into a game tree.
        log_level: Logging level name for module loggers.
    """

    environment: str
    max_day: int
    pool_limit: int
    konane_max_cells: int
    log_level: str


def _get_int(name: str, default: int) -> int:
    """Read a non-negative integer environment variable."""
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")
    return value


def _get_level(name: str, default: str) -> str:
    """Read a logging level name."""
    raw = os.getenv(name, "").strip().upper()
    if raw == "":
        return default
    if raw not in _LEVEL_NAMES:
        raise ValueError(f"{name} must be a logging level name, got {raw!r}")
    return raw


def load_log_level() -> str:
    """Read SCORING_LOG_LEVEL alone, for loggers created at import time.

    Never raises: unknown names give WARNING.
    """
    try:
        return _get_level("SCORING_LOG_LEVEL", "WARNING")
    except ValueError:
        return "WARNING"


def load_config() -> Config:
    """Load configuration from environment variables.

    Returns:
        Config object with all settings.

    Raises:
        ValueError: If a numeric variable is malformed or negative, or the log
            level is not a logging level name.
    """
    return Config(
        environment=os.getenv("SCORING_ENVIRONMENT", "dev"),
        max_day=_get_int("SCORING_MAX_DAY", 2),
        pool_limit=_get_int("SCORING_POOL_LIMIT", 100_000),
        konane_max_cells=_get_int("SCORING_KONANE_MAX_CELLS", 30),
        log_level=_get_level("SCORING_LOG_LEVEL", "WARNING"),
    )

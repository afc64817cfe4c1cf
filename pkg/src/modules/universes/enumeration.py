"""Exhaustive enumeration of small scoring-game universes.

Games are generated birthday by birthday: day 0 is every atom pair, day
d + 1 takes each side from the atoms or a nonempty set of games born by
day d. Since every predicate is hereditary, options are drawn from the
games already accepted, which keeps pools as small as the filter allows.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

import pandas as pd

from src.modules.games.types import Atom, GameTerm, Score, ScoreLike, to_score
from src.modules.universes.predicates import (
    is_dicot,
    is_guaranteed,
    is_milnor,
    is_stable,
    is_stewart,
)
from src.shared.config import Config, load_config
from src.shared.errors import ResourceBoundError
from src.shared.logger import get_logger

logger = get_logger(__name__)


class Predicate(Enum):
    """Named universe restriction."""

    ALL = "all"
    GUARANTEED = "guaranteed"
    STABLE = "stable"
    DICOT = "dicot"
    STEWART = "stewart"
    MILNOR = "milnor"

    def check(self, g: GameTerm) -> bool:
        """Apply the restriction to one game."""
        return _CHECKS[self](g)


_CHECKS: dict[Predicate, Callable[[GameTerm], bool]] = {
    Predicate.ALL: lambda g: True,
    Predicate.GUARANTEED: is_guaranteed,
    Predicate.STABLE: is_stable,
    Predicate.DICOT: is_dicot,
    Predicate.STEWART: is_stewart,
    Predicate.MILNOR: is_milnor,
}


@dataclass(frozen=True)
class UniverseFilter:
    """Which games an enumeration emits.

    Attributes:
        predicate: Universe restriction every emitted game satisfies.
        scores: Atom scores allowed, stored sorted and deduplicated.
        max_day: Largest birthday emitted.
        max_options: Optional cap on the size of any option set.
    """

    predicate: Predicate
    scores: tuple[Score, ...]
    max_day: int
    max_options: int | None = None

    def __post_init__(self) -> None:
        normalized = tuple(sorted({to_score(s) for s in self.scores}))
        if not normalized:
            raise ValueError("UniverseFilter needs at least one atom score")
        if self.max_day < 0:
            raise ValueError(f"max_day must be >= 0, got {self.max_day}")
        if self.max_options is not None and self.max_options < 1:
            raise ValueError(f"max_options must be >= 1, got {self.max_options}")
        object.__setattr__(self, "scores", normalized)

    @classmethod
    def build(
        cls,
        predicate: Predicate | str,
        scores: Sequence[ScoreLike],
        max_day: int,
        max_options: int | None = None,
    ) -> UniverseFilter:
        """Convenience constructor accepting a predicate name and loose scores."""
        return cls(
            predicate=Predicate(predicate),
            scores=tuple(to_score(s) for s in scores),
            max_day=max_day,
            max_options=max_options,
        )


def _side_count(pool_size: int, atom_count: int, max_options: int | None) -> int:
    cap = pool_size if max_options is None else min(max_options, pool_size)
    return atom_count + sum(comb(pool_size, size) for size in range(1, cap + 1))


def enumerate_days(
    universe: UniverseFilter, config: Config | None = None
) -> Iterator[tuple[int, list[GameTerm]]]:
    """Yield (day, games first born that day) for day 0 .. max_day.

    Raises:
        ResourceBoundError: If max_day passes SCORING_MAX_DAY, or a day's
            candidate count passes SCORING_POOL_LIMIT.
    """
    config = config or load_config()
    if universe.max_day > config.max_day:
        raise ResourceBoundError("SCORING_MAX_DAY", config.max_day, universe.max_day)

    atom_sides = [Atom(s) for s in universe.scores]
    pool: list[GameTerm] = []
    seen: set[GameTerm] = set()

    for day in range(universe.max_day + 1):
        side_count = _side_count(len(pool), len(atom_sides), universe.max_options)
        requested = side_count**2
        if requested > config.pool_limit:
            logger.warning(
                f"Enumeration refused at day {day}",
                extra={
                    "day": day,
                    "requested": requested,
                    "limit": config.pool_limit,
                    "predicate": universe.predicate.value,
                },
            )
            raise ResourceBoundError("SCORING_POOL_LIMIT", config.pool_limit, requested)

        cap = len(pool) if universe.max_options is None else universe.max_options
        sides: list[Atom | tuple[GameTerm, ...]] = list(atom_sides)
        for size in range(1, min(cap, len(pool)) + 1):
            sides.extend(combinations(pool, size))

        born = {
            game
            for game in (GameTerm(left, right) for left in sides for right in sides)
            if game not in seen and universe.predicate.check(game)
        }
        new = sorted(born, key=lambda game: game.sort_key)
        pool.extend(new)
        seen.update(new)
        logger.debug(
            f"Day {day}: {len(new)} new games",
            extra={"day": day, "new_games": len(new), "pool_size": len(pool)},
        )
        yield day, new


def enumerate_games(
    universe: UniverseFilter, config: Config | None = None
) -> Iterator[GameTerm]:
    """Stream every game of the universe, earlier birthdays first, in structural order.

    Args:
        universe: Restriction, atom scores and day bound.
        config: Bounds; loaded from the environment when omitted.

    Yields:
        Structurally distinct games passing the predicate.

    Raises:
        ResourceBoundError: As enumerate_days.
    """
    for _, games in enumerate_days(universe, config):
        yield from games


def census(universes: Sequence[UniverseFilter], config: Config | None = None) -> pd.DataFrame:
    """Count each universe's games per birthday.

    Returns:
        One row per (universe, day) with columns predicate, scores,
        max_options, day, new_games and cumulative.
    """
    rows: list[dict[str, object]] = []
    for universe in universes:
        cumulative = 0
        for day, games in enumerate_days(universe, config):
            cumulative += len(games)
            rows.append(
                {
                    "predicate": universe.predicate.value,
                    "scores": ",".join(str(s) for s in universe.scores),
                    "max_options": universe.max_options,
                    "day": day,
                    "new_games": len(games),
                    "cumulative": cumulative,
                }
            )
    return pd.DataFrame(
        rows,
        columns=["predicate", "scores", "max_options", "day", "new_games", "cumulative"],
    )

"""Scoring-game terms.

A scoring game <GL | GR> has on each side either an atom (the player to
move has no options and the game ends with that score) or a nonempty,
finite set of games. Terms are immutable; option sets are stored sorted
and deduplicated under a total structural order so printing and hashing
are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, TypeAlias

Score: TypeAlias = Fraction

ScoreLike: TypeAlias = Fraction | int | str


def to_score(value: ScoreLike) -> Score:
    """Convert an int, string or Fraction into an exact score.

    Raises:
        ValueError: If the value is a float (scores are never rounded).
    """
    if isinstance(value, float):
        raise ValueError(f"Scores must be exact, got float {value!r}")
    return Fraction(value)


@dataclass(frozen=True, slots=True)
class Atom:
    """Empty option set carrying the score triggered when its player must move."""

    score: Score

    def __post_init__(self) -> None:
        object.__setattr__(self, "score", to_score(self.score))


Side: TypeAlias = "Atom | tuple[GameTerm, ...]"


def _side_key(side: Atom | tuple[GameTerm, ...]) -> tuple[Any, ...]:
    if isinstance(side, Atom):
        return (0, side.score)
    return (1, tuple(option._key for option in side))


def _side_hash(side: Atom | tuple[GameTerm, ...]) -> int:
    if isinstance(side, Atom):
        return hash((0, side.score))
    return hash((1, tuple(option._hash for option in side)))


def _canonical_side(side: Any, name: str) -> Atom | tuple[GameTerm, ...]:
    if isinstance(side, Atom):
        return side
    options = tuple(side)
    if not options:
        raise ValueError(f"{name} option set is empty; use an Atom to end the game")
    for option in options:
        if not isinstance(option, GameTerm):
            raise TypeError(f"{name} options must be GameTerm, got {type(option).__name__}")
    unique = {option: None for option in options}
    return tuple(sorted(unique, key=lambda option: option._key))


@dataclass(frozen=True, eq=False, slots=True)
class GameTerm:
    """Immutable short scoring game.

    Attributes:
        left: Atom, or the sorted tuple of Left options.
        right: Atom, or the sorted tuple of Right options.
    """

    left: Atom | tuple[GameTerm, ...]
    right: Atom | tuple[GameTerm, ...]
    _key: tuple[Any, ...] = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        left = _canonical_side(self.left, "Left")
        right = _canonical_side(self.right, "Right")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "_key", (_side_key(left), _side_key(right)))
        object.__setattr__(self, "_hash", hash((_side_hash(left), _side_hash(right))))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, GameTerm):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    @property
    def sort_key(self) -> tuple[Any, ...]:
        """Total structural order used for canonical option sets."""
        return self._key

    @property
    def left_options(self) -> tuple[GameTerm, ...]:
        """Left options, empty when the Left side is an atom."""
        return () if isinstance(self.left, Atom) else self.left

    @property
    def right_options(self) -> tuple[GameTerm, ...]:
        """Right options, empty when the Right side is an atom."""
        return () if isinstance(self.right, Atom) else self.right

    def __add__(self, other: GameTerm) -> GameTerm:
        from src.modules.games.core import disjunctive_sum

        return disjunctive_sum(self, other)

    def __invert__(self) -> GameTerm:
        from src.modules.games.core import conjugate

        return conjugate(self)

    def notation(self) -> str:
        """Render in the ASCII bracket notation, e.g. ``<^3|<2|1>>``."""
        if (
            isinstance(self.left, Atom)
            and isinstance(self.right, Atom)
            and self.left.score == self.right.score
        ):
            return str(self.left.score)
        return f"<{_render_side(self.left)}|{_render_side(self.right)}>"

    def __repr__(self) -> str:
        return f"GameTerm({self.notation()})"

    def __str__(self) -> str:
        return self.notation()


def _render_side(side: Atom | tuple[GameTerm, ...]) -> str:
    if isinstance(side, Atom):
        return f"^{side.score}"
    return ",".join(option.notation() for option in side)

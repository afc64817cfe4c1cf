"""Normal-play game forms and outcome classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


def _canonical(options: Any, name: str) -> tuple[NpTerm, ...]:
    items = tuple(options)
    for option in items:
        if not isinstance(option, NpTerm):
            raise TypeError(f"{name} options must be NpTerm, got {type(option).__name__}")
    unique = {option: None for option in items}
    return tuple(sorted(unique, key=lambda option: option._key))


@dataclass(frozen=True, eq=False, slots=True)
class NpTerm:
    """Normal-play game form {GL | GR}; either option set may be empty.

    Attributes:
        left: Sorted, deduplicated Left options.
        right: Sorted, deduplicated Right options.
    """

    left: tuple[NpTerm, ...] = ()
    right: tuple[NpTerm, ...] = ()
    _key: tuple[Any, ...] = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        left = _canonical(self.left, "Left")
        right = _canonical(self.right, "Right")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(
            self,
            "_key",
            (tuple(o._key for o in left), tuple(o._key for o in right)),
        )
        object.__setattr__(
            self,
            "_hash",
            hash((tuple(o._hash for o in left), tuple(o._hash for o in right))),
        )

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, NpTerm):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    @property
    def sort_key(self) -> tuple[Any, ...]:
        """Total structural order used for canonical option sets."""
        return self._key

    def __add__(self, other: NpTerm) -> NpTerm:
        from src.modules.normal_play.engine import np_add

        return np_add(self, other)

    def __neg__(self) -> NpTerm:
        from src.modules.normal_play.engine import np_negate

        return np_negate(self)

    def notation(self) -> str:
        """Render as ``{a,b|c}``; options always written out in full."""
        left = ",".join(option.notation() for option in self.left)
        right = ",".join(option.notation() for option in self.right)
        return f"{{{left}|{right}}}"

    def __repr__(self) -> str:
        return f"NpTerm({self.notation()})"

    def __str__(self) -> str:
        return self.notation()


class Outcome(Enum):
    """Outcome class: who wins under optimal play.

    Ordered L > N, P > R, with N and P incomparable.
    """

    L = "L"
    N = "N"
    P = "P"
    R = "R"

    def __ge__(self, other: object) -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        if self is other or self is Outcome.L or other is Outcome.R:
            return True
        return False

    def __le__(self, other: object) -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return other >= self

    def __gt__(self, other: object) -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return self >= other and self is not other

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return other > self

    @property
    def description(self) -> str:
        """Human-readable winner description."""
        return {
            Outcome.L: "Left wins",
            Outcome.R: "Right wins",
            Outcome.N: "next player wins",
            Outcome.P: "previous player wins",
        }[self]

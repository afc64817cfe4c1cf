"""Comparison result types."""

from dataclasses import dataclass
from enum import Enum

from src.modules.games.core import disjunctive_sum
from src.modules.games.scores import left_score, right_score
from src.modules.games.types import GameTerm, Score


class ScoreSide(Enum):
    """Which alternating-play score a witness compares."""

    LEFT = "Ls"
    RIGHT = "Rs"

    def of(self, g: GameTerm) -> Score:
        """Evaluate this score on g."""
        return left_score(g) if self is ScoreSide.LEFT else right_score(g)


@dataclass(frozen=True)
class Witness:
    """A distinguishing game refuting G >= H.

    Attributes:
        x: The distinguishing game X.
        side: Score compared.
        lhs_value: side(G + X).
        rhs_value: side(H + X), strictly larger.
    """

    x: GameTerm
    side: ScoreSide
    lhs_value: Score
    rhs_value: Score

    def __post_init__(self) -> None:
        if not self.lhs_value < self.rhs_value:
            raise ValueError(
                "Witness must certify a strict inequality, "
                f"got {self.lhs_value} >= {self.rhs_value}"
            )

    def verify(self, g: GameTerm, h: GameTerm) -> bool:
        """Recompute both scores from scratch against the claimed G and H."""
        lhs = self.side.of(disjunctive_sum(g, self.x))
        rhs = self.side.of(disjunctive_sum(h, self.x))
        return lhs == self.lhs_value and rhs == self.rhs_value and lhs < rhs

    def describe(self) -> str:
        """One-line summary, e.g. ``X=<^1|-1>: Ls(G+X)=-1 < Ls(H+X)=1``."""
        name = self.side.value
        return (
            f"X={self.x.notation()}: "
            f"{name}(G+X)={self.lhs_value} < {name}(H+X)={self.rhs_value}"
        )

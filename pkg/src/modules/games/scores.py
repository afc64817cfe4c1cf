"""Alternating-play scores and pass-allowed scores.

Ls(G) is the final score under optimal play with Left moving first,
Rs(G) the same with Right moving first. The pass-allowed variants add a
stock of waiting moves for the opponent (a component hat(-n) against Left,
hat(n) against Right) and take the opponent's best stock size.
"""

from dataclasses import dataclass
from functools import cache

from src.modules.games.core import disjunctive_sum, max_play_length
from src.modules.games.core import clear_caches as clear_core_caches
from src.modules.games.types import Atom, GameTerm, Score
from src.modules.normal_play.engine import hat


@dataclass(frozen=True)
class ScorePair:
    """Left-score and Right-score of one game.

    Attributes:
        ls: Score with Left moving first.
        rs: Score with Right moving first.
    """

    ls: Score
    rs: Score

    def __str__(self) -> str:
        return f"Ls={self.ls} Rs={self.rs}"


@cache
def left_score(g: GameTerm) -> Score:
    """Ls(G): the atom score if Left has no move, else max of Rs over Left options."""
    if isinstance(g.left, Atom):
        return g.left.score
    return max(right_score(option) for option in g.left)


@cache
def right_score(g: GameTerm) -> Score:
    """Rs(G): the atom score if Right has no move, else min of Ls over Right options."""
    if isinstance(g.right, Atom):
        return g.right.score
    return min(left_score(option) for option in g.right)


def score_pair(g: GameTerm) -> ScorePair:
    """Both alternating-play scores of g."""
    return ScorePair(ls=left_score(g), rs=right_score(g))


def best_left_option(g: GameTerm) -> GameTerm | None:
    """Left option realizing Ls(g); ties go to the structurally smallest option.

    Returns:
        None when Left's side is an atom.
    """
    if isinstance(g.left, Atom):
        return None
    # Options are stored in structural order, so max() keeps the first maximum.
    return max(g.left, key=right_score)


def best_right_option(g: GameTerm) -> GameTerm | None:
    """Right option realizing Rs(g); ties go to the structurally smallest option."""
    if isinstance(g.right, Atom):
        return None
    return min(g.right, key=left_score)


def left_waiting_profile(g: GameTerm, extra: int = 0) -> list[Score]:
    """Ls(g + hat(-n)) for n = 0 .. max_play_length(g) + extra.

    Args:
        g: Game Left plays first in.
        extra: Additional stock sizes past the search bound.

    Returns:
        One score per stock size, index n holding the score against n waiting moves.
    """
    bound = max_play_length(g) + extra
    return [left_score(disjunctive_sum(g, hat(-n))) for n in range(bound + 1)]


def right_waiting_profile(g: GameTerm, extra: int = 0) -> list[Score]:
    """Rs(g + hat(n)) for n = 0 .. max_play_length(g) + extra."""
    bound = max_play_length(g) + extra
    return [right_score(disjunctive_sum(g, hat(n))) for n in range(bound + 1)]


def pass_allowed_left_score_with_stock(g: GameTerm) -> tuple[Score, int]:
    """Right's pass-allowed Left-score together with the smallest stock realizing it.

    Right never needs more waiting moves than there are moves in g, so the
    search stops at max_play_length(g).

    Returns:
        Tuple of (score, n) where n is the smallest minimizing stock size.
    """
    profile = left_waiting_profile(g)
    best = min(profile)
    return best, profile.index(best)


def pass_allowed_right_score_with_stock(g: GameTerm) -> tuple[Score, int]:
    """Left's pass-allowed Right-score together with the smallest stock realizing it."""
    profile = right_waiting_profile(g)
    best = max(profile)
    return best, profile.index(best)


@cache
def pass_allowed_left_score(g: GameTerm) -> Score:
    """Min over n of Ls(g + hat(-n)): Left moves first, Right holds waiting moves."""
    return pass_allowed_left_score_with_stock(g)[0]


@cache
def pass_allowed_right_score(g: GameTerm) -> Score:
    """Max over n of Rs(g + hat(n)): Right moves first, Left holds waiting moves."""
    return pass_allowed_right_score_with_stock(g)[0]


def clear_caches() -> None:
    """Drop every score memo table, including the structural ones in core."""
    for fn in (left_score, right_score, pass_allowed_left_score, pass_allowed_right_score):
        fn.cache_clear()
    clear_core_caches()

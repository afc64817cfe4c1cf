"""Comparison of games against numbers.

In the guaranteed universe G >= l exactly when G is left-l-protected:
Left keeps at least l even if Right may pass, and every Right move has a
Left answer that is again protected. Ettinger's dicot universe uses the
same recursion with the plain Left-score (r-safety).
"""

from functools import cache

from src.modules.games.core import conjugate
from src.modules.games.scores import left_score, pass_allowed_left_score
from src.modules.games.types import Atom, GameTerm, Score, ScoreLike, to_score
from src.modules.universes.predicates import is_dicot, is_guaranteed
from src.shared.errors import ContractError


@cache
def _left_protected(g: GameTerm, level: Score) -> bool:
    if pass_allowed_left_score(g) < level:
        return False
    # A Left-atomic Right option leaves Left no answer.
    return all(
        any(_left_protected(answer, level) for answer in option.left_options)
        for option in g.right_options
    )


def left_protected(g: GameTerm, level: ScoreLike) -> bool:
    """Whether g is left-level-protected.

    Args:
        g: Any scoring game.
        level: Threshold l.

    Returns:
        True iff Ls_(g) >= l and every Right option has a protected Left answer.
    """
    return _left_protected(g, to_score(level))


def right_protected(g: GameTerm, level: ScoreLike) -> bool:
    """Mirror of left_protected: ~g is left-(-level)-protected."""
    return _left_protected(conjugate(g), -to_score(level))


def _require_guaranteed(operation: str, g: GameTerm) -> None:
    if not is_guaranteed(g):
        raise ContractError(operation, f"{g} is not a guaranteed game")


def ge_number(g: GameTerm, level: ScoreLike) -> bool:
    """Decide g >= level in the guaranteed universe.

    Raises:
        ContractError: If g is not guaranteed.
    """
    _require_guaranteed("ge_number", g)
    return left_protected(g, level)


def le_number(g: GameTerm, level: ScoreLike) -> bool:
    """Decide g <= level in the guaranteed universe.

    Raises:
        ContractError: If g is not guaranteed.
    """
    _require_guaranteed("le_number", g)
    return right_protected(g, level)


def eq_zero(g: GameTerm) -> bool:
    """Decide g = 0 in the guaranteed universe (left- and right-0-protected).

    Outside that universe the protection checks still run:
    left_protected(g, 0) and right_protected(g, 0) decide the two halves
    directly, e.g. both hold for <<1|0>|^0>, which is not guaranteed.

    Raises:
        ContractError: If g is not guaranteed.
    """
    _require_guaranteed("eq_zero", g)
    return left_protected(g, 0) and right_protected(g, 0)


@cache
def _left_safe(g: GameTerm, level: Score) -> bool:
    if left_score(g) < level:
        return False
    return all(
        any(_left_safe(answer, level) for answer in option.left_options)
        for option in g.right_options
    )


def ettinger_left_safe(g: GameTerm, level: ScoreLike) -> bool:
    """Left-r-safety: decides g >= r among dicot games.

    Raises:
        ContractError: If g is not a dicot.
    """
    if not is_dicot(g):
        raise ContractError("ettinger_left_safe", f"{g} is not a dicot")
    return _left_safe(g, to_score(level))


def ettinger_right_safe(g: GameTerm, level: ScoreLike) -> bool:
    """Right-r-safety: decides g <= r among dicot games.

    Raises:
        ContractError: If g is not a dicot.
    """
    if not is_dicot(g):
        raise ContractError("ettinger_right_safe", f"{g} is not a dicot")
    return _left_safe(conjugate(g), -to_score(level))


def is_greedier(g: GameTerm, h: GameTerm) -> bool:
    """Whether g offers Left at least h's options and Right at most h's.

    Every Left option of h is a Left option of g, every Right option of g is
    a Right option of h, and where both games end on the same side the atom
    of g is at least that of h. Greediness implies g >= h in dicot play but
    not in general.
    """
    if isinstance(g.left, Atom) and isinstance(h.left, Atom) and g.left.score < h.left.score:
        return False
    if isinstance(g.right, Atom) and isinstance(h.right, Atom) and g.right.score < h.right.score:
        return False
    if isinstance(g.left, Atom) and not isinstance(h.left, Atom):
        return False
    if isinstance(h.right, Atom) and not isinstance(g.right, Atom):
        return False
    return set(h.left_options) <= set(g.left_options) and set(g.right_options) <= set(
        h.right_options
    )

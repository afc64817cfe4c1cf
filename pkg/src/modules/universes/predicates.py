"""Hereditary universe predicates on scoring games.

Each predicate checks a local condition at g and recurses into every
option, so it holds at g iff it holds at every follower.
"""

from functools import cache

from src.modules.games.core import atoms, is_number
from src.modules.games.scores import left_score, right_score
from src.modules.games.types import Atom, GameTerm


def is_left_atomic(g: GameTerm) -> bool:
    """Left has no move: Left's side is an atom."""
    return isinstance(g.left, Atom)


def is_right_atomic(g: GameTerm) -> bool:
    """Right has no move: Right's side is an atom."""
    return isinstance(g.right, Atom)


def is_atomic(g: GameTerm) -> bool:
    """At least one player has no move."""
    return is_left_atomic(g) or is_right_atomic(g)


def _options(g: GameTerm) -> tuple[GameTerm, ...]:
    return g.left_options + g.right_options


@cache
def is_stable(g: GameTerm) -> bool:
    """Every atomic follower F has Ls(F) <= Rs(F)."""
    if is_atomic(g) and left_score(g) > right_score(g):
        return False
    return all(is_stable(option) for option in _options(g))


@cache
def is_guaranteed(g: GameTerm) -> bool:
    """Every atomic follower has no Left-side atom above any Right-side atom.

    For an atomic game the atoms compared are the atom itself on its atomic
    side and every atom appearing anywhere below the other side.
    """
    if is_atomic(g) and max(atoms(g.left)) > min(atoms(g.right)):
        return False
    return all(is_guaranteed(option) for option in _options(g))


@cache
def is_dicot(g: GameTerm) -> bool:
    """Every follower is a number or lets both players move."""
    if not is_number(g) and is_atomic(g):
        return False
    return all(is_dicot(option) for option in _options(g))


@cache
def is_stewart(g: GameTerm) -> bool:
    """Every follower with no moves at all is a number <^s|^s>."""
    if not _options(g) and not is_number(g):
        return False
    return all(is_stewart(option) for option in _options(g))


@cache
def is_milnor(g: GameTerm) -> bool:
    """Dicot with non-negative incentive: Ls(F) >= Rs(F) at every follower."""
    if not is_dicot(g) or left_score(g) < right_score(g):
        return False
    return all(is_milnor(option) for option in _options(g))

"""Construction and structural operations on scoring games.

All functions are pure. Results over the same terms are memoized; the
caches are idempotent (a key always maps to the same value), so sharing
them between threads is harmless.
"""

from __future__ import annotations

from collections import deque
from functools import cache

from src.modules.games.types import Atom, GameTerm, Score, ScoreLike, to_score


def number(s: ScoreLike) -> GameTerm:
    """Return the game s = <^s | ^s>, where the score is s whoever moves."""
    score = to_score(s)
    return GameTerm(Atom(score), Atom(score))


def is_number(g: GameTerm) -> bool:
    """True for games <^s | ^s> (both sides atoms with the same score)."""
    return (
        isinstance(g.left, Atom)
        and isinstance(g.right, Atom)
        and g.left.score == g.right.score
    )


@cache
def conjugate(g: GameTerm) -> GameTerm:
    """Turn the board around: swap sides, recursively, and negate every atom.

    Args:
        g: Game to conjugate.

    Returns:
        The conjugate ~g. Not an additive inverse in general.
    """
    left = Atom(-g.right.score) if isinstance(g.right, Atom) else tuple(
        conjugate(option) for option in g.right
    )
    right = Atom(-g.left.score) if isinstance(g.left, Atom) else tuple(
        conjugate(option) for option in g.left
    )
    return GameTerm(left, right)


@cache
def disjunctive_sum(g: GameTerm, h: GameTerm) -> GameTerm:
    """Disjunctive sum g + h.

    On each side the atoms only merge (their scores add) when both
    components are atomic for that player; otherwise the player's options
    are the moves in either component, g^L + h and g + h^L.

    Args:
        g: First component.
        h: Second component.

    Returns:
        The sum as a single term.
    """
    if isinstance(g.left, Atom) and isinstance(h.left, Atom):
        left: Atom | tuple[GameTerm, ...] = Atom(g.left.score + h.left.score)
    else:
        left = tuple(disjunctive_sum(gl, h) for gl in g.left_options) + tuple(
            disjunctive_sum(g, hl) for hl in h.left_options
        )

    if isinstance(g.right, Atom) and isinstance(h.right, Atom):
        right: Atom | tuple[GameTerm, ...] = Atom(g.right.score + h.right.score)
    else:
        right = tuple(disjunctive_sum(gr, h) for gr in g.right_options) + tuple(
            disjunctive_sum(g, hr) for hr in h.right_options
        )

    return GameTerm(left, right)


def sum_all(*games: GameTerm) -> GameTerm:
    """Sum any number of components; the empty sum is 0."""
    total = number(0)
    for game in games:
        total = disjunctive_sum(total, game)
    return total


@cache
def birthday(g: GameTerm) -> int:
    """Day on which g is born: 0 for <^l | ^r>, else 1 + max over options."""
    options = g.left_options + g.right_options
    if not options:
        return 0
    return 1 + max(birthday(option) for option in options)


@cache
def max_play_length(g: GameTerm) -> int:
    """Length of the longest move sequence from g, any player moving each time.

    Bounds how many waiting moves an opponent can ever need: no play of g,
    alternating or not, makes more moves than this.
    """
    options = g.left_options + g.right_options
    if not options:
        return 0
    return 1 + max(max_play_length(option) for option in options)


def followers(g: GameTerm) -> frozenset[GameTerm]:
    """Every position reachable from g by any (possibly empty) move sequence."""
    seen: set[GameTerm] = {g}
    queue = deque([g])
    while queue:
        current = queue.popleft()
        for option in current.left_options + current.right_options:
            if option not in seen:
                seen.add(option)
                queue.append(option)
    return frozenset(seen)


@cache
def all_atoms(g: GameTerm) -> frozenset[Score]:
    """Scores of every atom appearing anywhere in g."""
    return atoms(g.left) | atoms(g.right)


def atoms(side: Atom | tuple[GameTerm, ...]) -> frozenset[Score]:
    """Scores of every atom at or below one side of a game."""
    if isinstance(side, Atom):
        return frozenset({side.score})
    found: frozenset[Score] = frozenset()
    return found.union(*(all_atoms(option) for option in side))


def clear_caches() -> None:
    """Drop every memo table in this module."""
    for fn in (conjugate, disjunctive_sum, birthday, max_play_length, all_atoms):
        fn.cache_clear()

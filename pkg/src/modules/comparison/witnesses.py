"""Distinguishing games.

Builds explicit games X that separate two games, and searches finite pools
for them. A search that finds nothing proves nothing: falsify_ge is a
semi-decision and returns None rather than True.
"""

from collections.abc import Iterable
from dataclasses import dataclass

from src.modules.comparison.protection import left_protected
from src.modules.comparison.types import ScoreSide, Witness
from src.modules.games.core import conjugate, disjunctive_sum, is_number, number
from src.modules.games.scores import (
    left_score,
    pass_allowed_left_score_with_stock,
    right_score,
)
from src.modules.games.types import Atom, GameTerm, Score, ScoreLike, to_score
from src.modules.normal_play.engine import hat, zeta
from src.modules.normal_play.types import NpTerm
from src.modules.universes.enumeration import UniverseFilter, enumerate_games
from src.modules.universes.predicates import is_guaranteed
from src.shared.config import Config
from src.shared.errors import ContractError, WitnessVerificationError
from src.shared.logger import get_logger

logger = get_logger(__name__)

# <-1|1>: Left moving first must take -1, Right moving first must take 1.
_SWITCH = GameTerm((number(-1),), (number(1),))


def np_witness(h: NpTerm) -> GameTerm:
    """X = ~zeta(H) + <-1|1>, separating zeta(G) from zeta(H) whenever G is not >= H."""
    return disjunctive_sum(conjugate(zeta(h)), _SWITCH)


def stability_witness(g: GameTerm) -> Witness:
    """Show that a hot Left-atomic game breaks hat(1) > 0.

    For G = <^l | G^R> with l > Rs(G), take k strictly between and X = G - k.
    Left moving first in 0 + X cannot move and scores l - k > 0; in
    hat(1) + X she must spend her waiting move and Right reaches Rs(G) - k < 0.

    Args:
        g: Left-atomic game with l > Rs(g).

    Returns:
        Witness refuting hat(1) >= 0 on the Left-score.

    Raises:
        ContractError: If g is not Left-atomic or is stable at the root.
        WitnessVerificationError: If the constructed X fails recomputation.
    """
    if not isinstance(g.left, Atom):
        raise ContractError("stability_witness", f"{g} is not Left-atomic")
    atom = g.left.score
    rs = right_score(g)
    if atom <= rs:
        raise ContractError("stability_witness", f"{g} is stable (Ls={atom} <= Rs={rs})")

    k = (atom + rs) / 2
    x = disjunctive_sum(g, number(-k))
    witness = Witness(
        x=x,
        side=ScoreSide.LEFT,
        lhs_value=left_score(disjunctive_sum(hat(1), x)),
        rhs_value=left_score(x),
    )
    if not witness.verify(hat(1), number(0)) or witness.rhs_value != atom - k:
        raise WitnessVerificationError(f"stability witness for {g} failed: {witness.describe()}")
    return witness


@dataclass(frozen=True)
class _Shape:
    """Parameters of X = <^a | b + hat(-n)>."""

    a: Score
    b: Score
    n: int

    def game(self) -> GameTerm:
        return GameTerm(Atom(self.a), (disjunctive_sum(number(self.b), hat(-self.n)),))


def _protection_shape(g: GameTerm, level: Score) -> _Shape:
    floor_score, stock = pass_allowed_left_score_with_stock(g)
    if floor_score < level:
        a = (-level - floor_score) / 2
        return _Shape(a=a, b=a, n=stock)

    for option in g.right_options:
        if isinstance(option.left, Atom):
            v = option.left.score
            return _Shape(a=min(-level, -v) - 1, b=-level + 1, n=0)

    for option in g.right_options:
        answers = option.left_options
        if not any(left_protected(answer, level) for answer in answers):
            shapes = [_protection_shape(answer, level) for answer in answers]
            return _Shape(
                a=min(shape.a for shape in shapes),
                b=min(shape.b for shape in shapes),
                n=max(shape.n for shape in shapes),
            )

    raise AssertionError(f"{g} is left-{level}-protected")


def protection_witness(g: GameTerm, level: ScoreLike) -> Witness | None:
    """Refute G >= l for a guaranteed G that is not left-l-protected.

    X has the form <^a | b + hat(-n)>. Either Right can hold Left below l
    with n waiting moves, or some Right move leaves Left without a move, or
    every Left answer to some Right move fails and their witnesses combine
    (smallest a and b, largest n).

    Args:
        g: Guaranteed game.
        level: Threshold l.

    Returns:
        Witness with Rs(G + X) < 0 < Rs(l + X), or None if g is protected.

    Raises:
        ContractError: If g is not guaranteed.
        WitnessVerificationError: If the constructed X fails recomputation.
    """
    level = to_score(level)
    if not is_guaranteed(g):
        raise ContractError("protection_witness", f"{g} is not a guaranteed game")
    if left_protected(g, level):
        return None

    x = _protection_shape(g, level).game()
    lhs = right_score(disjunctive_sum(g, x))
    rhs = right_score(disjunctive_sum(number(level), x))
    if not lhs < 0 < rhs:
        raise WitnessVerificationError(
            f"protection witness {x} for {g} >= {level} gave Rs values {lhs}, {rhs}"
        )
    return Witness(x=x, side=ScoreSide.RIGHT, lhs_value=lhs, rhs_value=rhs)


def check_candidate(g: GameTerm, h: GameTerm, x: GameTerm) -> Witness | None:
    """Whether x separates g from h on either score, Left-score first."""
    for side in (ScoreSide.LEFT, ScoreSide.RIGHT):
        lhs = side.of(disjunctive_sum(g, x))
        rhs = side.of(disjunctive_sum(h, x))
        if lhs < rhs:
            return Witness(x=x, side=side, lhs_value=lhs, rhs_value=rhs)
    return None


def _special_candidates(g: GameTerm, h: GameTerm) -> list[GameTerm]:
    specials: list[GameTerm] = []
    if is_number(h) and isinstance(h.left, Atom) and is_guaranteed(g):
        witness = protection_witness(g, h.left.score)
        if witness is not None:
            specials.append(witness.x)
    if is_number(g) and isinstance(g.left, Atom) and is_guaranteed(h):
        # g >= h fails iff ~h >= -g fails; conjugating back swaps the roles.
        witness = protection_witness(conjugate(h), -g.left.score)
        if witness is not None:
            specials.append(conjugate(witness.x))
    specials.append(disjunctive_sum(conjugate(h), _SWITCH))
    return specials


def falsify_ge(
    g: GameTerm,
    h: GameTerm,
    pool: UniverseFilter,
    extra: Iterable[GameTerm] = (),
    config: Config | None = None,
) -> Witness | None:
    """Search for X in the pool's universe with Ls(G+X) < Ls(H+X) or Rs(G+X) < Rs(H+X).

    Candidates are scanned in a fixed order: caller-supplied extras, the
    constructed special witnesses, then the enumeration. Every candidate must
    pass the pool's predicate.

    Args:
        g: Claimed larger game.
        h: Claimed smaller game.
        pool: Universe enumerated for candidates.
        extra: Additional candidates checked first.
        config: Bounds for the enumeration.

    Returns:
        The first witness found, or None when the pool holds none.

    Raises:
        ResourceBoundError: If the pool exceeds its configured bounds.
    """
    predicate = pool.predicate
    scanned = 0
    for x in [*extra, *_special_candidates(g, h)]:
        if not predicate.check(x):
            continue
        scanned += 1
        witness = check_candidate(g, h, x)
        if witness is not None:
            logger.info(
                f"Found witness after {scanned} candidates",
                extra={"scanned": scanned, "witness": witness.describe()},
            )
            return witness

    for x in enumerate_games(pool, config):
        scanned += 1
        witness = check_candidate(g, h, x)
        if witness is not None:
            logger.info(
                f"Found witness after {scanned} candidates",
                extra={"scanned": scanned, "witness": witness.describe()},
            )
            return witness

    logger.info(
        f"No witness among {scanned} candidates",
        extra={"scanned": scanned, "predicate": predicate.value},
    )
    return None

"""Normal-play engine: sums, outcomes, order, stops and the embedding into scoring play.

Comparison is game-theoretic (G >= H iff Right moving first loses G - H);
no canonical simplification is performed anywhere.
"""

from fractions import Fraction
from functools import cache
from itertools import combinations
from math import ceil, comb, floor

from src.modules.games.types import Atom, GameTerm, Score
from src.modules.normal_play.types import NpTerm, Outcome
from src.shared.config import Config, load_config
from src.shared.errors import ContractError, ResourceBoundError
from src.shared.logger import get_logger

logger = get_logger(__name__)

NP_ZERO = NpTerm()
NP_STAR = NpTerm((NP_ZERO,), (NP_ZERO,))


@cache
def np_integer(n: int) -> NpTerm:
    """Integer form: 0 = {|}, n = {n-1|} for n > 0, n = {|n+1} for n < 0."""
    if n == 0:
        return NP_ZERO
    if n > 0:
        return NpTerm((np_integer(n - 1),), ())
    return NpTerm((), (np_integer(n + 1),))


@cache
def np_negate(g: NpTerm) -> NpTerm:
    """Additive inverse -G: swap sides and negate recursively."""
    return NpTerm(
        tuple(np_negate(option) for option in g.right),
        tuple(np_negate(option) for option in g.left),
    )


@cache
def np_add(g: NpTerm, h: NpTerm) -> NpTerm:
    """Disjunctive sum G + H: a move is a move in exactly one component."""
    left = tuple(np_add(gl, h) for gl in g.left) + tuple(np_add(g, hl) for hl in h.left)
    right = tuple(np_add(gr, h) for gr in g.right) + tuple(np_add(g, hr) for hr in h.right)
    return NpTerm(left, right)


@cache
def _left_wins_first(g: NpTerm) -> bool:
    return any(not _right_wins_first(option) for option in g.left)


@cache
def _right_wins_first(g: NpTerm) -> bool:
    return any(not _left_wins_first(option) for option in g.right)


def np_outcome(g: NpTerm) -> Outcome:
    """Outcome class of g under alternating play, last player to move wins.

    Args:
        g: Normal-play form.

    Returns:
        L, R, N or P.
    """
    left_first = _left_wins_first(g)
    right_first = _right_wins_first(g)
    if left_first and right_first:
        return Outcome.N
    if left_first:
        return Outcome.L
    if right_first:
        return Outcome.R
    return Outcome.P


def np_ge(g: NpTerm, h: NpTerm) -> bool:
    """G >= H iff Right has no winning first move in G + (-H)."""
    return not _right_wins_first(np_add(g, np_negate(h)))


def np_eq(g: NpTerm, h: NpTerm) -> bool:
    """G = H iff G - H is a previous-player win."""
    return np_ge(g, h) and np_ge(h, g)


@cache
def np_is_number(g: NpTerm) -> bool:
    """Every option is a number and every Left option is below every Right option."""
    if not all(np_is_number(option) for option in g.left + g.right):
        return False
    return all(not np_ge(gl, gr) for gl in g.left for gr in g.right)


def _simplest_between(low: Score | None, high: Score | None) -> Score:
    """Simplest number strictly between low and high (None is unbounded)."""
    if (low is None or low < 0) and (high is None or high > 0):
        return Fraction(0)
    if low is not None and low >= 0:
        candidate = Fraction(floor(low) + 1)
        if high is None or candidate < high:
            return candidate
    if high is not None and high <= 0:
        candidate = Fraction(ceil(high) - 1)
        if low is None or candidate > low:
            return candidate
    # No integer fits, so both ends are finite.
    assert low is not None and high is not None
    denominator = 2
    while True:
        numerator = floor(low * denominator) + 1
        candidate = Fraction(numerator, denominator)
        if candidate < high:
            return candidate
        denominator *= 2


@cache
def np_number_value(g: NpTerm) -> Score:
    """Value of a number form as a dyadic rational.

    Raises:
        ContractError: If g is not a number form.
    """
    if not np_is_number(g):
        raise ContractError("np_number_value", f"{g} is not a number")
    low = max((np_number_value(option) for option in g.left), default=None)
    high = min((np_number_value(option) for option in g.right), default=None)
    return _simplest_between(low, high)


@cache
def np_stops(g: NpTerm) -> tuple[NpTerm, NpTerm]:
    """Left-stop and Right-stop of g, each returned as a number form.

    A number is its own stops; otherwise LS(G) = max RS(G^L) and
    RS(G) = min LS(G^R).

    Raises:
        ContractError: If a non-number follower has an empty option set,
            where the stop recursion has nothing to range over.
    """
    if np_is_number(g):
        return g, g
    if not g.left or not g.right:
        raise ContractError("np_stops", f"stops undefined for non-number {g} with an empty side")
    left_stop = max((np_stops(option)[1] for option in g.left), key=np_number_value)
    right_stop = min((np_stops(option)[0] for option in g.right), key=np_number_value)
    return left_stop, right_stop


def np_stop_values(g: NpTerm) -> tuple[Score, Score]:
    """Numeric Left-stop and Right-stop of g."""
    left_stop, right_stop = np_stops(g)
    return np_number_value(left_stop), np_number_value(right_stop)


def np_is_hot(g: NpTerm) -> bool:
    """True when the Left-stop exceeds the Right-stop (moving is worth something)."""
    left_stop, right_stop = np_stop_values(g)
    return left_stop > right_stop


@cache
def zeta(g: NpTerm) -> GameTerm:
    """Embed a Normal-play form: every empty option set becomes the atom 0."""
    left = tuple(zeta(option) for option in g.left) if g.left else Atom(Fraction(0))
    right = tuple(zeta(option) for option in g.right) if g.right else Atom(Fraction(0))
    return GameTerm(left, right)


def hat(n: int) -> GameTerm:
    """Waiting moves: the embedded integer n, a stock of |n| passes for one player."""
    return zeta(np_integer(n))


def np_forms(
    max_day: int,
    max_options: int | None = None,
    config: Config | None = None,
) -> list[NpTerm]:
    """Every form born by max_day, day by day in structural order.

    Args:
        max_day: Last birthday generated.
        max_options: Optional cap on option-set size.
        config: Bounds; loaded from the environment when omitted.

    Returns:
        Distinct forms, earlier days first.

    Raises:
        ResourceBoundError: If max_day passes SCORING_MAX_DAY or a day
            would generate more than SCORING_POOL_LIMIT candidates.
    """
    config = config or load_config()
    if max_day > config.max_day:
        raise ResourceBoundError("SCORING_MAX_DAY", config.max_day, max_day)

    forms: list[NpTerm] = [NP_ZERO]
    seen = {NP_ZERO}
    for day in range(1, max_day + 1):
        cap = len(forms) if max_options is None else min(max_options, len(forms))
        requested = sum(comb(len(forms), size) for size in range(cap + 1)) ** 2
        if requested > config.pool_limit:
            logger.warning(
                f"Normal-play generation refused at day {day}",
                extra={"day": day, "requested": requested, "limit": config.pool_limit},
            )
            raise ResourceBoundError("SCORING_POOL_LIMIT", config.pool_limit, requested)

        sides = [
            subset for size in range(cap + 1) for subset in combinations(forms, size)
        ]
        born = {NpTerm(left, right) for left in sides for right in sides} - seen
        new = sorted(born, key=lambda form: form.sort_key)
        forms.extend(new)
        seen.update(new)
        logger.debug(
            f"Generated {len(new)} forms born on day {day}",
            extra={"day": day, "new_forms": len(new), "total": len(forms)},
        )
    return forms

"""Command handlers.

Pure functions that compute one subcommand's answer. Each returns a
CommandResult carrying the exit code, the plain-text reply and the
structured payload printed under ``--json``.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from src.modules.comparison.protection import eq_zero, ge_number, le_number
from src.modules.comparison.witnesses import falsify_ge
from src.modules.games.core import birthday
from src.modules.games.scores import (
    pass_allowed_left_score,
    pass_allowed_right_score,
    score_pair,
)
from src.modules.games.types import to_score
from src.modules.konane.board import Board, Player
from src.modules.konane.rules import Ruleset, offer_eval, to_normal_play, to_scoring_game
from src.modules.normal_play.engine import np_outcome, np_stop_values, zeta
from src.modules.shell.notation import parse_expression, parse_np, parse_scoring
from src.modules.universes.enumeration import Predicate, UniverseFilter, census, enumerate_games
from src.modules.universes.predicates import is_guaranteed
from src.shared.config import Config
from src.shared.errors import ContractError

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


@dataclass(frozen=True)
class CommandResult:
    """Outcome of one command.

    Attributes:
        exit_code: 0 computed, 1 property false, 2 usage error, 3 resource bound.
        text: Plain-text reply.
        payload: Structured reply for machine consumers.
    """

    exit_code: int
    text: str
    payload: dict[str, Any] = field(default_factory=dict)


def _answer(command: str, value: bool, **details: Any) -> CommandResult:
    return CommandResult(
        exit_code=EXIT_OK if value else EXIT_FALSE,
        text="true" if value else "false",
        payload={"command": command, "result": value, **details},
    )


def handle_score(expression: str) -> CommandResult:
    """Ls and Rs of an expression, e.g. ``Ls=4 Rs=0``."""
    game = parse_expression(expression)
    pair = score_pair(game)
    return CommandResult(
        exit_code=EXIT_OK,
        text=str(pair),
        payload={
            "command": "score",
            "game": game.notation(),
            "ls": str(pair.ls),
            "rs": str(pair.rs),
        },
    )


def handle_sum(expression: str) -> CommandResult:
    """The expression evaluated to a single game tree."""
    game = parse_expression(expression)
    return CommandResult(
        exit_code=EXIT_OK,
        text=game.notation(),
        payload={"command": "sum", "game": game.notation(), "birthday": birthday(game)},
    )


def handle_passcore(expression: str) -> CommandResult:
    """Pass-allowed Left-score and Right-score of an expression."""
    game = parse_expression(expression)
    low = pass_allowed_left_score(game)
    high = pass_allowed_right_score(game)
    return CommandResult(
        exit_code=EXIT_OK,
        text=f"PassLs={low} PassRs={high}",
        payload={
            "command": "passcore",
            "game": game.notation(),
            "pass_ls": str(low),
            "pass_rs": str(high),
        },
    )


def handle_check(prop: str, text: str) -> CommandResult:
    """Whether a game belongs to a universe (guaranteed, stable, dicot, stewart, milnor)."""
    try:
        predicate = Predicate(prop)
    except ValueError as e:
        raise ContractError("check", f"unknown property {prop!r}") from e
    game = parse_scoring(text)
    return _answer("check", predicate.check(game), property=prop, game=game.notation())


def handle_cmp_num(text: str, relation: str, value: str) -> CommandResult:
    """Compare a guaranteed game with a number: ge, le or eq."""
    game = parse_expression(text)
    level = to_score(value)
    if relation == "ge":
        result = ge_number(game, level)
    elif relation == "le":
        result = le_number(game, level)
    elif relation == "eq":
        result = ge_number(game, level) and le_number(game, level)
    else:
        raise ContractError("cmp-num", f"relation must be ge, le or eq, got {relation!r}")
    return _answer(
        "cmp-num", result, game=game.notation(), relation=relation, value=str(level)
    )


def handle_eqzero(text: str) -> CommandResult:
    """Whether a guaranteed game equals 0."""
    game = parse_expression(text)
    return _answer("eqzero", eq_zero(game), game=game.notation())


def handle_embed(text: str) -> CommandResult:
    """Image of a Normal-play game in scoring play."""
    game = zeta(parse_np(text))
    return CommandResult(
        exit_code=EXIT_OK,
        text=game.notation(),
        payload={
            "command": "embed",
            "game": game.notation(),
            "guaranteed": is_guaranteed(game),
        },
    )


def handle_outcome(text: str) -> CommandResult:
    """Outcome class of a Normal-play game, with its stops when they exist."""
    game = parse_np(text)
    outcome = np_outcome(game)
    payload: dict[str, Any] = {
        "command": "outcome",
        "game": game.notation(),
        "outcome": outcome.value,
    }
    lines = [f"{outcome.value} ({outcome.description})"]
    try:
        left_stop, right_stop = np_stop_values(game)
    except ContractError:
        payload["stops"] = None
    else:
        payload["stops"] = [str(left_stop), str(right_stop)]
        lines.append(f"LS={left_stop} RS={right_stop}")
    return CommandResult(exit_code=EXIT_OK, text="\n".join(lines), payload=payload)


def _universe(
    predicate: str, scores: Sequence[str], day: int, max_options: int | None
) -> UniverseFilter:
    try:
        return UniverseFilter.build(predicate, scores, day, max_options)
    except ValueError as e:
        raise ContractError("universe", str(e)) from e


def handle_falsify(
    g_text: str,
    h_text: str,
    predicate: str,
    scores: Sequence[str],
    day: int,
    max_options: int | None,
    config: Config,
) -> CommandResult:
    """Search a pool for a game X refuting G >= H."""
    g = parse_expression(g_text)
    h = parse_expression(h_text)
    pool = _universe(predicate, scores, day, max_options)
    witness = falsify_ge(g, h, pool, config=config)
    if witness is None:
        return CommandResult(
            exit_code=EXIT_OK,
            text="no witness in pool (G >= H not refuted, not proved)",
            payload={"command": "falsify", "witness": None},
        )
    return CommandResult(
        exit_code=EXIT_OK,
        text=witness.describe(),
        payload={
            "command": "falsify",
            "witness": {
                "x": witness.x.notation(),
                "side": witness.side.value,
                "lhs": str(witness.lhs_value),
                "rhs": str(witness.rhs_value),
            },
        },
    )


def handle_enumerate(
    predicate: str,
    scores: Sequence[str],
    day: int,
    max_options: int | None,
    config: Config,
) -> CommandResult:
    """Every game of a universe, one notation per line."""
    universe = _universe(predicate, scores, day, max_options)
    games = [g.notation() for g in enumerate_games(universe, config)]
    return CommandResult(
        exit_code=EXIT_OK,
        text="\n".join(games),
        payload={"command": "enumerate", "count": len(games), "games": games},
    )


def handle_census(
    predicates: Sequence[str],
    scores: Sequence[str],
    day: int,
    max_options: int | None,
    config: Config,
) -> CommandResult:
    """Per-day game counts for several universes."""
    frame = census([_universe(p, scores, day, max_options) for p in predicates], config)
    return CommandResult(
        exit_code=EXIT_OK,
        text=frame.to_string(index=False),
        payload={"command": "census", "rows": frame.to_dict(orient="records")},
    )


def _ruleset(rules: str) -> Ruleset:
    try:
        return Ruleset(rules)
    except ValueError as e:
        raise ContractError("konane", f"unknown ruleset {rules!r}") from e


def handle_konane_analyze(board_text: str, rules: str, config: Config) -> CommandResult:
    """Game value of a konane position under a ruleset."""
    board = Board.from_text(board_text)
    ruleset = _ruleset(rules)
    if ruleset is Ruleset.KONANE_NORMAL:
        form = to_normal_play(board, config)
        outcome = np_outcome(form)
        return CommandResult(
            exit_code=EXIT_OK,
            text=f"{form.notation()}\noutcome={outcome.value}",
            payload={
                "command": "konane analyze",
                "rules": ruleset.value,
                "game": form.notation(),
                "outcome": outcome.value,
            },
        )
    game = to_scoring_game(board, ruleset, config)
    pair = score_pair(game)
    return CommandResult(
        exit_code=EXIT_OK,
        text=f"{game.notation()}\n{pair}",
        payload={
            "command": "konane analyze",
            "rules": ruleset.value,
            "game": game.notation(),
            "ls": str(pair.ls),
            "rs": str(pair.rs),
            "guaranteed": is_guaranteed(game),
        },
    )


def handle_konane_offer(board_text: str, rules: str, player: str, config: Config) -> CommandResult:
    """Lawyer's offer advice for the beneficiary, for either player moving first."""
    board = Board.from_text(board_text)
    try:
        beneficiary = Player(player)
    except ValueError as e:
        raise ContractError("konane offer", f"player must be black or white, got {player!r}") from e
    evaluation = offer_eval(board, _ruleset(rules), beneficiary, config)
    black_first = evaluation.verdict(Player.BLACK)
    white_first = evaluation.verdict(Player.WHITE)
    return CommandResult(
        exit_code=EXIT_OK,
        text=(
            f"decline: {evaluation.decline}\n"
            f"accept: {evaluation.accept}\n"
            f"black first: {black_first.value}\n"
            f"white first: {white_first.value}"
        ),
        payload={
            "command": "konane offer",
            "beneficiary": beneficiary.value,
            "decline": {"ls": str(evaluation.decline.ls), "rs": str(evaluation.decline.rs)},
            "accept": {"ls": str(evaluation.accept.ls), "rs": str(evaluation.accept.rs)},
            "verdict": {"black_first": black_first.value, "white_first": white_first.value},
        },
    )

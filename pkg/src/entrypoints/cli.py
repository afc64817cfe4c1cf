"""Command-line entrypoint.

Parses arguments, dispatches to a command handler and maps engine errors
onto the exit-code protocol: 0 computed, 1 property false, 2 usage or
notation error, 3 resource bound exceeded.
"""

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from src.modules.shell.commands import (
    EXIT_BOUND,
    EXIT_USAGE,
    SCHEMA_VERSION,
    CommandResult,
    handle_census,
    handle_check,
    handle_cmp_num,
    handle_embed,
    handle_enumerate,
    handle_eqzero,
    handle_falsify,
    handle_konane_analyze,
    handle_konane_offer,
    handle_outcome,
    handle_passcore,
    handle_score,
    handle_sum,
)
from src.shared.config import Config, load_config
from src.shared.errors import ContractError, NotationError, ResourceBoundError
from src.shared.logger import get_logger

logger = get_logger(__name__)


def _scores(raw: str) -> list[str]:
    return [part.strip() for part in raw.split(",") if part.strip()]


def _add_universe_options(parser: argparse.ArgumentParser, day_flag: str = "--day") -> None:
    parser.add_argument(
        "--scores",
        default="-1,0,1",
        help="Comma-separated atom scores; write --scores=-1,0,1 when the list starts with '-'",
    )
    parser.add_argument(day_flag, dest="day", type=int, default=1, help="Largest birthday")
    parser.add_argument(
        "--max-options", type=int, default=None, help="Cap on the size of any option set"
    )


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for every subcommand."""
    parser = argparse.ArgumentParser(
        prog="scoring-games", description="Scoring combinatorial game engine"
    )
    parser.add_argument("--json", action="store_true", help="Print the structured payload")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("score", "Left-score and Right-score of an expression"),
        ("sum", "Expand an expression into one game tree"),
        ("passcore", "Pass-allowed scores of an expression"),
        ("eqzero", "Whether a guaranteed game equals 0"),
    ):
        command = sub.add_parser(name, help=help_text)
        command.add_argument("expression", nargs="+", help="Game notation; words are joined")

    check = sub.add_parser("check", help="Universe membership")
    check.add_argument(
        "property", choices=["guaranteed", "stable", "dicot", "stewart", "milnor"]
    )
    check.add_argument("game")

    cmp_num = sub.add_parser("cmp-num", help="Compare a guaranteed game with a number")
    cmp_num.add_argument("game")
    cmp_num.add_argument("relation", choices=["ge", "le", "eq"])
    cmp_num.add_argument("value")

    embed = sub.add_parser("embed", help="Embed a Normal-play game")
    embed.add_argument("np")

    outcome = sub.add_parser("outcome", help="Normal-play outcome class and stops")
    outcome.add_argument("np")

    falsify = sub.add_parser("falsify", help="Search for X refuting G >= H")
    falsify.add_argument("g")
    falsify.add_argument("h")
    falsify.add_argument("--predicate", default="guaranteed")
    _add_universe_options(falsify, day_flag="--pool-day")

    enumerate_cmd = sub.add_parser("enumerate", help="List a small universe")
    enumerate_cmd.add_argument("--predicate", default="guaranteed")
    _add_universe_options(enumerate_cmd)

    census_cmd = sub.add_parser("census", help="Count games of several universes per day")
    census_cmd.add_argument("--predicates", default="all,guaranteed,stable,dicot,stewart")
    _add_universe_options(census_cmd)

    konane = sub.add_parser("konane", help="Konane positions")
    konane.add_argument("action", choices=["analyze", "offer"])
    konane.add_argument(
        "--rules", default="diskonnect", choices=["konane", "scoring-konane", "diskonnect"]
    )
    konane.add_argument("--board", required=True, help="Board file, or - for stdin")
    konane.add_argument("--player", default="black", choices=["black", "white"])

    return parser


def _read_board(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _dispatch(args: argparse.Namespace, config: Config) -> CommandResult:
    expression = " ".join(getattr(args, "expression", []) or [])
    handlers: dict[str, Callable[[], CommandResult]] = {
        "score": lambda: handle_score(expression),
        "sum": lambda: handle_sum(expression),
        "passcore": lambda: handle_passcore(expression),
        "eqzero": lambda: handle_eqzero(expression),
        "check": lambda: handle_check(args.property, args.game),
        "cmp-num": lambda: handle_cmp_num(args.game, args.relation, args.value),
        "embed": lambda: handle_embed(args.np),
        "outcome": lambda: handle_outcome(args.np),
        "falsify": lambda: handle_falsify(
            args.g,
            args.h,
            args.predicate,
            _scores(args.scores),
            args.day,
            args.max_options,
            config,
        ),
        "enumerate": lambda: handle_enumerate(
            args.predicate, _scores(args.scores), args.day, args.max_options, config
        ),
        "census": lambda: handle_census(
            _scores(args.predicates), _scores(args.scores), args.day, args.max_options, config
        ),
        "konane": lambda: (
            handle_konane_analyze(_read_board(args.board), args.rules, config)
            if args.action == "analyze"
            else handle_konane_offer(_read_board(args.board), args.rules, args.player, config)
        ),
    }
    return handlers[args.command]()


def _emit(result: CommandResult, as_json: bool) -> None:
    if as_json:
        document = {"schema": SCHEMA_VERSION, "exit_code": result.exit_code, **result.payload}
        print(json.dumps(document, default=str, sort_keys=True))
    elif result.text:
        stream = sys.stderr if result.exit_code >= EXIT_USAGE else sys.stdout
        print(result.text, file=stream)


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command.

    Args:
        argv: Arguments without the program name; defaults to sys.argv.

    Returns:
        Process exit code.
    """
    args = build_parser().parse_args(argv)
    try:
        config = load_config()
        result = _dispatch(args, config)
    except ResourceBoundError as e:
        logger.info(f"Command {args.command} hit a bound: {e}", extra={"bound": e.bound_name})
        result = CommandResult(
            exit_code=EXIT_BOUND,
            text=f"error: {e}",
            payload={"error": "ResourceBoundError", "message": str(e), "bound": e.bound_name},
        )
    except (NotationError, ContractError, ValueError, OSError) as e:
        logger.info(f"Command {args.command} rejected: {e}")
        result = CommandResult(
            exit_code=EXIT_USAGE,
            text=f"error: {e}",
            payload={"error": type(e).__name__, "message": str(e)},
        )
    _emit(result, args.json)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Text notation for scoring and Normal-play games.

Scoring games::

    <^3|<2|1>>            Left ends at 3, Right moves to <2|1>
    1/2                   the number <^1/2|^1/2>
    hat(-2)               two waiting moves for Right
    <^1|2> + ~<2|-1>      expressions: sums and conjugates

Normal-play games::

    {|}   {0|}   {*|*}   *   2
"""

from fractions import Fraction
from typing import Any

import lark
from lark.exceptions import UnexpectedInput, VisitError

from src.modules.games.core import conjugate, disjunctive_sum, number
from src.modules.games.types import Atom, GameTerm
from src.modules.normal_play.engine import NP_STAR, hat, np_integer
from src.modules.normal_play.types import NpTerm
from src.shared.errors import NotationError

SCORING_GRAMMAR = r"""
scoring: game
expression: expr

expr: term ("+" term)*

?term: "~" term    -> conj
     | game

?game: RATIONAL                    -> number
     | "<" side "|" side ">"       -> braces
     | "hat" "(" RATIONAL ")"      -> waiting

side: "^" RATIONAL         -> atom
    | game ("," game)*     -> options

RATIONAL: /-?\d+(\/\d+)?/

%import common.WS
%ignore WS
"""

NP_GRAMMAR = r"""
start: np

?np: "{" [np_list] "|" [np_list] "}"   -> braces
   | "*"                               -> star
   | INT                               -> integer

np_list: np ("," np)*

INT: /-?\d+/

%import common.WS
%ignore WS
"""

_SCORING_PARSER = lark.Lark(SCORING_GRAMMAR, parser="lalr", start="scoring")
_EXPRESSION_PARSER = lark.Lark(SCORING_GRAMMAR, parser="lalr", start="expression")
_NP_PARSER = lark.Lark(NP_GRAMMAR, parser="lalr")


class ScoringTransformer(lark.Transformer[Any, GameTerm]):
    """Builds GameTerm values from a parse tree."""

    def __init__(self, text: str) -> None:
        super().__init__()
        self._text = text

    def _rational(self, token: lark.Token) -> Fraction:
        try:
            return Fraction(str(token))
        except ZeroDivisionError as e:
            raise NotationError(self._text, token.start_pos or 0, "Zero denominator") from e

    def scoring(self, items: list[GameTerm]) -> GameTerm:
        return items[0]

    def expression(self, items: list[GameTerm]) -> GameTerm:
        return items[0]

    def expr(self, items: list[GameTerm]) -> GameTerm:
        total = items[0]
        for item in items[1:]:
            total = disjunctive_sum(total, item)
        return total

    def conj(self, items: list[GameTerm]) -> GameTerm:
        return conjugate(items[0])

    def number(self, items: list[lark.Token]) -> GameTerm:
        return number(self._rational(items[0]))

    def waiting(self, items: list[lark.Token]) -> GameTerm:
        value = self._rational(items[0])
        if value.denominator != 1:
            raise NotationError(
                self._text, items[0].start_pos or 0, "hat() takes an integer"
            )
        return hat(int(value))

    def braces(self, items: list[Atom | tuple[GameTerm, ...]]) -> GameTerm:
        return GameTerm(items[0], items[1])

    def atom(self, items: list[lark.Token]) -> Atom:
        return Atom(self._rational(items[0]))

    def options(self, items: list[GameTerm]) -> tuple[GameTerm, ...]:
        return tuple(items)


class NormalPlayTransformer(lark.Transformer[Any, NpTerm]):
    """Builds NpTerm values from a parse tree."""

    def start(self, items: list[NpTerm]) -> NpTerm:
        return items[0]

    def braces(self, items: list[tuple[NpTerm, ...] | None]) -> NpTerm:
        return NpTerm(items[0] or (), items[1] or ())

    def star(self, items: list[Any]) -> NpTerm:
        return NP_STAR

    def integer(self, items: list[lark.Token]) -> NpTerm:
        return np_integer(int(str(items[0])))

    def np_list(self, items: list[NpTerm]) -> tuple[NpTerm, ...]:
        return tuple(items)


def _position(error: UnexpectedInput, text: str) -> int:
    position = getattr(error, "pos_in_stream", None)
    if position is None or position < 0:
        return len(text)
    return int(position)


def _parse(parser: lark.Lark, transformer: lark.Transformer[Any, Any], text: str) -> Any:
    try:
        tree = parser.parse(text)
    except UnexpectedInput as e:
        raise NotationError(text, _position(e, text), "Syntax error") from e
    try:
        return transformer.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, NotationError):
            raise e.orig_exc from e
        raise


def parse_scoring(text: str) -> GameTerm:
    """Parse one scoring game, e.g. ``<^3|<2|1>>``.

    Raises:
        NotationError: On a syntax error, zero denominator or non-integer hat().
    """
    result: GameTerm = _parse(_SCORING_PARSER, ScoringTransformer(text), text)
    return result


def parse_expression(text: str) -> GameTerm:
    """Parse a sum of scoring games with optional ``~`` conjugation, e.g. ``<^1|2> + <2|-1>``.

    Raises:
        NotationError: As parse_scoring.
    """
    result: GameTerm = _parse(_EXPRESSION_PARSER, ScoringTransformer(text), text)
    return result


def parse_np(text: str) -> NpTerm:
    """Parse a Normal-play game, e.g. ``{*|*}``.

    Raises:
        NotationError: On a syntax error.
    """
    result: NpTerm = _parse(_NP_PARSER, NormalPlayTransformer(), text)
    return result


def format_scoring(g: GameTerm) -> str:
    """Canonical notation; parse_scoring(format_scoring(g)) == g."""
    return g.notation()


def format_np(g: NpTerm) -> str:
    """Canonical notation with every option written in braces."""
    return g.notation()

"""Konane rulesets as games.

Expansion is memoized on the grid alone: a subposition is expanded with no
captures on record, and captures made so far are added back as a number.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cache

from src.modules.games.core import disjunctive_sum, number
from src.modules.games.scores import ScorePair, score_pair
from src.modules.games.types import Atom, GameTerm
from src.modules.konane.board import Board, Grid, Player, insecure_stones, legal_moves
from src.modules.normal_play.engine import hat
from src.modules.normal_play.types import NpTerm
from src.shared.config import Config, load_config
from src.shared.errors import ContractError, ResourceBoundError
from src.shared.logger import get_logger

logger = get_logger(__name__)


class Ruleset(Enum):
    """Konane variants.

    KONANE_NORMAL: last player to move wins.
    SCORING_KONANE: score is Black's captures minus White's.
    DISKONNECT: scoring konane where a player who cannot move also loses
        every insecure stone to the opponent.
    """

    KONANE_NORMAL = "konane"
    SCORING_KONANE = "scoring-konane"
    DISKONNECT = "diskonnect"

    @property
    def is_scoring(self) -> bool:
        """Whether positions become scoring games."""
        return self is not Ruleset.KONANE_NORMAL


class Verdict(Enum):
    """Advice on the Lawyer's offer."""

    ACCEPT = "accept"
    REJECT = "reject"
    INDIFFERENT = "indifferent"


def _board(cells: Grid) -> Board:
    return Board(width=len(cells[0]), height=len(cells), cells=cells)


def _check_size(board: Board, config: Config | None) -> None:
    config = config or load_config()
    if board.size > config.konane_max_cells:
        logger.warning(
            f"Board of {board.size} cells refused",
            extra={"cells": board.size, "limit": config.konane_max_cells},
        )
        raise ResourceBoundError("SCORING_KONANE_MAX_CELLS", config.konane_max_cells, board.size)


def _stuck_score(board: Board, player: Player, rules: Ruleset) -> int:
    """Atom score when player cannot move."""
    if rules is not Ruleset.DISKONNECT:
        return 0
    # The opponent removes every stone of the stuck player it could ever capture.
    penalty = len(insecure_stones(board, player))
    return -penalty if player is Player.BLACK else penalty


@cache
def _expand(cells: Grid, rules: Ruleset) -> GameTerm:
    board = _board(cells)
    sides: list[Atom | tuple[GameTerm, ...]] = []
    for player, sign in ((Player.BLACK, 1), (Player.WHITE, -1)):
        moves = legal_moves(board, player)
        if not moves:
            sides.append(Atom(_stuck_score(board, player, rules)))
            continue
        sides.append(
            tuple(
                disjunctive_sum(number(sign * len(move.captured)), _expand(after.cells, rules))
                for move, after in moves
            )
        )
    return GameTerm(sides[0], sides[1])


@cache
def _expand_normal(cells: Grid) -> NpTerm:
    board = _board(cells)
    return NpTerm(
        tuple(_expand_normal(after.cells) for _, after in legal_moves(board, Player.BLACK)),
        tuple(_expand_normal(after.cells) for _, after in legal_moves(board, Player.WHITE)),
    )


def to_scoring_game(board: Board, rules: Ruleset, config: Config | None = None) -> GameTerm:
    """Scoring game of a position, captures already made included.

    Args:
        board: Position to expand.
        rules: SCORING_KONANE or DISKONNECT.
        config: Size bound; loaded from the environment when omitted.

    Raises:
        ContractError: If rules is not a scoring ruleset.
        ResourceBoundError: If the board passes SCORING_KONANE_MAX_CELLS.
    """
    if not rules.is_scoring:
        raise ContractError("to_scoring_game", f"{rules.value} is not a scoring ruleset")
    _check_size(board, config)
    game = _expand(board.cells, rules)
    logger.debug(
        f"Expanded {board.width}x{board.height} board under {rules.value}",
        extra={"cells": board.size, "cached_positions": _expand.cache_info().currsize},
    )
    return disjunctive_sum(number(board.black_captures - board.white_captures), game)


def to_normal_play(board: Board, config: Config | None = None) -> NpTerm:
    """Normal-play form of a position under konane rules.

    Raises:
        ResourceBoundError: If the board passes SCORING_KONANE_MAX_CELLS.
    """
    _check_size(board, config)
    return _expand_normal(board.cells)


def to_game(board: Board, rules: Ruleset, config: Config | None = None) -> GameTerm | NpTerm:
    """Game of a position: an NpTerm under konane, a GameTerm otherwise."""
    if rules is Ruleset.KONANE_NORMAL:
        return to_normal_play(board, config)
    return to_scoring_game(board, rules, config)


@dataclass(frozen=True)
class OfferEvaluation:
    """Scores with and without the Lawyer's offer (one mandatory pass).

    Attributes:
        beneficiary: Player offered the pass.
        decline: Scores of the position as is.
        accept: Scores with the pass added as a waiting move.
    """

    beneficiary: Player
    decline: ScorePair
    accept: ScorePair

    def verdict(self, first_player: Player) -> Verdict:
        """Whether the beneficiary should take the offer when first_player moves first."""
        if first_player is Player.BLACK:
            declined, accepted = self.decline.ls, self.accept.ls
        else:
            declined, accepted = self.decline.rs, self.accept.rs
        if accepted == declined:
            return Verdict.INDIFFERENT
        black_gains = accepted > declined
        if black_gains == (self.beneficiary is Player.BLACK):
            return Verdict.ACCEPT
        return Verdict.REJECT


def offer_eval(
    board: Board,
    rules: Ruleset,
    beneficiary: Player,
    config: Config | None = None,
) -> OfferEvaluation:
    """Evaluate the Lawyer's offer: a single pass the beneficiary must use at some point.

    The pass is the waiting move hat(1) for Black or hat(-1) for White; it is
    lost only if the opponent runs out of moves first.

    Raises:
        ContractError: If rules is not a scoring ruleset.
        ResourceBoundError: As to_scoring_game.
    """
    game = to_scoring_game(board, rules, config)
    waiting = hat(1) if beneficiary is Player.BLACK else hat(-1)
    return OfferEvaluation(
        beneficiary=beneficiary,
        decline=score_pair(game),
        accept=score_pair(disjunctive_sum(game, waiting)),
    )

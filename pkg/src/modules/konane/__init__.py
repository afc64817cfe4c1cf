"""Konane, scoring konane and diskonnect positions as games."""

from src.modules.konane.board import Board, Cell, Move, Player, insecure_stones, legal_moves
from src.modules.konane.rules import (
    OfferEvaluation,
    Ruleset,
    Verdict,
    offer_eval,
    to_game,
    to_normal_play,
    to_scoring_game,
)

__all__ = [
    "Board",
    "Cell",
    "Move",
    "OfferEvaluation",
    "Player",
    "Ruleset",
    "Verdict",
    "insecure_stones",
    "legal_moves",
    "offer_eval",
    "to_game",
    "to_normal_play",
    "to_scoring_game",
]

"""Comparison of scoring games.

Decides comparisons with numbers in the guaranteed universe and builds
distinguishing games that refute inequalities.
"""

from src.modules.comparison.protection import (
    eq_zero,
    ettinger_left_safe,
    ettinger_right_safe,
    ge_number,
    is_greedier,
    le_number,
    left_protected,
    right_protected,
)
from src.modules.comparison.types import ScoreSide, Witness
from src.modules.comparison.witnesses import (
    falsify_ge,
    np_witness,
    protection_witness,
    stability_witness,
)

__all__ = [
    "ScoreSide",
    "Witness",
    "eq_zero",
    "ettinger_left_safe",
    "ettinger_right_safe",
    "falsify_ge",
    "ge_number",
    "is_greedier",
    "le_number",
    "left_protected",
    "np_witness",
    "protection_witness",
    "right_protected",
    "stability_witness",
]

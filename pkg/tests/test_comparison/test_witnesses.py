"""Tests for distinguishing games and the falsification search."""

from fractions import Fraction
from itertools import combinations

import pytest

from src.modules.comparison.protection import eq_zero, ettinger_left_safe, ge_number, le_number
from src.modules.comparison.types import ScoreSide, Witness
from src.modules.comparison.witnesses import (
    check_candidate,
    falsify_ge,
    protection_witness,
    stability_witness,
)
from src.modules.games.core import conjugate, number
from src.modules.games.scores import (
    left_waiting_profile,
    pass_allowed_left_score,
    pass_allowed_right_score,
    right_score,
)
from src.modules.games.types import Atom, GameTerm
from src.modules.normal_play.engine import hat, zeta
from src.modules.shell.notation import parse_np, parse_scoring
from src.modules.universes.enumeration import UniverseFilter, enumerate_games
from src.modules.universes.predicates import is_stewart
from src.shared.config import Config
from src.shared.errors import ContractError

SCORES = (-1, 0, 1)


@pytest.fixture
def guaranteed_pool(small_config: Config) -> list[GameTerm]:
    """Guaranteed games born by day 1 with single-option sides."""
    universe = UniverseFilter.build("guaranteed", SCORES, 1, max_options=1)
    return list(enumerate_games(universe, small_config))


@pytest.fixture
def full_guaranteed_pool(small_config: Config) -> list[GameTerm]:
    """Every guaranteed game born by day 1, option sets uncapped."""
    universe = UniverseFilter.build("guaranteed", SCORES, 1)
    return list(enumerate_games(universe, small_config))


class TestWitness:
    """Tests for the Witness value type."""

    def test_requires_strict_inequality(self) -> None:
        """Test a witness must certify lhs < rhs."""
        with pytest.raises(ValueError, match="strict inequality"):
            Witness(x=number(0), side=ScoreSide.LEFT, lhs_value=Fraction(1), rhs_value=Fraction(1))

    def test_verify_and_describe(self) -> None:
        """Test verification recomputes both scores."""
        x = parse_scoring("<^1|-1>")
        witness = Witness(x=x, side=ScoreSide.LEFT, lhs_value=Fraction(-1), rhs_value=Fraction(1))

        assert witness.verify(hat(1), number(0))
        assert not witness.verify(number(0), hat(1))
        assert witness.describe() == "X=<^1|-1>: Ls(G+X)=-1 < Ls(H+X)=1"

    def test_score_side(self) -> None:
        """Test ScoreSide evaluates the named score."""
        g = parse_scoring("<-1|1>")

        assert ScoreSide.LEFT.of(g) == -1
        assert ScoreSide.RIGHT.of(g) == 1


class TestStabilityWitness:
    """Tests for stability_witness."""

    @pytest.mark.parametrize(
        ("text", "lhs", "rhs"),
        [
            ("<^3|-2>", Fraction(-5, 2), Fraction(5, 2)),
            ("<^9|-5>", Fraction(-7), Fraction(7)),
        ],
    )
    def test_witness_values(self, text: str, lhs: Fraction, rhs: Fraction) -> None:
        """Test X = G - k with k halfway between the atom and Rs(G)."""
        witness = stability_witness(parse_scoring(text))

        assert witness.side is ScoreSide.LEFT
        assert (witness.lhs_value, witness.rhs_value) == (lhs, rhs)
        assert witness.verify(hat(1), number(0))

    def test_half_shift(self) -> None:
        """Test <^3|-2> is shifted by 1/2."""
        witness = stability_witness(parse_scoring("<^3|-2>"))

        assert witness.x == parse_scoring("<^5/2|-5/2>")

    def test_rejects_left_mover(self) -> None:
        """Test games where Left can move are refused."""
        with pytest.raises(ContractError, match="not Left-atomic"):
            stability_witness(hat(1))

    def test_rejects_stable_root(self) -> None:
        """Test an atom at or below Rs(G) is refused."""
        with pytest.raises(ContractError, match="is stable"):
            stability_witness(parse_scoring("<^0|1>"))

    def test_every_unstable_left_atomic_game(self, small_config: Config) -> None:
        """Test every hot Left-atomic game by day 1 breaks hat(1) >= 0."""
        universe = UniverseFilter.build("all", SCORES, 1, max_options=1)
        hot = [
            g
            for g in enumerate_games(universe, small_config)
            if isinstance(g.left, Atom) and g.left.score > right_score(g)
        ]

        assert hot
        for g in hot:
            assert stability_witness(g).verify(hat(1), number(0))

    def test_hot_left_atomic_games_over_wider_scores(self, small_config: Config) -> None:
        """Test hot Left-atomic games over scores -2..2 with up to two Right options."""
        scores = (-2, -1, 0, 1, 2)
        day_zero = list(enumerate_games(UniverseFilter.build("all", scores, 0), small_config))
        right_sides: list[Atom | tuple[GameTerm, ...]] = [Atom(s) for s in scores]
        for size in (1, 2):
            right_sides.extend(combinations(day_zero, size))
        games = [GameTerm(Atom(a), side) for a in scores for side in right_sides]
        hot = [g for g in games if isinstance(g.left, Atom) and g.left.score > right_score(g)]

        assert len(day_zero) == 25
        assert len(games) == 5 * 330
        assert hot
        for g in hot:
            witness = stability_witness(g)
            assert witness.verify(hat(1), number(0))
            assert witness.lhs_value < 0 < witness.rhs_value


class TestProtectionWitness:
    """Tests for protection_witness."""

    def test_pass_allowed_score_too_low(self) -> None:
        """Test <-1|1> >= 0 fails with X = <^1/2|1/2>."""
        g = parse_scoring("<-1|1>")

        witness = protection_witness(g, 0)

        assert witness is not None
        assert witness.x == parse_scoring("<^1/2|1/2>")
        assert witness.side is ScoreSide.RIGHT
        assert (witness.lhs_value, witness.rhs_value) == (Fraction(-1, 2), Fraction(1, 2))
        assert witness.verify(g, number(0))

    def test_right_move_leaves_left_stuck(self) -> None:
        """Test a Left-atomic Right option gives X = <^a|b>."""
        g = parse_scoring("<0|<^0|1>>")

        witness = protection_witness(g, 0)

        assert witness is not None
        assert witness.x == parse_scoring("<^-1|1>")
        assert (witness.lhs_value, witness.rhs_value) == (Fraction(-1), Fraction(1))

    def test_every_answer_unprotected(self) -> None:
        """Test the witnesses of failing Left answers combine."""
        g = parse_scoring("<0|<<-1|1>|^1>>")

        witness = protection_witness(g, 0)

        assert witness is not None
        assert witness.x == parse_scoring("<^1/2|1/2>")
        assert witness.lhs_value <= Fraction(-1, 2)
        assert witness.rhs_value == Fraction(1, 2)

    def test_protected_game_has_no_witness(self) -> None:
        """Test None is returned when G >= l holds."""
        assert protection_witness(number(1), 0) is None
        assert protection_witness(hat(1), 0) is None

    def test_rejects_non_guaranteed(self) -> None:
        """Test the construction is only valid for guaranteed games."""
        with pytest.raises(ContractError, match="protection_witness"):
            protection_witness(parse_scoring("<^0|<^-1|2>>"), 0)


class TestFalsifyGe:
    """Tests for the falsification search."""

    def test_finds_first_witness_in_pool_order(self, small_config: Config) -> None:
        """Test hat(1) >= 0 is refuted by an atom pair outside the guaranteed universe."""
        pool = UniverseFilter.build("all", SCORES, 0)

        witness = falsify_ge(hat(1), number(0), pool, config=small_config)

        assert witness is not None
        assert witness.x == GameTerm(Atom(0), Atom(-1))
        assert witness.side is ScoreSide.LEFT
        assert (witness.lhs_value, witness.rhs_value) == (Fraction(-1), Fraction(0))

    def test_extras_scanned_first(self, small_config: Config) -> None:
        """Test caller-supplied candidates take priority."""
        pool = UniverseFilter.build("all", SCORES, 0)
        extra = parse_scoring("<^1|-1>")

        witness = falsify_ge(hat(1), number(0), pool, extra=[extra], config=small_config)

        assert witness is not None
        assert witness.x == extra

    def test_extras_filtered_by_pool_predicate(self, small_config: Config) -> None:
        """Test candidates outside the universe are skipped."""
        pool = UniverseFilter.build("guaranteed", SCORES, 1, max_options=1)

        witness = falsify_ge(
            hat(1), number(0), pool, extra=[parse_scoring("<^1|-1>")], config=small_config
        )

        assert witness is None

    def test_constructed_witness_for_number_on_left(self, small_config: Config) -> None:
        """Test 0 >= hat(1) is refuted by the conjugated protection witness."""
        pool = UniverseFilter.build("guaranteed", SCORES, 0)

        witness = falsify_ge(number(0), hat(1), pool, config=small_config)

        assert witness is not None
        assert witness.x == parse_scoring("<-1|^1>")
        assert witness.verify(number(0), hat(1))

    def test_check_candidate_prefers_left_score(self) -> None:
        """Test the Left-score is compared before the Right-score."""
        assert check_candidate(number(0), number(0), hat(1)) is None
        witness = check_candidate(number(0), number(1), number(0))
        assert witness is not None
        assert witness.side is ScoreSide.LEFT

    def test_stewart_pool(self, small_config: Config) -> None:
        """Test <0|^0> >= 0 fails among Stewart games, and <^1|-1> splits it -1 against 1."""
        g = parse_scoring("<0|^0>")
        pool = UniverseFilter.build("stewart", SCORES, 1)

        witness = falsify_ge(g, number(0), pool, config=small_config)

        assert witness is not None
        assert witness.verify(g, number(0))
        assert is_stewart(witness.x)
        named = check_candidate(g, number(0), parse_scoring("<^1|-1>"))
        assert named is not None
        assert (named.lhs_value, named.rhs_value) == (Fraction(-1), Fraction(1))

    def test_second_zero_differs_from_zero(self, small_config: Config) -> None:
        """Test the image of {*|*} is refuted as >= 0 in the full universe."""
        g = zeta(parse_np("{*|*}"))
        pool = UniverseFilter.build("all", (-5, 0, 5), 1, max_options=1)

        witness = falsify_ge(g, number(0), pool, config=small_config)

        assert witness is not None
        assert witness.verify(g, number(0))

    def test_dicot_safety_is_not_full_order(self, small_config: Config) -> None:
        """Test a game Left-0-safe in dicot play still falls below 0 against a non-dicot X."""
        g = parse_scoring("<<1|1>|<1|1>>")
        x = parse_scoring("<^1/2|<<-2|2>|-3>>")
        pool = UniverseFilter.build("all", SCORES, 0)

        witness = falsify_ge(g, number(0), pool, extra=[x], config=small_config)

        assert ettinger_left_safe(g, 0)
        assert witness is not None
        assert witness.x == x
        assert witness.side is ScoreSide.LEFT
        assert (witness.lhs_value, witness.rhs_value) == (Fraction(-1), Fraction(1, 2))

    def test_game_against_itself(self, small_config: Config) -> None:
        """Test no candidate separates a game from itself."""
        pool = UniverseFilter.build("all", SCORES, 1, max_options=1)

        for g in (hat(1), parse_scoring("<-1|1>"), parse_scoring("<<1|1>|<1|1>>")):
            assert falsify_ge(g, g, pool, config=small_config) is None


class TestGuaranteedOrderOnSmallPool:
    """Exhaustive checks of comparison with numbers over day-1 guaranteed games."""

    def test_protection_decides_comparison(self, guaranteed_pool: list[GameTerm]) -> None:
        """Test protected games survive every X; unprotected ones get a verified witness."""
        for g in guaranteed_pool:
            for level in SCORES:
                if ge_number(g, level):
                    assert all(
                        check_candidate(g, number(level), x) is None for x in guaranteed_pool
                    )
                else:
                    witness = protection_witness(g, level)
                    assert witness is not None
                    assert witness.verify(g, number(level))

    def test_le_is_conjugate_of_ge(self, guaranteed_pool: list[GameTerm]) -> None:
        """Test G <= l iff ~G >= -l."""
        for g in guaranteed_pool:
            for level in SCORES:
                assert le_number(g, level) == ge_number(conjugate(g), -level)

    def test_waiting_moves_never_help_left(self, guaranteed_pool: list[GameTerm]) -> None:
        """Test Ls(G + hat(-n)) does not increase with n on guaranteed games."""
        for g in guaranteed_pool:
            profile = left_waiting_profile(g, extra=1)
            assert all(a >= b for a, b in zip(profile, profile[1:], strict=False))


class TestGuaranteedOrderOnDayOne:
    """Comparison with numbers over every guaranteed game born by day 1."""

    LEVELS = (-1, 0, 1)

    def test_protection_agrees_with_search(
        self, full_guaranteed_pool: list[GameTerm], small_config: Config
    ) -> None:
        """Test protected games are never refuted and unprotected ones get a verified witness."""
        day_zero = UniverseFilter.build("guaranteed", SCORES, 0)

        assert len(full_guaranteed_pool) == 4117
        for g in full_guaranteed_pool:
            for level in self.LEVELS:
                if ge_number(g, level):
                    assert falsify_ge(g, number(level), day_zero, config=small_config) is None
                else:
                    witness = protection_witness(g, level)
                    assert witness is not None
                    assert witness.verify(g, number(level))

    def test_le_is_conjugate_of_ge(self, full_guaranteed_pool: list[GameTerm]) -> None:
        """Test G <= l iff ~G >= -l."""
        for g in full_guaranteed_pool:
            for level in self.LEVELS:
                assert le_number(g, level) == ge_number(conjugate(g), -level)

    def test_zero_games_have_zero_pass_allowed_scores(
        self, full_guaranteed_pool: list[GameTerm]
    ) -> None:
        """Test G = 0 forces both pass-allowed scores to 0."""
        zeros = [g for g in full_guaranteed_pool if eq_zero(g)]

        assert number(0) in zeros
        for g in zeros:
            assert pass_allowed_left_score(g) == 0
            assert pass_allowed_right_score(g) == 0

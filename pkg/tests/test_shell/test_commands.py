"""Tests for command handlers."""

import pytest

from src.modules.shell.commands import (
    EXIT_FALSE,
    EXIT_OK,
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
from src.shared.config import Config
from src.shared.errors import ContractError

SCORES = ["-1", "0", "1"]


class TestGameCommands:
    """Tests for score, sum, passcore and check."""

    def test_score(self) -> None:
        """Test the scores of a sum."""
        result = handle_score("<^1|2> + <2|-1>")

        assert result.exit_code == EXIT_OK
        assert result.text == "Ls=4 Rs=0"
        assert result.payload["ls"] == "4"
        assert result.payload["rs"] == "0"

    def test_sum(self) -> None:
        """Test an expression is printed as one tree with its birthday."""
        result = handle_sum("1 + 1/2")

        assert result.text == "3/2"
        assert result.payload["birthday"] == 0

    def test_passcore(self) -> None:
        """Test pass-allowed scores."""
        assert handle_passcore("<-1|1>").text == "PassLs=-1 PassRs=1"
        assert handle_passcore("<<-3|^4>|^0>").payload["pass_ls"] == "-3"

    def test_check(self) -> None:
        """Test membership answers map onto exit codes 0 and 1."""
        stable = handle_check("stable", "<^0|<1|-1>>")
        guaranteed = handle_check("guaranteed", "<^0|<1|-1>>")

        assert (stable.exit_code, stable.text) == (EXIT_OK, "true")
        assert (guaranteed.exit_code, guaranteed.text) == (EXIT_FALSE, "false")
        assert guaranteed.payload["result"] is False

    def test_check_unknown_property(self) -> None:
        """Test property names are validated."""
        with pytest.raises(ContractError, match="unknown property"):
            handle_check("hot", "0")


class TestComparisonCommands:
    """Tests for cmp-num, eqzero and falsify."""

    def test_cmp_num(self) -> None:
        """Test hat(1) >= 0 holds and hat(1) <= 0 does not."""
        assert handle_cmp_num("hat(1)", "ge", "0").exit_code == EXIT_OK
        assert handle_cmp_num("hat(1)", "le", "0").exit_code == EXIT_FALSE
        assert handle_cmp_num("hat(1)", "eq", "0").exit_code == EXIT_FALSE
        assert handle_cmp_num("1/2", "eq", "1/2").exit_code == EXIT_OK

    def test_cmp_num_bad_relation(self) -> None:
        """Test relations other than ge, le and eq are refused."""
        with pytest.raises(ContractError, match="relation"):
            handle_cmp_num("0", "gt", "0")

    def test_eqzero(self) -> None:
        """Test a non-trivial game equal to 0."""
        result = handle_eqzero("<<1|0>|<0|-1>>")

        assert (result.exit_code, result.text) == (EXIT_OK, "true")

    def test_eqzero_outside_universe(self) -> None:
        """Test non-guaranteed games are refused."""
        with pytest.raises(ContractError):
            handle_eqzero("<<1|0>|^0>")

    def test_falsify_found(self, small_config: Config) -> None:
        """Test a witness is described and returned in the payload."""
        result = handle_falsify("hat(1)", "0", "all", SCORES, 0, None, small_config)

        assert result.exit_code == EXIT_OK
        assert result.text == "X=<^0|^-1>: Ls(G+X)=-1 < Ls(H+X)=0"
        assert result.payload["witness"] == {
            "x": "<^0|^-1>",
            "side": "Ls",
            "lhs": "-1",
            "rhs": "0",
        }

    def test_falsify_not_found(self, small_config: Config) -> None:
        """Test an empty search is reported as unrefuted, not proved."""
        result = handle_falsify("hat(1)", "0", "guaranteed", SCORES, 1, 1, small_config)

        assert result.payload["witness"] is None
        assert "not proved" in result.text

    def test_falsify_bad_universe(self, small_config: Config) -> None:
        """Test an invalid universe surfaces as ContractError."""
        with pytest.raises(ContractError, match="universe"):
            handle_falsify("0", "0", "hot", SCORES, 0, None, small_config)


class TestNormalPlayCommands:
    """Tests for embed and outcome."""

    def test_embed(self) -> None:
        """Test star embeds as <0|0>."""
        result = handle_embed("*")

        assert result.text == "<0|0>"
        assert result.payload["guaranteed"] is True

    def test_outcome_with_stops(self) -> None:
        """Test the outcome line is followed by the stops."""
        assert handle_outcome("*").text == "N (next player wins)\nLS=0 RS=0"

    def test_outcome_without_stops(self) -> None:
        """Test stops are omitted where they are undefined."""
        result = handle_outcome("{|*}")

        assert result.text == "P (previous player wins)"
        assert result.payload["stops"] is None


class TestUniverseCommands:
    """Tests for enumerate and census."""

    def test_enumerate(self, small_config: Config) -> None:
        """Test games are listed one per line."""
        result = handle_enumerate("dicot", SCORES, 0, None, small_config)

        assert result.text == "-1\n0\n1"
        assert result.payload["count"] == 3

    def test_census(self, small_config: Config) -> None:
        """Test census rows are exposed as records."""
        result = handle_census(["all", "stewart"], SCORES, 1, 1, small_config)

        rows = result.payload["rows"]
        assert [(row["predicate"], row["cumulative"]) for row in rows] == [
            ("all", 9),
            ("all", 144),
            ("stewart", 3),
            ("stewart", 30),
        ]
        assert "cumulative" in result.text


class TestKonaneCommands:
    """Tests for konane analyze and offer."""

    BOARD = "...\no..\nxo."

    def test_analyze_diskonnect(self, small_config: Config) -> None:
        """Test a diskonnect position prints its game and scores."""
        result = handle_konane_analyze(self.BOARD, "diskonnect", small_config)

        assert result.text == "<1|^2>\nLs=1 Rs=2"
        assert result.payload["guaranteed"] is True

    def test_analyze_normal(self, small_config: Config) -> None:
        """Test the normal ruleset prints a form and its outcome."""
        result = handle_konane_analyze(self.BOARD, "konane", small_config)

        assert result.text == "{{|}|}\noutcome=L"

    def test_offer(self, small_config: Config) -> None:
        """Test the offer verdicts for both starting players."""
        result = handle_konane_offer("ox.x.", "scoring-konane", "black", small_config)

        assert result.payload["verdict"] == {"black_first": "reject", "white_first": "indifferent"}
        assert "black first: reject" in result.text

    def test_unknown_ruleset_and_player(self, small_config: Config) -> None:
        """Test names are validated."""
        with pytest.raises(ContractError, match="ruleset"):
            handle_konane_analyze(self.BOARD, "chess", small_config)
        with pytest.raises(ContractError, match="player"):
            handle_konane_offer(self.BOARD, "diskonnect", "red", small_config)

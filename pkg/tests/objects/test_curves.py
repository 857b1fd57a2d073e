# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

import pytest

from msmb.exceptions import ParseError
from msmb.objects import (
    CheckResult, Condition, HerzogCase, HerzogClassification, Move,
    SignMatrix
)


class TestSignMatrix:

    def test_from_moves(self):
        signs = SignMatrix.from_moves([(3, -2, 0), (0, 4, -3)])
        assert signs.entries == ((1, -1, 0), (0, 1, -1))
        assert str(signs) == "+-0; 0+-"
        assert signs.shape == (2, 3)

    def test_parse(self):
        assert SignMatrix.parse("+-0; 0+-") == SignMatrix.from_moves(
            [(1, -1, 0), (0, 2, -5)]
        )

    def test_parse_error(self):
        with pytest.raises(ParseError):
            SignMatrix.parse("+*0")

    def test_to_dict(self):
        assert SignMatrix.parse("+-").to_dict() == {"signs": "+-"}


class TestCheckResult:
    condition = Condition("ci", "c1 < c2+c3", False, "2 < 2")

    def test_condition_text(self):
        assert str(self.condition) == "c1 < c2+c3 fails: 2 < 2"
        assert str(Condition("x", "a < b", True)) == "a < b holds"

    def test_failing_result(self):
        result = CheckResult(
            False, "dim3-ci", (self.condition,), Move((0, 11, -5))
        )
        assert not result
        assert result.decisive is self.condition
        assert str(result) == (
            "NOT distance reducing (c1 < c2+c3 fails: 2 < 2)"
        )
        assert result.to_dict()["failing_circuit"] == [0, 11, -5]

    def test_decisive_is_first_failure(self):
        holds = Condition("(a)", "a", True)
        fails = Condition("(b)", "b", False)
        result = CheckResult(False, "dim4-211", (holds, fails))
        assert result.decisive is fails

    def test_without_conditions(self):
        result = CheckResult(True, "graver")
        assert result
        assert result.decisive is None
        assert str(result) == "distance reducing"


class TestHerzogClassification:

    def test_v_needs_nci(self):
        herzog = HerzogClassification(
            HerzogCase.CI, (3, 5, 9), 1, (5, 3, 1), ()
        )
        with pytest.raises(ValueError):
            herzog.v(1, 2)

    def test_v_is_one_based(self):
        herzog = HerzogClassification(
            HerzogCase.NCI, (3, 4, 5), 1, (3, 2, 2), (),
            generators=(
                Move((-3, 1, 1)), Move((1, -2, 1)), Move((2, 1, -2))
            )
        )
        assert herzog.v(1, 2) == 1
        assert herzog.v(3, 1) == 2

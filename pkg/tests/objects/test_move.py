# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

import pytest

from msmb.exceptions import DimensionMismatch
from msmb.objects import Direction, Move


class TestMove:
    move = Move((3, -2, 0))

    def test_parts(self):
        assert self.move.plus == (3, 0, 0)
        assert self.move.minus == (0, 2, 0)
        assert self.move.norm == 5
        assert self.move.support == (0, 1)

    def test_behaves_like_a_tuple(self):
        assert self.move == (3, -2, 0)
        assert hash(self.move) == hash((3, -2, 0))

    def test_text(self):
        assert str(self.move) == "3 -2 0"
        assert repr(-self.move) == "Move(-3, 2, 0)"

    def test_canonical(self):
        assert self.move.is_canonical
        assert not (-self.move).is_canonical
        assert (-self.move).canonical() == self.move

    def test_from_parts(self):
        assert Move.from_parts((3, 0, 0), (0, 2, 0)) == self.move
        with pytest.raises(DimensionMismatch):
            Move.from_parts((1, 0), (0, 1, 0))

    def test_applicable(self):
        move = Move((1, -1))
        assert move.applicable((0, 1)) == Direction.PLUS
        assert move.applicable((1, 0)) == Direction.MINUS
        both = move.applicable((1, 1))
        assert both.names() == ("plus", "minus")
        assert Move((2, -2)).applicable((1, 1)) == Direction.NONE

    def test_apply(self):
        move = Move((1, -1))
        assert move.apply((0, 1), Direction.PLUS) == (1, 0)
        assert move.apply((1, 0), Direction.MINUS) == (0, 1)
        with pytest.raises(ValueError):
            move.apply((1, 1), Direction.PLUS | Direction.MINUS)

    def test_applicable_length(self):
        with pytest.raises(DimensionMismatch):
            self.move.applicable((1, 1))

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

import pytest

from msmb.exceptions import DimensionMismatch, InvalidInput
from msmb.objects import MoveSet, MoveSetKind, SemigroupMatrix

MATRIX = SemigroupMatrix.parse("2 3 4")


class TestMoveSet:
    moves = MoveSet.from_vectors(
        MATRIX, [(-2, 0, 1), (2, 0, -1), (1, -2, 1)], MoveSetKind.MARKOV
    )

    def test_canonical_and_sorted(self):
        assert self.moves.rows == ((1, -2, 1), (2, 0, -1))
        assert len(self.moves) == 2
        assert self.moves.kind is MoveSetKind.MARKOV

    def test_contains_either_sign(self):
        assert (-2, 0, 1) in self.moves
        assert (2, 0, -1) in self.moves
        assert (3, -2, 0) not in self.moves
        assert "move" not in self.moves

    def test_signed(self):
        assert self.moves.signed() == (
            (-2, 0, 1), (-1, 2, -1), (1, -2, 1), (2, 0, -1)
        )

    def test_parse_and_text(self):
        parsed = MoveSet.parse(MATRIX, "2 0 -1; 1 -2 1", MoveSetKind.MARKOV)
        assert parsed == self.moves
        assert str(parsed) == "1 -2 1\n2 0 -1"

    def test_union_and_subset(self):
        bigger = self.moves.union([(3, -2, 0)])
        assert len(bigger) == 3
        assert self.moves.issubset(bigger)
        assert not bigger.issubset(self.moves)
        assert bigger.with_kind(MoveSetKind.GRAVER).kind is MoveSetKind.GRAVER

    def test_to_dict(self):
        assert self.moves.to_dict() == {
            "kind": "markov",
            "moves": [[1, -2, 1], [2, 0, -1]],
        }

    @pytest.mark.parametrize("vector, error", [
        ((1, 1, 1), InvalidInput),
        ((0, 0, 0), InvalidInput),
        ((2, -1), DimensionMismatch),
    ])
    def test_rejected(self, vector, error):
        with pytest.raises(error):
            MoveSet.from_vectors(MATRIX, [vector])

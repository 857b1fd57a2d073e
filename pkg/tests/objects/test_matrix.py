# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

import pytest

from msmb.exceptions import InvalidInput, NotPointed, ParseError, ZeroColumn
from msmb.objects import SemigroupMatrix


class TestSemigroupMatrix:

    def test_one_row(self):
        matrix = SemigroupMatrix.parse("3 5 11")
        assert (matrix.d, matrix.n) == (1, 3)
        assert matrix.entries == (3, 5, 11)
        assert matrix.grading == (3, 5, 11)
        assert str(matrix) == "3 5 11"

    def test_kernel(self):
        matrix = SemigroupMatrix.parse("3 5 11")
        assert matrix.in_kernel((5, -3, 0))
        assert not matrix.in_kernel((1, 1, -1))
        assert matrix.apply((1, 1, 1)) == (19,)

    def test_permuted(self):
        matrix = SemigroupMatrix.parse("3 5 11").permuted((2, 0, 1))
        assert matrix.entries == (11, 3, 5)
        assert matrix.grading == (11, 3, 5)

    def test_two_rows(self):
        matrix = SemigroupMatrix.from_rows([(1, 0, 1), (0, 1, -1)])
        assert all(w > 0 for w in matrix.grading)
        assert matrix.in_kernel((-1, 1, 1))
        with pytest.raises(InvalidInput):
            matrix.entries

    @pytest.mark.parametrize("rows, error", [
        ([], InvalidInput),
        ([(1, 2), (3,)], InvalidInput),
        ([(1, 0, 2)], ZeroColumn),
        ([(1, -1)], NotPointed),
        ([(1, -1, 0), (0, 1, -1)], NotPointed),
    ])
    def test_rejected(self, rows, error):
        with pytest.raises(error):
            SemigroupMatrix.from_rows(rows)

    def test_parse_rejects_negative_entries(self):
        with pytest.raises(ParseError):
            SemigroupMatrix.parse("3 -5 11")

    def test_to_dict(self):
        assert SemigroupMatrix.parse("2 3").to_dict() == {"rows": [[2, 3]]}

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

import pytest

from msmb.exceptions import ParseError
from msmb.utils.parsing import (
    format_vector, parse_basis, parse_matrix, parse_rows, parse_signs
)


class TestParsing:

    @pytest.mark.parametrize("text", [
        "5 -3 0; 2 1 -1",
        "5,-3,0;2,1,-1",
        "[5 -3 0; 2 1 -1]",
        "(5, -3, 0); (2, 1, -1)",
    ])
    def test_basis_grammar(self, text):
        assert parse_basis(text) == ((5, -3, 0), (2, 1, -1))

    def test_single_row(self):
        assert parse_matrix("(3, 5, 9)") == ((3, 5, 9),)

    def test_unicode_minus(self):
        assert parse_rows("1 −2 1") == ((1, -2, 1),)

    @pytest.mark.parametrize("text", ["", "1 2; 3", "1 x 2", "1 2;;"])
    def test_invalid(self, text):
        with pytest.raises(ParseError):
            parse_rows(text)

    def test_negative_matrix_entry(self):
        with pytest.raises(ParseError):
            parse_matrix("3 -5 11")

    def test_signs(self):
        assert parse_signs("+-0; 0+-") == ((1, -1, 0), (0, 1, -1))
        assert parse_signs("+ - 0") == ((1, -1, 0),)
        assert parse_signs("") == ()

    def test_bad_signs(self):
        with pytest.raises(ParseError):
            parse_signs("+x0")
        with pytest.raises(ParseError):
            parse_signs("+-; +")

    def test_format_vector_round_trip(self):
        text = format_vector((1, -5, 0, 2))
        assert text == "1 -5 0 2"
        assert parse_basis(text) == ((1, -5, 0, 2),)

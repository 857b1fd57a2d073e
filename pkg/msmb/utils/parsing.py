# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Text formats shared by the command line and the tests.

Rows are separated by ``;`` and entries by whitespace or ``,``. Outer
brackets or parentheses are ignored, so ``"(3, 5, 9)"`` and ``"3 5 9"``
read the same.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING

from ..exceptions import ParseError

if TYPE_CHECKING:
    from typing import Iterable, Sequence

    from .types import IntMatrix, Vector

_SEPARATOR = re.compile(r"[\s,]+")
_BRACKETS = "()[]{}"
_SIGNS = {"+": 1, "-": -1, "0": 0, "−": -1}


def _rows(text: str) -> Sequence[str]:
    stripped = text.strip().strip(_BRACKETS).strip()
    if not stripped:
        raise ParseError("Expected at least one row", text)
    return [row.strip().strip(_BRACKETS) for row in stripped.split(";")]


def _entries(row: str, text: str) -> Vector:
    tokens = [t for t in _SEPARATOR.split(row.strip()) if t]
    if not tokens:
        raise ParseError("Empty row", text)

    try:
        return tuple(int(t.replace("−", "-")) for t in tokens)
    except ValueError:
        raise ParseError("Entries must be integers", text) from None


def parse_rows(text: str, *, allow_negative: bool = True) -> IntMatrix:
    """Parse a rectangular integer matrix.

    Parameters
    ----------
    text : :class:`str`
        The matrix, e.g. ``"5 -3 0; 2 1 -1"``.
    allow_negative : :class:`bool`
        Whether negative entries are accepted.
        |default| ``True``

    Raises
    ------
    :class:`~msmb.exceptions.ParseError`
        The text is not a rectangular integer matrix, or holds a negative
        entry while ``allow_negative`` is false.

    Returns
    -------
    Tuple[Tuple[:class:`int`, ...], ...]
        The rows.
    """
    rows = tuple(_entries(row, text) for row in _rows(text))

    if len({len(row) for row in rows}) != 1:
        raise ParseError("Rows have different lengths", text)

    if not allow_negative and any(e < 0 for row in rows for e in row):
        raise ParseError("Negative entries are not allowed here", text)

    return rows


def parse_matrix(text: str) -> IntMatrix:
    """A matrix as given on the command line: nonnegative entries."""
    return parse_rows(text, allow_negative=False)


def parse_basis(text: str) -> IntMatrix:
    """A list of moves, one per row."""
    return parse_rows(text)


def parse_signs(text: str) -> IntMatrix:
    """Parse a sign matrix written with ``+``, ``-`` and ``0``.

    Entries may be separated like integers or written back to back, so
    ``"+-0; 0++"`` and ``"+ - 0; 0 + +"`` are the same matrix. The empty
    string is the empty matrix.
    """
    if not text.strip().strip(_BRACKETS).strip():
        return ()

    rows = []
    for row in _rows(text):
        compact = _SEPARATOR.sub("", row)
        try:
            rows.append(tuple(_SIGNS[c] for c in compact))
        except KeyError:
            raise ParseError("Signs must be +, - or 0", text) from None

    if len({len(row) for row in rows}) != 1:
        raise ParseError("Rows have different lengths", text)

    return tuple(rows)


def format_vector(vector: Iterable[int]) -> str:
    """Space separated entries, readable back by :func:`parse_basis`."""
    return " ".join(str(e) for e in vector)

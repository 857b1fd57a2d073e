# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from ..exceptions import (
    DimensionMismatch, InvalidInput, NotPointed, ZeroColumn
)
from ..utils.arithmetic import dot, matvec
from ..utils.double_description import grading_vector
from ..utils.parsing import format_vector, parse_matrix

if TYPE_CHECKING:
    from typing import Any, Dict, Iterator, Sequence, Tuple

    from ..utils.types import IntMatrix, Vector

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SemigroupMatrix:
    """An integer matrix ``A`` whose kernel meets the nonnegative orthant
    only in zero.

    Instances are built through :meth:`from_rows` or :meth:`parse`, which
    check every precondition the algorithms rely on.

    Attributes
    ----------
    rows: Tuple[Tuple[:class:`int`, ...], ...]
        The ``d`` rows, each of length ``n``.
    coefficients: Tuple[:class:`int`, ...]
        A vector ``y`` with ``y.A`` positive in every column.
    grading: Tuple[:class:`int`, ...]
        The positive weights ``w = y.A``. Their existence is the
        pointedness certificate.
    """
    rows: IntMatrix
    coefficients: Vector
    grading: Vector

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> SemigroupMatrix:
        """Validate and wrap a matrix.

        Parameters
        ----------
        rows : Sequence[Sequence[:class:`int`]]
            The matrix, row by row.

        Raises
        ------
        :class:`~msmb.exceptions.InvalidInput`
            The matrix is empty or not rectangular.
        :class:`~msmb.exceptions.ZeroColumn`
            Some column is zero.
        :class:`~msmb.exceptions.NotPointed`
            ``ker(A)`` contains a nonzero nonnegative vector. A single row
            must have strictly positive entries.
        """
        rows = tuple(tuple(int(e) for e in row) for row in rows)

        if not rows or not rows[0]:
            raise InvalidInput("The matrix must have at least one entry.")
        if len({len(row) for row in rows}) != 1:
            raise InvalidInput("All rows must have the same length.")

        for j, column in enumerate(zip(*rows)):
            if not any(column):
                raise ZeroColumn(j)

        if len(rows) == 1:
            if any(e <= 0 for e in rows[0]):
                raise NotPointed(
                    "A one-row matrix must have positive entries."
                )
            return cls(rows, (1,), rows[0])

        certificate = grading_vector(rows)
        if certificate is None:
            raise NotPointed(
                "The kernel contains a nonzero nonnegative vector."
            )

        _log.debug("Grading %s certifies pointedness.", certificate[1])
        return cls(rows, *certificate)

    @classmethod
    def parse(cls, text: str) -> SemigroupMatrix:
        """Read a matrix such as ``"3 5 11"`` or ``"1 1 0; 0 1 1"``."""
        return cls.from_rows(parse_matrix(text))

    @property
    def pointed(self) -> bool:
        return True

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def entries(self) -> Vector:
        """The single row of a ``1 x n`` matrix.

        Raises
        ------
        :class:`~msmb.exceptions.InvalidInput`
            The matrix has more than one row.
        """
        if self.d != 1:
            raise InvalidInput(
                f"Expected a matrix with one row, got {self.d} rows."
            )
        return self.rows[0]

    @property
    def columns(self) -> Tuple[Vector, ...]:
        return tuple(zip(*self.rows))

    def apply(self, u: Sequence[int]) -> Vector:
        """``A u``.

        Raises
        ------
        :class:`~msmb.exceptions.DimensionMismatch`
            ``u`` does not have ``n`` entries.
        """
        if len(u) != self.n:
            raise DimensionMismatch(
                f"Vector of length {len(u)} for a matrix with {self.n} "
                "columns"
            )
        return matvec(self.rows, u)

    def in_kernel(self, u: Sequence[int]) -> bool:
        return not any(self.apply(u))

    def weight(self, target: Sequence[int]) -> int:
        """The graded degree of any fiber point of ``target``."""
        return dot(self.coefficients, target)

    def permuted(self, order: Sequence[int]) -> SemigroupMatrix:
        """The matrix with columns taken in ``order``."""
        return SemigroupMatrix(
            tuple(tuple(row[j] for j in order) for row in self.rows),
            self.coefficients,
            tuple(self.grading[j] for j in order)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"rows": [list(row) for row in self.rows]}

    def __str__(self) -> str:
        return "; ".join(format_vector(row) for row in self.rows)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.rows)


@dataclass(frozen=True)
class Fiber:
    """All points ``u >= 0`` with ``A u = target``, in lexicographic
    order.
    """
    target: Vector
    points: Tuple[Vector, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.points)

    def __contains__(self, point: object) -> bool:
        return tuple(point) in set(self.points)  # type: ignore

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target": list(self.target),
            "points": [list(p) for p in self.points]
        }

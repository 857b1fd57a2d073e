# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from __future__ import annotations

from dataclasses import dataclass
from enum import IntFlag
from typing import TYPE_CHECKING

from ..utils.arithmetic import (
    add, canonical, neg, negative_part, norm, positive_part, sub,
    support
)
from ..exceptions import DimensionMismatch

if TYPE_CHECKING:
    from typing import Iterable, Sequence, Tuple

    from ..utils.types import Vector


class Direction(IntFlag):
    """
    The ways a move can be applied to a point.

    PLUS:
        ``x -> x + u``, possible when ``x >= u-``.
    MINUS:
        ``x -> x - u``, possible when ``x >= u+``.
    """
    NONE = 0
    PLUS = 1 << 0
    MINUS = 1 << 1

    def names(self) -> Tuple[str, ...]:
        return tuple(
            member.name.lower() for member in (Direction.PLUS, Direction.MINUS)
            if member in self
        )


class Move(tuple):
    """An integer vector, usually a nonzero element of ``ker(A)``.

    A move compares and hashes like the plain tuple of its entries. A
    move and its negation are the same move inside a
    :class:`~msmb.objects.move_set.MoveSet`; :meth:`canonical` picks the
    representative whose first nonzero entry is positive.
    """

    def __new__(cls, entries: Iterable[int]) -> Move:
        return super().__new__(cls, (int(e) for e in entries))

    def __repr__(self) -> str:
        return f"Move{tuple(self)}"

    def __str__(self) -> str:
        return " ".join(str(e) for e in self)

    def __neg__(self) -> Move:
        return Move(neg(self))

    @classmethod
    def from_parts(cls, plus: Sequence[int], minus: Sequence[int]) -> Move:
        """Build ``plus - minus`` from two nonnegative vectors."""
        if len(plus) != len(minus):
            raise DimensionMismatch(
                f"Parts of length {len(plus)} and {len(minus)}"
            )
        return cls(sub(plus, minus))

    @property
    def plus(self) -> Vector:
        """The positive part ``u+``."""
        return positive_part(self)

    @property
    def minus(self) -> Vector:
        """The negative part ``u-``."""
        return negative_part(self)

    @property
    def norm(self) -> int:
        return norm(self)

    @property
    def support(self) -> Tuple[int, ...]:
        return support(self)

    @property
    def is_canonical(self) -> bool:
        return canonical(self) == tuple(self)

    def canonical(self) -> Move:
        return Move(canonical(self))

    def applicable(self, point: Sequence[int]) -> Direction:
        """Directions in which the move can be applied to ``point``
        without leaving the nonnegative orthant.

        Raises
        ------
        :class:`~msmb.exceptions.DimensionMismatch`
            ``point`` has another length.
        """
        if len(point) != len(self):
            raise DimensionMismatch(
                f"Move of length {len(self)} applied to a point of length "
                f"{len(point)}"
            )

        result = Direction.NONE
        if all(x >= m for x, m in zip(point, self.minus)):
            result |= Direction.PLUS
        if all(x >= p for x, p in zip(point, self.plus)):
            result |= Direction.MINUS
        return result

    def apply(self, point: Sequence[int], direction: Direction) -> Vector:
        """``point + u`` for PLUS, ``point - u`` for MINUS."""
        if direction is Direction.PLUS:
            return add(point, self)
        if direction is Direction.MINUS:
            return sub(point, self)
        raise ValueError("Exactly one direction must be given")


@dataclass(frozen=True)
class DecompositionFlags:
    """Which kinds of decomposition ``z = u + v`` is.

    Attributes
    ----------
    conformal: :class:`bool`
        ``z+ = u+ + v+`` and ``z- = u- + v-``.
    semiconformal: :class:`bool`
        ``u_i > 0`` implies ``v_i >= 0``.
    semiconformal_swapped: :class:`bool`
        The same for the order ``(v, u)``.
    pos_distance: :class:`bool`
        ``u+ <= z+`` and ``||v|| < ||z||``.
    neg_distance: :class:`bool`
        ``u- <= z-`` and ``||v|| < ||z||``.
    proper: :class:`bool`
        Neither ``u`` nor ``v`` is zero.
    """
    conformal: bool
    semiconformal: bool
    semiconformal_swapped: bool
    pos_distance: bool
    neg_distance: bool
    proper: bool


def as_moves(vectors: Iterable[Sequence[int]]) -> Tuple[Move, ...]:
    return tuple(Move(v) for v in vectors)

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import TYPE_CHECKING

from .move import Move
from ..exceptions import DimensionMismatch, InvalidInput
from ..utils.arithmetic import canonical, is_zero
from ..utils.parsing import parse_basis

if TYPE_CHECKING:
    from typing import Any, Dict, Iterable, Iterator, Sequence, Tuple

    from .matrix import SemigroupMatrix
    from ..utils.types import IntMatrix


class MoveSetKind(Enum):
    """What a :class:`MoveSet` was computed as."""
    CIRCUITS = "circuits"
    GRAVER = "graver"
    MARKOV = "markov"
    INDISPENSABLE = "indispensable"
    UNIVERSAL_MARKOV = "universal_markov"
    IRREDUCIBLE = "irreducible"
    WEAKLY_IRREDUCIBLE = "weakly_irreducible"
    DISTANCE_REDUCING = "distance_reducing"
    UNIVERSAL_REDUCING = "universal_reducing"
    REDUCERS = "reducers"
    CUSTOM = "custom"


@dataclass(frozen=True)
class MoveSet:
    """A finite set of moves of one matrix, up to sign.

    Every move is stored in its canonical sign and the moves are sorted
    lexicographically, so two move sets with the same moves compare
    equal whatever order or signs they were given in.

    Attributes
    ----------
    matrix: :class:`~msmb.objects.matrix.SemigroupMatrix`
        The ambient matrix.
    moves: Tuple[:class:`~msmb.objects.move.Move`, ...]
        The canonical, sorted, duplicate free moves.
    kind: :class:`MoveSetKind`
        Provenance tag.
    """
    matrix: SemigroupMatrix
    moves: Tuple[Move, ...]
    kind: MoveSetKind = MoveSetKind.CUSTOM

    @classmethod
    def from_vectors(
            cls,
            matrix: SemigroupMatrix,
            vectors: Iterable[Sequence[int]],
            kind: MoveSetKind = MoveSetKind.CUSTOM
    ) -> MoveSet:
        """Canonicalise, deduplicate and validate moves.

        Raises
        ------
        :class:`~msmb.exceptions.DimensionMismatch`
            A vector has the wrong length.
        :class:`~msmb.exceptions.InvalidInput`
            A vector is zero or not in the kernel of ``matrix``.
        """
        moves = set()
        for vector in vectors:
            if len(vector) != matrix.n:
                raise DimensionMismatch(
                    f"Move {tuple(vector)} has {len(vector)} entries, the "
                    f"matrix has {matrix.n} columns."
                )
            if is_zero(vector):
                raise InvalidInput("The zero vector is not a move.")
            if not matrix.in_kernel(vector):
                raise InvalidInput(
                    f"{tuple(vector)} is not in the kernel of the matrix."
                )
            moves.add(Move(canonical(vector)))

        return cls(matrix, tuple(sorted(moves)), kind)

    @classmethod
    def parse(
            cls,
            matrix: SemigroupMatrix,
            text: str,
            kind: MoveSetKind = MoveSetKind.CUSTOM
    ) -> MoveSet:
        """Read moves written one per row, e.g. ``"5 -3 0; 2 1 -1"``."""
        return cls.from_vectors(matrix, parse_basis(text), kind)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[Move]:
        return iter(self.moves)

    def __contains__(self, vector: object) -> bool:
        try:
            return canonical(vector) in self._lookup  # type: ignore
        except TypeError:
            return False

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.moves)

    @property
    def rows(self) -> IntMatrix:
        return tuple(tuple(m) for m in self.moves)

    def signed(self) -> Tuple[Move, ...]:
        """Both signs of every move, sorted."""
        return tuple(sorted(self.moves + tuple(-m for m in self.moves)))

    def with_kind(self, kind: MoveSetKind) -> MoveSet:
        return MoveSet(self.matrix, self.moves, kind)

    def union(self, other: Iterable[Sequence[int]]) -> MoveSet:
        return MoveSet.from_vectors(
            self.matrix, self.moves + tuple(other), self.kind
        )

    def issubset(self, other: Iterable[Sequence[int]]) -> bool:
        pool = {canonical(v) for v in other}
        return all(m in pool for m in self.moves)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "moves": [list(m) for m in self.moves]
        }

    def __str__(self) -> str:
        return "\n".join(str(m) for m in self.moves)

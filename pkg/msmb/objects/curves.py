# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import TYPE_CHECKING

from .move import Move
from ..exceptions import IndexOutOfRange, ParseError
from ..utils.arithmetic import canonical
from ..utils.conversion import fields_to_plain
from ..utils.parsing import parse_signs

if TYPE_CHECKING:
    from typing import Any, Dict, Optional, Sequence, Tuple

    from .matrix import SemigroupMatrix
    from .move_set import MoveSet
    from ..utils.types import IntMatrix, Vector


class HerzogCase(Enum):
    """The two shapes of minimal Markov bases of a monomial curve in
    three-space.
    """
    NCI = "nci"
    CI = "ci"


@dataclass(frozen=True)
class HerzogClassification:
    """Minimal kernel elements of ``(a1 a2 a3)``.

    Attributes
    ----------
    case: :class:`HerzogCase`
        Whether the curve is a complete intersection.
    entries: Tuple[:class:`int`, :class:`int`, :class:`int`]
        The matrix after division by ``divisor``.
    divisor: :class:`int`
        The gcd of the given entries.
    c: Tuple[:class:`int`, :class:`int`, :class:`int`]
        ``c_i``, the least ``k >= 1`` with ``k a_i`` in the semigroup of
        the other two entries.
    generators: Tuple[:class:`~msmb.objects.move.Move`, ...]
        NCI only: ``g_1, g_2, g_3`` where ``g_i`` has ``-c_i`` in slot
        ``i`` and the positive ``v_ij`` elsewhere.
    b: Optional[:class:`~msmb.objects.move.Move`]
        CI only: the circuit that is minimal of both its types.
    c_move: Optional[:class:`~msmb.objects.move.Move`]
        CI only: a minimal element of the remaining type, negative in
        that slot.
    lambda_range: Optional[Tuple[:class:`int`, :class:`int`]]
        CI only: the ``lambda`` for which ``c + lambda b`` keeps its
        type, as a closed interval.
    bases: Tuple[:class:`~msmb.objects.move_set.MoveSet`, ...]
        Every minimal Markov basis.
    """
    case: HerzogCase
    entries: Vector
    divisor: int
    c: Vector
    bases: Tuple[MoveSet, ...]
    generators: Tuple[Move, ...] = ()
    b: Optional[Move] = None
    c_move: Optional[Move] = None
    lambda_range: Optional[Tuple[int, int]] = None

    def v(self, i: int, j: int) -> int:
        """``v_ij`` for the NCI case, 1-based like ``c_i``."""
        if self.case is not HerzogCase.NCI:
            raise ValueError("v_ij is only defined for the NCI case")
        return self.generators[i - 1][j - 1]

    def to_dict(self) -> Dict[str, Any]:
        return fields_to_plain(self)


@dataclass(frozen=True)
class SignMatrix:
    """Entrywise signs of a list of moves, as ``-1``, ``0`` and ``1``."""
    entries: IntMatrix

    @classmethod
    def from_moves(cls, moves: Sequence[Sequence[int]]) -> SignMatrix:
        return cls(tuple(
            tuple((e > 0) - (e < 0) for e in move) for move in moves
        ))

    @classmethod
    def parse(cls, text: str) -> SignMatrix:
        """Read ``"+-0; 0+-"`` style text.

        Raises
        ------
        :class:`~msmb.exceptions.ParseError`
            Unknown symbols or ragged rows.
        """
        entries = parse_signs(text)
        if any(e not in (-1, 0, 1) for row in entries for e in row):
            raise ParseError("Signs must be +, - or 0", text)
        return cls(entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def __str__(self) -> str:
        symbol = {1: "+", 0: "0", -1: "-"}
        return "; ".join(
            "".join(symbol[e] for e in row) for row in self.entries
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"signs": str(self)}


@dataclass(frozen=True)
class FirstKindBasis:
    """A minimal Markov basis brought into triangular form.

    After permuting the columns by ``order``, row ``i`` (for
    ``2 <= i <= n``) reads ``(u_i1, ..., u_i(i-1), -u_ii, 0, ..., 0)`` with
    every ``u`` nonnegative, and the first two permuted entries of the
    matrix are increasing.

    Attributes
    ----------
    matrix: :class:`~msmb.objects.matrix.SemigroupMatrix`
        The original matrix.
    order: Tuple[:class:`int`, ...]
        ``order[k]`` is the original column placed at position ``k``.
    rows: Tuple[Tuple[:class:`int`, ...], ...]
        ``rows[i - 2] == (u_i1, ..., u_ii)``.
    moves: Tuple[:class:`~msmb.objects.move.Move`, ...]
        The same rows as signed moves in the original coordinates.
    """
    matrix: SemigroupMatrix
    order: Tuple[int, ...]
    rows: IntMatrix
    moves: Tuple[Move, ...]

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def entries(self) -> Vector:
        """The matrix entries in triangular column order."""
        a = self.matrix.entries
        return tuple(a[j] for j in self.order)

    def u(self, i: int, k: int) -> int:
        """``u_ik`` with 1-based indices; zero above the diagonal."""
        row = self.rows[i - 2]
        return row[k - 1] if k <= len(row) else 0

    def vector(self, i: int) -> Vector:
        """Row ``i`` in triangular coordinates."""
        row = self.rows[i - 2]
        return row[:-1] + (-row[-1],) + (0,) * (self.n - i)

    def to_original(self, vector: Sequence[int]) -> Move:
        """Map a vector in triangular coordinates back."""
        original = [0] * self.n
        for position, column in enumerate(self.order):
            original[column] = vector[position]
        return Move(original)

    def circuit(self, i: int, j: int) -> Move:
        """The circuit on triangular columns ``i < j`` (1-based), in
        original coordinates and canonical sign.
        """
        if not 1 <= i < j <= self.n:
            raise IndexOutOfRange(f"No circuit for columns ({i}, {j})")
        a = self.entries
        g = gcd(a[i - 1], a[j - 1])
        vector = [0] * self.n
        vector[i - 1] = a[j - 1] // g
        vector[j - 1] = -(a[i - 1] // g)
        return Move(canonical(self.to_original(vector)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": list(self.order),
            "entries": list(self.entries),
            "rows": [list(row) for row in self.rows],
            "moves": [list(m) for m in self.moves],
        }


@dataclass(frozen=True)
class RijRecord:
    """Evaluation of the condition ``R_ij`` on a triangular basis.

    Attributes
    ----------
    i, j: :class:`int`
        The 1-based index pair.
    cond_i: :class:`bool`
        ``u_i1 + ... + u_i(i-1) < u_ii``.
    cond_ii: :class:`bool`
        Some row ``l`` strictly between ``i`` and ``j`` is zero outside
        columns ``i`` and ``l`` and has ``u_li > u_ll``.
    witness_l: Optional[:class:`int`]
        The first such ``l``.
    cond_iii: :class:`bool`
        ``u_j1 + ... + u_jj < 2 (u_ji + u_jj)``.
    circuit: :class:`~msmb.objects.move.Move`
        The circuit on columns ``i`` and ``j`` the condition is about.
    """
    i: int
    j: int
    cond_i: bool
    cond_ii: bool
    witness_l: Optional[int]
    cond_iii: bool
    circuit: Move

    @property
    def satisfied(self) -> bool:
        return self.cond_i or self.cond_ii or self.cond_iii

    def to_dict(self) -> Dict[str, Any]:
        return {**fields_to_plain(self), "satisfied": self.satisfied}


@dataclass(frozen=True)
class Condition:
    """One closed-form clause of a checker.

    Attributes
    ----------
    name: :class:`str`
        The clause label, e.g. ``"(a)"``.
    formula: :class:`str`
        The inequality as text.
    holds: :class:`bool`
        Whether it is satisfied.
    detail: :class:`str`
        The inequality with the numbers filled in.
    """
    name: str
    formula: str
    holds: bool
    detail: str = ""

    def __str__(self) -> str:
        verdict = "holds" if self.holds else "fails"
        if self.detail:
            return f"{self.formula} {verdict}: {self.detail}"
        return f"{self.formula} {verdict}"

    def to_dict(self) -> Dict[str, Any]:
        return fields_to_plain(self)


@dataclass(frozen=True)
class CheckResult:
    """Answer of a closed-form distance reduction checker.

    Attributes
    ----------
    reducing: :class:`bool`
        The answer.
    case: :class:`str`
        Which characterisation was applied, e.g. ``"dim3-ci"``.
    conditions: Tuple[:class:`Condition`, ...]
        Every clause that was evaluated.
    failing_circuit: Optional[:class:`~msmb.objects.move.Move`]
        A circuit that is not reduced, when ``reducing`` is false.
    order: Optional[Tuple[:class:`int`, ...]]
        The column normalisation the clauses refer to.
    unsupported: :class:`bool`
        No closed form applied and the answer comes from the Graver
        test.
    """
    reducing: bool
    case: str
    conditions: Tuple[Condition, ...] = ()
    failing_circuit: Optional[Move] = None
    order: Optional[Tuple[int, ...]] = None
    unsupported: bool = False

    def __bool__(self) -> bool:
        return self.reducing

    @property
    def decisive(self) -> Optional[Condition]:
        """The first failing clause, or the last clause when all hold."""
        for condition in self.conditions:
            if not condition.holds:
                return condition
        return self.conditions[-1] if self.conditions else None

    def __str__(self) -> str:
        verdict = "distance reducing" if self.reducing else (
            "NOT distance reducing"
        )
        condition = self.decisive
        if condition is None:
            return verdict
        return f"{verdict} ({condition})"

    def to_dict(self) -> Dict[str, Any]:
        return {**fields_to_plain(self), "text": str(self)}

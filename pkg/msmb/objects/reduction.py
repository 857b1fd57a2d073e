# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from ..utils.conversion import fields_to_plain

if TYPE_CHECKING:
    from typing import Any, Dict, Optional, Tuple

    from .move import Move
    from .move_set import MoveSet
    from ..utils.types import Vector


class Side(Enum):
    """The point of the pair ``(z+, z-)`` a move is applied to."""
    POSITIVE = "positive_part"
    NEGATIVE = "negative_part"


class Step(Enum):
    """Whether the move is added to or subtracted from that point."""
    ADD = "add"
    SUBTRACT = "subtract"


#: The four ways a move may shorten ``z``, in the order they are tried.
CLAUSES: Tuple[Tuple[Side, Step], ...] = (
    (Side.POSITIVE, Step.ADD),
    (Side.POSITIVE, Step.SUBTRACT),
    (Side.NEGATIVE, Step.ADD),
    (Side.NEGATIVE, Step.SUBTRACT),
)


@dataclass(frozen=True)
class ReductionWitness:
    """A move that brings the two ends of ``z`` closer together.

    Attributes
    ----------
    target: :class:`~msmb.objects.move.Move`
        The element ``z`` whose distance ``||z+ - z-||`` is reduced.
    move: :class:`~msmb.objects.move.Move`
        The reducing move ``u``, in canonical sign.
    side: :class:`Side`
        Whether ``u`` is applied to ``z+`` or ``z-``.
    step: :class:`Step`
        Whether ``u`` is added or subtracted.
    norm_before: :class:`int`
        ``||z||``.
    norm_after: :class:`int`
        The distance after the step, always smaller.
    """
    target: Move
    move: Move
    side: Side
    step: Step
    norm_before: int
    norm_after: int

    def to_dict(self) -> Dict[str, Any]:
        return fields_to_plain(self)


@dataclass(frozen=True)
class ReducingCheck:
    """Answer of a distance reduction test.

    Attributes
    ----------
    reducing: :class:`bool`
        The answer.
    witness: Optional[:class:`~msmb.objects.move.Move`]
        The first element that was not reduced, when ``reducing`` is
        false.
    """
    reducing: bool
    witness: Optional[Move] = None

    def __bool__(self) -> bool:
        return self.reducing

    def to_dict(self) -> Dict[str, Any]:
        return fields_to_plain(self)


@dataclass(frozen=True)
class IrreducibleSets:
    """The distance irreducible elements of a matrix.

    Attributes
    ----------
    d_plus: Tuple[:class:`~msmb.objects.move.Move`, ...]
        Signed elements without a positive distance decomposition.
    d_minus: Tuple[:class:`~msmb.objects.move.Move`, ...]
        Signed elements without a negative distance decomposition. This
        is ``-d_plus``.
    d: :class:`~msmb.objects.move_set.MoveSet`
        Elements in both, which is a set closed under sign.
    d_weak: :class:`~msmb.objects.move_set.MoveSet`
        Elements in either.
    """
    d_plus: Tuple[Move, ...]
    d_minus: Tuple[Move, ...]
    d: MoveSet
    d_weak: MoveSet

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d_plus": [list(m) for m in self.d_plus],
            "d_minus": [list(m) for m in self.d_minus],
            "d": self.d.to_dict(),
            "d_weak": self.d_weak.to_dict(),
        }


@dataclass(frozen=True)
class Requirement:
    """Moves one of which must be added to the core to reduce
    ``target`` (on ``side`` only, when given).
    """
    target: Move
    side: Optional[Side]
    candidates: Tuple[Move, ...]

    def to_dict(self) -> Dict[str, Any]:
        return fields_to_plain(self)


@dataclass(frozen=True)
class UniversalReducing:
    """All minimal (strongly) distance reducing Markov bases.

    Attributes
    ----------
    strong: :class:`bool`
        Whether the strong variant was computed.
    core: :class:`~msmb.objects.move_set.MoveSet`
        The moves every such basis contains.
    requirements: Tuple[:class:`Requirement`, ...]
        What the core fails to reduce, with the candidate fixes.
    bases: Tuple[:class:`~msmb.objects.move_set.MoveSet`, ...]
        The minimal bases, each the core plus a minimal hitting set of
        the requirements.
    union: :class:`~msmb.objects.move_set.MoveSet`
        The universal distance reducing basis.
    bound: :class:`int`
        Norm bound used for the candidates.
    """
    strong: bool
    core: MoveSet
    requirements: Tuple[Requirement, ...]
    bases: Tuple[MoveSet, ...]
    union: MoveSet
    bound: int

    def to_dict(self) -> Dict[str, Any]:
        return fields_to_plain(self)


@dataclass(frozen=True)
class UniversalComparison:
    """How the universal distance reducing basis and its strong variant
    relate for one matrix. Nothing is assumed about the outcome.
    """
    reducing: MoveSet
    strongly_reducing: MoveSet
    reducing_in_strong: bool
    strong_in_reducing: bool

    def to_dict(self) -> Dict[str, Any]:
        return fields_to_plain(self)


@dataclass(frozen=True)
class MarkovCheck:
    """Answer of :func:`~msmb.core.bases.verify_markov`.

    Attributes
    ----------
    markov: :class:`bool`
        Whether every checked fiber is connected.
    witness: Optional[:class:`~msmb.objects.move.Move`]
        A difference ``x - y`` of two points the moves fail to connect.
    target: Optional[Tuple[:class:`int`, ...]]
        The fiber those points live in.
    """
    markov: bool
    witness: Optional[Move] = None
    target: Optional[Vector] = None

    def __bool__(self) -> bool:
        return self.markov

    def to_dict(self) -> Dict[str, Any]:
        return fields_to_plain(self)


@dataclass(frozen=True)
class MarkovDegree:
    """A fiber that carries minimal generators.

    Points of the fiber are grouped into classes that moves of smaller
    degree connect; a minimal Markov basis needs ``len(components) - 1``
    moves of this degree.
    """
    target: Vector
    components: Tuple[Tuple[Vector, ...], ...]

    @property
    def generators(self) -> int:
        return len(self.components) - 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target": list(self.target),
            "components": [[list(p) for p in c] for c in self.components],
            "generators": self.generators,
        }

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Homogeneous inequality systems over move norms and the cones they cut
out. Variable ``k`` stands for the (hypothetical) norm ``n_(k+1)`` of the
``k``-th move of the labelling set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from ..exceptions import DimensionMismatch
from ..utils.arithmetic import dot

if TYPE_CHECKING:
    from typing import Any, Dict, List, Optional, Sequence, Tuple

    from .move import Move
    from ..utils.types import IntMatrix, Vector


def _term(coefficient: int, index: int) -> str:
    return f"n{index + 1}" if coefficient == 1 else (
        f"{coefficient}n{index + 1}"
    )


@dataclass(frozen=True)
class Inequality:
    """``coefficients . n >= 0``, or ``> 0`` when ``strict``.

    Attributes
    ----------
    coefficients: Tuple[:class:`int`, ...]
        One integer per variable.
    strict: :class:`bool`
        Whether the inequality is strict.
    provenance: :class:`str`
        Where it came from, e.g. ``"triangle 0,1,2"`` or
        ``"reduction of (3, -2, 0) by (2, 0, -1)"``.
    """
    coefficients: Vector
    strict: bool = False
    provenance: str = ""

    @property
    def relation(self) -> str:
        return ">" if self.strict else ">="

    def holds(self, point: Sequence[int], *, closed: bool = False) -> bool:
        """Whether ``point`` satisfies the inequality. With ``closed`` a
        strict inequality is read as its closure.
        """
        value = dot(self.coefficients, point)
        return value > 0 if self.strict and not closed else value >= 0

    def __str__(self) -> str:
        left = " + ".join(
            _term(c, i) for i, c in enumerate(self.coefficients) if c > 0
        ) or "0"
        right = " + ".join(
            _term(-c, i) for i, c in enumerate(self.coefficients) if c < 0
        ) or "0"
        return f"{left} {self.relation} {right}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "coefficients": list(self.coefficients),
            "relation": self.relation,
            "provenance": self.provenance,
            "text": str(self),
        }


@dataclass(frozen=True)
class IneqSystem:
    """A homogeneous system over the norms of ``variables``.

    The nonnegativity ``n_i >= 0`` of every variable is implied and not
    stored; positivity ``n_i > 0`` is checked on interior witnesses.
    """
    variables: Tuple[Move, ...]
    inequalities: Tuple[Inequality, ...] = ()

    def __post_init__(self):
        for inequality in self.inequalities:
            if len(inequality.coefficients) != len(self.variables):
                raise DimensionMismatch(
                    f"Inequality {inequality} has "
                    f"{len(inequality.coefficients)} coefficients for "
                    f"{len(self.variables)} variables"
                )

    @property
    def dimension(self) -> int:
        return len(self.variables)

    @property
    def rows(self) -> IntMatrix:
        """Coefficient rows of the closed system, duplicates removed."""
        seen: List[Vector] = []
        for inequality in self.inequalities:
            if inequality.coefficients not in seen:
                seen.append(inequality.coefficients)
        return tuple(seen)

    @property
    def strict(self) -> Tuple[Inequality, ...]:
        return tuple(i for i in self.inequalities if i.strict)

    def union(self, other: IneqSystem) -> IneqSystem:
        """Both systems at once; the variables must agree."""
        if self.variables != other.variables:
            raise DimensionMismatch(
                "Inequality systems over different variables"
            )
        extra = tuple(
            i for i in other.inequalities if i not in self.inequalities
        )
        return IneqSystem(self.variables, self.inequalities + extra)

    def satisfied_by(
            self,
            point: Sequence[int],
            *,
            closed: bool = False
    ) -> bool:
        """Whether ``point`` is a solution. Unless ``closed``, strict
        inequalities stay strict and every coordinate must be positive.
        """
        if len(point) != self.dimension:
            raise DimensionMismatch(
                f"Point of length {len(point)} for {self.dimension} "
                "variables"
            )
        if any(x < 0 for x in point):
            return False
        if not closed and any(x == 0 for x in point):
            return False
        return all(i.holds(point, closed=closed) for i in self.inequalities)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "variables": [list(v) for v in self.variables],
            "inequalities": [
                [list(i.coefficients), i.relation] for i in self.inequalities
            ],
        }


@dataclass(frozen=True)
class Cone:
    """The closure of the solution set of an :class:`IneqSystem`.

    Attributes
    ----------
    system: :class:`IneqSystem`
        The defining system.
    rays: Tuple[Tuple[:class:`int`, ...], ...]
        Primitive extreme rays, sorted.
    interior: Optional[Tuple[:class:`int`, ...]]
        A point satisfying every inequality strictly, or ``None`` when
        the strict system has no solution.
    projected: :class:`bool`
        Built from the projected inequalities instead of a closed set.
    transversal: Tuple[:class:`int`, ...]
        For cones of the distance reducing complex, the reducing move
        picked from each reduction set, by index into ``variables``.
    """
    system: IneqSystem
    rays: IntMatrix
    interior: Optional[Vector] = None
    projected: bool = False
    transversal: Tuple[int, ...] = ()

    @property
    def variables(self) -> Tuple[Move, ...]:
        return self.system.variables

    @property
    def ray_matrix(self) -> IntMatrix:
        """Rays as columns: row ``i`` holds the ``n_(i+1)`` entries."""
        if not self.rays:
            return tuple(() for _ in self.variables)
        return tuple(zip(*self.rays))

    @property
    def is_open_nonempty(self) -> bool:
        return self.interior is not None

    def contains(self, point: Sequence[int], *, strict: bool = False) -> bool:
        """Membership in the closed cone, or in its strict part."""
        return self.system.satisfied_by(point, closed=not strict)

    def to_dict(self) -> Dict[str, Any]:
        result = {
            **self.system.to_dict(),
            "rays": [list(r) for r in self.rays],
            "projected": self.projected,
        }
        if self.interior is not None:
            result["interior"] = list(self.interior)
        if self.transversal:
            result["transversal"] = list(self.transversal)
        return result


@dataclass(frozen=True)
class MatroidCircuit:
    """A minimal dependent subset of a vector list with its relation
    ``sum coefficients[k] * vectors[indices[k]] == 0``, primitive and with
    a positive first coefficient.
    """
    indices: Tuple[int, ...]
    coefficients: Tuple[int, ...]

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(abs(c) for c in self.coefficients)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "indices": list(self.indices),
            "coefficients": list(self.coefficients),
        }


@dataclass(frozen=True)
class Relation:
    """``sum alpha[b] * basis[b] == multiplier * target``.

    Attributes
    ----------
    alpha: Tuple[:class:`int`, ...]
        One coefficient per basis move, primitive, first nonzero positive,
        with at least two nonzero entries.
    target: :class:`~msmb.objects.move.Move`
        A canonical move of the labelling set.
    multiplier: :class:`int`
        Nonzero; ``|multiplier|`` is ``|alpha_s|``.
    """
    alpha: Tuple[int, ...]
    target: Move
    multiplier: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha": list(self.alpha),
            "target": list(self.target),
            "multiplier": self.multiplier,
        }


@dataclass(frozen=True)
class ReductionSet:
    """The reduction inequalities ``I_L`` of one relation, one per basis
    move taking part in it.
    """
    relation: Relation
    target_index: int
    inequalities: Tuple[Inequality, ...]
    reducers: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.inequalities)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "relation": self.relation.to_dict(),
            "target_index": self.target_index,
            "reducers": list(self.reducers),
            "inequalities": [i.to_dict() for i in self.inequalities],
        }

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Extreme rays of cones living in the nonnegative orthant.

The H to V conversion is done by cddlib's double description method,
through pycddlib in exact fraction mode. Rays come back as primitive
integer vectors.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import TYPE_CHECKING

import cdd

from .arithmetic import dot, lcm_all, primitive
from ..exceptions import DimensionGuard

if TYPE_CHECKING:
    from typing import List, Optional, Sequence, Tuple

    from .types import Vector

_log = logging.getLogger(__name__)


def _integral(entries: Sequence[Fraction]) -> Vector:
    values = [Fraction(e) for e in entries]
    scale = lcm_all(v.denominator for v in values)
    return primitive(tuple(int(v * scale) for v in values))


def extreme_rays(
        inequalities: Sequence[Sequence[int]],
        dimension: int,
        *,
        max_variables: Optional[int] = None,
        max_inequalities: Optional[int] = None
) -> List[Vector]:
    """Extreme rays of ``{x in R^dimension : x >= 0, a.x >= 0}``.

    Parameters
    ----------
    inequalities : Sequence[Sequence[:class:`int`]]
        Integer rows ``a``; each one stands for ``a.x >= 0``.
    dimension : :class:`int`
        Number of variables.
    max_variables : Optional[:class:`int`]
        Guard on ``dimension``.
    max_inequalities : Optional[:class:`int`]
        Guard on the number of rows.

    Raises
    ------
    :class:`~msmb.exceptions.DimensionGuard`
        A guard was exceeded.

    Returns
    -------
    List[Tuple[:class:`int`, ...]]
        Primitive integer rays, sorted lexicographically. The empty list
        means the cone is ``{0}``.
    """
    if max_variables is not None and dimension > max_variables:
        raise DimensionGuard.from_sizes(
            "Number of variables", dimension, max_variables
        )
    if max_inequalities is not None and len(inequalities) > max_inequalities:
        raise DimensionGuard.from_sizes(
            "Number of inequalities", len(inequalities), max_inequalities
        )

    for offset, row in enumerate(inequalities):
        if len(row) != dimension:
            raise ValueError(
                f"Inequality {offset} has {len(row)} coefficients, "
                f"expected {dimension}."
            )

    # cddlib reads a row (b, a) as b + a.x >= 0.
    orthant = [
        [0] + [int(i == j) for j in range(dimension)]
        for i in range(dimension)
    ]
    system = cdd.Matrix(
        orthant + [[0] + [int(c) for c in row] for row in inequalities],
        number_type="fraction"
    )
    system.rep_type = cdd.RepType.INEQUALITY

    generators = cdd.Polyhedron(system).get_generators()
    rays = set()
    for index in range(generators.row_size):
        row = generators[index]
        if row[0] != 0:
            continue

        ray = _integral(row[1:])
        if not any(ray):
            continue
        rays.add(ray)
        if index in generators.lin_set:
            rays.add(tuple(-c for c in ray))

    _log.debug(
        "%d inequalities in %d variables give %d extreme rays.",
        len(inequalities), dimension, len(rays)
    )
    return sorted(rays)


def satisfies(point: Sequence[int], inequalities: Sequence[Sequence[int]]):
    """Whether ``point`` is in the orthant and on the closed side of
    every inequality.
    """
    return all(c >= 0 for c in point) and all(
        dot(row, point) >= 0 for row in inequalities
    )


def grading_vector(
        rows: Sequence[Sequence[int]]
) -> Optional[Tuple[Vector, Vector]]:
    """A positive integer vector ``w = y.A`` in the row space of ``A``.

    Such a ``w`` exists exactly when ``ker(A)`` meets the nonnegative
    orthant only in zero. It is found as an extreme ray with ``s > 0`` of
    the cone over ``(y+, y-, s) >= 0`` cut out by ``(y+ - y-).a_j >= s``
    for every column ``a_j``.

    Returns
    -------
    Optional[Tuple[Tuple[:class:`int`, ...], Tuple[:class:`int`, ...]]]
        The pair ``(y, w)`` whose ``w`` has the smallest entry sum among
        those rays, or ``None`` when ``A`` is not pointed. For any ``u``,
        ``w.u == y.(A u)``.
    """
    d = len(rows)
    columns = list(zip(*rows))
    inequalities = [
        tuple(column) + tuple(-e for e in column) + (-1,)
        for column in columns
    ]

    best: Optional[Tuple[Vector, Vector]] = None
    for ray in extreme_rays(inequalities, 2 * d + 1):
        if ray[-1] <= 0:
            continue

        y = tuple(p - m for p, m in zip(ray[:d], ray[d:2 * d]))
        weights = tuple(dot(y, column) for column in columns)
        if best is None or (sum(weights), weights) < (sum(best[1]), best[1]):
            best = (y, weights)

    return best

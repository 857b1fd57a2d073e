# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Kernels, fibers and decompositions: the layer every other module is
built on.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from math import comb
from typing import TYPE_CHECKING

from .._config import resolve
from ..exceptions import (
    BoundTooLarge, BudgetExceeded, DimensionMismatch, SumMismatch
)
from ..objects.matrix import Fiber, SemigroupMatrix
from ..objects.move import DecompositionFlags, Move
from ..utils.arithmetic import (
    add, canonical, dot, is_zero, leq, negative_part, norm, positive_part,
    sub, vectors_below
)
from ..utils.double_description import grading_vector
from ..utils.linear_algebra import kernel_lattice

if TYPE_CHECKING:
    from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

    from .._config import SearchConfig
    from ..objects.move import Direction
    from ..utils.types import Vector

_log = logging.getLogger(__name__)


def is_pointed(rows: Sequence[Sequence[int]]) -> bool:
    """Whether ``ker(A)`` meets the nonnegative orthant only in zero.

    Parameters
    ----------
    rows : Sequence[Sequence[:class:`int`]]
        The matrix, row by row.
    """
    if any(not any(column) for column in zip(*rows)):
        return False
    if len(rows) == 1:
        return all(e > 0 for e in rows[0])
    return grading_vector(rows) is not None


def kernel_basis(matrix: SemigroupMatrix) -> List[Vector]:
    """A basis of the lattice ``ker(A) & Z^n``.

    Computed from a Hermite normal form, so it spans every integer
    kernel vector, not only a finite index sublattice.

    Returns
    -------
    List[Tuple[:class:`int`, ...]]
        ``n - rank(A)`` vectors, each in canonical sign.
    """
    basis = [canonical(v) for v in kernel_lattice(matrix.rows)]
    _log.debug("Kernel lattice of rank %d for %s.", len(basis), matrix)
    return basis


@lru_cache(maxsize=4096)
def _fiber_points(
        matrix: SemigroupMatrix,
        target: Vector,
        max_cells: int
) -> Tuple[Vector, ...]:
    n = matrix.n
    columns = matrix.columns
    weights = matrix.grading

    @lru_cache(maxsize=None)
    def _suffixes(index: int, residual: Vector) -> Tuple[Vector, ...]:
        weight = dot(matrix.coefficients, residual)
        if weight < 0:
            return ()

        if index == n - 1:
            k, remainder = divmod(weight, weights[index])
            if remainder or tuple(k * e for e in columns[index]) != residual:
                return ()
            return ((k,),)

        found: List[Vector] = []
        for k in range(weight // weights[index] + 1):
            rest = sub(residual, tuple(k * e for e in columns[index]))
            found.extend((k,) + tail for tail in _suffixes(index + 1, rest))
            if len(found) > max_cells:
                raise BudgetExceeded.from_sizes(
                    "Fiber size", len(found), max_cells
                )
        return tuple(found)

    return _suffixes(0, target)


def enumerate_fiber(
        matrix: SemigroupMatrix,
        target: Union[int, Sequence[int]],
        *,
        config: Optional[SearchConfig] = None
) -> Fiber:
    """Every ``u >= 0`` with ``A u = target``.

    Each point has graded degree ``w.u = y.target`` for the positive
    grading ``w = y.A`` of the matrix, which bounds ``u_j`` by
    ``y.target / w_j``; the last coordinate is then solved for exactly.

    Parameters
    ----------
    matrix : :class:`~msmb.objects.matrix.SemigroupMatrix`
        The matrix ``A``.
    target : Union[:class:`int`, Sequence[:class:`int`]]
        ``t``; a plain integer is accepted for one-row matrices.
    config : Optional[:class:`~msmb._config.SearchConfig`]
        Enumeration caps.

    Raises
    ------
    :class:`~msmb.exceptions.DimensionMismatch`
        ``target`` does not have ``d`` entries.
    :class:`~msmb.exceptions.BudgetExceeded`
        The fiber has more than ``max_cells`` points.

    Returns
    -------
    :class:`~msmb.objects.matrix.Fiber`
        The points in lexicographic order; empty when ``t`` is not in the
        semigroup.
    """
    target = (target,) if isinstance(target, int) else tuple(target)
    if len(target) != matrix.d:
        raise DimensionMismatch(
            f"Target of length {len(target)} for a matrix with {matrix.d} "
            "rows"
        )

    points = _fiber_points(matrix, target, resolve(config).max_cells)
    return Fiber(target, points)


def _bounded_norm(n: int, bound: int) -> Iterator[Vector]:
    """Nonzero ``y >= 0`` of length ``n`` with ``||y|| <= bound``."""
    def _walk(prefix: Vector, left: int) -> Iterator[Vector]:
        if len(prefix) == n:
            if any(prefix):
                yield prefix
            return
        for value in range(left + 1):
            yield from _walk(prefix + (value,), left - value)

    return _walk((), bound)


def enumerate_kernel_ball(
        matrix: SemigroupMatrix,
        bound: int,
        *,
        config: Optional[SearchConfig] = None
) -> List[Move]:
    """The canonical moves of ``ker(A)`` with 1-norm at most ``bound``.

    Raises
    ------
    :class:`~msmb.exceptions.BoundTooLarge`
        The number of candidate positive parts exceeds ``max_cells``.

    Returns
    -------
    List[:class:`~msmb.objects.move.Move`]
        Sorted lexicographically.
    """
    config = resolve(config)
    if bound < 0:
        return []

    cells = comb(bound + matrix.n, matrix.n)
    if cells > config.max_cells:
        raise BoundTooLarge.from_sizes(
            "Kernel ball candidates", cells, config.max_cells
        )

    found = set()
    for plus in _bounded_norm(matrix.n, bound):
        budget = bound - norm(plus)
        fiber = enumerate_fiber(matrix, matrix.apply(plus), config=config)
        for minus in fiber:
            if norm(minus) > budget:
                continue
            if any(p and m for p, m in zip(plus, minus)):
                continue
            found.add(Move(canonical(sub(plus, minus))))

    _log.debug("%d moves of norm at most %d.", len(found), bound)
    return sorted(found)


def applicable(move: Sequence[int], point: Sequence[int]) -> Direction:
    """Directions in which ``move`` keeps ``point`` nonnegative."""
    return Move(move).applicable(point)


def decomposition_predicates(
        z: Sequence[int],
        u: Sequence[int],
        v: Sequence[int]
) -> DecompositionFlags:
    """Classify the decomposition ``z = u + v``.

    Raises
    ------
    :class:`~msmb.exceptions.DimensionMismatch`
        The vectors have different lengths.
    :class:`~msmb.exceptions.SumMismatch`
        ``z != u + v``.
    """
    if not len(z) == len(u) == len(v):
        raise DimensionMismatch(
            f"Vectors of lengths {len(z)}, {len(u)} and {len(v)}"
        )
    if tuple(z) != add(u, v):
        raise SumMismatch.from_vectors(z, u, v)

    shorter = norm(v) < norm(z)
    return DecompositionFlags(
        conformal=(
            positive_part(z) == add(positive_part(u), positive_part(v))
            and negative_part(z) == add(negative_part(u), negative_part(v))
        ),
        semiconformal=all(b >= 0 for a, b in zip(u, v) if a > 0),
        semiconformal_swapped=all(a >= 0 for a, b in zip(u, v) if b > 0),
        pos_distance=leq(positive_part(u), positive_part(z)) and shorter,
        neg_distance=leq(negative_part(u), negative_part(z)) and shorter,
        proper=not is_zero(u) and not is_zero(v)
    )


def split_candidates(
        matrix: SemigroupMatrix,
        bound: Sequence[int],
        *,
        config: Optional[SearchConfig] = None
) -> Iterator[Move]:
    """Every nonzero ``u`` in ``ker(A)`` with ``u+ <= bound``.

    ``u+`` runs over the nonzero vectors below ``bound`` and ``u-`` over
    the points of the fiber of ``A u+`` with support disjoint from it,
    so each such ``u`` is produced exactly once, in lexicographic order
    of ``u+``.
    """
    for plus in vectors_below(tuple(bound)):
        fiber = enumerate_fiber(matrix, matrix.apply(plus), config=config)
        for minus in fiber:
            if any(p and m for p, m in zip(plus, minus)):
                continue
            yield Move(sub(plus, minus))


def fiber_components(points: Sequence[Vector]) -> List[Tuple[Vector, ...]]:
    """Group fiber points into classes of the graph joining two points
    with a common support coordinate.
    """
    parent = list(range(len(points)))

    def _find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: Dict[int, int] = {}
    for index, point in enumerate(points):
        for coordinate, value in enumerate(point):
            if not value:
                continue
            if coordinate in owner:
                a, b = _find(owner[coordinate]), _find(index)
                if a != b:
                    parent[max(a, b)] = min(a, b)
            else:
                owner[coordinate] = index

    groups: Dict[int, List[Vector]] = {}
    for index, point in enumerate(points):
        groups.setdefault(_find(index), []).append(point)
    return [tuple(group) for _, group in sorted(groups.items())]

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from __future__ import annotations

import heapq
import logging
from collections import deque
from functools import lru_cache
from itertools import combinations, product
from math import gcd
from typing import TYPE_CHECKING

from .lattice import (
    enumerate_fiber, fiber_components, kernel_basis, split_candidates
)
from .._config import resolve
from ..exceptions import BudgetExceeded, InvalidInput
from ..objects.matrix import SemigroupMatrix
from ..objects.move import Direction, Move
from ..objects.move_set import MoveSet, MoveSetKind
from ..objects.reduction import MarkovCheck, MarkovDegree
from ..utils.arithmetic import (
    add, canonical, conformal_leq, neg, norm, primitive_canonical,
    sign_compatible, sub
)
from ..utils.linear_algebra import integer_nullspace, rank

if TYPE_CHECKING:
    from typing import (
        Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple,
        Union
    )

    from .._config import SearchConfig
    from ..utils.types import Vector

    Moves = Union[MoveSet, Iterable[Sequence[int]]]

_log = logging.getLogger(__name__)


def as_move_set(
        matrix: SemigroupMatrix,
        moves: Moves,
        kind: MoveSetKind = MoveSetKind.CUSTOM
) -> MoveSet:
    """Accept a :class:`~msmb.objects.move_set.MoveSet` or plain vectors.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        The moves belong to another matrix or leave its kernel.
    """
    if isinstance(moves, MoveSet):
        if moves.matrix.rows != matrix.rows:
            raise InvalidInput("The move set belongs to another matrix.")
        return moves
    return MoveSet.from_vectors(matrix, moves, kind)


def circuits(matrix: SemigroupMatrix) -> MoveSet:
    """The support-minimal elements of the kernel.

    For one row these are the vectors ``(a_j / g) e_i - (a_i / g) e_j``
    with ``g = gcd(a_i, a_j)``. For more rows every column subset of size
    at most ``rank + 1`` with a one-dimensional kernel of full support
    contributes its primitive generator.
    """
    n = matrix.n
    found: Set[Vector] = set()

    if matrix.d == 1:
        a = matrix.entries
        for i, j in combinations(range(n), 2):
            g = gcd(a[i], a[j])
            vector = [0] * n
            vector[i], vector[j] = a[j] // g, -(a[i] // g)
            found.add(canonical(vector))
    else:
        columns = matrix.columns
        for size in range(2, rank(matrix.rows) + 2):
            for subset in combinations(range(n), size):
                sub_rows = [
                    [columns[j][r] for j in subset] for r in range(matrix.d)
                ]
                kernel = integer_nullspace(sub_rows)
                if len(kernel) != 1 or not all(kernel[0]):
                    continue
                vector = [0] * n
                for j, value in zip(subset, kernel[0]):
                    vector[j] = value
                found.add(primitive_canonical(vector))

    return MoveSet.from_vectors(matrix, found, MoveSetKind.CIRCUITS)


def _masks(vector: Sequence[int]) -> Tuple[int, int]:
    plus = minus = 0
    for i, value in enumerate(vector):
        if value > 0:
            plus |= 1 << i
        elif value < 0:
            minus |= 1 << i
    return plus, minus


class _ConformalIndex:
    """Vectors bucketed by sign pattern, for quick lookup of an element
    conformally below a query.
    """

    def __init__(self):
        self.buckets: Dict[Tuple[int, int], List[Vector]] = {}
        self.size = 0

    def add(self, vector: Vector):
        self.buckets.setdefault(_masks(vector), []).append(vector)
        self.size += 1

    def below(self, vector: Sequence[int]) -> Iterator[Vector]:
        plus, minus = _masks(vector)
        for (p, m), members in self.buckets.items():
            if p & ~plus or m & ~minus:
                continue
            for member in members:
                if conformal_leq(member, vector):
                    yield member

    def reduce(self, vector: Vector) -> Vector:
        """Normal form: subtract elements below ``vector`` until none is
        left. Each step shrinks the vector in the conformal order.
        """
        while any(vector):
            for member in self.below(vector):
                vector = sub(vector, member)
                break
            else:
                break
        return vector


@lru_cache(maxsize=256)
def _completion(matrix: SemigroupMatrix, cap: int) -> Tuple[Vector, ...]:
    index = _ConformalIndex()
    elements: List[Vector] = []
    seen: Set[Vector] = set()
    queue: List[Tuple[int, Vector]] = []

    def _push_pairs(new: Vector):
        for old in elements:
            if old == neg(new) or sign_compatible(old, new):
                continue
            total = add(old, new)
            heapq.heappush(queue, (norm(total), total))

    def _insert(vector: Vector):
        if vector in seen:
            return
        _push_pairs(vector)
        seen.add(vector)
        elements.append(vector)
        index.add(vector)
        if len(elements) > cap:
            raise BudgetExceeded.from_sizes(
                "Completion set", len(elements), cap
            )

    for vector in kernel_basis(matrix):
        _insert(vector)
        _insert(neg(vector))

    rounds = 0
    while queue:
        _, candidate = heapq.heappop(queue)
        reduced = index.reduce(candidate)
        if any(reduced):
            _insert(reduced)
        rounds += 1
        if rounds % 10_000 == 0:
            _log.debug(
                "Completion: %d elements, %d pending.",
                len(elements), len(queue)
            )

    minimal = [
        v for v in elements
        if not any(other != v for other in index.below(v))
    ]
    _log.info(
        "Graver basis of %s has %d elements.", matrix, len(minimal) // 2
    )
    return tuple(minimal)


def graver(
        matrix: SemigroupMatrix,
        *,
        config: Optional[SearchConfig] = None
) -> MoveSet:
    """The Graver basis, by completion.

    Starting from a lattice basis and its negatives, sums of pairs with
    opposite signs somewhere are reduced to normal form against the
    current set and kept when nonzero, until no pair produces anything
    new. Pairs without a sign conflict always reduce to zero and are
    skipped. Candidates are processed by increasing norm and the result
    is filtered to its conformally minimal elements. Results are cached
    per matrix.

    Raises
    ------
    :class:`~msmb.exceptions.BudgetExceeded`
        More than ``max_graver`` elements were generated.
    """
    vectors = _completion(matrix, resolve(config).max_graver)
    return MoveSet.from_vectors(matrix, vectors, MoveSetKind.GRAVER)


def indispensables(
        matrix: SemigroupMatrix,
        *,
        config: Optional[SearchConfig] = None
) -> MoveSet:
    """Graver elements without a proper semi-conformal decomposition.

    ``z = u + v`` is semi-conformal exactly when ``u+ <= z+``, so ``z`` is
    indispensable when ``z`` itself is the only kernel element whose
    positive part lies below ``z+``.
    """
    found = []
    for z in graver(matrix, config=config):
        if all(
            u == z
            for u in split_candidates(matrix, z.plus, config=config)
        ):
            found.append(z)

    return MoveSet.from_vectors(matrix, found, MoveSetKind.INDISPENSABLE)


def _reachable(
        start: Vector,
        moves: Sequence[Move]
) -> Iterator[Vector]:
    """Breadth-first walk from ``start``; every move keeps the fiber."""
    visited = {start}
    frontier = deque([start])
    while frontier:
        point = frontier.popleft()
        yield point
        for move in moves:
            directions = move.applicable(point)
            for direction in (Direction.PLUS, Direction.MINUS):
                if direction not in directions:
                    continue
                following = move.apply(point, direction)
                if following not in visited:
                    visited.add(following)
                    frontier.append(following)


def _connects(start: Vector, goal: Vector, moves: Sequence[Move]) -> bool:
    return any(point == goal for point in _reachable(start, moves))


def _exhaustive_targets(
        matrix: SemigroupMatrix,
        bound: int
) -> Iterator[Vector]:
    if matrix.d == 1:
        for t in range(1, bound + 1):
            yield (t,)
        return

    seen: Set[Vector] = set()
    for size in range(1, bound + 1):
        for combo in product(range(size + 1), repeat=matrix.n):
            if sum(combo) != size:
                continue
            target = matrix.apply(combo)
            if target not in seen:
                seen.add(target)
                yield target


def verify_markov(
        matrix: SemigroupMatrix,
        moves: Moves,
        *,
        exhaustive_bound: Optional[int] = None,
        config: Optional[SearchConfig] = None
) -> MarkovCheck:
    """Decide whether ``moves`` is a Markov basis.

    For each Graver element ``g`` the moves must connect ``g+`` to ``g-``
    inside their common fiber. Every difference of two fiber points is a
    conformal sum of Graver elements, and a walk for each summand can be
    translated by the remaining nonnegative part, so these fibers are
    enough.

    Parameters
    ----------
    matrix : :class:`~msmb.objects.matrix.SemigroupMatrix`
        The matrix ``A``.
    moves : Union[:class:`~msmb.objects.move_set.MoveSet`, Iterable]
        The candidate basis.
    exhaustive_bound : Optional[:class:`int`]
        Also check every fiber whose target is ``t <= bound`` (one row)
        or ``A u`` with ``||u|| <= bound``, in full.
    config : Optional[:class:`~msmb._config.SearchConfig`]
        Enumeration caps.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        Some move is not in ``ker(A)``.
    """
    basis = as_move_set(matrix, moves)
    for g in graver(matrix, config=config):
        if not _connects(g.plus, g.minus, basis.moves):
            _log.debug("%s does not connect the fiber of %s.", basis, g)
            return MarkovCheck(False, g, matrix.apply(g.plus))

    if exhaustive_bound is not None:
        for target in _exhaustive_targets(matrix, exhaustive_bound):
            points = enumerate_fiber(matrix, target, config=config).points
            if len(points) < 2:
                continue
            reached = set(_reachable(points[0], basis.moves))
            for point in points:
                if point not in reached:
                    return MarkovCheck(
                        False, Move(sub(point, points[0])), target
                    )

    return MarkovCheck(True)


def markov_degrees(
        matrix: SemigroupMatrix,
        *,
        config: Optional[SearchConfig] = None
) -> Tuple[MarkovDegree, ...]:
    """The fibers that need minimal generators.

    Two points of a fiber are joined by moves of smaller degree exactly
    when a chain of points with pairwise common support connects them.
    Every minimal generator lives in a fiber ``A g+`` of a Graver element
    ``g``; those with more than one class are returned, ordered by
    degree.
    """
    targets = {matrix.apply(g.plus) for g in graver(matrix, config=config)}

    degrees = []
    for target in sorted(targets, key=lambda t: (matrix.weight(t), t)):
        fiber = enumerate_fiber(matrix, target, config=config)
        components = fiber_components(fiber.points)
        if len(components) > 1:
            degrees.append(MarkovDegree(target, tuple(components)))

    return tuple(degrees)


def _spanning_trees(k: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    edges = list(combinations(range(k), 2))
    for chosen in combinations(edges, k - 1):
        parent = list(range(k))

        def _find(i: int) -> int:
            while parent[i] != i:
                i = parent[i]
            return i

        for a, b in chosen:
            ra, rb = _find(a), _find(b)
            if ra == rb:
                break
            parent[rb] = ra
        else:
            yield chosen


def _degree_choices(degree: MarkovDegree) -> List[Tuple[Vector, ...]]:
    """Every way to pick the generators of one degree."""
    components = degree.components
    choices = []
    for tree in _spanning_trees(len(components)):
        options = [
            [
                canonical(sub(x, y))
                for x in components[i] for y in components[j]
            ]
            for i, j in tree
        ]
        choices.extend(product(*options))
    return choices


def minimal_markov_bases(
        matrix: SemigroupMatrix,
        *,
        config: Optional[SearchConfig] = None
) -> List[MoveSet]:
    """Every minimal Markov basis.

    In each degree a minimal basis must join the classes of its fiber
    with as few moves as possible, so it picks a spanning tree on the
    classes and, for every edge, one point of each end class. All
    minimal bases have the same size.

    Raises
    ------
    :class:`~msmb.exceptions.BudgetExceeded`
        More than ``max_bases`` distinct bases exist.
    """
    config = resolve(config)
    per_degree = [
        sorted({frozenset(c) for c in _degree_choices(d)}, key=sorted)
        for d in markov_degrees(matrix, config=config)
    ]

    # moves of different degrees never coincide
    total = 1
    for choices in per_degree:
        total *= len(choices)
    if total > config.max_bases:
        raise BudgetExceeded.from_sizes(
            "Number of minimal Markov bases", total, config.max_bases
        )

    bases = {
        MoveSet.from_vectors(
            matrix,
            [move for part in combo for move in part],
            MoveSetKind.MARKOV
        )
        for combo in product(*per_degree)
    }
    result = sorted(bases, key=lambda b: b.moves)
    _log.info(
        "%s has %d minimal Markov bases of size %d.",
        matrix, len(result), len(result[0]) if result else 0
    )
    return result


def universal_markov(
        matrix: SemigroupMatrix,
        *,
        config: Optional[SearchConfig] = None
) -> MoveSet:
    """The union of all minimal Markov bases: every difference of two
    points lying in different classes of a degree.
    """
    moves = set()
    for degree in markov_degrees(matrix, config=config):
        for i, j in combinations(range(len(degree.components)), 2):
            for x in degree.components[i]:
                for y in degree.components[j]:
                    moves.add(canonical(sub(x, y)))

    return MoveSet.from_vectors(matrix, moves, MoveSetKind.UNIVERSAL_MARKOV)


def minimal_basis_size(
        matrix: SemigroupMatrix,
        *,
        config: Optional[SearchConfig] = None
) -> int:
    """The common cardinality of the minimal Markov bases."""
    return sum(
        d.generators for d in markov_degrees(matrix, config=config)
    )


def require_minimal_markov(
        matrix: SemigroupMatrix,
        moves: Moves,
        *,
        config: Optional[SearchConfig] = None
) -> MoveSet:
    """Validate that ``moves`` is a minimal Markov basis of ``matrix``.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        It is not a Markov basis, or has more elements than a minimal one.
    """
    basis = as_move_set(matrix, moves, MoveSetKind.MARKOV)
    check = verify_markov(matrix, basis, config=config)
    if not check:
        raise InvalidInput(
            f"Not a Markov basis: {check.witness} is not connected."
        )

    size = minimal_basis_size(matrix, config=config)
    if len(basis) != size:
        raise InvalidInput(
            f"Not a minimal Markov basis: {len(basis)} moves, minimal "
            f"bases have {size}."
        )
    return basis

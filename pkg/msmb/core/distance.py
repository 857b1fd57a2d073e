# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Distance reduction in the 1-norm.

A move ``u`` reduces the distance of ``z`` when it can be applied to
``z+`` or to ``z-`` and brings the two points strictly closer. Only the
pair ``(z+, z-)`` matters: two fiber points ``x, y`` with ``x - y = z``
differ from it by a common nonnegative part.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from .bases import as_move_set, circuits, graver
from .lattice import split_candidates
from .._config import resolve
from ..exceptions import InvalidInput, NotReducing, StuckError
from ..objects.move import Direction, Move
from ..objects.move_set import MoveSet, MoveSetKind
from ..objects.reduction import (
    CLAUSES, IrreducibleSets, ReducingCheck, ReductionWitness, Requirement,
    Side, Step, UniversalComparison, UniversalReducing
)
from ..utils.arithmetic import add, canonical, leq, norm, sub
from ..utils.hitting_sets import minimal_hitting_sets

if TYPE_CHECKING:
    from typing import (
        Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union
    )

    from .._config import SearchConfig
    from ..objects.matrix import SemigroupMatrix
    from ..utils.types import Vector

    Moves = Union[MoveSet, Iterable[Sequence[int]]]

_log = logging.getLogger(__name__)


def _ordered(moves: Iterable[Sequence[int]]) -> List[Move]:
    return sorted({Move(canonical(m)) for m in moves})


def _witnesses(
        moves: Sequence[Move],
        z: Move,
        side: Optional[Side] = None
) -> Iterator[ReductionWitness]:
    plus, minus = z.plus, z.minus
    before = z.norm

    for u in moves:
        for clause_side, step in CLAUSES:
            if side is not None and clause_side is not side:
                continue

            point = plus if clause_side is Side.POSITIVE else minus
            needed = u.minus if step is Step.ADD else u.plus
            if not leq(needed, point):
                continue

            # Adding on z+ and subtracting on z- both move z by +u.
            if (clause_side is Side.POSITIVE) == (step is Step.ADD):
                after = norm(add(z, u))
            else:
                after = norm(sub(z, u))

            if after < before:
                yield ReductionWitness(
                    z, u, clause_side, step, before, after
                )


def reduces_element(
        moves: Moves,
        z: Sequence[int]
) -> Optional[ReductionWitness]:
    """The first way a move of ``moves`` reduces the distance of ``z``.

    Moves are scanned in canonical order and, for each, the four clauses
    in the order: added to ``z+``, subtracted from ``z+``, added to
    ``z-``, subtracted from ``z-``.

    Parameters
    ----------
    moves : Union[:class:`~msmb.objects.move_set.MoveSet`, Iterable]
        The candidate reducers.
    z : Sequence[:class:`int`]
        A kernel element.

    Returns
    -------
    Optional[:class:`~msmb.objects.reduction.ReductionWitness`]
        ``None`` when no move reduces ``z``.
    """
    return next(_witnesses(_ordered(moves), Move(z)), None)


def strongly_reduces_element(
        moves: Moves,
        z: Sequence[int]
) -> Optional[Tuple[ReductionWitness, ReductionWitness]]:
    """A reducer applied to ``z+`` and one applied to ``z-``, possibly
    different, or ``None`` when either side has none.
    """
    ordered = _ordered(moves)
    z = Move(z)
    positive = next(_witnesses(ordered, z, Side.POSITIVE), None)
    if positive is None:
        return None
    negative = next(_witnesses(ordered, z, Side.NEGATIVE), None)
    if negative is None:
        return None
    return positive, negative


def _check(
        elements: Iterable[Move],
        moves: Moves,
        strong: bool
) -> ReducingCheck:
    ordered = _ordered(moves)
    for z in elements:
        if strong:
            found = all(
                next(_witnesses(ordered, z, side), None) is not None
                for side in Side
            )
        else:
            found = next(_witnesses(ordered, z), None) is not None

        if not found:
            return ReducingCheck(False, z)
    return ReducingCheck(True)


def is_distance_reducing(
        matrix: SemigroupMatrix,
        moves: Moves,
        *,
        config: Optional[SearchConfig] = None
) -> ReducingCheck:
    """Whether ``moves`` reduces the distance of every pair of points in
    every fiber. It suffices to test the Graver basis; ``z`` and ``-z``
    are reduced together, so canonical elements are enough.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        Some move is not in ``ker(A)``.
    """
    basis = as_move_set(matrix, moves)
    return _check(graver(matrix, config=config), basis, strong=False)


def is_strongly_distance_reducing(
        matrix: SemigroupMatrix,
        moves: Moves,
        *,
        config: Optional[SearchConfig] = None
) -> ReducingCheck:
    """Like :func:`is_distance_reducing`, with a reducer on both sides."""
    basis = as_move_set(matrix, moves)
    return _check(graver(matrix, config=config), basis, strong=True)


def check_reduces_circuits(
        matrix: SemigroupMatrix,
        moves: Moves
) -> ReducingCheck:
    """Whether ``moves`` reduces the distance of every circuit."""
    basis = as_move_set(matrix, moves)
    return _check(circuits(matrix), basis, strong=False)


def greedy_connect(
        matrix: SemigroupMatrix,
        moves: Moves,
        x: Sequence[int],
        y: Sequence[int],
        *,
        config: Optional[SearchConfig] = None
) -> Tuple[Move, ...]:
    """Walk from ``x`` to ``y`` with a distance reducing move set.

    Each step applies a move to the current ``x`` or the current ``y``,
    whichever gives the smallest remaining distance; ties go to the
    earlier move in canonical order, then to the order ``x`` add, ``x``
    subtract, ``y`` add, ``y`` subtract. The two half walks are joined
    at the end.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        The points are negative or lie in different fibers.
    :class:`~msmb.exceptions.NotReducing`
        ``moves`` is not distance reducing.
    :class:`~msmb.exceptions.StuckError`
        No step reduces the distance.

    Returns
    -------
    Tuple[:class:`~msmb.objects.move.Move`, ...]
        Signed steps ``s_1, ..., s_k`` with ``x + s_1 + ... + s_k = y``,
        each intermediate point nonnegative.
    """
    x, y = tuple(x), tuple(y)
    if any(e < 0 for e in x + y):
        raise InvalidInput("Fiber points must be nonnegative.")
    if matrix.apply(x) != matrix.apply(y):
        raise InvalidInput(f"{x} and {y} lie in different fibers.")

    basis = as_move_set(matrix, moves)
    check = is_distance_reducing(matrix, basis, config=config)
    if not check:
        raise NotReducing(
            f"The moves do not reduce the distance of {check.witness}.",
            check.witness
        )

    forward: List[Move] = []
    backward: List[Move] = []
    while x != y:
        distance = norm(sub(x, y))
        best: Optional[Tuple[int, bool, Vector]] = None

        for u in basis:
            for on_x, point in ((True, x), (False, y)):
                directions = u.applicable(point)
                for direction in (Direction.PLUS, Direction.MINUS):
                    if direction not in directions:
                        continue
                    step = u if direction is Direction.PLUS else -u
                    moved = add(point, step)
                    after = norm(sub(moved, y) if on_x else sub(x, moved))
                    if after < distance and (
                            best is None or after < best[0]
                    ):
                        best = (after, on_x, step)

        if best is None:
            raise StuckError(f"No move brings {x} closer to {y}.")

        _, on_x, step = best
        if on_x:
            x = add(x, step)
            forward.append(Move(step))
        else:
            y = add(y, step)
            backward.append(Move(step))

    path = tuple(forward) + tuple(-s for s in reversed(backward))
    _log.debug("Connected in %d steps.", len(path))
    return path


def _distance_splits(
        matrix: SemigroupMatrix,
        z: Move,
        allowed: Optional[Set[Vector]],
        config: Optional[SearchConfig]
) -> bool:
    """Whether ``z`` has a positive distance decomposition ``z = u + v``
    with ``u+ <= z+`` and ``||v|| < ||z||``.
    """
    for u in split_candidates(matrix, z.plus, config=config):
        if u == z:
            continue
        if allowed is not None and canonical(u) not in allowed:
            continue
        if norm(sub(z, u)) < z.norm:
            return True
    return False


def irreducible_sets(
        matrix: SemigroupMatrix,
        *,
        graver_decompositions: bool = False,
        config: Optional[SearchConfig] = None
) -> IrreducibleSets:
    """The distance irreducible elements of ``A``.

    Every element without a positive distance decomposition lies in the
    Graver basis, so the signed Graver elements are filtered. An element
    ``z`` has no negative distance decomposition exactly when ``-z`` has
    no positive one.

    Parameters
    ----------
    matrix : :class:`~msmb.objects.matrix.SemigroupMatrix`
        The matrix ``A``.
    graver_decompositions : :class:`bool`
        Only accept decompositions whose ``u`` is a Graver element.
        |default| ``False``
    config : Optional[:class:`~msmb._config.SearchConfig`]
        Enumeration caps.
    """
    basis = graver(matrix, config=config)
    allowed = set(basis.moves) if graver_decompositions else None

    d_plus = tuple(sorted(
        z for z in basis.signed()
        if not _distance_splits(matrix, z, allowed, config)
    ))
    d_minus = tuple(sorted(-z for z in d_plus))

    positive = set(d_plus)
    both = [z for z in basis if z in positive and -z in positive]
    either = [z for z in basis if z in positive or -z in positive]

    return IrreducibleSets(
        d_plus,
        d_minus,
        MoveSet.from_vectors(matrix, both, MoveSetKind.IRREDUCIBLE),
        MoveSet.from_vectors(matrix, either, MoveSetKind.WEAKLY_IRREDUCIBLE)
    )


def default_bound(
        matrix: SemigroupMatrix,
        *,
        config: Optional[SearchConfig] = None
) -> int:
    """Twice the largest Graver norm. No move of larger norm reduces the
    distance of a Graver element.
    """
    return 2 * max(g.norm for g in graver(matrix, config=config))


def reducers_of(
        matrix: SemigroupMatrix,
        g: Sequence[int],
        *,
        bound: Optional[int] = None,
        side: Optional[Side] = None,
        config: Optional[SearchConfig] = None
) -> MoveSet:
    """Every move of norm at most ``bound`` that on its own reduces the
    distance of ``g``.

    A reducer has ``u+`` or ``u-`` below ``g+`` or ``g-``, so the
    candidates are the kernel elements with positive part below one of
    the two, in both signs.

    Parameters
    ----------
    matrix : :class:`~msmb.objects.matrix.SemigroupMatrix`
        The matrix ``A``.
    g : Sequence[:class:`int`]
        The element to reduce.
    bound : Optional[:class:`int`]
        Norm cap; twice the largest Graver norm when omitted.
    side : Optional[:class:`~msmb.objects.reduction.Side`]
        Only count reductions applied to this side of ``g``.
    config : Optional[:class:`~msmb._config.SearchConfig`]
        Enumeration caps.
    """
    g = Move(g)
    if bound is None:
        bound = default_bound(matrix, config=config)

    candidates = set()
    for part in (g.plus, g.minus):
        for u in split_candidates(matrix, part, config=config):
            if u.norm <= bound:
                candidates.add(u.canonical())

    found = [
        u for u in sorted(candidates)
        if next(_witnesses([u], g, side), None) is not None
    ]
    return MoveSet.from_vectors(matrix, found, MoveSetKind.REDUCERS)


def _universal(
        matrix: SemigroupMatrix,
        core: MoveSet,
        requirements: List[Requirement],
        strong: bool,
        bound: int,
        config: SearchConfig
) -> UniversalReducing:
    family = [r.candidates for r in requirements]
    hitting = minimal_hitting_sets(
        family, limit=config.max_bases, max_branches=config.max_branches
    )

    bases = sorted(
        (
            core.union(chosen).with_kind(MoveSetKind.DISTANCE_REDUCING)
            for chosen in hitting
        ),
        key=lambda b: b.moves
    )
    union = core.union(m for b in bases for m in b)
    _log.info(
        "%d minimal %sdistance reducing Markov bases for %s.",
        len(bases), "strongly " if strong else "", matrix
    )

    return UniversalReducing(
        strong,
        core,
        tuple(requirements),
        tuple(bases),
        union.with_kind(MoveSetKind.UNIVERSAL_REDUCING),
        bound
    )


def universal_distance_reducing(
        matrix: SemigroupMatrix,
        *,
        bound: Optional[int] = None,
        config: Optional[SearchConfig] = None
) -> UniversalReducing:
    """All minimal distance reducing Markov bases and their union.

    Every such basis contains the distance irreducible elements ``D``.
    Each Graver element ``D`` fails to reduce must be reduced by one of
    its reducers, so the minimal bases are ``D`` together with a minimal
    hitting set of those reducer sets.

    Raises
    ------
    :class:`~msmb.exceptions.BudgetExceeded`
        Too many minimal bases.
    """
    config = resolve(config)
    if bound is None:
        bound = default_bound(matrix, config=config)

    core = irreducible_sets(matrix, config=config).d
    requirements = []
    for g in graver(matrix, config=config):
        if reduces_element(core, g) is not None:
            continue
        candidates = reducers_of(matrix, g, bound=bound, config=config)
        requirements.append(Requirement(g, None, candidates.moves))

    return _universal(matrix, core, requirements, False, bound, config)


def universal_strongly_distance_reducing(
        matrix: SemigroupMatrix,
        *,
        bound: Optional[int] = None,
        config: Optional[SearchConfig] = None
) -> UniversalReducing:
    """All minimal strongly distance reducing Markov bases and their
    union. The core is ``D^w`` and each side of each Graver element it
    leaves unreduced becomes a separate requirement.
    """
    config = resolve(config)
    if bound is None:
        bound = default_bound(matrix, config=config)

    core = irreducible_sets(matrix, config=config).d_weak
    ordered = list(core.moves)
    requirements = []
    for g in graver(matrix, config=config):
        for side in Side:
            if next(_witnesses(ordered, g, side), None) is not None:
                continue
            candidates = reducers_of(
                matrix, g, bound=bound, side=side, config=config
            )
            requirements.append(Requirement(g, side, candidates.moves))

    return _universal(matrix, core, requirements, True, bound, config)


def compare_universal(
        matrix: SemigroupMatrix,
        *,
        bound: Optional[int] = None,
        config: Optional[SearchConfig] = None
) -> UniversalComparison:
    """Both universal bases and how they relate, as observed."""
    reducing = universal_distance_reducing(
        matrix, bound=bound, config=config
    ).union
    strong = universal_strongly_distance_reducing(
        matrix, bound=bound, config=config
    ).union
    return UniversalComparison(
        reducing,
        strong,
        reducing.issubset(strong),
        strong.issubset(reducing)
    )


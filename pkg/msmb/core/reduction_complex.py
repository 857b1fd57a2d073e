# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Norms for which a Markov basis is distance reducing.

A labelling set ``S`` of kernel vectors gets one variable ``n_s`` per
vector, its hypothetical norm. Linear dependencies among ``S`` give the
triangle inequalities of the metric cone. A linear relation between the
basis moves and a vector of ``S`` gives one strict inequality per move
that can shorten it; a norm is distance reducing only if it satisfies
at least one inequality of every relation, so the distance reducing
complex is a union of cones, one per choice of inequalities.
"""

from __future__ import annotations

import logging
from itertools import combinations, product
from math import gcd
from typing import TYPE_CHECKING

from .._config import resolve
from ..exceptions import GuardExceeded, InvalidInput, NonConvergence
from ..objects.cone import (
    Cone, IneqSystem, Inequality, MatroidCircuit, ReductionSet, Relation
)
from ..objects.move import Move
from ..utils import double_description
from ..utils.arithmetic import add, canonical, is_zero, primitive_canonical
from ..utils.linear_algebra import dependence, rank

if TYPE_CHECKING:
    from typing import (
        Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
    )

    from .._config import SearchConfig
    from ..utils.types import Vector

_log = logging.getLogger(__name__)


def _labels(vectors: Iterable[Sequence[int]]) -> Tuple[Move, ...]:
    """Canonical moves in the given order, duplicates dropped."""
    seen: List[Move] = []
    for vector in vectors:
        move = Move(canonical(vector))
        if is_zero(move):
            raise InvalidInput("The zero vector cannot label a norm.")
        if move not in seen:
            seen.append(move)
    return tuple(seen)


def _guard(labels: Sequence[Move], config: SearchConfig):
    if len(labels) > config.max_vectors:
        raise GuardExceeded.from_sizes(
            "Number of labelled vectors", len(labels), config.max_vectors
        )


def extreme_rays(
        system: IneqSystem,
        *,
        config: Optional[SearchConfig] = None
) -> Tuple[Vector, ...]:
    """Primitive extreme rays of the closure of ``system`` intersected
    with the nonnegative orthant, sorted.

    Raises
    ------
    :class:`~msmb.exceptions.DimensionGuard`
        Too many variables or inequalities.
    """
    config = resolve(config)
    return tuple(double_description.extreme_rays(
        system.rows,
        system.dimension,
        max_variables=config.max_variables,
        max_inequalities=config.max_inequalities
    ))


def _cone(
        system: IneqSystem,
        config: SearchConfig,
        *,
        projected: bool = False,
        transversal: Tuple[int, ...] = ()
) -> Cone:
    rays = extreme_rays(system, config=config)
    interior = None
    if rays:
        candidate = tuple(sum(column) for column in zip(*rays))
        if system.satisfied_by(candidate):
            interior = candidate
    return Cone(system, rays, interior, projected, transversal)


def matroid_circuits_with_coeffs(
        vectors: Sequence[Sequence[int]],
        *,
        config: Optional[SearchConfig] = None
) -> List[MatroidCircuit]:
    """Minimal linearly dependent subsets of ``vectors``.

    A subset is a circuit exactly when its relations form a single line
    whose generator uses every member.

    Raises
    ------
    :class:`~msmb.exceptions.GuardExceeded`
        More than ``max_vectors`` vectors.

    Returns
    -------
    List[:class:`~msmb.objects.cone.MatroidCircuit`]
        By size, then lexicographically by indices.
    """
    config = resolve(config)
    labels = _labels(vectors)
    _guard(labels, config)

    found = []
    top = rank(labels) + 1
    for size in range(2, top + 1):
        for subset in combinations(range(len(labels)), size):
            relations = dependence([labels[i] for i in subset])
            if len(relations) != 1 or not all(relations[0]):
                continue
            found.append(
                MatroidCircuit(subset, primitive_canonical(relations[0]))
            )

    _log.debug("%d circuits among %d vectors.", len(found), len(labels))
    return found


def _triangle_inequalities(
        labels: Sequence[Move],
        config: SearchConfig
) -> Tuple[Inequality, ...]:
    inequalities = []
    for circuit in matroid_circuits_with_coeffs(labels, config=config):
        weights = circuit.weights
        name = ",".join(str(i + 1) for i in circuit.indices)
        for position, index in enumerate(circuit.indices):
            coefficients = [0] * len(labels)
            for other, weight in zip(circuit.indices, weights):
                coefficients[other] += weight
            coefficients[index] -= 2 * weights[position]
            inequalities.append(Inequality(
                tuple(coefficients), provenance=f"triangle {name}"
            ))
    return tuple(inequalities)


def metric_cone(
        vectors: Sequence[Sequence[int]],
        *,
        config: Optional[SearchConfig] = None
) -> Cone:
    """The cone of norm assignments allowed by the triangle inequality.

    A circuit ``sum c_k s_k = 0`` bounds each ``|c_i| n_i`` by the sum
    of the other ``|c_j| n_j``.
    """
    config = resolve(config)
    labels = _labels(vectors)
    _guard(labels, config)

    system = IneqSystem(labels, _triangle_inequalities(labels, config))
    cone = _cone(system, config)
    _log.info(
        "Metric cone over %d vectors has %d rays.", len(labels),
        len(cone.rays)
    )
    return cone


def _target(
        w: Vector,
        index: Dict[Vector, int],
        labels: Sequence[Move]
) -> Optional[Tuple[int, int]]:
    """``(k, m)`` with ``w == m * labels[k]``, if ``w`` is on the line of
    some label.
    """
    k = index.get(primitive_canonical(w))
    if k is None:
        return None

    s = labels[k]
    pivot = next(p for p, e in enumerate(s) if e)
    m, remainder = divmod(w[pivot], s[pivot])
    if remainder or tuple(m * e for e in s) != w:
        return None
    return k, m


def _combinations(
        basis: Sequence[Move],
        coeff_bound: int
) -> Iterator[Tuple[Tuple[int, ...], Vector]]:
    """Primitive ``alpha`` with at least two nonzero entries and first
    nonzero entry positive, with ``sum alpha_b b``.
    """
    span = range(-coeff_bound, coeff_bound + 1)
    for alpha in product(span, repeat=len(basis)):
        nonzero = [a for a in alpha if a]
        if len(nonzero) < 2 or nonzero[0] < 0:
            continue
        g = 0
        for a in nonzero:
            g = gcd(g, a)
        if g != 1:
            continue

        w = tuple(0 for _ in basis[0])
        for a, b in zip(alpha, basis):
            if a:
                w = add(w, tuple(a * e for e in b))
        if not is_zero(w):
            yield alpha, w


def _reduced(
        alpha: Tuple[int, ...],
        position: int,
        basis: Sequence[Move]
) -> Vector:
    """``sum alpha'_b b`` after moving ``alpha_b`` one step towards zero."""
    step = 1 if alpha[position] > 0 else -1
    b = basis[position]
    w = tuple(0 for _ in b)
    for a, move in zip(alpha, basis):
        if a:
            w = add(w, tuple(a * e for e in move))
    return tuple(e - step * x for e, x in zip(w, b))


def _check_basis(basis: Sequence[Move], labels: Sequence[Move]):
    missing = [b for b in basis if b not in labels]
    if missing:
        raise InvalidInput(
            f"The labelling set does not contain the basis moves {missing}."
        )


def b_reduction_closure(
        basis: Sequence[Sequence[int]],
        initial: Sequence[Sequence[int]],
        *,
        coeff_bound: Optional[int] = None,
        config: Optional[SearchConfig] = None
) -> Tuple[Move, ...]:
    """Close ``initial`` under reductions by ``basis``.

    Every relation ``sum alpha_b b == m s`` with ``s`` in the set and
    ``|alpha_b| <= coeff_bound`` is reduced by each of its moves; a
    primitive vector on the line of the reduced sum is appended when no
    label lies on it, until nothing changes.

    Parameters
    ----------
    basis : Sequence[Sequence[:class:`int`]]
        A Markov basis ``B``.
    initial : Sequence[Sequence[:class:`int`]]
        The starting labels, containing ``B``.
    coeff_bound : Optional[:class:`int`]
        Coefficient bound; ``config.coeff_bound`` when omitted.
    config : Optional[:class:`~msmb._config.SearchConfig`]
        Caps.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        ``initial`` does not contain the basis.
    :class:`~msmb.exceptions.NonConvergence`
        More than ``max_closure_additions`` vectors were added.

    Returns
    -------
    Tuple[:class:`~msmb.objects.move.Move`, ...]
        ``initial`` followed by the added vectors, in the order they were
        found. The order fixes the variable numbering.
    """
    config = resolve(config)
    bound = coeff_bound if coeff_bound is not None else config.coeff_bound
    moves = _labels(basis)
    labels = list(_labels(initial))
    _check_basis(moves, labels)

    relations = list(_combinations(moves, bound))
    added = 0
    changed = True
    while changed:
        changed = False
        index = {primitive_canonical(s): k for k, s in enumerate(labels)}
        for alpha, w in relations:
            if _target(w, index, labels) is None:
                continue

            for position, a in enumerate(alpha):
                if not a:
                    continue
                reduced = _reduced(alpha, position, moves)
                if is_zero(reduced):
                    continue

                line = primitive_canonical(reduced)
                if line in index:
                    continue

                labels.append(Move(line))
                index[line] = len(labels) - 1
                added += 1
                changed = True
                _log.debug("Closure adds %s.", line)
                if added > config.max_closure_additions:
                    raise NonConvergence.from_sizes(
                        "Vectors added by the closure", added,
                        config.max_closure_additions
                    )

    return tuple(labels)


def reduction_inequality_sets(
        basis: Sequence[Sequence[int]],
        labels: Sequence[Sequence[int]],
        *,
        coeff_bound: Optional[int] = None,
        projected: bool = False,
        config: Optional[SearchConfig] = None
) -> List[ReductionSet]:
    """The reduction inequalities of every relation, one set per
    relation.

    Reducing ``sum alpha_b b == m s`` by ``b`` gives ``m' s'`` and the
    strict inequality ``|m| n_s > |m'| n_s'``; a reduction to zero gives
    ``n_s > 0``.

    Parameters
    ----------
    basis : Sequence[Sequence[:class:`int`]]
        A Markov basis ``B``.
    labels : Sequence[Sequence[:class:`int`]]
        The labelling set ``S``, variable ``k`` standing for
        ``labels[k]``.
    coeff_bound : Optional[:class:`int`]
        Coefficient bound of the relations.
    projected : :class:`bool`
        Drop reductions whose result has no label instead of requiring
        ``S`` to be closed.
        |default| ``False``
    config : Optional[:class:`~msmb._config.SearchConfig`]
        Caps.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        ``S`` does not contain ``B``, or is not closed under reductions
        and ``projected`` is off.

    Returns
    -------
    List[:class:`~msmb.objects.cone.ReductionSet`]
        Nonempty sets, by target index.
    """
    config = resolve(config)
    bound = coeff_bound if coeff_bound is not None else config.coeff_bound
    moves = _labels(basis)
    names = _labels(labels)
    _check_basis(moves, names)

    index = {primitive_canonical(s): k for k, s in enumerate(names)}
    found = []
    for alpha, w in _combinations(moves, bound):
        target = _target(w, index, names)
        if target is None:
            continue
        k, m = target

        inequalities = []
        reducers = []
        for position, a in enumerate(alpha):
            if not a:
                continue

            coefficients = [0] * len(names)
            coefficients[k] += abs(m)
            reduced = _reduced(alpha, position, moves)
            if not is_zero(reduced):
                result = _target(reduced, index, names)
                if result is None:
                    if projected:
                        continue
                    raise InvalidInput(
                        f"The labels are not closed: {reduced} has no "
                        "label. Close them with b_reduction_closure first."
                    )
                other, m_other = result
                coefficients[other] -= abs(m_other)

            inequalities.append(Inequality(
                tuple(coefficients),
                strict=True,
                provenance=f"reduction of {names[k]} by {moves[position]}"
            ))
            reducers.append(names.index(moves[position]))

        if inequalities:
            found.append(ReductionSet(
                Relation(alpha, names[k], m), k, tuple(inequalities),
                tuple(reducers)
            ))

    found.sort(key=lambda s: s.target_index)
    _log.debug("%d reduction inequality sets.", len(found))
    return found


def distance_reducing_complex(
        basis: Sequence[Sequence[int]],
        labels: Sequence[Sequence[int]],
        *,
        coeff_bound: Optional[int] = None,
        projected: bool = False,
        config: Optional[SearchConfig] = None
) -> List[Cone]:
    """The cones of the distance reducing complex.

    Unless ``projected``, ``labels`` is first closed under reductions.
    Each transversal picks one inequality from every reduction set; its
    strict inequalities are added to the metric cone and the cone is kept
    when it has interior points.

    Raises
    ------
    :class:`~msmb.exceptions.GuardExceeded`
        Too many labels, or more than ``max_bases`` transversals.

    Returns
    -------
    List[:class:`~msmb.objects.cone.Cone`]
        Distinct cones, in transversal order.
    """
    config = resolve(config)
    if not projected:
        labels = b_reduction_closure(
            basis, labels, coeff_bound=coeff_bound, config=config
        )
    names = _labels(labels)
    _guard(names, config)

    sets = reduction_inequality_sets(
        basis, names, coeff_bound=coeff_bound, projected=projected,
        config=config
    )

    total = 1
    for reduction in sets:
        total *= len(reduction)
    if total > config.max_bases:
        raise GuardExceeded.from_sizes(
            "Number of transversals", total, config.max_bases
        )

    metric = IneqSystem(names, _triangle_inequalities(names, config))
    cones: List[Cone] = []
    seen = set()
    for choice in product(*(range(len(s)) for s in sets)):
        chosen = tuple(
            s.inequalities[c] for s, c in zip(sets, choice)
        )
        system = metric.union(IneqSystem(names, chosen))
        transversal = tuple(s.reducers[c] for s, c in zip(sets, choice))
        cone = _cone(
            system, config, projected=projected, transversal=transversal
        )
        if not cone.is_open_nonempty or cone.rays in seen:
            continue
        seen.add(cone.rays)
        cones.append(cone)

    _log.info(
        "%d cones from %d transversals of %d reduction sets.",
        len(cones), total, len(sets)
    )
    return cones


def intersect_cones(
        first: Cone,
        second: Cone,
        *,
        config: Optional[SearchConfig] = None
) -> Cone:
    """The cone cut out by both systems at once.

    Raises
    ------
    :class:`~msmb.exceptions.DimensionMismatch`
        The cones live over different labels.
    """
    config = resolve(config)
    return _cone(
        first.system.union(second.system),
        config,
        projected=first.projected or second.projected
    )

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""One-row matrices ``A = (a_1 ... a_n)``: gluings, the classification of
minimal Markov bases in three variables, the sign game on minimal Markov
bases, and closed-form distance reduction checks for three and four
columns.
"""

from __future__ import annotations

import logging
from itertools import combinations
from math import gcd
from typing import TYPE_CHECKING

from .bases import as_move_set, require_minimal_markov, verify_markov
from .distance import (
    check_reduces_circuits, is_distance_reducing, reduces_element
)
from ..exceptions import (
    IndexOutOfRange, InvalidInput, NonDistinctEntries, Unsupported
)
from ..objects.curves import (
    CheckResult, Condition, FirstKindBasis, HerzogCase,
    HerzogClassification, RijRecord, SignMatrix
)
from ..objects.gluing import Gluing, GluingLeaf, GluingNode
from ..objects.matrix import SemigroupMatrix
from ..objects.move import Move
from ..objects.move_set import MoveSet, MoveSetKind
from ..utils.arithmetic import add, canonical, gcd_all, lcm, neg, scale

if TYPE_CHECKING:
    from typing import (
        FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple,
        Union
    )

    from .._config import SearchConfig
    from ..objects.gluing import GluingTree
    from ..utils.types import Vector

    Moves = Union[MoveSet, Iterable[Sequence[int]]]
    Play = Tuple[Tuple[int, int], ...]

_log = logging.getLogger(__name__)


def semigroup_member(generators: Sequence[int], x: int) -> bool:
    """Whether ``x`` is a nonnegative integer combination of
    ``generators``.

    Reachable values are the set bits of an integer, so adding ``2^k``
    copies of a generator is a single shift.
    """
    if x < 0:
        return False

    mask = (1 << (x + 1)) - 1
    reach = 1
    for g in generators:
        shift = g
        while shift <= x:
            reach = (reach | (reach << shift)) & mask
            shift *= 2
    return bool(reach >> x & 1)


def _entries(matrix: SemigroupMatrix, n: Optional[int] = None) -> Vector:
    a = matrix.entries
    if n is not None and len(a) != n:
        raise InvalidInput(f"Expected {n} columns, got {len(a)}.")
    return a


def _splits(a: Sequence[int], columns: Sequence[int]) -> List[Gluing]:
    """Gluings of the sub-matrix on ``columns``, most balanced first."""
    first, rest = columns[0], columns[1:]
    found = []
    for size in range(len(rest)):
        for extra in combinations(rest, size):
            left = (first,) + extra
            right = tuple(c for c in rest if c not in extra)
            left_values = [a[c] for c in left]
            right_values = [a[c] for c in right]

            x = lcm(gcd_all(left_values), gcd_all(right_values))
            if semigroup_member(left_values, x) and semigroup_member(
                    right_values, x
            ):
                found.append(Gluing(left, right, x))

    found.sort(
        key=lambda g: (min(len(g.left), len(g.right)), g.right),
        reverse=True
    )
    return found


def find_gluings(matrix: SemigroupMatrix) -> List[Gluing]:
    """Every split of the columns into two blocks that glue.

    The generator of ``ZB & ZC`` is ``lcm(gcd B, gcd C)``; the split
    glues when it lies in both semigroups. The block holding column ``0``
    is always ``left``.

    Returns
    -------
    List[:class:`~msmb.objects.gluing.Gluing`]
        Balanced splits first. Empty when there is none.
    """
    a = _entries(matrix)
    if len(a) < 2:
        return []
    return _splits(a, tuple(range(len(a))))


def _trees(a: Sequence[int], columns: Tuple[int, ...]) -> Iterator[GluingTree]:
    if len(columns) == 1:
        yield GluingLeaf(a[columns[0]], columns[0])
        return

    for gluing in _splits(a, columns):
        for left in _trees(a, gluing.left):
            for right in _trees(a, gluing.right):
                yield GluingNode(left, right, gluing.value)


def gluing_type(matrix: SemigroupMatrix) -> Optional[GluingTree]:
    """A complete gluing of ``A``, or ``None`` when ``A`` is not a
    complete intersection.

    Splits are tried most balanced first, which makes the result
    deterministic, e.g. ``"((90 ∘_630 126) ∘_3150 (350 ∘_1050 525))"``.
    """
    a = _entries(matrix)
    return next(_trees(a, tuple(range(len(a)))), None)


def all_gluing_trees(matrix: SemigroupMatrix) -> List[GluingTree]:
    """Every complete gluing of ``A``, in the order of
    :func:`gluing_type`.
    """
    a = _entries(matrix)
    return list(_trees(a, tuple(range(len(a)))))


def is_complete_intersection(matrix: SemigroupMatrix) -> bool:
    return gluing_type(matrix) is not None


def is_specially_symmetric(matrix: SemigroupMatrix) -> bool:
    """Whether ``lcm(gcd(a_1..a_k), a_(k+1))`` lies in the semigroup of
    ``a_1..a_k`` for every ``k``, in the given column order.
    """
    a = _entries(matrix)
    return all(
        semigroup_member(a[:k], lcm(gcd_all(a[:k]), a[k]))
        for k in range(1, len(a))
    )


def _representation(value: int, x: int, y: int) -> Optional[Tuple[int, int]]:
    """``(p, q)`` with ``p x + q y == value``, smallest ``p`` first."""
    for p in range(value // x + 1):
        q, remainder = divmod(value - p * x, y)
        if not remainder:
            return p, q
    return None


def _minimal_multiple(
        a: Sequence[int],
        i: int
) -> Tuple[int, Tuple[int, int]]:
    j, k = (m for m in range(3) if m != i)
    multiple = 1
    while True:
        found = _representation(multiple * a[i], a[j], a[k])
        if found is not None:
            return multiple, found
        multiple += 1


def herzog_dim3(matrix: SemigroupMatrix) -> HerzogClassification:
    """Minimal Markov bases of a ``1 x 3`` matrix with distinct entries.

    The entries are divided by their gcd first. ``c_i`` is the least
    ``k >= 1`` with ``k a_i`` in the semigroup of the other two entries.
    When two of the minimal relations coincide, ``c_i a_i == c_j a_j``,
    the curve is a complete intersection: ``b`` is that circuit, ``c``
    the minimal relation of the third column and the minimal bases are
    ``{b, c + lambda b}`` for every ``lambda`` keeping ``c + lambda b``
    nonnegative outside the third column. Otherwise the minimal basis is
    unique and its three elements sum to zero.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        The matrix is not ``1 x 3``.
    :class:`~msmb.exceptions.NonDistinctEntries`
        Two entries are equal.
    """
    original = _entries(matrix, 3)
    if len(set(original)) != 3:
        raise NonDistinctEntries(
            f"Entries {original} are not pairwise distinct."
        )

    divisor = gcd_all(original)
    a = tuple(e // divisor for e in original)
    minimal = [_minimal_multiple(a, i) for i in range(3)]
    c = tuple(m for m, _ in minimal)

    def _relation(i: int) -> Vector:
        vector = [0, 0, 0]
        vector[i] = -c[i]
        others = [m for m in range(3) if m != i]
        for m, value in zip(others, minimal[i][1]):
            vector[m] = value
        return tuple(vector)

    for i, j in combinations(range(3), 2):
        g = gcd(a[i], a[j])
        if c[i] != a[j] // g or c[j] != a[i] // g:
            continue

        k = 3 - i - j
        b = [0, 0, 0]
        b[i], b[j] = c[i], -c[j]
        b = tuple(b)
        c_move = _relation(k)

        low = -(c_move[i] // b[i])
        high = c_move[j] // -b[j]
        bases = sorted(
            (
                MoveSet.from_vectors(
                    matrix,
                    [b, add(c_move, scale(lam, b))],
                    MoveSetKind.MARKOV
                )
                for lam in range(low, high + 1)
            ),
            key=lambda s: s.moves
        )
        _log.debug(
            "%s is a complete intersection, lambda in [%d, %d].",
            matrix, low, high
        )
        return HerzogClassification(
            HerzogCase.CI, a, divisor, c, tuple(bases),
            b=Move(b), c_move=Move(c_move), lambda_range=(low, high)
        )

    generators = tuple(Move(_relation(i)) for i in range(3))
    basis = MoveSet.from_vectors(matrix, generators, MoveSetKind.MARKOV)
    return HerzogClassification(
        HerzogCase.NCI, a, divisor, c, (basis,), generators=generators
    )


def sign_game(signs: SignMatrix) -> Optional[Play]:
    """Search for a winning sequence of the sign game.

    A move picks an entry ``s_ij`` that is the only nonzero entry of its
    column and whose sign differs from every other entry of its row, then
    deletes row ``i`` and column ``j``. The game is won when every row is
    gone. Columns are tried from the last one down; positions already
    known to be lost are remembered.

    Returns
    -------
    Optional[Tuple[Tuple[:class:`int`, :class:`int`], ...]]
        The ``(row, column)`` pairs of a winning play, 0-based, or
        ``None`` when the matrix is not winnable.
    """
    entries = signs.entries
    lost: Set[Tuple[FrozenSet[int], FrozenSet[int]]] = set()

    def _play(rows: FrozenSet[int], cols: FrozenSet[int]) -> Optional[Play]:
        if not rows:
            return ()
        if (rows, cols) in lost:
            return None

        for j in sorted(cols, reverse=True):
            holders = [i for i in sorted(rows) if entries[i][j]]
            if len(holders) != 1:
                continue

            i = holders[0]
            sign = entries[i][j]
            if any(entries[i][k] == sign for k in cols if k != j):
                continue

            rest = _play(rows - {i}, cols - {j})
            if rest is not None:
                return ((i, j),) + rest

        lost.add((rows, cols))
        return None

    rows, cols = signs.shape
    return _play(frozenset(range(rows)), frozenset(range(cols)))


def _triangular(
        matrix: SemigroupMatrix,
        moves: Sequence[Move],
        play: Play
) -> FirstKindBasis:
    """Lay a won sign game out as a lower triangular basis."""
    a = matrix.entries
    n = len(a)
    order = [0] * n

    for t, (_, column) in enumerate(play):
        order[n - 1 - t] = column
    order[0] = next(c for c in range(n) if c not in order[1:])

    vectors = {}
    for t, (row, _) in enumerate(play):
        i = n - t
        vector = [moves[row][column] for column in order]
        if vector[i - 1] > 0:
            vector = list(neg(vector))
        vectors[i] = vector

    if a[order[0]] > a[order[1]]:
        order[0], order[1] = order[1], order[0]
        for vector in vectors.values():
            vector[0], vector[1] = vector[1], vector[0]
        vectors[2] = list(neg(vectors[2]))

    rows = tuple(
        tuple(vectors[i][:i - 1]) + (-vectors[i][i - 1],)
        for i in range(2, n + 1)
    )
    originals = []
    for i in range(2, n + 1):
        original = [0] * n
        for position, column in enumerate(order):
            original[column] = vectors[i][position]
        originals.append(Move(original))

    return FirstKindBasis(matrix, tuple(order), rows, tuple(originals))


def admits_first_kind(
        matrix: SemigroupMatrix,
        moves: Moves,
        *,
        config: Optional[SearchConfig] = None
) -> Optional[FirstKindBasis]:
    """Bring a minimal Markov basis into triangular form.

    ``A`` has a gluing of the first kind exactly when the sign matrix of
    a minimal Markov basis is winnable; replaying the winning play orders
    the rows and columns.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        ``moves`` is not a Markov basis of the one-row matrix ``A``.

    Returns
    -------
    Optional[:class:`~msmb.objects.curves.FirstKindBasis`]
        ``None`` when ``A`` is not a complete intersection of the first
        kind.
    """
    a = _entries(matrix)
    basis = as_move_set(matrix, moves, MoveSetKind.MARKOV)
    check = verify_markov(matrix, basis, config=config)
    if not check:
        raise InvalidInput(
            f"Not a Markov basis: {check.witness} is not connected."
        )

    if len(basis) != len(a) - 1:
        return None

    play = sign_game(SignMatrix.from_moves(basis.moves))
    if play is None:
        return None
    return _triangular(matrix, basis.moves, play)


def condition_Rij(basis: FirstKindBasis, i: int, j: int) -> RijRecord:
    """Evaluate ``R_ij`` on a triangular basis, ``2 <= i < j <= n``.

    Raises
    ------
    :class:`~msmb.exceptions.IndexOutOfRange`
        The pair is out of range.
    """
    n = basis.n
    if not 2 <= i < j <= n:
        raise IndexOutOfRange(f"R_{i},{j} needs 2 <= i < j <= {n}")

    u = basis.u
    cond_i = sum(u(i, k) for k in range(1, i)) < u(i, i)

    witness = None
    for row in range(i + 1, j):
        zero_elsewhere = all(
            u(row, k) == 0 for k in range(1, row + 1) if k not in (i, row)
        )
        if zero_elsewhere and u(row, i) > u(row, row):
            witness = row
            break

    cond_iii = sum(u(j, k) for k in range(1, j + 1)) < 2 * (
        u(j, i) + u(j, j)
    )
    return RijRecord(
        i, j, cond_i, witness is not None, witness, cond_iii,
        basis.circuit(i, j)
    )


def _unreduced_circuit(
        matrix: SemigroupMatrix,
        basis: MoveSet,
        candidate: Optional[Sequence[int]] = None
) -> Optional[Move]:
    """``candidate`` when ``basis`` really leaves it unreduced, else the
    first circuit that is not reduced.
    """
    if candidate is not None and reduces_element(basis, candidate) is None:
        return Move(candidate)
    return check_reduces_circuits(matrix, basis).witness


def _column_circuit(
        a: Sequence[int],
        order: Sequence[int],
        p: int,
        q: int
) -> Move:
    """The circuit on normalised positions ``p < q`` (1-based)."""
    i, j = order[p - 1], order[q - 1]
    g = gcd(a[i], a[j])
    vector = [0] * len(a)
    vector[i], vector[j] = a[j] // g, -(a[i] // g)
    return Move(canonical(vector))


def _verdict(
        matrix: SemigroupMatrix,
        basis: MoveSet,
        case: str,
        conditions: Sequence[Tuple[Condition, Optional[Move]]],
        order: Optional[Sequence[int]]
) -> CheckResult:
    reducing = all(c.holds for c, _ in conditions)
    failing = None
    if not reducing:
        candidate = next(m for c, m in conditions if not c.holds)
        failing = _unreduced_circuit(matrix, basis, candidate)

    return CheckResult(
        reducing,
        case,
        tuple(c for c, _ in conditions),
        failing,
        tuple(order) if order is not None else None
    )


def check_first_kind(basis: FirstKindBasis) -> CheckResult:
    """A triangular basis is distance reducing exactly when every
    ``R_ij`` holds.
    """
    moves = MoveSet.from_vectors(
        basis.matrix, basis.moves, MoveSetKind.MARKOV
    )
    conditions = []
    for i, j in combinations(range(2, basis.n + 1), 2):
        record = condition_Rij(basis, i, j)
        clauses = [
            name for name, holds in (
                ("(i)", record.cond_i),
                ("(ii)", record.cond_ii),
                ("(iii)", record.cond_iii)
            ) if holds
        ]
        detail = "by " + ", ".join(clauses) if clauses else "no clause"
        conditions.append((
            Condition(f"R{i},{j}", f"R_{i},{j}", record.satisfied, detail),
            record.circuit
        ))

    return _verdict(
        basis.matrix, moves, "first-kind", conditions, basis.order
    )


def _sorted_order(a: Sequence[int], columns: Iterable[int]) -> List[int]:
    return sorted(columns, key=lambda c: (a[c], c))


def _nci_clause(
        herzog: HerzogClassification,
        name: str = "nci"
) -> Condition:
    v, c = herzog.v, herzog.c
    holds = v(2, 1) < c[1] + v(2, 3) or v(3, 1) < v(3, 2) + c[2]
    return Condition(
        name,
        "v21 < c2+v23 or v31 < v32+c3",
        holds,
        f"{v(2, 1)} < {c[1]}+{v(2, 3)} or {v(3, 1)} < {v(3, 2)}+{c[2]}"
    )


def check_dim3(
        matrix: SemigroupMatrix,
        moves: Moves,
        *,
        config: Optional[SearchConfig] = None
) -> CheckResult:
    """Closed-form distance reduction test for three columns.

    Complete intersections: with the columns ordered so that
    ``b = (b1, -b2, 0)`` and ``b1 > b2``, and ``c = (c1, c2, -c3)``, the
    basis is distance reducing iff ``c1 < c2 + c3``. Otherwise, with
    ``a1 < a2 < a3``: iff ``v21 < c2 + v23`` or ``v31 < v32 + c3``.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        ``moves`` is not a minimal Markov basis of a ``1 x 3`` matrix.
    :class:`~msmb.exceptions.NonDistinctEntries`
        Two entries are equal.
    """
    a = _entries(matrix, 3)
    herzog = herzog_dim3(matrix)
    basis = require_minimal_markov(matrix, moves, config=config)

    if herzog.case is HerzogCase.NCI:
        order = _sorted_order(a, range(3))
        ordered = herzog_dim3(matrix.permuted(order))
        condition = _nci_clause(ordered)
        return _verdict(
            matrix, basis, "dim3-nci",
            [(condition, _column_circuit(a, order, 2, 3))], order
        )

    b = herzog.b
    i, j = _sorted_order(a, b.support)
    k = 3 - i - j
    order = [i, j, k]

    c_move = next(m for m in basis if m != b)
    c = [c_move[col] for col in order]
    if c[2] > 0:
        c = list(neg(c))
    c1, c2, c3 = c[0], c[1], -c[2]

    condition = Condition(
        "ci", "c1 < c2+c3", c1 < c2 + c3, f"{c1} < {c2 + c3}"
    )
    return _verdict(
        matrix, basis, "dim3-ci",
        [(condition, _column_circuit(a, order, 2, 3))], order
    )


def _type_22(
        matrix: SemigroupMatrix,
        basis: MoveSet
) -> Optional[CheckResult]:
    a = matrix.entries
    pairs = [m for m in basis if len(m.support) == 2]
    for first, second in combinations(pairs, 2):
        if set(first.support) & set(second.support):
            continue

        blocks = sorted(
            (_sorted_order(a, first.support),
             _sorted_order(a, second.support)),
            key=min
        )
        order = blocks[0] + blocks[1]
        d = next(m for m in basis if m not in (first, second))
        d = [d[col] for col in order]
        if any(e < 0 for e in d[:2]):
            d = list(neg(d))
        if any(e < 0 for e in d[:2]) or any(e > 0 for e in d[2:]):
            continue

        d1, d2, d3, d4 = d[0], d[1], -d[2], -d[3]
        conditions = [
            (
                Condition(
                    "(i)", "d1 = 0 or d3 = 0", d1 == 0 or d3 == 0,
                    f"d1 = {d1}, d3 = {d3}"
                ),
                _column_circuit(a, order, 2, 4)
            ),
            (
                Condition(
                    "(ii)", "d1+d3 < d2+d4", d1 + d3 < d2 + d4,
                    f"{d1}+{d3} < {d2}+{d4}"
                ),
                None
            ),
        ]
        return _verdict(matrix, basis, "dim4-22", conditions, order)
    return None


def _type_211(
        matrix: SemigroupMatrix,
        basis: MoveSet,
        triangular: FirstKindBasis
) -> CheckResult:
    a = matrix.entries
    u = triangular.u
    order = triangular.order
    c1, c2, c3 = u(3, 1), u(3, 2), u(3, 3)
    d1, d2, d3, d4 = u(4, 1), u(4, 2), u(4, 3), u(4, 4)

    conditions = [
        (
            Condition(
                "(a)", "c1 < c2+c3", c1 < c2 + c3, f"{c1} < {c2 + c3}"
            ),
            _column_circuit(a, order, 2, 3)
        ),
        (
            Condition(
                "(b)", "(c1 = 0 and c3 < c2) or d1+d3 < d2+d4",
                (c1 == 0 and c3 < c2) or d1 + d3 < d2 + d4,
                f"({c1} = 0 and {c3} < {c2}) or {d1}+{d3} < {d2}+{d4}"
            ),
            _column_circuit(a, order, 2, 4)
        ),
        (
            Condition(
                "(c)", "c1+c2 < c3 or d1+d2 < d3+d4",
                c1 + c2 < c3 or d1 + d2 < d3 + d4,
                f"{c1}+{c2} < {c3} or {d1}+{d2} < {d3}+{d4}"
            ),
            _column_circuit(a, order, 3, 4)
        ),
    ]
    return _verdict(matrix, basis, "dim4-211", conditions, order)


def _glued_nci(
        matrix: SemigroupMatrix,
        basis: MoveSet
) -> Optional[CheckResult]:
    a = matrix.entries
    for gluing in find_gluings(matrix):
        if len(gluing.left) == 1:
            single, block = gluing.left[0], gluing.right
        elif len(gluing.right) == 1:
            single, block = gluing.right[0], gluing.left
        else:
            continue

        values = sorted(a[c] for c in block)
        if len(set(values)) != 3:
            continue

        order = _sorted_order(a, block) + [single]
        glue = [m for m in basis if m[single]]
        if len(glue) != 1:
            continue

        h = [glue[0][col] for col in order]
        if h[3] > 0:
            h = list(neg(h))
        if any(e < 0 for e in h[:3]):
            continue

        herzog = herzog_dim3(SemigroupMatrix.from_rows([values]))
        if herzog.case is not HerzogCase.NCI:
            continue

        v, c = herzog.v, herzog.c
        h1, h2, h3, h4 = h[0], h[1], h[2], -h[3]
        conditions = [
            (_nci_clause(herzog, "(i)"), _column_circuit(a, order, 2, 3)),
            (
                Condition(
                    "(ii)", "v21+v31 < c2 or h1+h3 < h2+h4",
                    v(2, 1) + v(3, 1) < c[1] or h1 + h3 < h2 + h4,
                    f"{v(2, 1)}+{v(3, 1)} < {c[1]} or "
                    f"{h1}+{h3} < {h2}+{h4}"
                ),
                _column_circuit(a, order, 2, 4)
            ),
            (
                Condition(
                    "(iii)", "h1+h2 < h3+h4", h1 + h2 < h3 + h4,
                    f"{h1}+{h2} < {h3}+{h4}"
                ),
                _column_circuit(a, order, 3, 4)
            ),
        ]
        return _verdict(matrix, basis, "dim4-glued-nci", conditions, order)
    return None


def check_dim4(
        matrix: SemigroupMatrix,
        moves: Moves,
        *,
        fallback: bool = True,
        config: Optional[SearchConfig] = None
) -> CheckResult:
    """Closed-form distance reduction test for four columns.

    The cases are tried in order: a complete intersection glued from two
    pairs, a complete intersection of the first kind, any other complete
    intersection (never distance reducing), and a non complete
    intersection glued from three columns and a single one. Anything
    else is answered by the Graver test.

    Parameters
    ----------
    matrix : :class:`~msmb.objects.matrix.SemigroupMatrix`
        A ``1 x 4`` matrix.
    moves : Union[:class:`~msmb.objects.move_set.MoveSet`, Iterable]
        A minimal Markov basis.
    fallback : :class:`bool`
        Run the Graver test when no closed form applies instead of
        raising.
        |default| ``True``
    config : Optional[:class:`~msmb._config.SearchConfig`]
        Enumeration caps.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        ``moves`` is not a minimal Markov basis of a ``1 x 4`` matrix.
    :class:`~msmb.exceptions.Unsupported`
        No closed form applies and ``fallback`` is off.
    """
    a = _entries(matrix, 4)
    basis = require_minimal_markov(matrix, moves, config=config)

    if len(basis) == len(a) - 1:
        result = _type_22(matrix, basis)
        if result is not None:
            return result

        triangular = admits_first_kind(matrix, basis, config=config)
        if triangular is not None:
            return _type_211(matrix, basis, triangular)

        condition = Condition(
            "first kind", "gluing of the first kind", False,
            "the sign game is lost"
        )
        return CheckResult(
            False, "dim4-ci", (condition,),
            _unreduced_circuit(matrix, basis)
        )

    result = _glued_nci(matrix, basis)
    if result is not None:
        return result

    if not fallback:
        raise Unsupported(
            f"No closed-form distance reduction test applies to {matrix}."
        )

    _log.warning(
        "No closed form for %s, falling back to the Graver test.", matrix
    )
    check = is_distance_reducing(matrix, basis, config=config)
    detail = "" if check else f"{check.witness} is not reduced"
    return CheckResult(
        check.reducing,
        "graver",
        (Condition("graver", "Graver test", check.reducing, detail),),
        None if check else _unreduced_circuit(matrix, basis),
        unsupported=True
    )

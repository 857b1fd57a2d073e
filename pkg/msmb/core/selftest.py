# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Known answers the library must reproduce.

Every fixture is a small function registered with :func:`fixture`. It
raises :class:`FixtureMismatch` when a computed value differs from the
expected one and returns a short summary otherwise. ``msmb selftest``
runs them all and exits nonzero on any failure.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import partial
from time import perf_counter
from typing import TYPE_CHECKING

from .bases import graver, minimal_markov_bases
from .distance import (
    check_reduces_circuits, irreducible_sets, is_distance_reducing,
    reduces_element, universal_distance_reducing
)
from .monomial_curves import (
    all_gluing_trees, check_dim3, check_dim4, find_gluings, gluing_type,
    herzog_dim3, sign_game
)
from .reduction_complex import (
    b_reduction_closure, distance_reducing_complex, intersect_cones,
    metric_cone, reduction_inequality_sets
)
from .._config import resolve
from ..exceptions import InvalidInput, MSMBError
from ..objects.curves import SignMatrix
from ..objects.matrix import SemigroupMatrix
from ..utils.arithmetic import canonical
from ..utils.conversion import fields_to_plain
from ..utils.parsing import parse_basis, parse_rows

if TYPE_CHECKING:
    from typing import (
        Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence,
        Tuple
    )

    from .._config import SearchConfig
    from ..objects.cone import Cone
    from ..utils.types import Vector

    FixtureCall = Callable[[SearchConfig], str]

_log = logging.getLogger(__name__)


class FixtureMismatch(AssertionError):
    """A computed value differs from the known answer."""


@dataclass(frozen=True)
class RegisteredFixture:
    name: str
    call: FixtureCall
    slow: bool = False


@dataclass(frozen=True)
class SelfTestRecord:
    """Outcome of one fixture.

    Attributes
    ----------
    name: :class:`str`
        The fixture name.
    passed: :class:`bool`
        Whether the library reproduced the known answer.
    detail: :class:`str`
        A summary of what was checked, or what went wrong.
    """
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return fields_to_plain(self)

    def __str__(self) -> str:
        verdict = "ok  " if self.passed else "FAIL"
        return f"{verdict} {self.name}: {self.detail}"


REGISTER: Dict[str, RegisteredFixture] = {}


def fixture(func=None, *, name: Optional[str] = None, slow: bool = False):
    """Register a fixture under ``name`` (the function name with dashes
    by default).

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        The name is taken.
    """
    if func is None:
        return partial(fixture, name=name, slow=slow)

    key = name or func.__name__.strip("_").replace("_", "-")
    if key in REGISTER:
        raise InvalidInput(f"Fixture `{key}` is already registered.")

    REGISTER[key] = RegisteredFixture(key, func, slow)
    return func


def _expect(condition: bool, message: str):
    if not condition:
        raise FixtureMismatch(message)


def _moves(text: str) -> FrozenSet[Vector]:
    """Canonical moves of a basis string."""
    return frozenset(canonical(row) for row in parse_basis(text))


def _columns(text: str) -> FrozenSet[Vector]:
    """The columns of a matrix written row by row."""
    return frozenset(zip(*parse_rows(text)))


def _as_set(moves: Iterable[Sequence[int]]) -> FrozenSet[Vector]:
    return frozenset(tuple(m) for m in moves)


def _matrix(text: str) -> SemigroupMatrix:
    return SemigroupMatrix.parse(text)


RUNNING_BASIS = "3 -2 0; 2 0 -1"
RUNNING_LABELS = "3 -2 0; 2 0 -1; 1 -2 1; 1 2 -2; 0 4 -3"
RUNNING_CLOSED = RUNNING_LABELS + "; 3 2 -3"


@fixture
def graver_2_3_4(config: SearchConfig) -> str:
    found = _as_set(graver(_matrix("2 3 4"), config=config))
    _expect(found == _moves(RUNNING_LABELS), f"got {sorted(found)}")
    return "5 Graver moves"


@fixture
def markov_2_3_4(config: SearchConfig) -> str:
    found = {_as_set(b) for b in minimal_markov_bases(
        _matrix("2 3 4"), config=config
    )}
    expected = {_moves("3 -2 0; 2 0 -1"), _moves("2 0 -1; 1 -2 1")}
    _expect(found == expected, f"got {found}")
    return "2 minimal Markov bases"


@fixture(slow=True)
def markov_8_31_33_53(config: SearchConfig) -> str:
    found = {_as_set(b) for b in minimal_markov_bases(
        _matrix("8 31 33 53"), config=config
    )}
    expected = {
        _moves(
            "2 -2 3 -1; 3 2 -1 -1; 5 -3 0 1; 5 0 2 -2; 6 1 -4 1; 8 -1 -1 0"
        ),
        _moves(
            "1 4 -4 0; 2 -2 3 -1; 3 2 -1 -1; 5 -3 0 1; 5 0 2 -2; 8 -1 -1 0"
        ),
    }
    _expect(found == expected, f"got {found}")
    return "2 minimal Markov bases"


@fixture
def markov_3_5_8_11(config: SearchConfig) -> str:
    found = {_as_set(b) for b in minimal_markov_bases(
        _matrix("3 5 8 11"), config=config
    )}
    expected = {
        _moves("1 1 -1 0; 2 1 0 -1; 5 -3 0 0"),
        _moves("1 1 -1 0; 1 0 1 -1; 5 -3 0 0"),
    }
    _expect(found == expected, f"got {found}")
    return "2 minimal Markov bases"


@fixture
def herzog_3_5_9(config: SearchConfig) -> str:
    found = {_as_set(b) for b in herzog_dim3(_matrix("3 5 9")).bases}
    expected = {_moves("3 0 -1; 2 -3 1"), _moves("3 0 -1; 5 -3 0")}
    _expect(found == expected, f"got {found}")
    return "complete intersection with 2 minimal bases"


@fixture
def herzog_3_5_11(config: SearchConfig) -> str:
    found = [_as_set(b) for b in herzog_dim3(_matrix("3 5 11")).bases]
    _expect(found == [_moves("5 -3 0; 2 1 -1")], f"got {found}")
    return "unique minimal basis"


@fixture
def check_dim3_3_5_11(config: SearchConfig) -> str:
    matrix = _matrix("3 5 11")
    basis = parse_basis("5 -3 0; 2 1 -1")
    result = check_dim3(matrix, basis, config=config)
    _expect(not result, "reported distance reducing")
    _expect(
        result.failing_circuit == (0, 11, -5),
        f"failing circuit {result.failing_circuit}"
    )
    _expect(
        reduces_element(basis, (0, 11, -5)) is None,
        "(0, 11, -5) is reduced"
    )
    _expect(
        str(result) == "NOT distance reducing (c1 < c2+c3 fails: 2 < 2)",
        f"got {result}"
    )
    return str(result)


@fixture
def check_dim4_7_8_22_23(config: SearchConfig) -> str:
    result = check_dim4(
        _matrix("7 8 22 23"), parse_basis("8 -7 0 0; 2 1 -1 0; 1 2 0 -1"),
        fallback=False, config=config
    )
    _expect(not result, "reported distance reducing")
    _expect(result.decisive.name == "(a)", f"decided by {result.decisive}")
    _expect(
        result.failing_circuit == (0, 11, -4, 0),
        f"failing circuit {result.failing_circuit}"
    )
    return str(result)


@fixture
def check_dim4_90_126_350_525(config: SearchConfig) -> str:
    result = check_dim4(
        _matrix("90 126 350 525"),
        parse_basis("7 -5 0 0; 0 0 3 -2; 14 15 -3 -4"),
        fallback=False, config=config
    )
    _expect(not result, "reported distance reducing")
    _expect(result.decisive.name == "(i)", f"decided by {result.decisive}")
    _expect(
        result.failing_circuit == (0, 25, 0, -6),
        f"failing circuit {result.failing_circuit}"
    )
    return str(result)


@fixture
def circuits_are_not_enough(config: SearchConfig) -> str:
    matrix = _matrix("14 21 23 29")
    basis = parse_basis("1 1 1 -2; 3 -2 0 0; 3 1 -4 1; 7 0 -3 -1")
    _expect(
        bool(check_reduces_circuits(matrix, basis)),
        "some circuit is not reduced"
    )
    check = is_distance_reducing(matrix, basis, config=config)
    _expect(not check, "reported distance reducing")
    _expect(
        reduces_element(basis, (1, 4, -3, -1)) is None,
        "(1, 4, -3, -1) is reduced"
    )
    _expect(not find_gluings(matrix), "found a gluing")
    return f"{check.witness} is not reduced"


@fixture
def gluing_types(config: SearchConfig) -> str:
    expected = {
        "7 8 22 23": "(((7 ∘_56 8) ∘_22 22) ∘_23 23)",
        "90 126 350 525": "((90 ∘_630 126) ∘_3150 (350 ∘_1050 525))",
        "8 14 15 20": "(((8 ∘_40 20) ∘_28 14) ∘_30 15)",
    }
    for text, tree in expected.items():
        found = str(gluing_type(_matrix(text)))
        _expect(found == tree, f"{text}: got {found}")

    trees = {str(t) for t in all_gluing_trees(_matrix("3 5 9"))}
    _expect(
        trees == {"((3 ∘_15 5) ∘_9 9)", "((3 ∘_9 9) ∘_15 5)"},
        f"3 5 9: got {trees}"
    )
    return f"{len(expected) + 1} matrices"


@fixture
def sign_game_lost(config: SearchConfig) -> str:
    signs = SignMatrix.parse("+-0000; 00+-00; ++0-00; 0-00+-; 0+00--")
    play = sign_game(signs)
    _expect(play is None, f"won with {play}")
    return "not winnable"


def _irreducibles(
        matrix: str,
        config: SearchConfig,
        d: str,
        weak: str
) -> str:
    sets = irreducible_sets(_matrix(matrix), config=config)
    _expect(_as_set(sets.d) == _moves(d), f"D = {sets.d.rows}")
    expected_weak = _moves(f"{d}; {weak}" if weak else d)
    _expect(
        _as_set(sets.d_weak) == expected_weak, f"D^w = {sets.d_weak.rows}"
    )
    return f"|D| = {len(sets.d)}, |D^w| = {len(sets.d_weak)}"


@fixture
def irreducibles_2_3_4(config: SearchConfig) -> str:
    return _irreducibles("2 3 4", config, "2 0 -1", "1 -2 1")


@fixture
def irreducibles_8_14_15_20(config: SearchConfig) -> str:
    return _irreducibles(
        "8 14 15 20", config, "5 0 0 -2; 2 1 -2 0; 1 -2 0 1", "0 0 4 -3"
    )


@fixture
def irreducibles_3_5_8_11(config: SearchConfig) -> str:
    return _irreducibles(
        "3 5 8 11", config, "1 1 -1 0; 5 -3 0 0; 1 0 1 -1",
        "3 -4 0 1; 1 -5 0 2"
    )


@fixture(slow=True)
def irreducibles_8_31_33_53(config: SearchConfig) -> str:
    d = (
        "8 -1 -1 0; 5 0 2 -2; 3 2 -1 -1; 2 -2 3 -1; 5 -3 0 1; 1 4 -4 0; "
        "3 -1 -3 2; 0 3 2 -3"
    )
    return _irreducibles("8 31 33 53", config, d, "")


@fixture
def irreducibles_4_9_37(config: SearchConfig) -> str:
    return _irreducibles("4 9 37", config, "9 -4 0; 7 1 -1; 2 -5 1", "")


@fixture
def universal_3_5_11(config: SearchConfig) -> str:
    matrix = _matrix("3 5 11")
    universal = universal_distance_reducing(matrix, config=config)
    found = {_as_set(b) for b in universal.bases}
    expected = {
        _moves("2 1 -1; 5 -3 0; 1 -5 2"), _moves("2 1 -1; 5 -3 0; 3 -4 1")
    }
    _expect(found == expected, f"got {found}")
    weak = irreducible_sets(matrix, config=config).d_weak
    _expect(_as_set(universal.union) == _as_set(weak), "union is not D^w")
    return "2 minimal distance-reducing Markov bases"


@fixture(slow=True)
def universal_3_5_8_11(config: SearchConfig) -> str:
    matrix = _matrix("3 5 8 11")
    universal = universal_distance_reducing(matrix, config=config)
    _expect(len(universal.bases) == 71, f"{len(universal.bases)} bases")

    targets = {
        r.target: _as_set(r.candidates) for r in universal.requirements
    }
    _expect(
        set(targets) == _moves("1 -5 0 2; 0 11 0 -5"),
        f"unreduced {sorted(targets)}"
    )
    both = targets[(1, -5, 0, 2)] & targets[(0, 11, 0, -5)]
    _expect(
        both == _moves("3 -4 0 1; 2 -5 1 1; 1 -5 0 2"), f"T0 = {both}"
    )
    only_first = targets[(1, -5, 0, 2)] - targets[(0, 11, 0, -5)]
    # 3*3 - 5*5 + 8*2 == 0, so (3, -5, 2, 0) is the kernel move here
    _expect(
        only_first == _moves("4 -4 1 0; 3 -5 2 0"), f"T1 = {only_first}"
    )
    _expect((1, 5, 2, -4) in universal.union, "(1, 5, 2, -4) missing")
    _expect(
        (1, 5, 2, -4) not in graver(matrix, config=config),
        "(1, 5, 2, -4) is a Graver move"
    )
    return "71 minimal distance-reducing Markov bases"


@fixture
def metric_cones(config: SearchConfig) -> str:
    five = metric_cone(parse_basis(RUNNING_LABELS), config=config)
    _expect(
        set(five.rays) == _columns(
            "2 1 1 3 0; 1 1 0 2 1; 1 0 1 1 1; 0 1 1 1 2; 1 1 2 0 3"
        ),
        f"C5 rays {five.rays}"
    )
    six = metric_cone(parse_basis(RUNNING_CLOSED), config=config)
    _expect(
        set(six.rays) == _columns(
            "2 1 1 3 0 3; 1 1 0 2 1 1; 1 0 1 1 1 2; 0 1 1 1 2 1; "
            "1 1 2 0 3 3; 1 2 1 3 3 0"
        ),
        f"C6 rays {six.rays}"
    )
    return f"{len(five.rays)} and {len(six.rays)} rays"


@fixture
def reduction_closure(config: SearchConfig) -> str:
    labels = b_reduction_closure(
        parse_basis(RUNNING_BASIS), parse_basis(RUNNING_LABELS),
        config=config
    )
    _expect(
        labels == tuple(parse_basis(RUNNING_CLOSED)), f"got {labels}"
    )
    return f"adds {labels[-1]}"


@fixture
def reduction_table(config: SearchConfig) -> str:
    sets = reduction_inequality_sets(
        parse_basis(RUNNING_BASIS), parse_basis(RUNNING_CLOSED),
        config=config
    )
    found = {s.target_index: [str(i) for i in s.inequalities] for s in sets}
    expected = {
        2: ["n3 > n2", "n3 > n1"],
        3: ["n4 > 2n2", "n4 > n3"],
        4: ["n5 > n6", "n5 > 2n3"],
        5: ["n6 > 3n2", "n6 > n4"],
    }
    _expect(found == expected, f"got {found}")
    return f"{len(sets)} relations"


def _by_transversal(cones: List[Cone], transversal: Tuple[int, ...]) -> Cone:
    for cone in cones:
        if cone.transversal == transversal:
            return cone
    raise FixtureMismatch(f"no cone for transversal {transversal}")


@fixture
def reducing_complex(config: SearchConfig) -> str:
    cones = distance_reducing_complex(
        parse_basis(RUNNING_BASIS), parse_basis(RUNNING_LABELS),
        config=config
    )
    first = _by_transversal(cones, (0, 0, 0, 0))
    second = _by_transversal(cones, (0, 0, 0, 1))
    _expect(
        set(first.rays) == _columns(
            "1 0 2 3 4 6; 0 1 1 1 1 1; 1 1 1 2 3 5; 1 2 2 2 2 4; "
            "2 3 3 3 5 9; 1 3 3 3 3 3"
        ),
        f"A1 rays {first.rays}"
    )
    # 2 (3 -2 0) == 3 (2 0 -1) - (0 4 -3), so every ray of every cone
    # has 2 n1 <= 3 n2 + n5
    _expect(
        set(second.rays) == _columns(
            "1 2 3 4 0 2 3 4 7; 0 1 1 1 1 1 1 1 2; 1 2 2 3 1 1 2 3 5; "
            "1 2 2 2 2 2 2 2 4; 2 4 4 5 3 3 3 5 8; 1 2 2 2 3 3 3 3 4"
        ),
        f"A2 rays {second.rays}"
    )
    both = intersect_cones(first, second, config=config)
    _expect(
        set(both.rays) == _columns(
            "1 0 2 3 4 3 4 5 9; 0 1 1 1 1 1 1 1 2; 1 1 1 2 3 3 3 4 7; "
            "1 2 2 2 2 3 3 3 6; 2 3 3 3 5 6 6 7 12; 1 3 3 3 3 3 3 3 6"
        ),
        f"A12 rays {both.rays}"
    )
    _expect(both.is_open_nonempty, "A1 and A2 have disjoint interiors")
    _expect(
        not any(c.contains((5, 3, 4, 5, 7, 8)) for c in cones),
        "the 1-norm is distance reducing"
    )
    return f"{len(cones)} cones"


def fixtures(*, quick: bool = False) -> List[RegisteredFixture]:
    """Registered fixtures in registration order, without the slow ones
    when ``quick``.
    """
    return [f for f in REGISTER.values() if not (quick and f.slow)]


def run_selftest(
        *,
        quick: bool = False,
        only: Optional[Sequence[str]] = None,
        config: Optional[SearchConfig] = None
) -> List[SelfTestRecord]:
    """Run the fixtures.

    Parameters
    ----------
    quick : :class:`bool`
        Skip the fixtures marked slow.
        |default| ``False``
    only : Optional[Sequence[:class:`str`]]
        Run just these fixtures, by name.
    config : Optional[:class:`~msmb._config.SearchConfig`]
        Caps passed to every computation.

    Raises
    ------
    :class:`~msmb.exceptions.InvalidInput`
        ``only`` names an unknown fixture.

    Returns
    -------
    List[:class:`SelfTestRecord`]
        One record per fixture, in registration order. Library errors are
        recorded as failures.
    """
    config = resolve(config)
    selected = fixtures(quick=quick)
    if only:
        unknown = sorted(set(only) - set(REGISTER))
        if unknown:
            raise InvalidInput(f"Unknown fixtures: {', '.join(unknown)}")
        selected = [f for f in selected if f.name in only]

    records = []
    for registered in selected:
        start = perf_counter()
        try:
            detail = registered.call(config)
        except (FixtureMismatch, MSMBError) as error:
            records.append(SelfTestRecord(registered.name, False, str(error)))
            _log.warning("Fixture %s failed: %s", registered.name, error)
        else:
            records.append(SelfTestRecord(registered.name, True, detail))
        _log.debug(
            "Fixture %s took %.2fs.", registered.name, perf_counter() - start
        )

    _log.info(
        "%d of %d fixtures passed.",
        sum(r.passed for r in records), len(records)
    )
    return records

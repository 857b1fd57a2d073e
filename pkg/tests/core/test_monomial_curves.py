# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from math import gcd
from random import Random

import pytest

from msmb.core.bases import minimal_markov_bases
from msmb.core.distance import is_distance_reducing
from msmb.core.monomial_curves import (
    admits_first_kind, all_gluing_trees, check_dim3, check_dim4,
    check_first_kind, condition_Rij, find_gluings, gluing_type, herzog_dim3,
    is_complete_intersection, is_specially_symmetric, semigroup_member,
    sign_game
)
from msmb.exceptions import (
    IndexOutOfRange, InvalidInput, NonDistinctEntries
)
from msmb.objects import HerzogCase, SemigroupMatrix, SignMatrix
from tests._utils import as_set, matrix, moves, random_row

RUNNING = matrix("2 3 4")
M1 = moves("3 -2 0; 2 0 -1")
M2 = moves("2 0 -1; 1 -2 1")


class TestSemigroups:

    def test_membership(self):
        assert semigroup_member((3, 5), 0)
        assert semigroup_member((3, 5), 8)
        assert not semigroup_member((3, 5), 7)
        assert not semigroup_member((3, 5), -3)

    def test_gluings(self):
        found = {(g.left, g.right, g.value) for g in find_gluings(
            matrix("3 5 9")
        )}
        assert found == {((0, 1), (2,), 9), ((0, 2), (1,), 15)}
        assert find_gluings(matrix("14 21 23 29")) == []

    @pytest.mark.parametrize("entries,expected", [
        ("7 8 22 23", "(((7 ∘_56 8) ∘_22 22) ∘_23 23)"),
        ("90 126 350 525", "((90 ∘_630 126) ∘_3150 (350 ∘_1050 525))"),
        ("8 14 15 20", "(((8 ∘_40 20) ∘_28 14) ∘_30 15)"),
    ])
    def test_gluing_type(self, entries, expected):
        assert str(gluing_type(matrix(entries))) == expected

    def test_all_trees(self):
        assert {str(t) for t in all_gluing_trees(matrix("3 5 9"))} == {
            "((3 ∘_15 5) ∘_9 9)", "((3 ∘_9 9) ∘_15 5)"
        }

    def test_complete_intersection(self):
        assert is_complete_intersection(matrix("3 5 9"))
        assert not is_complete_intersection(matrix("3 4 5"))
        assert gluing_type(matrix("3 4 5")) is None

    def test_specially_symmetric(self):
        assert is_specially_symmetric(matrix("3 5 9"))
        assert not is_specially_symmetric(matrix("3 4 5"))


class TestHerzog:

    def test_not_complete_intersection(self):
        herzog = herzog_dim3(matrix("3 4 5"))
        assert herzog.case is HerzogCase.NCI
        assert herzog.c == (3, 2, 2)
        assert herzog.generators == ((-3, 1, 1), (1, -2, 1), (2, 1, -2))
        assert as_set(herzog.bases[0]) == moves("3 -1 -1; 1 -2 1; 2 1 -2")

    def test_complete_intersection(self):
        herzog = herzog_dim3(RUNNING)
        assert herzog.case is HerzogCase.CI
        assert herzog.b == (2, 0, -1)
        assert herzog.lambda_range == (0, 1)
        assert {as_set(b) for b in herzog.bases} == {M1, M2}

    def test_two_bases(self):
        found = {as_set(b) for b in herzog_dim3(matrix("3 5 9")).bases}
        assert found == {moves("3 0 -1; 2 -3 1"), moves("3 0 -1; 5 -3 0")}

    def test_unique_basis(self):
        bases = herzog_dim3(matrix("3 5 11")).bases
        assert [as_set(b) for b in bases] == [moves("5 -3 0; 2 1 -1")]

    def test_gcd_is_divided_out(self):
        herzog = herzog_dim3(matrix("6 8 10"))
        assert herzog.divisor == 2
        assert herzog.entries == (3, 4, 5)

    def test_invalid(self):
        with pytest.raises(NonDistinctEntries):
            herzog_dim3(matrix("3 3 5"))
        with pytest.raises(InvalidInput):
            herzog_dim3(matrix("3 5 7 11"))


class TestSignGame:

    def test_winnable(self):
        assert sign_game(SignMatrix.parse("+-0; 0+-")) == ((1, 2), (0, 1))

    def test_lost(self):
        signs = SignMatrix.parse("+-0000; 00+-00; ++0-00; 0-00+-; 0+00--")
        assert sign_game(signs) is None


class TestFirstKind:

    def test_triangular_form(self):
        basis = admits_first_kind(RUNNING, M2)
        assert basis.n == 3
        assert basis.order == (0, 2, 1)
        assert basis.rows == ((2, 1), (1, 1, 2))
        assert basis.moves == ((2, 0, -1), (1, -2, 1))

    def test_conditions(self):
        basis = admits_first_kind(RUNNING, M2)
        record = condition_Rij(basis, 2, 3)
        assert not record.cond_i
        assert not record.cond_ii
        assert record.cond_iii
        assert record.satisfied

        with pytest.raises(IndexOutOfRange):
            condition_Rij(basis, 1, 3)

    def test_matches_graver_test(self):
        for markov in (M1, M2):
            result = check_first_kind(admits_first_kind(RUNNING, markov))
            assert bool(result) is bool(is_distance_reducing(RUNNING, markov))

    def test_failing_circuit(self):
        result = check_first_kind(admits_first_kind(RUNNING, M1))
        assert result.failing_circuit == (0, 4, -3)

    def test_requires_markov(self):
        with pytest.raises(InvalidInput):
            admits_first_kind(RUNNING, moves("2 0 -1"))


class TestClosedForms:

    def test_dim3_complete_intersection(self):
        assert check_dim3(RUNNING, M2)
        result = check_dim3(RUNNING, M1)
        assert str(result) == "NOT distance reducing (c1 < c2+c3 fails: 3 < 2)"
        assert result.failing_circuit == (0, 4, -3)

    def test_dim3_three_five_eleven(self):
        result = check_dim3(matrix("3 5 11"), moves("5 -3 0; 2 1 -1"))
        assert not result
        assert result.failing_circuit == (0, 11, -5)
        assert str(result) == "NOT distance reducing (c1 < c2+c3 fails: 2 < 2)"

    def test_dim3_nci(self):
        result = check_dim3(matrix("3 4 5"), moves("3 -1 -1; 1 -2 1; 2 1 -2"))
        assert result
        assert result.case == "dim3-nci"

    def test_dim3_needs_minimal_basis(self):
        with pytest.raises(InvalidInput):
            check_dim3(matrix("3 5 11"), moves("5 -3 0; 2 1 -1; 0 11 -5"))

    def test_dim4_first_kind(self):
        result = check_dim4(
            matrix("7 8 22 23"), moves("8 -7 0 0; 2 1 -1 0; 1 2 0 -1"),
            fallback=False
        )
        assert not result
        assert result.decisive.name == "(a)"
        assert result.failing_circuit == (0, 11, -4, 0)

    def test_dim4_two_pairs(self):
        result = check_dim4(
            matrix("90 126 350 525"),
            moves("7 -5 0 0; 0 0 3 -2; 14 15 -3 -4"),
            fallback=False
        )
        assert not result
        assert result.decisive.name == "(i)"
        assert result.failing_circuit == (0, 25, 0, -6)

    def test_dim4_needs_four_columns(self):
        with pytest.raises(InvalidInput):
            check_dim4(RUNNING, M2)


_PAIRS = [(2, 3), (2, 5), (3, 4), (3, 5)]


def _sums(pair):
    p, q = pair
    return [p + q, 2 * p, 2 * q]


def _glued_row(rng):
    """A ``1 x 4`` row glued from smaller semigroups, or ``None`` when
    the draw is unusable.
    """
    pair = rng.choice(_PAIRS)
    k, l = rng.choice([2, 3]), rng.choice(_sums(pair))
    if gcd(k, l) != 1:
        return None
    triple = (k * pair[0], k * pair[1], l)

    if rng.random() < 0.5:
        outer = rng.choice([2, 3])
        extra = sum(rng.sample(triple, 2))
        if gcd(outer, extra) != 1:
            return None
        row = tuple(outer * e for e in triple) + (extra,)
    else:
        other = rng.choice(_PAIRS)
        k, l = rng.choice(_sums(other)), rng.choice(_sums(pair))
        if gcd(k, l) != 1:
            return None
        row = (k * pair[0], k * pair[1], l * other[0], l * other[1])

    if len(set(row)) != 4 or max(row) > 30:
        return None
    a = SemigroupMatrix.from_rows([row])
    return a if is_complete_intersection(a) else None


class TestCheckersAgainstGraverTest:

    def test_random_three_columns(self):
        rng = Random(3)
        for _ in range(30):
            a = random_row(rng, 3, 3, 15, distinct=True)
            for basis in minimal_markov_bases(a):
                assert bool(check_dim3(a, basis)) is bool(
                    is_distance_reducing(a, basis)
                ), (a, basis)

    def test_random_gluings(self):
        rng = Random(4)
        checked = 0
        while checked < 10:
            a = _glued_row(rng)
            if a is None:
                continue
            for basis in minimal_markov_bases(a)[:2]:
                expected = bool(is_distance_reducing(a, basis))
                assert bool(check_dim4(a, basis)) is expected, (a, basis)

                triangular = admits_first_kind(a, basis)
                if triangular is not None:
                    assert bool(check_first_kind(triangular)) is expected
            checked += 1

    @pytest.mark.parametrize("text", [
        "2 3 4", "3 5 11", "4 9 37", "7 8 22 23"
    ])
    def test_first_kind_fixtures(self, text):
        a = matrix(text)
        for basis in minimal_markov_bases(a):
            triangular = admits_first_kind(a, basis)
            assert triangular is not None
            assert bool(check_first_kind(triangular)) is bool(
                is_distance_reducing(a, basis)
            )

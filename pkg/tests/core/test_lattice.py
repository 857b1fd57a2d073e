# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from itertools import combinations

import pytest

from msmb import SearchConfig
from msmb.core.lattice import (
    applicable, decomposition_predicates, enumerate_fiber,
    enumerate_kernel_ball, fiber_components, is_pointed, kernel_basis,
    split_candidates
)
from msmb.exceptions import (
    BoundTooLarge, BudgetExceeded, DimensionMismatch, SumMismatch
)
from msmb.objects import DecompositionFlags, Direction
from tests._utils import matrix

RUNNING = matrix("2 3 4")


class TestPointed:

    def test_positive_row(self):
        assert is_pointed([[2, 3, 4]])
        assert not is_pointed([[1, -1]])

    def test_several_rows(self):
        assert is_pointed([[1, 1, 0], [0, 1, 1]])
        assert not is_pointed([[1, -1, 0], [0, 1, -1]])

    def test_zero_column(self):
        assert not is_pointed([[1, 0, 2]])


class TestKernelBasis:

    def test_rank_and_membership(self):
        basis = kernel_basis(RUNNING)
        assert len(basis) == 2
        assert all(RUNNING.in_kernel(v) for v in basis)

    def test_saturated(self):
        u, v = kernel_basis(RUNNING)
        minors = {
            abs(u[i] * v[j] - u[j] * v[i])
            for i, j in combinations(range(3), 2)
        }
        assert minors == {2, 3, 4}


class TestFiber:

    def test_points(self):
        fiber = enumerate_fiber(RUNNING, 6)
        assert fiber.target == (6,)
        assert fiber.points == ((0, 2, 0), (1, 0, 1), (3, 0, 0))
        assert (1, 0, 1) in fiber

    def test_gap(self):
        assert not len(enumerate_fiber(RUNNING, 1))

    def test_target_length(self):
        with pytest.raises(DimensionMismatch):
            enumerate_fiber(RUNNING, (6, 1))

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_fiber(RUNNING, 6, config=SearchConfig(max_cells=2))

    def test_components(self):
        points = enumerate_fiber(RUNNING, 6).points
        assert fiber_components(points) == [
            ((0, 2, 0),), ((1, 0, 1), (3, 0, 0))
        ]


class TestKernelBall:

    def test_small_moves(self):
        assert enumerate_kernel_ball(RUNNING, 4) == [(1, -2, 1), (2, 0, -1)]
        assert enumerate_kernel_ball(RUNNING, 2) == []

    def test_cap(self):
        with pytest.raises(BoundTooLarge):
            enumerate_kernel_ball(
                RUNNING, 4, config=SearchConfig(max_cells=10)
            )


class TestDecompositions:

    def test_flags(self):
        flags = decomposition_predicates((3, -2, 0), (2, 0, -1), (1, -2, 1))
        assert flags == DecompositionFlags(
            conformal=False,
            semiconformal=True,
            semiconformal_swapped=False,
            pos_distance=True,
            neg_distance=False,
            proper=True
        )

    def test_conformal(self):
        flags = decomposition_predicates((3, 2, -3), (3, -2, 0), (0, 4, -3))
        assert not flags.conformal
        flags = decomposition_predicates((3, 0, -1), (2, 0, -1), (1, 0, 0))
        assert flags.conformal

    def test_mismatch(self):
        with pytest.raises(SumMismatch):
            decomposition_predicates((1, 0), (1, 1), (0, 0))
        with pytest.raises(DimensionMismatch):
            decomposition_predicates((1, 0), (1, 0, 0), (0, 0))

    def test_split_candidates(self):
        found = set(split_candidates(RUNNING, (1, 0, 1)))
        assert found == {(-2, 0, 1), (1, -2, 1)}

    def test_applicable(self):
        assert applicable((1, -2, 1), (0, 2, 0)) == Direction.PLUS
        assert applicable((1, -2, 1), (1, 2, 1)) == (
            Direction.PLUS | Direction.MINUS
        )
        assert applicable((1, -2, 1), (0, 0, 0)) == Direction.NONE

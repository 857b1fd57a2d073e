# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

import pytest

from msmb import SearchConfig
from msmb.core.reduction_complex import (
    b_reduction_closure, distance_reducing_complex, extreme_rays,
    intersect_cones, matroid_circuits_with_coeffs, metric_cone,
    reduction_inequality_sets
)
from msmb.exceptions import GuardExceeded, InvalidInput
from msmb.objects import IneqSystem, Inequality, Move
from msmb.utils.parsing import parse_basis
from tests._utils import (
    RUNNING_BASIS, RUNNING_CLOSED, RUNNING_LABELS, columns
)

BASIS = parse_basis(RUNNING_BASIS)
LABELS = parse_basis(RUNNING_LABELS)
CLOSED = parse_basis(RUNNING_CLOSED)


class TestCircuits:

    def test_triangle(self):
        (circuit,) = matroid_circuits_with_coeffs([(1, 0), (0, 1), (1, 1)])
        assert circuit.indices == (0, 1, 2)
        assert circuit.coefficients == (1, 1, -1)
        assert circuit.weights == (1, 1, 1)

    def test_parallel(self):
        (circuit,) = matroid_circuits_with_coeffs([(1, 0), (2, 0)])
        assert circuit.coefficients == (2, -1)

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            matroid_circuits_with_coeffs(
                LABELS, config=SearchConfig(max_vectors=4)
            )

    def test_zero_vector(self):
        with pytest.raises(InvalidInput):
            metric_cone([(1, 0), (0, 0)])


class TestCones:

    def test_extreme_rays(self):
        system = IneqSystem(
            (Move((1, -1)), Move((2, -1))), (Inequality((1, -1)),)
        )
        assert extreme_rays(system) == ((1, 0), (1, 1))

    def test_metric_cone(self):
        cone = metric_cone(LABELS)
        assert set(cone.rays) == columns(
            "2 1 1 3 0; 1 1 0 2 1; 1 0 1 1 1; 0 1 1 1 2; 1 1 2 0 3"
        )
        assert cone.is_open_nonempty
        assert cone.contains((5, 3, 4, 5, 7))

    def test_metric_cone_of_six(self):
        assert set(metric_cone(CLOSED).rays) == columns(
            "2 1 1 3 0 3; 1 1 0 2 1 1; 1 0 1 1 1 2; 0 1 1 1 2 1; "
            "1 1 2 0 3 3; 1 2 1 3 3 0"
        )


class TestReductions:

    def test_closure(self):
        assert b_reduction_closure(BASIS, LABELS) == tuple(CLOSED)

    def test_closure_is_stable(self):
        assert b_reduction_closure(BASIS, CLOSED) == tuple(CLOSED)

    def test_closure_needs_basis(self):
        with pytest.raises(InvalidInput):
            b_reduction_closure(BASIS, [(1, -2, 1)])

    def test_table(self):
        sets = reduction_inequality_sets(BASIS, CLOSED)
        found = {
            s.target_index: [str(i) for i in s.inequalities] for s in sets
        }
        assert found == {
            2: ["n3 > n2", "n3 > n1"],
            3: ["n4 > 2n2", "n4 > n3"],
            4: ["n5 > n6", "n5 > 2n3"],
            5: ["n6 > 3n2", "n6 > n4"],
        }
        assert all(len(s) == len(s.reducers) for s in sets)

    def test_unclosed_labels(self):
        with pytest.raises(InvalidInput):
            reduction_inequality_sets(BASIS, LABELS)

    def test_projected(self):
        sets = reduction_inequality_sets(BASIS, LABELS, projected=True)
        assert all(
            len(i.coefficients) == len(LABELS)
            for s in sets for i in s.inequalities
        )


class TestComplex:
    cones = distance_reducing_complex(BASIS, LABELS)

    def _cone(self, transversal):
        (cone,) = [c for c in self.cones if c.transversal == transversal]
        return cone

    def test_cones_have_interior(self):
        assert self.cones
        assert all(c.is_open_nonempty for c in self.cones)
        assert all(len(c.variables) == 6 for c in self.cones)

    def test_first_cone(self):
        assert set(self._cone((0, 0, 0, 0)).rays) == columns(
            "1 0 2 3 4 6; 0 1 1 1 1 1; 1 1 1 2 3 5; 1 2 2 2 2 4; "
            "2 3 3 3 5 9; 1 3 3 3 3 3"
        )

    def test_second_cone(self):
        assert set(self._cone((0, 0, 0, 1)).rays) == columns(
            "1 2 3 4 0 2 3 4 7; 0 1 1 1 1 1 1 1 2; 1 2 2 3 1 1 2 3 5; "
            "1 2 2 2 2 2 2 2 4; 2 4 4 5 3 3 3 5 8; 1 2 2 2 3 3 3 3 4"
        )

    def test_rays_respect_the_relations(self):
        # 2 (3 -2 0) == 3 (2 0 -1) - (0 4 -3)
        for cone in self.cones:
            assert all(2 * r[0] <= 3 * r[1] + r[4] for r in cone.rays)

    def test_intersection(self):
        both = intersect_cones(
            self._cone((0, 0, 0, 0)), self._cone((0, 0, 0, 1))
        )
        assert both.is_open_nonempty
        assert set(both.rays) == columns(
            "1 0 2 3 4 3 4 5 9; 0 1 1 1 1 1 1 1 2; 1 1 1 2 3 3 3 4 7; "
            "1 2 2 2 2 3 3 3 6; 2 3 3 3 5 6 6 7 12; 1 3 3 3 3 3 3 3 6"
        )

    def test_one_norm_is_not_reducing(self):
        assert not any(c.contains((5, 3, 4, 5, 7, 8)) for c in self.cones)

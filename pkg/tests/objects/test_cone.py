# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

import pytest

from msmb.exceptions import DimensionMismatch
from msmb.objects import Cone, IneqSystem, Inequality, Move

VARIABLES = (Move((1, -1, 0)), Move((0, 1, -1)), Move((1, 0, -1)))


class TestInequality:

    def test_text(self):
        assert str(Inequality((0, -1, 1), strict=True)) == "n3 > n2"
        assert str(Inequality((-1, 2, 0))) == "2n2 >= n1"
        assert str(Inequality((0, 0, 1), strict=True)) == "n3 > 0"

    def test_holds(self):
        inequality = Inequality((0, -1, 1), strict=True)
        assert inequality.holds((1, 1, 2))
        assert not inequality.holds((1, 2, 2))
        assert inequality.holds((1, 2, 2), closed=True)

    def test_to_dict(self):
        data = Inequality((1, -1, 0), True, "reduction").to_dict()
        assert data["relation"] == ">"
        assert data["text"] == "n1 > n2"


class TestIneqSystem:
    triangle = IneqSystem(VARIABLES, (
        Inequality((-1, 1, 1)),
        Inequality((1, -1, 1)),
        Inequality((1, 1, -1)),
        Inequality((1, 1, -1)),
    ))

    def test_rows_are_deduplicated(self):
        assert len(self.triangle.rows) == 3
        assert self.triangle.dimension == 3

    def test_satisfied_by(self):
        assert self.triangle.satisfied_by((1, 1, 1))
        assert not self.triangle.satisfied_by((1, 1, 3))
        assert not self.triangle.satisfied_by((0, 1, 1))
        assert self.triangle.satisfied_by((0, 1, 1), closed=True)

    def test_union(self):
        strict = IneqSystem(VARIABLES, (Inequality((0, 0, 1), True),))
        both = self.triangle.union(strict)
        assert len(both.inequalities) == 5
        assert both.strict == strict.inequalities

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            IneqSystem(VARIABLES, (Inequality((1, -1)),))
        with pytest.raises(DimensionMismatch):
            self.triangle.union(IneqSystem(VARIABLES[:2]))
        with pytest.raises(DimensionMismatch):
            self.triangle.satisfied_by((1, 1))


class TestCone:

    def test_ray_matrix_and_membership(self):
        system = IneqSystem(VARIABLES, (Inequality((-1, 1, 1)),))
        cone = Cone(system, ((0, 1, 0), (1, 1, 0)), (1, 2, 1))
        assert cone.ray_matrix == ((0, 1), (1, 1), (0, 0))
        assert cone.is_open_nonempty
        assert cone.contains((1, 1, 0))
        assert not cone.contains((1, 1, 0), strict=True)
        assert cone.to_dict()["interior"] == [1, 2, 1]

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

import pytest

from msmb.utils.arithmetic import (
    canonical, conformal_leq, gcd_all, lcm, lcm_all, negative_part, norm,
    positive_part, primitive, primitive_canonical, sign_compatible, support,
    vectors_below
)


class TestArithmetic:

    def test_lcm_and_gcd(self):
        assert lcm(4, 6) == 12
        assert lcm(0, 5) == 0
        assert gcd_all([12, 18, 30]) == 6
        assert gcd_all([]) == 0
        assert lcm_all([2, 3, 4]) == 12
        assert lcm_all([]) == 1

    def test_parts(self):
        u = (3, -2, 0, -1)
        assert positive_part(u) == (3, 0, 0, 0)
        assert negative_part(u) == (0, 2, 0, 1)
        assert norm(u) == 6
        assert support(u) == (0, 1, 3)

    @pytest.mark.parametrize("vector, expected", [
        ((0, -4, 3), (0, 4, -3)),
        ((1, -2, 1), (1, -2, 1)),
        ((0, 0, 0), (0, 0, 0)),
    ])
    def test_canonical(self, vector, expected):
        assert canonical(vector) == expected

    def test_primitive(self):
        assert primitive((4, -6, 2)) == (2, -3, 1)
        assert primitive((-4, 6, -2)) == (-2, 3, -1)
        assert primitive_canonical((-4, 6, -2)) == (2, -3, 1)

    def test_conformal_order(self):
        assert conformal_leq((1, -1, 0), (3, -2, 0))
        assert not conformal_leq((1, 1, 0), (3, -2, 0))
        assert not conformal_leq((4, -1, 0), (3, -2, 0))
        assert sign_compatible((1, 0, -1), (2, 3, -1))
        assert not sign_compatible((1, 0, -1), (-1, 0, 0))

    def test_vectors_below(self):
        assert list(vectors_below((1, 1))) == [(0, 1), (1, 0), (1, 1)]
        assert list(vectors_below((0, 0))) == []

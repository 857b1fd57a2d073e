# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from itertools import combinations

import pytest

from msmb.exceptions import BudgetExceeded
from msmb.utils.hitting_sets import minimal_hitting_sets


def brute_force(family):
    items = sorted(set().union(*family))
    hitting = [
        set(c)
        for size in range(len(items) + 1)
        for c in combinations(items, size)
        if all(set(c) & s for s in family)
    ]
    return sorted(
        tuple(sorted(h)) for h in hitting
        if not any(other < h for other in hitting)
    )


class TestHittingSets:

    def test_small_family(self):
        assert minimal_hitting_sets([{1, 2}, {2, 3}]) == [(1, 3), (2,)]

    def test_empty_family(self):
        assert minimal_hitting_sets([]) == [()]

    def test_family_with_empty_set(self):
        assert minimal_hitting_sets([{1}, set()]) == []

    @pytest.mark.parametrize("family", [
        [{1, 2, 3}, {3, 4}, {4, 5, 1}],
        [{1, 2}, {3, 4}, {5, 6}],
        [{1}, {1, 2}, {2, 3, 4}, {4, 5}],
        [{"a", "b"}, {"b", "c"}, {"c", "a"}],
    ])
    def test_matches_brute_force(self, family):
        assert minimal_hitting_sets(family) == brute_force(family)

    def test_limit(self):
        with pytest.raises(BudgetExceeded):
            minimal_hitting_sets([{1, 2}, {3, 4}], limit=2)

    def test_branch_cap(self):
        family = [{1, 2}, {3, 4}]
        assert len(minimal_hitting_sets(family, max_branches=7)) == 4
        with pytest.raises(BudgetExceeded):
            minimal_hitting_sets(family, max_branches=3)

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Enumeration of all inclusion-minimal hitting sets of a set family.

Items are mapped to bit positions and every set of the family becomes an
integer mask, so unions and intersections are single integer operations.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from ..exceptions import BudgetExceeded

if TYPE_CHECKING:
    from typing import Hashable, Iterable, List, Optional, Sequence, Tuple

_log = logging.getLogger(__name__)


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _every_item_private(chosen: int, masks: Sequence[int]) -> bool:
    """Each chosen item is the only chosen item of at least one set."""
    private = 0
    for mask in masks:
        hit = mask & chosen
        if hit and hit & (hit - 1) == 0:
            private |= hit
    return private == chosen


def minimal_hitting_sets(
        family: Iterable[Iterable[Hashable]],
        *,
        limit: Optional[int] = None,
        max_branches: Optional[int] = None
) -> List[Tuple[Hashable, ...]]:
    """Every inclusion-minimal set that meets each member of ``family``.

    The search branches on the first set not yet hit. Branch ``i`` picks
    the ``i``-th item of that set and excludes the earlier ones, so each
    minimal hitting set is reached along exactly one path. A branch is
    cut as soon as some chosen item stops being the only chosen item of
    any set, since adding items can never restore that.

    Parameters
    ----------
    family : Iterable[Iterable[Hashable]]
        The sets to hit. Items must be mutually comparable.
    limit : Optional[:class:`int`]
        Raise once more than this many hitting sets have been found.
    max_branches : Optional[:class:`int`]
        Raise once more than this many branches have been opened. Unlike
        ``limit`` this also bounds searches whose branches mostly end
        without a hitting set.

    Raises
    ------
    :class:`~msmb.exceptions.BudgetExceeded`
        More than ``limit`` minimal hitting sets exist, or the search
        needs more than ``max_branches`` branches.

    Returns
    -------
    List[Tuple[Hashable, ...]]
        Sorted tuples of items, the list itself sorted. An empty family
        has the single hitting set ``()``; a family holding an empty set
        has none.
    """
    sets = [frozenset(s) for s in family]
    items = sorted(set().union(*sets))
    position = {item: i for i, item in enumerate(items)}
    masks = sorted(
        {sum(1 << position[item] for item in s) for s in sets}
    )

    if 0 in masks:
        return []

    found: List[int] = []
    branches = 0

    def _search(chosen: int, excluded: int):
        nonlocal branches
        branches += 1
        if max_branches is not None and branches > max_branches:
            raise BudgetExceeded.from_sizes(
                "Hitting-set branches", branches, max_branches
            )

        for mask in masks:
            if not mask & chosen:
                break
        else:
            found.append(chosen)
            if limit is not None and len(found) > limit:
                raise BudgetExceeded.from_sizes(
                    "Number of minimal hitting sets", len(found), limit
                )
            return

        skipped = excluded
        for bit in _bits(mask & ~excluded):
            extended = chosen | (1 << bit)
            if _every_item_private(extended, masks):
                _search(extended, skipped)
            skipped |= 1 << bit

    _search(0, 0)
    _log.debug(
        "%d minimal hitting sets for %d sets over %d items, %d branches.",
        len(found), len(masks), len(items), branches
    )

    return sorted(
        tuple(items[bit] for bit in _bits(chosen)) for chosen in found
    )

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from dataclasses import dataclass
from typing import Optional

from msmb.objects import Move, MoveSetKind, Side
from msmb.utils.conversion import fields_to_plain, remove_none, to_plain


@dataclass(frozen=True)
class Sample:
    name: str
    side: Side
    moves: tuple
    note: Optional[str] = None
    _hidden: int = 0


class TestConversion:

    def test_remove_none(self):
        assert remove_none([None, 1]) == [1]
        assert remove_none({None, 1}) == {1}
        assert remove_none({'a': 1, 'b': None}) == {'a': 1}
        assert remove_none((None, 2)) == (2,)

    def test_enum_and_tuples(self):
        assert to_plain(MoveSetKind.GRAVER) == "graver"
        assert to_plain((Move((1, -1)), Move((2, 0)))) == [[1, -1], [2, 0]]

    def test_sets_are_sorted(self):
        assert to_plain({(2, 1), (1, 2)}) == [[1, 2], [2, 1]]

    def test_dataclass_drops_none_and_private(self):
        sample = Sample("x", Side.NEGATIVE, (Move((1, -1)),))
        assert to_plain(sample) == {
            "name": "x",
            "side": "negative_part",
            "moves": [[1, -1]],
        }

    def test_fields_to_plain_keeps_set_values(self):
        sample = Sample("x", Side.POSITIVE, (), note="kept")
        assert fields_to_plain(sample)["note"] == "kept"

    def test_nested_dict(self):
        assert to_plain({1: [Side.POSITIVE]}) == {"1": ["positive_part"]}

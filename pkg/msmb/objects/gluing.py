# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Gluing trees of one-row matrices.

A type string is either a decimal integer (a leaf) or
``"(" left " ∘_" x " " right ")"``; ``o_`` is accepted in place of
``∘_`` when reading.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from ..exceptions import ParseError

if TYPE_CHECKING:
    from typing import Any, Dict, List, Optional, Tuple

_TOKEN = re.compile(r"\s*(\(|\)|(?:∘|o)_\d+|\d+)")


@dataclass(frozen=True)
class Gluing:
    """A split of the columns into two blocks that glue.

    Attributes
    ----------
    left: Tuple[:class:`int`, ...]
        Column indices of the block holding the first column.
    right: Tuple[:class:`int`, ...]
        The other columns.
    value: :class:`int`
        The generator ``x`` of the intersection of the two lattices. It
        lies in both semigroups.
    """
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    value: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "left": list(self.left),
            "right": list(self.right),
            "value": self.value
        }


@dataclass(frozen=True)
class GluingLeaf:
    """A single generator.

    Attributes
    ----------
    value: :class:`int`
        The entry of the matrix.
    column: Optional[:class:`int`]
        Its column index, unknown for parsed trees.
    """
    value: int
    column: Optional[int] = None

    def leaves(self) -> Tuple[GluingLeaf, ...]:
        return (self,)

    @property
    def depth(self) -> int:
        return 0

    def __str__(self) -> str:
        return str(self.value)

    def to_dict(self) -> Dict[str, Any]:
        return {"leaf": self.value, "column": self.column}


@dataclass(frozen=True)
class GluingNode:
    """Two glued subtrees.

    Attributes
    ----------
    left: Union[:class:`GluingLeaf`, :class:`GluingNode`]
        The subtree holding the earliest column.
    right: Union[:class:`GluingLeaf`, :class:`GluingNode`]
        The other subtree.
    value: :class:`int`
        The gluing value ``x``.
    """
    left: GluingTree
    right: GluingTree
    value: int

    @staticmethod
    def parse(text: str) -> GluingTree:
        """Alias of :func:`parse_gluing_type`."""
        return parse_gluing_type(text)

    def leaves(self) -> Tuple[GluingLeaf, ...]:
        return self.left.leaves() + self.right.leaves()

    @property
    def depth(self) -> int:
        return 1 + max(self.left.depth, self.right.depth)

    @property
    def is_first_kind(self) -> bool:
        """Every gluing peels off a single generator."""
        node: GluingTree = self
        while isinstance(node, GluingNode):
            if isinstance(node.right, GluingLeaf):
                node = node.left
            elif isinstance(node.left, GluingLeaf):
                node = node.right
            else:
                return False
        return True

    def __str__(self) -> str:
        return f"({self.left} ∘_{self.value} {self.right})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": str(self),
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
            "value": self.value
        }


GluingTree = Union[GluingLeaf, GluingNode]


def parse_gluing_type(text: str) -> GluingTree:
    """Read a gluing type string such as ``"((3 ∘_15 5) ∘_9 9)"``.

    Raises
    ------
    :class:`~msmb.exceptions.ParseError`
        The text does not follow the grammar.
    """
    tokens: List[str] = []
    position = 0
    stripped = text.strip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None:
            raise ParseError("Unexpected character in gluing type", text)
        tokens.append(match.group(1))
        position = match.end()

    def _tree(index: int) -> Tuple[GluingTree, int]:
        if index >= len(tokens):
            raise ParseError("Gluing type ends early", text)

        token = tokens[index]
        if token.isdigit():
            return GluingLeaf(int(token)), index + 1
        if token != "(":
            raise ParseError(f"Unexpected token {token!r}", text)

        left, index = _tree(index + 1)
        if index >= len(tokens) or tokens[index][1:2] != "_":
            raise ParseError("Expected a gluing value", text)
        value = int(tokens[index][2:])
        right, index = _tree(index + 1)

        if index >= len(tokens) or tokens[index] != ")":
            raise ParseError("Expected ')'", text)
        return GluingNode(left, right, value), index + 1

    tree, end = _tree(0)
    if end != len(tokens):
        raise ParseError("Trailing input after gluing type", text)
    return tree

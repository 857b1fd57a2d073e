# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Exact integer vector helpers. Vectors are plain tuples of ``int`` so
they hash, compare lexicographically and can be used as dict keys.
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Iterable, Sequence, Tuple

    from .types import Vector


def lcm(a: int, b: int) -> int:
    """Least common multiple of two nonnegative integers."""
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def gcd_all(values: Iterable[int]) -> int:
    """Greatest common divisor of an iterable, ``0`` when empty."""
    return reduce(gcd, values, 0)


def lcm_all(values: Iterable[int]) -> int:
    """Least common multiple of an iterable, ``1`` when empty."""
    return reduce(lcm, values, 1)


def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Sequence[int]) -> Vector:
    return tuple(-a for a in u)


def scale(k: int, u: Sequence[int]) -> Vector:
    return tuple(k * a for a in u)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def norm(u: Sequence[int]) -> int:
    """The 1-norm."""
    return sum(abs(a) for a in u)


def positive_part(u: Sequence[int]) -> Vector:
    return tuple(a if a > 0 else 0 for a in u)


def negative_part(u: Sequence[int]) -> Vector:
    return tuple(-a if a < 0 else 0 for a in u)


def support(u: Sequence[int]) -> Tuple[int, ...]:
    return tuple(i for i, a in enumerate(u) if a)


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Componentwise ``u <= v``."""
    return all(a <= b for a, b in zip(u, v))


def conformal_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """``u`` is below ``v`` in the conformal order: ``u+ <= v+`` and
    ``u- <= v-``. Equivalently every nonzero entry of ``u`` has the sign
    of the matching entry of ``v`` and no larger absolute value.
    """
    for a, b in zip(u, v):
        if a > 0:
            if b < a:
                return False
        elif a < 0:
            if b > a:
                return False
    return True


def sign_compatible(u: Sequence[int], v: Sequence[int]) -> bool:
    """No coordinate where ``u`` and ``v`` have opposite signs."""
    return all(a * b >= 0 for a, b in zip(u, v))


def is_zero(u: Sequence[int]) -> bool:
    return not any(u)


def canonical(u: Sequence[int]) -> Vector:
    """The representative of ``{u, -u}`` whose first nonzero entry is
    positive.
    """
    for a in u:
        if a > 0:
            return tuple(u)
        if a < 0:
            return neg(u)
    return tuple(u)


def primitive(u: Sequence[int]) -> Vector:
    """``u`` divided by the gcd of its entries. The sign is kept."""
    g = gcd_all(u)
    if g <= 1:
        return tuple(u)
    return tuple(a // g for a in u)


def primitive_canonical(u: Sequence[int]) -> Vector:
    return canonical(primitive(u))


def matvec(rows: Sequence[Sequence[int]], u: Sequence[int]) -> Vector:
    """Matrix-vector product of a row-major matrix and a vector."""
    return tuple(dot(row, u) for row in rows)


def vectors_below(bound: Sequence[int]) -> Iterable[Vector]:
    """Every nonnegative vector ``y <= bound`` except zero, in
    lexicographic order.
    """
    def _walk(prefix: Tuple[int, ...], index: int) -> Iterable[Vector]:
        if index == len(bound):
            if any(prefix):
                yield prefix
            return
        for value in range(bound[index] + 1):
            yield from _walk(prefix + (value,), index + 1)

    return _walk((), 0)

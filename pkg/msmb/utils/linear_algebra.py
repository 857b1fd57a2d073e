# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""Exact ranks, nullspaces and kernel lattices, delegated to sympy."""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

import sympy
from sympy.matrices.normalforms import hermite_normal_form

from .arithmetic import lcm_all, primitive

if TYPE_CHECKING:
    from typing import List, Sequence

    from .types import Vector


def _matrix(rows: Sequence[Sequence[int]]) -> sympy.Matrix:
    return sympy.Matrix([list(row) for row in rows])


def _to_fraction(value: sympy.Expr) -> Fraction:
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    return Fraction(str(value))


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix given by its rows. ``0`` when empty."""
    if not rows:
        return 0
    return int(_matrix(rows).rank())


def integer_nullspace(rows: Sequence[Sequence[int]]) -> List[Vector]:
    """Primitive integer basis of the rational nullspace of a matrix.

    Each rational basis vector sympy returns is scaled by the lcm of its
    denominators and divided by the gcd of the result. The vectors span
    the rational kernel, not necessarily its lattice of integer points.
    """
    vectors = []
    for column in _matrix(rows).nullspace():
        entries = [_to_fraction(x) for x in column]
        scale = lcm_all(f.denominator for f in entries)
        vectors.append(primitive(tuple(int(f * scale) for f in entries)))
    return vectors


def kernel_lattice(rows: Sequence[Sequence[int]]) -> List[Vector]:
    """A basis of the integer lattice ``{u in Z^n : A u = 0}``.

    The matrix ``[[I, 0], [A, 0]]``, padded with ``d`` zero columns so
    that every row takes part, is brought to column Hermite normal form.
    Column operations are unimodular and the rows of ``A`` are reduced
    first, so the columns whose ``A`` part is zero carry a lattice basis
    of the kernel in their identity part.
    """
    d, n = len(rows), len(rows[0])
    stacked = sympy.Matrix(
        [[int(i == j) for j in range(n)] + [0] * d for i in range(n)]
        + [[int(e) for e in row] + [0] * d for row in rows]
    )
    form = hermite_normal_form(stacked)

    basis = []
    for j in range(form.cols):
        column = [int(form[i, j]) for i in range(n + d)]
        if any(column[n:]) or not any(column[:n]):
            continue
        basis.append(tuple(column[:n]))
    return basis


def dependence(vectors: Sequence[Sequence[int]]) -> List[Vector]:
    """Integer relations ``sum c_i v_i = 0`` among ``vectors``."""
    columns = list(zip(*vectors))
    return integer_nullspace(columns)

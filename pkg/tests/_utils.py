# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from contextlib import contextmanager

from msmb.objects import SemigroupMatrix
from msmb.utils.arithmetic import canonical
from msmb.utils.parsing import parse_basis


@contextmanager
def assert_not_raises():
    """Dummy context manager to highlight a row of a test
    that should not raises any exception"""
    yield


def matrix(text):
    return SemigroupMatrix.parse(text)


def moves(text):
    """Canonical moves of a basis string, as a frozen set of tuples."""
    return frozenset(canonical(row) for row in parse_basis(text))


def as_set(vectors):
    return frozenset(tuple(v) for v in vectors)


def columns(text):
    """The columns of a matrix written row by row."""
    return set(zip(*parse_basis(text)))


#: Graver basis of (2 3 4), in the order used by the running example.
RUNNING_LABELS = "3 -2 0; 2 0 -1; 1 -2 1; 1 2 -2; 0 4 -3"
RUNNING_CLOSED = RUNNING_LABELS + "; 3 2 -3"
RUNNING_BASIS = "3 -2 0; 2 0 -1"


def random_row(rng, n, low, high, *, distinct=False):
    """A random ``1 x n`` matrix with entries in ``[low, high]``."""
    if distinct:
        entries = rng.sample(range(low, high + 1), n)
    else:
        entries = [rng.randint(low, high) for _ in range(n)]
    return SemigroupMatrix.from_rows([entries])

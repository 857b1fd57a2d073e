"""
msmb
====================
Markov, semigroup and move-basis toolkit: Graver and Markov bases of
integer matrices, distance reducing Markov bases, monomial curves and
the distance reducing complex.

Copyright msmb 2024-Present
Full MIT License can be found in `LICENSE` at the project root.
"""

from typing import NamedTuple, Literal, Optional

from ._config import SearchConfig
from .core import (
    Report, check_dim3, check_dim4, check_first_kind, circuits,
    distance_reducing_complex, graver, greedy_connect, irreducible_sets,
    is_distance_reducing, is_strongly_distance_reducing, metric_cone,
    minimal_markov_bases, universal_distance_reducing, verify_markov
)
from .exceptions import (
    MSMBError, InputError, InvalidInput, ParseError, ZeroColumn, NotPointed,
    NonDistinctEntries, IndexOutOfRange, SumMismatch, DimensionMismatch,
    SearchError, BoundTooLarge, BudgetExceeded, GuardExceeded,
    DimensionGuard, NonConvergence, NotReducing, StuckError, Unsupported
)
from .objects import Move, MoveSet, MoveSetKind, SemigroupMatrix

__package__ = "msmb"
__title__ = "msmb"
__description__ = "Markov, semigroup and move-basis toolkit."
__author__ = "msmb contributors"
__license__ = "MIT"

ReleaseType = Optional[Literal["alpha", "beta", "candidate", "final", "dev"]]


class VersionInfo(NamedTuple):
    """A Class representing the version of the msmb library."""

    major: int
    minor: int
    micro: int

    release_level: ReleaseType = None
    serial: int = 0

    def __repr__(self) -> str:
        return f"{self.major}.{self.minor}.{self.micro}" + (
                f"-{self.release_level}{self.serial}"
                * (self.release_level is not None)
        )


version_info = VersionInfo(0, 1, 0)
__version__ = repr(version_info)

__all__ = (
    "BoundTooLarge", "BudgetExceeded", "DimensionGuard", "DimensionMismatch",
    "GuardExceeded", "IndexOutOfRange", "InputError", "InvalidInput",
    "MSMBError", "Move", "MoveSet", "MoveSetKind", "NonConvergence",
    "NonDistinctEntries", "NotPointed", "NotReducing", "ParseError",
    "Report", "SearchConfig", "SearchError", "SemigroupMatrix",
    "StuckError", "SumMismatch", "Unsupported", "ZeroColumn", "__author__",
    "__package__", "__title__", "__version__", "check_dim3", "check_dim4",
    "check_first_kind", "circuits", "distance_reducing_complex", "graver",
    "greedy_connect", "irreducible_sets", "is_distance_reducing",
    "is_strongly_distance_reducing", "metric_cone", "minimal_markov_bases",
    "universal_distance_reducing", "verify_markov"
)

# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Optional, Sequence


class MSMBError(Exception):
    """Base exception class for all msmb errors"""


class InputError(MSMBError, ValueError):
    """Base class for errors caused by the values a caller passed in.
    The command line maps every subclass to exit status 2.
    """


class InvalidInput(InputError):
    """A value has the right type but breaks a precondition of the
    operation, e.g. a basis that is not a minimal Markov basis.
    """


class ParseError(InputError):
    """A matrix, basis, sign matrix or gluing type string could not be
    parsed.

    Attributes
    ----------
    text: :class:`str`
        The offending input.
    """

    def __init__(self, message: str, text: str = ""):
        self.text = text
        super().__init__(f"{message} (got {text!r})" if text else message)


class ZeroColumn(InputError):
    """The matrix has a column made of zeros only."""

    def __init__(self, column: int):
        self.column = column
        super().__init__(f"Column {column + 1} of the matrix is zero.")


class NotPointed(InputError):
    """The kernel of the matrix meets the nonnegative orthant in a
    nonzero point, so fibers are infinite.
    """


class NonDistinctEntries(InputError):
    """A 1x3 matrix has a repeated entry."""


class IndexOutOfRange(InputError, IndexError):
    """An index pair does not satisfy ``2 <= i < j <= n``."""


class SumMismatch(InputError):
    """A decomposition ``z = u + v`` does not add up."""

    @classmethod
    def from_vectors(
            cls,
            z: Sequence[int],
            u: Sequence[int],
            v: Sequence[int]
    ) -> SumMismatch:
        """Create an instance describing the three vectors.

        Parameters
        ----------
        z : Sequence[:class:`int`]
            The vector that should be the sum.
        u : Sequence[:class:`int`]
            First summand.
        v : Sequence[:class:`int`]
            Second summand.
        """
        return cls(f"{tuple(z)} != {tuple(u)} + {tuple(v)}")


class DimensionMismatch(InputError):
    """Two vectors, or a vector and a matrix, have incompatible sizes."""


class SearchError(MSMBError):
    """Base class for enumeration guards. Raised when a search would grow
    past the configured cap.

    Attributes
    ----------
    size: Optional[:class:`int`]
        The size that was reached or requested.
    cap: Optional[:class:`int`]
        The configured cap.
    """

    def __init__(
            self,
            message: str,
            size: Optional[int] = None,
            cap: Optional[int] = None
    ):
        self.size = size
        self.cap = cap
        super().__init__(message)

    @classmethod
    def from_sizes(cls, what: str, size: int, cap: int) -> SearchError:
        """Create an instance by description.

        Parameters
        ----------
        what : :class:`str`
            Name of the quantity that was capped.
        size : :class:`int`
            The size that was reached.
        cap : :class:`int`
            The configured cap.
        """
        return cls(
            f"{what} reached {size}, the configured cap is {cap}.",
            size,
            cap
        )


class BoundTooLarge(SearchError):
    """The kernel-ball search space for the requested bound is larger
    than the ``max_cells`` cap.
    """


class BudgetExceeded(SearchError):
    """A completion, fiber or basis enumeration produced more elements
    than allowed.
    """


class GuardExceeded(SearchError):
    """The vector set handed to the reduction complex is too large."""


class DimensionGuard(SearchError):
    """An inequality system has too many variables or inequalities for
    the double description step.
    """


class NonConvergence(SearchError):
    """The reduction closure kept adding vectors past its cap."""


class NotReducing(MSMBError):
    """A move set that was required to be distance reducing is not.

    Attributes
    ----------
    witness: Optional[Sequence[:class:`int`]]
        A Graver element the move set fails to reduce.
    """

    def __init__(self, message: str, witness: Optional[Sequence[int]] = None):
        self.witness = witness
        super().__init__(message)


class StuckError(MSMBError):
    """No reducing step was found although the move set passed the
    distance reducing test. Indicates a bug.
    """


class Unsupported(MSMBError):
    """A closed-form checker was called on an input outside the cases it
    characterises.
    """

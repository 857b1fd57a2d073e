# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from os import environ
from typing import Optional

_log = logging.getLogger(__name__)

MAX_CELLS_ENV = "MSMB_MAX_CELLS"


@dataclass(frozen=True, repr=False)
class SearchConfig:
    """Caps for every enumeration the library runs. Everything in the
    library is exact, so these caps are the only thing standing between
    a mistyped matrix and an afternoon of CPU time.

    Attributes
    ----------
    max_cells: :class:`int`
        Upper bound on the number of points produced by a fiber
        enumeration and on the number of candidate positive parts in a
        kernel-ball search.
        |default| ``2_000_000``
    max_graver: :class:`int`
        Element cap of the completion procedure.
        |default| ``20_000``
    max_bases: :class:`int`
        Cap on enumerated minimal (distance reducing) Markov bases and on
        minimal hitting sets.
        |default| ``100_000``
    max_branches: :class:`int`
        Cap on the branches a hitting-set search may open, found or not.
        |default| ``1_000_000``
    max_vectors: :class:`int`
        Largest vector set accepted by the reduction complex.
        |default| ``12``
    max_variables: :class:`int`
        Largest number of variables accepted by the double description
        step.
        |default| ``8``
    max_inequalities: :class:`int`
        Largest number of inequalities accepted by the double
        description step.
        |default| ``200``
    max_closure_additions: :class:`int`
        How many vectors the reduction closure may add.
        |default| ``32``
    coeff_bound: :class:`int`
        Bound on the absolute value of the coefficients of the linear
        relations scanned by the reduction closure.
        |default| ``3``
    """
    max_cells: int = 2_000_000
    max_graver: int = 20_000
    max_bases: int = 100_000
    max_branches: int = 1_000_000
    max_vectors: int = 12
    max_variables: int = 8
    max_inequalities: int = 200
    max_closure_additions: int = 32
    coeff_bound: int = 3

    def __post_init__(self):
        for name, value in vars(self).items():
            if not isinstance(value, int) or value <= 0:
                raise ValueError(f"{name} must be a positive integer")

    def __repr__(self) -> str:
        return (
            f"SearchConfig(max_cells={self.max_cells}, "
            f"max_graver={self.max_graver}, max_bases={self.max_bases}, "
            f"coeff_bound={self.coeff_bound})"
        )

    @classmethod
    def from_env(cls) -> SearchConfig:
        """Build the default configuration, letting ``MSMB_MAX_CELLS``
        override the cell cap.

        Returns
        -------
        :class:`~msmb._config.SearchConfig`
            The configuration. An unusable environment value is logged
            and ignored.
        """
        raw = environ.get(MAX_CELLS_ENV)
        if raw is None:
            return cls()

        try:
            return cls(max_cells=int(raw))
        except ValueError:
            _log.warning(
                "Ignoring %s=%r, expected a positive integer.",
                MAX_CELLS_ENV, raw
            )
            return cls()

    def with_overrides(self, **overrides: Optional[int]) -> SearchConfig:
        """Copy of the configuration with some caps replaced. ``None``
        values are skipped so that optional CLI flags can be passed
        through directly.
        """
        return replace(
            self, **{k: v for k, v in overrides.items() if v is not None}
        )


def resolve(config: Optional[SearchConfig] = None) -> SearchConfig:
    """Return ``config``, or the environment-aware default."""
    return config if config is not None else SearchConfig.from_env()

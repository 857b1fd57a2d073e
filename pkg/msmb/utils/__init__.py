# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from .conversion import fields_to_plain, remove_none, to_plain
from .double_description import extreme_rays, grading_vector, satisfies
from .hitting_sets import minimal_hitting_sets
from .linear_algebra import (
    dependence, integer_nullspace, kernel_lattice, rank
)
from .parsing import (
    format_vector, parse_basis, parse_matrix, parse_rows, parse_signs
)
from .types import IntMatrix, Vector

__all__ = (
    "IntMatrix", "Vector", "dependence", "extreme_rays", "fields_to_plain",
    "format_vector", "grading_vector", "integer_nullspace", "kernel_lattice",
    "minimal_hitting_sets", "parse_basis", "parse_matrix", "parse_rows",
    "parse_signs", "rank", "remove_none", "satisfies", "to_plain"
)

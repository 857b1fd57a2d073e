# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from typing import Tuple

#: An exact integer vector.
Vector = Tuple[int, ...]

#: A row-major integer matrix.
IntMatrix = Tuple[Vector, ...]

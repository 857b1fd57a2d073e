# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from .cone import (
    Cone, IneqSystem, Inequality, MatroidCircuit, ReductionSet, Relation
)
from .curves import (
    CheckResult, Condition, FirstKindBasis, HerzogCase,
    HerzogClassification, RijRecord, SignMatrix
)
from .gluing import (
    Gluing, GluingLeaf, GluingNode, GluingTree, parse_gluing_type
)
from .matrix import Fiber, SemigroupMatrix
from .move import DecompositionFlags, Direction, Move, as_moves
from .move_set import MoveSet, MoveSetKind
from .reduction import (
    CLAUSES, IrreducibleSets, MarkovCheck, MarkovDegree, ReducingCheck,
    ReductionWitness, Requirement, Side, Step, UniversalComparison,
    UniversalReducing
)

__all__ = (
    "CLAUSES", "CheckResult", "Condition", "Cone", "DecompositionFlags",
    "Direction", "Fiber", "FirstKindBasis", "Gluing", "GluingLeaf",
    "GluingNode", "GluingTree", "HerzogCase", "HerzogClassification",
    "IneqSystem", "Inequality", "IrreducibleSets", "MarkovCheck",
    "MarkovDegree", "MatroidCircuit", "Move", "MoveSet", "MoveSetKind",
    "ReducingCheck", "ReductionSet", "ReductionWitness", "Relation",
    "Requirement", "RijRecord", "SemigroupMatrix", "Side", "SignMatrix",
    "Step", "UniversalComparison", "UniversalReducing", "as_moves",
    "parse_gluing_type"
)

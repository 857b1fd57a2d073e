# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from .bases import (
    as_move_set, circuits, graver, indispensables, markov_degrees,
    minimal_basis_size, minimal_markov_bases, require_minimal_markov,
    universal_markov, verify_markov
)
from .distance import (
    check_reduces_circuits, compare_universal, default_bound, greedy_connect,
    irreducible_sets, is_distance_reducing, is_strongly_distance_reducing,
    reduces_element, reducers_of, strongly_reduces_element,
    universal_distance_reducing, universal_strongly_distance_reducing
)
from .lattice import (
    applicable, decomposition_predicates, enumerate_fiber,
    enumerate_kernel_ball, fiber_components, is_pointed, kernel_basis,
    split_candidates
)
from .monomial_curves import (
    admits_first_kind, all_gluing_trees, check_dim3, check_dim4,
    check_first_kind, condition_Rij, find_gluings, gluing_type, herzog_dim3,
    is_complete_intersection, is_specially_symmetric, semigroup_member,
    sign_game
)
from .reduction_complex import (
    b_reduction_closure, distance_reducing_complex, extreme_rays,
    intersect_cones, matroid_circuits_with_coeffs, metric_cone,
    reduction_inequality_sets
)
from .report import Report
from .selftest import SelfTestRecord, run_selftest

__all__ = (
    "Report", "SelfTestRecord", "admits_first_kind", "all_gluing_trees",
    "applicable", "as_move_set", "b_reduction_closure", "check_dim3",
    "check_dim4", "check_first_kind", "check_reduces_circuits", "circuits",
    "compare_universal", "condition_Rij", "decomposition_predicates",
    "default_bound", "distance_reducing_complex", "enumerate_fiber",
    "enumerate_kernel_ball", "extreme_rays", "fiber_components",
    "find_gluings", "gluing_type", "graver", "greedy_connect",
    "herzog_dim3", "indispensables", "intersect_cones", "irreducible_sets",
    "is_complete_intersection", "is_distance_reducing", "is_pointed",
    "is_specially_symmetric", "is_strongly_distance_reducing",
    "kernel_basis", "markov_degrees", "matroid_circuits_with_coeffs",
    "metric_cone", "minimal_basis_size", "minimal_markov_bases",
    "reduces_element", "reducers_of", "reduction_inequality_sets",
    "require_minimal_markov", "run_selftest", "semigroup_member",
    "sign_game", "split_candidates", "strongly_reduces_element",
    "universal_distance_reducing", "universal_markov",
    "universal_strongly_distance_reducing", "verify_markov"
)

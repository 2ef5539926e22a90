"""Matrix elements and characters of irreducible representations of S_n, A_n, U(n) and SO(n)."""
from .altrep import AltIrrepLabel, Branch, alt_matrix_element, associator, split_basis
from .gelfand import GelfandPattern, GTWeight, enumerate_patterns, gl_action, gt_dimension, so_action
from .hadamard import ShotPlan, overlap, p_zero, simulate_estimate
from .liegroup import (
    TwoLevelFactor,
    group_rep_so,
    group_rep_u,
    norm_profile,
    two_level_decompose,
    weyl_character_so,
    weyl_character_u,
    weyl_dimension,
)
from .perm import Permutation, bubblesort_decompose, cycle_type, hard_instance, sign
from .schar import estimate_normalized_character, exact_character_roichman
from .symrep import exact_character, matrix_element, rep_adjacent, rep_permutation
from .tableaux import StandardTableau, YoungDiagram, enumerate_syt, hook_walk_sample, syt_count

__all__ = [
    "AltIrrepLabel", "Branch", "alt_matrix_element", "associator", "split_basis",
    "GelfandPattern", "GTWeight", "enumerate_patterns", "gl_action", "gt_dimension", "so_action",
    "ShotPlan", "overlap", "p_zero", "simulate_estimate",
    "TwoLevelFactor", "group_rep_so", "group_rep_u", "norm_profile", "two_level_decompose",
    "weyl_character_so", "weyl_character_u", "weyl_dimension",
    "Permutation", "bubblesort_decompose", "cycle_type", "hard_instance", "sign",
    "estimate_normalized_character", "exact_character_roichman",
    "exact_character", "matrix_element", "rep_adjacent", "rep_permutation",
    "StandardTableau", "YoungDiagram", "enumerate_syt", "hook_walk_sample", "syt_count",
]

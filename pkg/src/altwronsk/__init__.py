"""Exact universal constants of alternating weighted-derivative compositions.

Composing 2p derivative operators of strict order p, each weighted by a
function, and summing over all orderings with permutation signs yields a
single operator: a universal constant times the Wronskian of the weights
times the p-th derivative. This package computes those constants exactly by
enumerating the contributing permutations with a pruned backtracking search
and evaluating a falling-factorial product per permutation, and verifies
them against a literal symbolic-operator expansion.
"""

from .engine import (
    ConstReport,
    ExactDivisionError,
    const_of_p,
    exponent_sequence,
    falling_factorial,
    ratios,
    render_ratio,
    term_coefficient,
    wronskian_of_monomials,
)
from .oracle import (
    VerificationRecord,
    WeightedOperator,
    alternating_composition,
    apply_weighted_operator,
    brute_force_const,
    derivative,
    monomial_weights,
    random_polynomial,
    symbolic_wronskian,
    verify_theorem,
)
from .parallel import (
    PartialResult,
    SubtreeTask,
    compute,
    default_depth,
    partition_work,
    reduce,
    run_task,
    run_task_counting,
)
from .permutations import (
    count_late_growing,
    enumerate_backtracking,
    enumerate_backtracking_signed,
    enumerate_filtered,
    format_permutation,
    is_contributing,
    is_late_growing,
    is_permutation,
    parse_permutation,
    sign,
    suffix_partial_sums,
)
from .polynomial import Polynomial, monomial

__version__ = "0.1.0"

__all__ = [
    "ConstReport",
    "ExactDivisionError",
    "PartialResult",
    "Polynomial",
    "SubtreeTask",
    "VerificationRecord",
    "WeightedOperator",
    "alternating_composition",
    "apply_weighted_operator",
    "brute_force_const",
    "compute",
    "const_of_p",
    "count_late_growing",
    "default_depth",
    "derivative",
    "enumerate_backtracking",
    "enumerate_backtracking_signed",
    "enumerate_filtered",
    "exponent_sequence",
    "falling_factorial",
    "format_permutation",
    "is_contributing",
    "is_late_growing",
    "is_permutation",
    "monomial",
    "monomial_weights",
    "parse_permutation",
    "partition_work",
    "random_polynomial",
    "ratios",
    "reduce",
    "render_ratio",
    "run_task",
    "run_task_counting",
    "sign",
    "suffix_partial_sums",
    "symbolic_wronskian",
    "term_coefficient",
    "verify_theorem",
    "wronskian_of_monomials",
]

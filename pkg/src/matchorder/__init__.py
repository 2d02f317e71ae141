"""Decision procedures for a move-generated order on matchings, its
permutation counterpart, and the permutation graphs that separate them."""

from .engine import (
    BUDGET,
    DEFAULT_BUDGET,
    Certificate,
    MoveSet,
    SearchResult,
    Step,
    VerificationResult,
    antichain_check,
    matching_leq,
    perm_leq,
    verify_certificate,
)
from .matchings import (
    Matching,
    MoveKind,
    decompose_intertwined,
    enumerate_moves,
    is_intertwined,
    matching_leq_total,
    matching_to_word,
    word_to_matching,
)
from .permgraphs import (
    LabeledGraph,
    UnlabeledGraph,
    fork_graph,
    fork_permutation,
    is_permutation_graph,
    koh_ree_check,
    permutation_from_labeled,
    permutation_graph,
)
from .permutations import (
    Permutation,
    RewriteRule,
    bruhat_closure_leq,
    contains_pattern,
    extended_rewrites,
    insertions,
    inversions,
    type2_swaps,
)

__all__ = [
    "BUDGET",
    "DEFAULT_BUDGET",
    "Certificate",
    "LabeledGraph",
    "Matching",
    "MoveKind",
    "MoveSet",
    "Permutation",
    "RewriteRule",
    "SearchResult",
    "Step",
    "UnlabeledGraph",
    "VerificationResult",
    "antichain_check",
    "bruhat_closure_leq",
    "contains_pattern",
    "decompose_intertwined",
    "enumerate_moves",
    "extended_rewrites",
    "fork_graph",
    "fork_permutation",
    "insertions",
    "inversions",
    "is_intertwined",
    "is_permutation_graph",
    "koh_ree_check",
    "matching_leq",
    "matching_leq_total",
    "matching_to_word",
    "perm_leq",
    "permutation_from_labeled",
    "permutation_graph",
    "type2_swaps",
    "verify_certificate",
    "word_to_matching",
]

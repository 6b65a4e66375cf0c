"""Splits, phylogenetic trees, and the flag property of the boundary complex of M_{0,n}."""

from .complexes import SimplicialComplex, f_vector, flag_complex_of_graph, is_flag
from .errors import (
    DegreeViolation,
    EmptyOrFullSubset,
    EnumerationTooLarge,
    IncompatibleSplit,
    IncompatibleSystem,
    InvalidTree,
    LabelOutOfRange,
    M0nFlagError,
    NotStable,
    ParseError,
    TaxonCountMismatch,
    TaxonCountTooLarge,
    TaxonCountTooSmall,
)
from .kernels import BACKEND
from .moduli import (
    BoundaryDivisor,
    FlagReport,
    Stratum,
    boundary_divisors,
    compatibility_clique_counts,
    divisors_intersect,
    dual_complex,
    enumerate_strata,
    stratum_of_divisor_set,
    verify_flag_theorem,
)
from .newick import parse_newick, to_newick
from .splits import (
    Split,
    SplitSystem,
    compatible,
    enumerate_stable_splits,
    format_split,
    is_pairwise_compatible,
    is_stable,
    keel_intersects,
    make_split,
    parse_split,
)
from .trees import (
    PhylogeneticTree,
    enumerate_trees,
    is_binary,
    pop_split,
    splits_of_tree,
    star_tree,
    tree_from_splits,
)

__version__ = "0.1.0"

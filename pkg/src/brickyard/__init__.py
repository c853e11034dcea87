"""
brickyard: semibrick pairs over RA_n and the D4 preprojective algebra.

Permutations, noncrossing arc diagrams and string bricks model the
combinatorial side; quiver representations over a prime field provide the
independent linear-algebra oracle; the mutation engine decides
completability of semibrick pairs and completes full-rank ones.
"""

from .arcs import (
    GREEN,
    LEFT,
    RED,
    RIGHT,
    Arc,
    ArcDiagram,
    SubarcRelation,
    crossing_witness,
    delta,
    delta_bar,
    delta_inverse,
    is_left_of,
    noncrossing,
    subarc_relation,
)
from .pairs import (
    CompletabilityResult,
    MutationError,
    NotFullRankError,
    SemibrickPair,
    all_semibrick_pairs,
    all_smcs,
    complete_full_rank,
    completion_of_D,
    completion_of_U,
    is_completable,
    is_pairwise_completable,
    is_semibrick_pair,
    mutate_left,
    mutate_right,
    singly_left_compatible,
    singly_right_compatible,
    smc_from_permutation,
    wide_hull_simples,
)
from .permutations import perm_stats, weak_leq
from .quiver import (
    AlgebraPresentation,
    Representation,
    d4_named_modules,
    d4_presentation,
    ext_space,
    extension_from_cocycle,
    hom_image_factorization,
    hom_space,
    is_brick,
    is_iso_class_equal,
    ra_presentation,
    rep_of_string,
    universal_extension,
)
from .strings import (
    DOWN,
    UP,
    StringBrick,
    enumerate_bricks,
    ext_nonzero_by_arcs,
    hom_arc_basis,
    sigma,
    sigma_inverse,
)
from .suites import SUITES, verify_suite
from .universe import ArcUniverse, MatrixUniverse, get_arc_universe, get_matrix_universe

__version__ = "0.1.0"

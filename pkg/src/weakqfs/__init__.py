"""Exact weak Fourier sampling analysis for hidden subgroups of S_n.

Subgroups of S_n are treated as non-commutative codes: the minimal degree
plays the role of minimum distance and the support distribution the role of
the weight distribution.
"""
__version__ = "0.1.0"

from .perm import Permutation, compose, cycle_type, format_permutation, parse_permutation, support
from .groups import (
    PermGroup,
    build_group,
    class_intersections,
    minimal_blocks,
    minimal_degree,
    orbits,
    parse_group,
    format_group,
    support_distribution,
    symmetric_group,
)
from .characters import character, class_size, dimension, min_class_size, partitions
from .distinguish import (
    ClassVector,
    RadicalSum,
    classify,
    corollary2_bounds,
    dist_report,
    lemma_last_bound,
    prop1_bounds,
    sample_weak,
    theoremB_rhs,
    total_variation,
    weak_distribution,
)
from .codes import BinaryLinearCode, embed, min_weight, parse_code, random_gv_code, weight_distribution
from .constructions import block_group, fpf_involution, two_subset_group

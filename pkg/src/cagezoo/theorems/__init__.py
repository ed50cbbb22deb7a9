"""Constructions and verifiers for the cage theorems and their relatives."""

from .cage import (
    BacharachRecord,
    BacharachReport,
    CagedDimensionReport,
    CorollaryFamilyReport,
    DiagonalReport,
    LowerBoundReport,
    NinthNodeReport,
    RemarkReport,
    bacharach,
    collinear_diagonal_grid,
    corollary_family,
    corollary_point_count,
    diagonal_equivalence,
    expected_caged_nullity,
    random_partition,
    random_red_points,
    reduce_caged_curve,
    remark_counterexample,
    verify_caged_dimension,
    verify_lower_bound,
    verify_ninth_node,
)
from .elliptic import INFINITY, ec_add, ec_neg, third_intersection, weierstrass
from .gram import GramResult, OctagramDual, mystic_gram, new_node_cycles, octagram_dual, polygon_lines
from .pencil import (
    PencilClass,
    node_gradient,
    pencil,
    pencil_through_point,
    pencil_with_tangent,
)

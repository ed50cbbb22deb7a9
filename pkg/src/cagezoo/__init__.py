"""Exact computations with cages of lines and the curves through their nodes."""

from .errors import CageError
from .geometry import (
    UNIT_CIRCLE,
    Cage,
    Line,
    ProjPoint,
    build_cage,
    collinear,
    conic_point,
    grid_cage,
    intersect_lines,
    random_cage,
)
from .linalg import (
    ExactMatrix,
    LinearReport,
    curves_through,
    hilbert,
    independence_report,
    null_space,
    vanishing_matrix,
)
from .nodesets import (
    QUASI,
    SUPRA_QUASI,
    NodeSet,
    classify,
    diagonal,
    gram_partition,
    nondiagonal,
    random_supra_quasi,
    supra_triangular,
    triangular,
)
from .poly import (
    HomPoly,
    Scalar,
    X,
    Y,
    Z,
    divide_by_linear,
    evaluate,
    gradient,
    homogenize,
    multiply,
)

__version__ = "0.1.0"

"""Exact polyhedral toolkit for set covering polyhedra.

Everything is rational arithmetic on ``fractions.Fraction``.  The
``verify`` module holds the instance generators and structural checkers.
"""

from .covering import (
    CoveringMatrix,
    PolyhedronKind,
    build,
    circulant3,
    lift,
    lift_closure,
    minimal_covers,
    parse_matrix,
)
from .polyhedron import HRep, VRep, adjacent_rank, h_to_v, truncate_hypercube, v_to_h
from .skeleton import Method, SkeletonGraph, build_skeleton, trubin_check

__version__ = "0.1.0"

__all__ = [
    "CoveringMatrix", "HRep", "Method", "PolyhedronKind", "SkeletonGraph", "VRep",
    "adjacent_rank", "build", "circulant3", "build_skeleton", "h_to_v", "lift", "lift_closure",
    "minimal_covers", "parse_matrix", "truncate_hypercube", "trubin_check", "v_to_h",
]

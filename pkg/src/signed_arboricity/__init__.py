"""Signed tree-colorings and signed vertex arboricity of signed graphs."""

from .core import (
    ClassSubgraph,
    ColorDomain,
    Coloring,
    SignedGraph,
    class_subgraph,
    is_forest,
    is_proper_signed_coloring,
    is_signed_tree_coloring,
    va_upper_check,
)
from .switch import is_balanced, signature_from_potential, switch_set, switch_vertex, switching_orbit_sample
from .planar import (
    NearTriangulation,
    RotationSystem,
    ear_neighbors,
    find_chord,
    is_triangulation,
    planar_embed,
    trace_faces,
    validate_near_triangulation,
)
from .color import (
    combine_colorings,
    tree_color_near_triangulation,
    tree_color_triangle_rooted,
    tree_color_wagner,
    triangle_precolor_ok,
    wagner_graph,
)
from .k5 import DecompositionTree, decompose, tree_color_k5_free, va_signed_upper3
from .oracle import OracleResult, generate_balanced, generate_triangulation, oracle_va, oracle_va_unsigned

__version__ = "0.1.0"

__all__ = [
    "ClassSubgraph",
    "ColorDomain",
    "Coloring",
    "SignedGraph",
    "class_subgraph",
    "is_forest",
    "is_proper_signed_coloring",
    "is_signed_tree_coloring",
    "va_upper_check",
    "is_balanced",
    "signature_from_potential",
    "switch_set",
    "switch_vertex",
    "switching_orbit_sample",
    "NearTriangulation",
    "RotationSystem",
    "ear_neighbors",
    "find_chord",
    "is_triangulation",
    "planar_embed",
    "trace_faces",
    "validate_near_triangulation",
    "combine_colorings",
    "tree_color_near_triangulation",
    "tree_color_triangle_rooted",
    "tree_color_wagner",
    "triangle_precolor_ok",
    "wagner_graph",
    "DecompositionTree",
    "decompose",
    "tree_color_k5_free",
    "va_signed_upper3",
    "OracleResult",
    "generate_balanced",
    "generate_triangulation",
    "oracle_va",
    "oracle_va_unsigned",
]

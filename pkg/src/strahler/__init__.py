"""Refined Horton-Strahler numbers, Dyck paths, and the bijection between them.

The library models full binary trees and Dyck paths, computes the classical
and refined Horton-Strahler numbers, decomposes both kinds of object along a
spine, converts each way between them while preserving size and statistic,
and exhaustively verifies that tree refined numbers and path heights are
equidistributed at desk scale.
"""

from .bijection import golden_witness, path_to_tree, tree_to_path
from .dyck import (
    EMPTY_PATH,
    DyckPath,
    Landmarks,
    PathDecomposition,
    compose_path,
    decompose_path,
    height,
    landmarks,
    parse_path,
    random_path,
)
from .enumeration import (
    Histogram,
    VerifyReport,
    VerifyRow,
    aggregate_dyadic,
    all_dyck_paths,
    all_full_binary_trees,
    catalan,
    histogram_by_classical_hs,
    histogram_by_height,
    histogram_by_refined_hs,
    verify_equidistribution,
)
from .tree import (
    LEAF,
    SpinalDecomposition,
    Tree,
    ancestors,
    can_embed,
    classical_hs,
    complete_binary,
    compose_tree,
    decompose_tree,
    internal_count,
    meet,
    parse_tree,
    refined_hs,
    refined_hs_oracle,
    spine_vertex,
    subtree,
    tau,
    tree_from_vertices,
    tree_to_text,
    tree_vertices,
    vertex_count,
)

__version__ = "0.1.0"

__all__ = [
    "DyckPath",
    "EMPTY_PATH",
    "Histogram",
    "LEAF",
    "Landmarks",
    "PathDecomposition",
    "SpinalDecomposition",
    "Tree",
    "VerifyReport",
    "VerifyRow",
    "aggregate_dyadic",
    "all_dyck_paths",
    "all_full_binary_trees",
    "ancestors",
    "can_embed",
    "catalan",
    "classical_hs",
    "complete_binary",
    "compose_path",
    "compose_tree",
    "decompose_path",
    "decompose_tree",
    "golden_witness",
    "height",
    "histogram_by_classical_hs",
    "histogram_by_height",
    "histogram_by_refined_hs",
    "internal_count",
    "landmarks",
    "meet",
    "parse_path",
    "parse_tree",
    "path_to_tree",
    "random_path",
    "refined_hs",
    "refined_hs_oracle",
    "spine_vertex",
    "subtree",
    "tau",
    "tree_from_vertices",
    "tree_to_path",
    "tree_to_text",
    "tree_vertices",
    "vertex_count",
]

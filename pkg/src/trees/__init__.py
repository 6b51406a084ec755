# src/trees/__init__.py
from .tree import TrivalentTree, canonical_side, enumerate_trees, neighbors, pair_index, pairs, relabel, tree_distance
from .adjacency import AdjacencyData, adjacency, check_groebner_cone, groebner_relabel, interior_weight

__all__ = [
    "TrivalentTree", "canonical_side", "enumerate_trees", "neighbors", "pair_index", "pairs", "relabel",
    "tree_distance", "AdjacencyData", "adjacency", "check_groebner_cone", "groebner_relabel", "interior_weight",
]

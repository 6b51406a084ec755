# src/tests/test_trees.py
"""
Trivalent trees, nearest-neighbour interchanges and the Gröbner relabelling.

Usage (from repo root):
  python -m src.tests.test_trees
"""

from __future__ import annotations
from fractions import Fraction

import networkx as nx
import pytest

from src.kernel.errors import InvalidInput
from src.trees.adjacency import adjacency, check_groebner_cone, groebner_relabel
from src.trees.tree import TrivalentTree, enumerate_trees, neighbors, pairs, relabel, tree_distance


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def test_tree_counts():
    for m in (4, 5, 6, 7):
        trees = enumerate_trees(m)
        assert len(trees) == double_factorial(2 * m - 5), f"m={m}: {len(trees)} trees"
        assert len(set(trees)) == len(trees), "duplicate trees"


def test_splits_are_canonical():
    t = TrivalentTree.from_splits(5, [[1, 2], [4, 5]])
    assert t.split_set == {frozenset({3, 4, 5}), frozenset({4, 5})}, "sides must avoid leaf 1"
    assert t.edge_of_side([1, 2]) == t.edge_of_side([3, 4, 5])
    assert t == TrivalentTree.from_splits(5, [[3, 4, 5], [1, 2, 3]])


def test_bad_splits_rejected():
    with pytest.raises(InvalidInput):
        TrivalentTree.from_splits(5, [[1, 2], [2, 3]])      # incompatible
    with pytest.raises(InvalidInput):
        TrivalentTree.from_splits(5, [[1, 2]])               # too few
    with pytest.raises(InvalidInput):
        TrivalentTree.from_splits(4, [[1]])                  # trivial
    with pytest.raises(InvalidInput):
        TrivalentTree.from_json({"m": 4})


def test_graph_is_trivalent():
    for t in enumerate_trees(6):
        G = t.to_graph()
        assert nx.is_tree(G)
        assert sorted(i for _, _, i in G.edges(data="index")) == list(range(1, t.n_edges + 1))
        assert len(t.interior_vertices()) == t.m - 2


def test_tree_distance_is_path_indicator():
    t = TrivalentTree.from_splits(4, [[1, 2]])
    # interior edge 5 separates {1,2} from {3,4}
    assert tree_distance(t, 5) == tuple(Fraction(x) for x in (0, 1, 1, 1, 1, 0))
    assert tree_distance(t, 2) == tuple(Fraction(int(2 in p)) for p in pairs(4))


def test_neighbors_are_adjacent():
    for t in enumerate_trees(6):
        ns = neighbors(t)
        assert len(ns) == 2 * (t.m - 3) and len(set(ns)) == len(ns), f"{t!r} has {len(ns)} neighbours"
        for u in ns:
            assert adjacency(t, u) is not None
            assert t in neighbors(u), "interchange must be symmetric"


def test_adjacency_blocks_gr25():
    t1 = TrivalentTree.from_splits(5, [[4, 5], [1, 2]])
    t2 = TrivalentTree.from_splits(5, [[4, 5], [2, 3]])
    adj = adjacency(t1, t2)
    assert [sorted(b) for b in adj.blocks()] == [[1], [2], [3], [4, 5]]
    assert adj.changing == 7
    assert adj.tree1.edge_side(7) == frozenset({3, 4, 5})
    assert adj.flanks == (1, 2, 3, 6)
    assert adjacency(t1, t1) is None


def test_non_adjacent_pair_is_none():
    t1 = TrivalentTree.from_splits(6, [[1, 2], [1, 2, 3], [5, 6]])
    t2 = TrivalentTree.from_splits(6, [[1, 3], [1, 3, 2], [4, 6]])
    assert adjacency(t1, t2) is None


def test_groebner_cone_membership():
    assert check_groebner_cone(TrivalentTree.from_splits(4, [[1, 2]]))
    assert check_groebner_cone(TrivalentTree.from_splits(4, [[1, 4]]))
    assert not check_groebner_cone(TrivalentTree.from_splits(4, [[1, 3]])), "13|24 is not circular"


def test_relabel_puts_every_pair_in_the_cone():
    for m, limit in ((5, None), (6, 8)):
        for t in enumerate_trees(m)[:limit]:
            for u in neighbors(t):
                pi = groebner_relabel(t, u)
                assert check_groebner_cone(relabel(t, pi)) and check_groebner_cone(relabel(u, pi))
                assert adjacency(relabel(t, pi), relabel(u, pi)) is not None


TESTS = [
    test_tree_counts,
    test_splits_are_canonical,
    test_bad_splits_rejected,
    test_graph_is_trivalent,
    test_tree_distance_is_path_indicator,
    test_neighbors_are_adjacent,
    test_adjacency_blocks_gr25,
    test_non_adjacent_pair_is_none,
    test_groebner_cone_membership,
    test_relabel_puts_every_pair_in_the_cone,
]


def main():
    from ._runner import run_tests
    run_tests(TESTS)


if __name__ == "__main__":
    main()

# src/trees/adjacency.py
"""
Adjacent trees (one nearest-neighbour interchange apart) and relabelling into
the common Gröbner cone.

For an adjacent pair, X is the side of the first tree's changing split that
contains leaf 1 and Y the same for the second tree. The four blocks are
I = X & Y, J = X - Y, L = Y - X and K = the rest, so the changing split is
I|J in the first tree and I|L in the second.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from src.kernel.errors import InvalidInput
from src.kernel.logging_config import get_logger
from src.kernel.rational import RatMat
from src.tropcore.poly import TermOrder, initial_form, monomial, plucker_quadrics

from .tree import TrivalentTree, _split_key, pair_index, pairs, relabel, tree_distance

log = get_logger(__name__)


@dataclass(frozen=True)
class AdjacencyData:
    tree1: TrivalentTree            # re-indexed: shared splits first, changing split last
    tree2: TrivalentTree
    I: FrozenSet[int]
    J: FrozenSet[int]
    K: FrozenSet[int]
    L: FrozenSet[int]
    a: int
    b: int
    c: int
    d: int
    # (index in input tree 1, index in input tree 2, common index) per shared interior edge
    shared: Tuple[Tuple[int, int, int], ...]

    @property
    def m(self) -> int:
        return self.tree1.m

    @property
    def changing(self) -> int:
        return 2 * self.m - 3

    @property
    def flanks(self) -> Tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def blocks(self) -> Tuple[FrozenSet[int], ...]:
        return self.I, self.J, self.K, self.L

    def to_json(self) -> Dict[str, object]:
        return {
            "tree1": self.tree1.to_json(),
            "tree2": self.tree2.to_json(),
            "blocks": {k: sorted(v) for k, v in zip("IJKL", self.blocks())},
            "flanks": {k: v for k, v in zip("abcd", self.flanks)},
            "changing": self.changing,
        }


def adjacency(t1: TrivalentTree, t2: TrivalentTree) -> Optional[AdjacencyData]:
    """AdjacencyData for trees that differ in exactly one interior split, else None."""
    if t1.m != t2.m:
        raise InvalidInput(f"trees on different leaf counts: {t1.m} vs {t2.m}")
    m = t1.m
    shared = t1.split_set & t2.split_set
    if len(shared) != m - 4:
        return None
    (s1,) = t1.split_set - shared
    (s2,) = t2.split_set - shared
    leaves = frozenset(range(1, m + 1))
    X, Y = leaves - s1, leaves - s2
    I, J, L = X & Y, X - Y, Y - X
    K = leaves - (I | J | L)
    if not (I and J and K and L):
        return None

    order = sorted(shared, key=_split_key)
    r1 = t1.reordered(order + [s1])
    r2 = t2.reordered(order + [s2])
    flank = [r1.edge_of_side(block) for block in (I, J, K, L)]
    for block, e in zip((I, J, K, L), flank):
        assert r2.edge_of_side(block) == e, f"block {sorted(block)} must be a common edge"
    pairing = tuple((t1.edge_of_side(s), t2.edge_of_side(s), r1.edge_of_side(s)) for s in order)
    return AdjacencyData(r1, r2, I, J, K, L, *flank, shared=pairing)


def interior_weight(t: TrivalentTree) -> RatMat:
    """Single-row weight sum over interior edges of (1 - d_e): an interior point of the tree's cone."""
    n = len(pairs(t.m))
    w = [Fraction(0)] * n
    for e in t.interior_edges():
        w = [x + 1 - y for x, y in zip(w, tree_distance(t, e))]
    return RatMat.from_rows([w])


def check_groebner_cone(t: TrivalentTree) -> bool:
    """Every Plücker quadric's initial form at the tree's weight keeps p_ik p_jl."""
    idx = pair_index(t.m)
    n = len(idx)
    W = interior_weight(t)
    for (i, j, k, l), f in zip(combinations(range(1, t.m + 1), 4), plucker_quadrics(t.m)):
        init = initial_form(f, W, TermOrder.LEX)
        cross = monomial(n, {idx[(i, k)]: 1, idx[(j, l)]: 1})
        if cross not in {u for u, _ in init.terms()}:
            return False
    return True


def _block_leaves(G: nx.Graph, edge_index: int, block: FrozenSet[int]) -> List[int]:
    """Leaves of `block` in DFS order from the block end of the flank edge."""
    u, v = next((u, v) for u, v, i in G.edges(data="index") if i == edge_index)
    H = G.copy()
    H.remove_edge(u, v)
    for q in (u, v):
        found = [n for n in nx.dfs_preorder_nodes(H, q) if isinstance(n, int)]
        if frozenset(found) == block:
            return found
    raise AssertionError(f"flank edge {edge_index} does not cut off block {sorted(block)}")


def groebner_relabel(t1: TrivalentTree, t2: TrivalentTree) -> Dict[int, int]:
    """
    Leaf permutation (old -> new) after which both trees lie in the common
    Gröbner cone. The blocks I, J, K, L are laid out in this cyclic order and
    each block's leaves follow a DFS of its subtree, which is a circular planar
    order for both trees.
    """
    adj = adjacency(t1, t2)
    if adj is None:
        raise InvalidInput("groebner_relabel needs adjacent trees", witness=(t1.to_json(), t2.to_json()))
    G = adj.tree1.to_graph()
    order: List[int] = []
    for block, e in zip(adj.blocks(), adj.flanks):
        order.extend(_block_leaves(G, e, block))
    pi = {old: new for new, old in enumerate(order, start=1)}
    assert sorted(pi) == list(range(1, adj.m + 1)), "blocks must cover every leaf once"
    u1, u2 = relabel(t1, pi), relabel(t2, pi)
    assert check_groebner_cone(u1) and check_groebner_cone(u2), f"relabelling {pi} left the Gröbner cone"
    log.debug("groebner_relabel: %s", pi)
    return pi

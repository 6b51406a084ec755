# src/trees/tree.py
"""
Trivalent trees on leaves 1..m, stored as canonical split sets.

A split is kept as the side not containing leaf 1. Edge indices: pendant edge
at leaf i is edge i; interior edges are m+1 .. 2m-3 in `splits` order.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

import networkx as nx

from src.kernel.errors import InvalidInput
from src.kernel.rational import RatVec

Split = FrozenSet[int]


def pairs(m: int) -> List[Tuple[int, int]]:
    """Pair columns in lexicographic order (12, 13, ..., (m-1)m)."""
    return list(combinations(range(1, m + 1), 2))


def pair_index(m: int) -> Dict[Tuple[int, int], int]:
    return {p: k for k, p in enumerate(pairs(m))}


def canonical_side(m: int, side: Iterable[int]) -> Split:
    s = frozenset(int(i) for i in side)
    if not s or not s <= frozenset(range(1, m + 1)):
        raise InvalidInput(f"split side {sorted(s)} is not a nonempty subset of 1..{m}")
    if 1 in s:
        s = frozenset(range(1, m + 1)) - s
    return s


def _split_key(s: Split) -> Tuple[int, ...]:
    return tuple(sorted(s))


@dataclass(frozen=True, eq=False)
class TrivalentTree:
    m: int
    splits: Tuple[Split, ...]

    def __post_init__(self):
        if self.m < 4:
            raise InvalidInput(f"trivalent trees need m >= 4, got {self.m}")
        canon = tuple(canonical_side(self.m, s) for s in self.splits)
        object.__setattr__(self, "splits", canon)
        if len(canon) != self.m - 3:
            raise InvalidInput(f"expected {self.m - 3} interior splits, got {len(canon)}")
        if len(set(canon)) != len(canon):
            raise InvalidInput("repeated split", witness=[sorted(s) for s in canon])
        for s in canon:
            if not 2 <= len(s) <= self.m - 2:
                raise InvalidInput(f"split {sorted(s)} is trivial", witness=sorted(s))
        for s, t in combinations(canon, 2):
            if not (s <= t or t <= s or not (s & t)):
                raise InvalidInput(f"splits {sorted(s)} and {sorted(t)} are incompatible",
                                   witness=(sorted(s), sorted(t)))
        self._check_trivalent()

    # --- identity ---

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TrivalentTree) and self.m == other.m and self.split_set == other.split_set

    def __hash__(self) -> int:
        return hash((self.m, self.split_set))

    def __repr__(self) -> str:
        return f"TrivalentTree(m={self.m}, splits={[sorted(s) for s in self.splits]})"

    @cached_property
    def split_set(self) -> FrozenSet[Split]:
        return frozenset(self.splits)

    @classmethod
    def from_splits(cls, m: int, sides: Iterable[Iterable[int]]) -> "TrivalentTree":
        """Canonicalize and sort the interior edges lexicographically."""
        canon = sorted({canonical_side(m, s) for s in sides}, key=_split_key)
        return cls(m, tuple(canon))

    def canonical(self) -> "TrivalentTree":
        return TrivalentTree(self.m, tuple(sorted(self.splits, key=_split_key)))

    def reordered(self, splits: Sequence[Split]) -> "TrivalentTree":
        t = TrivalentTree(self.m, tuple(splits))
        assert t == self, "reordering must keep the split set"
        return t

    # --- edges ---

    @property
    def n_edges(self) -> int:
        return 2 * self.m - 3

    def edge_side(self, edge: int) -> Split:
        """Side of the edge not containing leaf 1 (for edge 1: everything but leaf 1)."""
        if not 1 <= edge <= self.n_edges:
            raise InvalidInput(f"edge index {edge} outside 1..{self.n_edges}")
        if edge == 1:
            return frozenset(range(2, self.m + 1))
        if edge <= self.m:
            return frozenset({edge})
        return self.splits[edge - self.m - 1]

    def edge_of_side(self, side: Iterable[int]) -> int:
        s = canonical_side(self.m, side)
        if len(s) == self.m - 1:
            return 1
        if len(s) == 1:
            return next(iter(s))
        try:
            return self.m + 1 + self.splits.index(s)
        except ValueError:
            raise InvalidInput(f"{sorted(s)} is not a split of {self!r}")

    def interior_edges(self) -> range:
        return range(self.m + 1, self.n_edges + 1)

    # --- structure ---

    @cached_property
    def _parents(self) -> Dict[Split, Split]:
        """Each cluster (split side or singleton) mapped to the smallest cluster strictly above it."""
        root = frozenset(range(2, self.m + 1))
        clusters = [frozenset({i}) for i in range(2, self.m + 1)] + list(self.splits)
        parents = {}
        for c in clusters:
            above = [d for d in list(self.splits) + [root] if c < d]
            parents[c] = min(above, key=len)
        return parents

    def to_graph(self) -> nx.Graph:
        """
        Leaves are the ints 1..m; interior vertices are ("v", cluster) where the
        cluster is the leaf set below the vertex as seen from leaf 1. Every edge
        carries its index.
        """
        root = frozenset(range(2, self.m + 1))
        G = nx.Graph()
        node = lambda c: next(iter(c)) if len(c) == 1 else ("v", c)
        G.add_edge(1, node(root), index=1)
        for c, p in self._parents.items():
            G.add_edge(node(c), node(p), index=self.edge_of_side(c))
        return G

    def _check_trivalent(self) -> None:
        G = self.to_graph()
        if not nx.is_tree(G):
            raise InvalidInput("splits do not reconstruct a tree", witness=self.splits)
        for n, deg in G.degree():
            want = 1 if isinstance(n, int) else 3
            if deg != want:
                raise InvalidInput(f"vertex {n} has degree {deg}, expected {want}", witness=n)

    def interior_vertices(self) -> List[Tuple[int, int, int]]:
        """Incident edge-index triples, one per interior vertex."""
        G = self.to_graph()
        out = []
        for n in G.nodes:
            if isinstance(n, int):
                continue
            out.append(tuple(sorted(G.edges[n, nb]["index"] for nb in G.neighbors(n))))
        return sorted(out)

    def children(self, cluster: Split) -> List[Split]:
        return sorted((c for c, p in self._parents.items() if p == cluster), key=_split_key)

    # --- JSON ---

    def to_json(self) -> Dict[str, object]:
        return {"m": self.m, "splits": [sorted(s) for s in self.splits]}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "TrivalentTree":
        try:
            m = int(data["m"])
            splits = data["splits"]
        except (KeyError, TypeError, ValueError):
            raise InvalidInput("tree JSON needs 'm' and 'splits'")
        return cls(m, tuple(canonical_side(m, s) for s in splits))


def tree_distance(t: TrivalentTree, edge: int) -> RatVec:
    """Indicator over pairs {i,j} of the leaf path i -> j using `edge`."""
    side = t.edge_side(edge)
    return tuple(Fraction(int((i in side) != (j in side))) for i, j in pairs(t.m))


def relabel(t: TrivalentTree, pi: Mapping[int, int]) -> TrivalentTree:
    """Apply the leaf permutation `pi` (old label -> new label), keeping interior edge order."""
    if sorted(pi) != list(range(1, t.m + 1)) or sorted(pi.values()) != list(range(1, t.m + 1)):
        raise InvalidInput(f"not a permutation of 1..{t.m}: {dict(pi)}")
    return TrivalentTree(t.m, tuple(canonical_side(t.m, {pi[i] for i in s}) for s in t.splits))


def enumerate_trees(m: int) -> List[TrivalentTree]:
    """All (2m-5)!! trivalent trees, built by inserting leaves one at a time into every edge."""
    if m < 4:
        raise InvalidInput(f"enumerate_trees needs m >= 4, got {m}")
    # Clusters of the tree on leaves 1..k, seen from leaf 1; the root cluster is {2..k}.
    families: List[FrozenSet[Split]] = [frozenset({frozenset({2}), frozenset({3}), frozenset({2, 3})})]
    for k in range(4, m + 1):
        grown = set()
        for fam in families:
            for c in fam:
                new = {x | {k} if c < x else x for x in fam}
                new |= {c | {k}, frozenset({k})}
                grown.add(frozenset(new))
        families = sorted(grown, key=lambda f: sorted(_split_key(s) for s in f))
    trees = set()
    root = frozenset(range(2, m + 1))
    for fam in families:
        splits = [s for s in fam if len(s) > 1 and s != root]
        trees.add(TrivalentTree.from_splits(m, splits))
    return sorted(trees, key=lambda t: [_split_key(s) for s in t.splits])


def neighbors(t: TrivalentTree) -> List[TrivalentTree]:
    """The 2(m-3) trees one nearest-neighbour interchange away."""
    out = []
    for s in t.splits:
        a, b = t.children(s)
        parent = t._parents[s]
        d = next(c for c in t.children(parent) if c != s)
        for keep in (a, b):
            rest = [x for x in t.splits if x != s]
            out.append(TrivalentTree.from_splits(t.m, rest + [keep | d]))
    return out

# src/gr2m/matrices.py
"""
Weight matrices of a trivalent tree and the coordinate change between them.

Rows are indexed by tree edges (1..2m-3), columns by leaf pairs in
lexicographic order. M_t carries the valuation; Mtilde_t holds the path
indicators, and gamma maps each column of Mtilde_t to the same column of M_t.
"""

from __future__ import annotations
from fractions import Fraction
from typing import List, Sequence

from src.kernel.dd import HRep
from src.kernel.errors import InvalidInput
from src.kernel.polyhedron import Polyhedron, cone_hull
from src.kernel.rational import RatLike, RatMat, RatVec, vec
from src.trees.tree import TrivalentTree, pairs, tree_distance


def build_M(t: TrivalentTree) -> RatMat:
    n = len(pairs(t.m))
    rows: List[RatVec] = [(Fraction(1),) * n]
    rows += [tree_distance(t, i) for i in range(2, t.m + 1)]
    rows += [tuple(1 - x for x in tree_distance(t, e)) for e in t.interior_edges()]
    return RatMat(tuple(rows))


def build_Mtilde(t: TrivalentTree) -> RatMat:
    return RatMat(tuple(tree_distance(t, e) for e in range(1, t.n_edges + 1)))


def _check_len(z: Sequence, m: int) -> RatVec:
    z = vec(z)
    if len(z) != 2 * m - 3:
        raise InvalidInput(f"vector of length {len(z)}, expected {2 * m - 3} for m={m}")
    return z


def gamma(z: Sequence[RatLike], m: int) -> RatVec:
    z = _check_len(z, m)
    half = sum(z[:m], Fraction(0)) / 2
    return (half,) + z[1:m] + tuple(half - x for x in z[m:])


def gamma_inv(y: Sequence[RatLike], m: int) -> RatVec:
    y = _check_len(y, m)
    z1 = 2 * y[0] - sum(y[1:m], Fraction(0))
    return (z1,) + y[1:m] + tuple(y[0] - x for x in y[m:])


def nohara_ueda(t: TrivalentTree) -> HRep:
    """
    Triangle inequalities z_a <= z_b + z_c at every interior vertex (three per
    vertex) and the level equation z_1 + ... + z_m = 2.
    """
    n = t.n_edges
    ineqs = []
    for triple in t.interior_vertices():
        for a in triple:
            row = [Fraction(0)] * n
            for e in triple:
                row[e - 1] = Fraction(-1 if e == a else 1)
            ineqs.append((tuple(row), Fraction(0)))
    level = (tuple(Fraction(int(e <= t.m)) for e in range(1, n + 1)), Fraction(2))
    return HRep(tuple(ineqs), (level,))


def nohara_ueda_cone(t: TrivalentTree) -> Polyhedron:
    """P~_t as the inequality cone, without the level equation."""
    h = nohara_ueda(t)
    return Polyhedron(t.n_edges, hrep=HRep(h.inequalities, ()))


def nohara_ueda_polytope(t: TrivalentTree) -> Polyhedron:
    return Polyhedron(t.n_edges, hrep=nohara_ueda(t))


def tilde_cone(t: TrivalentTree) -> Polyhedron:
    return cone_hull(build_Mtilde(t).columns())

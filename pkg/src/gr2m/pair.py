# src/gr2m/pair.py
from __future__ import annotations
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from src.kernel.errors import DomainError, InvalidInput
from src.kernel.logging_config import get_logger
from src.kernel.polyhedron import Polyhedron
from src.kernel.rational import RatLike, RatMat, RatVec, vec
from src.trees.adjacency import AdjacencyData, adjacency, check_groebner_cone, groebner_relabel
from src.trees.tree import TrivalentTree, relabel

from .matrices import build_M, build_Mtilde, gamma, gamma_inv, nohara_ueda_cone

log = get_logger(__name__)


@dataclass(frozen=True)
class GrPair:
    """Two adjacent trees in the common Gröbner cone, re-indexed so the changing edge is last."""
    adj: AdjacencyData
    M1: RatMat
    M2: RatMat
    Mtilde1: RatMat
    Mtilde2: RatMat
    permutation: Optional[Dict[int, int]] = None

    @property
    def m(self) -> int:
        return self.adj.m

    @property
    def t1(self) -> TrivalentTree:
        return self.adj.tree1

    @property
    def t2(self) -> TrivalentTree:
        return self.adj.tree2

    @classmethod
    def from_trees(cls, t1: TrivalentTree, t2: TrivalentTree, relabel_leaves: bool = False) -> "GrPair":
        pi = None
        if relabel_leaves:
            pi = groebner_relabel(t1, t2)
            t1, t2 = relabel(t1, pi), relabel(t2, pi)
        adj = adjacency(t1, t2)
        if adj is None:
            raise InvalidInput("trees are not adjacent", witness=(t1.to_json(), t2.to_json()))
        for t in (adj.tree1, adj.tree2):
            if not check_groebner_cone(t):
                raise InvalidInput(f"{t!r} is outside the common Gröbner cone; relabel with groebner_relabel",
                                   witness=t.to_json())
        M1, M2 = build_M(adj.tree1), build_M(adj.tree2)
        assert M1.top(M1.nrows - 1) == M2.top(M2.nrows - 1), "M1 and M2 must agree above the last row"
        return cls(adj, M1, M2, build_Mtilde(adj.tree1), build_Mtilde(adj.tree2), pi)

    def reversed(self) -> "GrPair":
        return GrPair.from_trees(self.t2, self.t1)

    def key(self) -> str:
        s = lambda t: "|".join("".join(map(str, sorted(x))) for x in sorted(t.splits, key=sorted))
        return f"{s(self.t1)}~{s(self.t2)}"


def _tilde_domain(pair: GrPair, z: RatVec) -> None:
    if len(z) != 2 * pair.m - 3:
        raise InvalidInput(f"point of length {len(z)}, expected {2 * pair.m - 3}")
    cone: Polyhedron = nohara_ueda_cone(pair.t1)
    bad = cone.violated_constraint(z)
    if bad is not None:
        raise DomainError("point outside the first cone", witness={"point": z, "constraint": bad})


def _flank_values(pair: GrPair, z: RatVec):
    a, b, c, d = pair.adj.flanks
    return z[a - 1], z[b - 1], z[c - 1], z[d - 1]


def flip_tilde(pair: GrPair, z: Sequence[RatLike]) -> RatVec:
    z = vec(z)
    _tilde_domain(pair, z)
    za, zb, zc, zd = _flank_values(pair, z)
    last = -z[-1] + max(abs(za - zb), abs(zc - zd)) + min(za + zd, zb + zc)
    return z[:-1] + (last,)


def shift_tilde(pair: GrPair, z: Sequence[RatLike]) -> RatVec:
    z = vec(z)
    _tilde_domain(pair, z)
    za, zb, zc, zd = _flank_values(pair, z)
    last = z[-1] + max(abs(za - zd), abs(zb - zc)) - max(abs(za - zb), abs(zc - zd))
    return z[:-1] + (last,)


def flip(pair: GrPair, y: Sequence[RatLike]) -> RatVec:
    return gamma(flip_tilde(pair, gamma_inv(y, pair.m)), pair.m)


def shift(pair: GrPair, y: Sequence[RatLike]) -> RatVec:
    return gamma(shift_tilde(pair, gamma_inv(y, pair.m)), pair.m)

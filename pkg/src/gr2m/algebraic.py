# src/gr2m/algebraic.py
"""
Standard monomials, straightening and the algebraic wall-crossing for Gr(2,m).

Exponents are indexed by leaf pairs in lexicographic order. A pair (ik)(jl)
with i<j<k<l is a crossing; an exponent is standard when it has none.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.kernel.errors import InvalidInput
from src.kernel.logging_config import get_logger
from src.kernel.rational import RatVec
from src.kernel.serialize import vec_to_json
from src.tropcore.poly import Exponent, TermOrder, initial_form, monomial, plucker_quadrics, weight_value
from src.tropcore.rewriting import BinomialRewriter, RewriteRule, algebraic_crossing
from src.trees.adjacency import interior_weight
from src.trees.tree import TrivalentTree, pair_index, pairs

from .pair import GrPair, flip

log = get_logger(__name__)


def leaves_for(n: int) -> int:
    """m with C(m,2) = n."""
    m = (1 + isqrt(1 + 8 * n)) // 2
    if m * (m - 1) // 2 != n or m < 2:
        raise InvalidInput(f"{n} is not a number of leaf pairs")
    return m


def _exponent(alpha: Sequence[int]) -> Exponent:
    a = tuple(int(x) for x in alpha)
    if any(x < 0 for x in a):
        raise InvalidInput("exponents must be non-negative", witness=a)
    return a


@lru_cache(maxsize=None)
def _crossings(m: int) -> List[Tuple[int, int]]:
    """Index pairs ((ik), (jl)) for every i<j<k<l."""
    idx = pair_index(m)
    return [(idx[(i, k)], idx[(j, l)]) for i, j, k, l in combinations(range(1, m + 1), 4)]


def is_standard(alpha: Sequence[int]) -> bool:
    a = _exponent(alpha)
    return all(a[p] * a[q] == 0 for p, q in _crossings(leaves_for(len(a))))


def crossing_number(alpha: Sequence[int]) -> int:
    """Crossing chord pairs counted with multiplicity; every straightening step lowers it."""
    a = _exponent(alpha)
    return sum(a[p] * a[q] for p, q in _crossings(leaves_for(len(a))))


@lru_cache(maxsize=None)
def default_rewriter(m: int) -> BinomialRewriter:
    """(ik)(jl) -> (il)(jk) for every i<j<k<l, in lexicographic order of the quadruple."""
    idx = pair_index(m)
    n = len(idx)
    rules = []
    for i, j, k, l in combinations(range(1, m + 1), 4):
        lead = monomial(n, {idx[(i, k)]: 1, idx[(j, l)]: 1})
        tail = monomial(n, {idx[(i, l)]: 1, idx[(j, k)]: 1})
        rules.append(RewriteRule(lead, tail, f"{i}{j}{k}{l}"))
    return BinomialRewriter(n, rules)


@lru_cache(maxsize=None)
def tree_rewriter(t: TrivalentTree) -> BinomialRewriter:
    """Rules read off the initial Plücker binomials at the tree's interior weight."""
    idx = pair_index(t.m)
    n = len(idx)
    W = interior_weight(t)
    inits, leads, labels = [], [], []
    for (i, j, k, l), f in zip(combinations(range(1, t.m + 1), 4), plucker_quadrics(t.m)):
        inits.append(initial_form(f, W, TermOrder.LEX))
        leads.append(monomial(n, {idx[(i, k)]: 1, idx[(j, l)]: 1}))
        labels.append(f"{i}{j}{k}{l}")
    try:
        return BinomialRewriter.from_binomials(inits, leads, labels)
    except InvalidInput as e:
        raise InvalidInput(f"{t!r} is outside the common Gröbner cone", witness=e.witness) from e


def straighten(alpha: Sequence[int], tree: Optional[TrivalentTree] = None,
               rng: Optional[np.random.Generator] = None) -> Exponent:
    """
    Standard representative of alpha. Without a tree every crossing (ik)(jl)
    becomes (il)(jk); with a tree each quadruple uses the rule of that tree's
    initial binomial, which keeps M_tree . alpha fixed. `rng` picks a random
    applicable rule at each step instead of the smallest quadruple.
    """
    a = _exponent(alpha)
    m = leaves_for(len(a))
    if tree is not None and tree.m != m:
        raise InvalidInput(f"exponent over {m} leaves for a tree on {tree.m}")
    rw = tree_rewriter(tree) if tree is not None else default_rewriter(m)
    return rw.normal_form(a, rng)


def straighten_gr24(alpha: Sequence[int]) -> Exponent:
    """Closed form for m = 4: move min(a13, a24) onto a14 and a23."""
    a = list(_exponent(alpha))
    if len(a) != 6:
        raise InvalidInput("straighten_gr24 takes 6 pair exponents")
    # pair order 12, 13, 14, 23, 24, 34
    t = min(a[1], a[4])
    a[1] -= t
    a[4] -= t
    a[2] += t
    a[3] += t
    return tuple(a)


def enumerate_standard(m: int, max_degree: int) -> List[Exponent]:
    """Standard exponents of total degree 0..max_degree, by degree then lexicographically."""
    if max_degree < 0:
        raise InvalidInput(f"negative degree bound {max_degree}")
    n = len(pairs(m))
    out = []
    for deg in range(max_degree + 1):
        for combo in combinations_with_replacement(range(n), deg):
            e = [0] * n
            for i in combo:
                e[i] += 1
            if is_standard(e):
                out.append(tuple(e))
    return out


def theta(pair: GrPair, s: Sequence, alpha: Sequence[int]) -> RatVec:
    """Theta(s) = M2 . straighten(alpha) for a witness alpha with M1 . alpha = s."""
    return algebraic_crossing(pair.M1, pair.M2, tree_rewriter(pair.t1), s, _exponent(alpha))


@dataclass
class FlipThetaReport:
    pair: str
    max_degree: int
    checked: int = 0
    violations: List[Dict[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> Dict[str, object]:
        return {
            "pair": self.pair,
            "max_degree": self.max_degree,
            "checked": self.checked,
            "violations": [{"alpha": list(v["alpha"]), "expected": vec_to_json(v["expected"]),
                            "flip": vec_to_json(v["flip"])} for v in self.violations],
        }


def verify_flip_equals_theta(pair: GrPair, max_degree: int) -> FlipThetaReport:
    report = FlipThetaReport(pair.key(), max_degree)
    for alpha in enumerate_standard(pair.m, max_degree):
        s = weight_value(pair.M1, alpha)
        want = weight_value(pair.M2, alpha)
        got = flip(pair, s)
        report.checked += 1
        if got != want:
            report.violations.append({"alpha": alpha, "expected": want, "flip": got})
    log.info("flip=theta %s: %d checked, %d violations", report.pair, report.checked, len(report.violations))
    return report

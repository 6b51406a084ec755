# src/tropcore/poly.py
"""
Weight valuations and initial forms on sympy polynomials, minimum convention.

A weight is a RatMat; the value of a monomial x^u is M.u, and the initial form
keeps the terms whose value is smallest in the chosen TermOrder.
"""

from __future__ import annotations
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Sequence, Tuple

import sympy

from src.kernel.errors import InvalidInput
from src.kernel.rational import RatMat, RatVec, fmt_rat, rat

Exponent = Tuple[int, ...]


class TermOrder(str, Enum):
    LEX = "lex"
    DEGREE_REFINED_LEX = "degree-refined-lex"

    def key(self, v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """Sort key: the smaller key is the smaller value."""
        if self is TermOrder.LEX:
            return tuple(v)
        return (-v[0],) + tuple(v[1:])


def weight_value(M: RatMat, e: Sequence[int]) -> RatVec:
    if len(e) != M.ncols:
        raise InvalidInput(f"exponent of length {len(e)} for a matrix with {M.ncols} columns")
    if any(int(x) < 0 for x in e):
        raise InvalidInput("exponents must be non-negative", witness=tuple(e))
    return M @ [int(x) for x in e]


def default_order(M: RatMat) -> TermOrder:
    return TermOrder.LEX if M.nrows == 1 else TermOrder.DEGREE_REFINED_LEX


def initial_form(f: sympy.Poly, M: RatMat, order: TermOrder = None) -> sympy.Poly:
    if f.is_zero:
        raise InvalidInput("initial form of the zero polynomial")
    order = order or default_order(M)
    terms = f.terms()
    keyed = [(order.key(weight_value(M, u)), u, c) for u, c in terms]
    best = min(k for k, _, _ in keyed)
    kept = {u: c for k, u, c in keyed if k == best}
    return sympy.Poly.from_dict(kept, *f.gens, domain=f.domain)


def trop_member_principal(f: sympy.Poly, w: Sequence[Any]) -> bool:
    """w lies in trop(<f>) iff init_w(f) is not a monomial."""
    if f.is_zero:
        raise InvalidInput("tropical membership of the zero polynomial")
    M = RatMat.from_rows([w])
    return len(initial_form(f, M).terms()) >= 2


def pair_symbols(m: int) -> List[sympy.Symbol]:
    sep = "" if m < 10 else "_"
    return [sympy.Symbol(f"p{i}{sep}{j}") for i, j in combinations(range(1, m + 1), 2)]


def plucker_quadrics(m: int) -> List[sympy.Poly]:
    """p_ij p_kl - p_ik p_jl + p_il p_jk, one per quadruple i<j<k<l, in lexicographic order."""
    if m < 4:
        raise InvalidInput(f"Plücker quadrics need m >= 4, got {m}")
    syms = pair_symbols(m)
    idx = {p: k for k, p in enumerate(combinations(range(1, m + 1), 2))}
    p = lambda a, b: syms[idx[(a, b)]]
    out = []
    for i, j, k, l in combinations(range(1, m + 1), 4):
        expr = p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k)
        out.append(sympy.Poly(expr, *syms, domain=sympy.QQ))
    return out


def monomial(n: int, entries: Dict[int, int]) -> Exponent:
    e = [0] * n
    for i, k in entries.items():
        e[i] += k
    return tuple(e)


def poly_to_json(f: sympy.Poly) -> Dict[str, Any]:
    terms = sorted(f.terms())
    return {
        "vars": len(f.gens),
        "terms": [{"e": list(u), "c": fmt_rat(rat(sympy.Rational(c)))} for u, c in terms],
    }


def poly_from_json(data: Dict[str, Any]) -> sympy.Poly:
    try:
        n = int(data["vars"])
        terms = data["terms"]
    except (KeyError, TypeError, ValueError):
        raise InvalidInput("polynomial JSON needs 'vars' and 'terms'")
    gens = sympy.symbols(f"x1:{n + 1}")
    coeffs = {}
    for t in terms:
        e = tuple(int(x) for x in t["e"])
        if len(e) != n:
            raise InvalidInput(f"exponent {e} has length {len(e)}, expected {n}")
        c = rat(str(t["c"]))
        if c:
            coeffs[e] = sympy.Rational(c.numerator, c.denominator)
    if not coeffs:
        return sympy.Poly(0, *gens, domain=sympy.QQ)
    return sympy.Poly.from_dict(coeffs, *gens, domain=sympy.QQ)

# src/tropcore/examples.py
"""The degree-11 plane-curve hypersurface whose algebraic crossing is not geometric."""

from __future__ import annotations
from dataclasses import dataclass

import sympy

from src.kernel.rational import RatMat

from .poly import initial_form
from .rewriting import BinomialRewriter

X = sympy.symbols("x1:5")

LEAD = (0, 11, 0, 0)        # x2^11
REPLACEMENT = (6, 0, 4, 1)  # x1^6 x3^4 x4


@dataclass(frozen=True)
class HypersurfaceExample:
    f: sympy.Poly
    M1: RatMat
    M2: RatMat
    w1: RatMat
    w2: RatMat
    rewriter: BinomialRewriter


def hypersurface_example() -> HypersurfaceExample:
    x1, x2, x3, x4 = X
    f = sympy.Poly(x2**11 - x1**6 * x3**4 * x4 - x1**7 * x3 * x4**3, *X, domain=sympy.QQ)
    M1 = RatMat.from_rows([[1, 1, 1, 1], [0, 1, 2, 3], [0, 0, -1, 4]])
    M2 = RatMat.from_rows([[1, 1, 1, 1], [0, 1, 2, 3], [0, 0, 3, -1]])
    # Standard monomials for the first cone: x2-exponent at most 10.
    rewriter = BinomialRewriter.from_binomials([initial_form(f, M1)], [LEAD], labels=["x2^11"])
    assert rewriter.rules[0].tail == REPLACEMENT, "initial binomial must trade x2^11 for x1^6 x3^4 x4"
    return HypersurfaceExample(
        f=f, M1=M1, M2=M2,
        w1=RatMat.from_rows([[0, 0, -1, 4]]),
        w2=RatMat.from_rows([[0, 0, 3, -1]]),
        rewriter=rewriter,
    )

# src/tropcore/__init__.py
from .poly import (
    TermOrder,
    initial_form,
    pair_symbols,
    plucker_quadrics,
    poly_from_json,
    poly_to_json,
    trop_member_principal,
    weight_value,
)
from .rewriting import BinomialRewriter, RewriteRule, algebraic_crossing
from .examples import HypersurfaceExample, hypersurface_example

__all__ = [
    "TermOrder", "initial_form", "pair_symbols", "plucker_quadrics", "poly_from_json", "poly_to_json",
    "trop_member_principal", "weight_value", "BinomialRewriter", "RewriteRule", "algebraic_crossing",
    "HypersurfaceExample", "hypersurface_example",
]

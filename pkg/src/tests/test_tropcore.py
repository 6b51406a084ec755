# src/tests/test_tropcore.py
"""
Initial forms, tropical membership and binomial rewriting.

Usage (from repo root):
  python -m src.tests.test_tropcore
"""

from __future__ import annotations

import pytest
import sympy

from src.gr2m.algebraic import default_rewriter
from src.kernel.config import RANDOM_TEST_EXPONENTS
from src.kernel.errors import InvalidInput, TheoremViolation
from src.kernel.rational import RatMat, make_rng, vec
from src.trees.adjacency import interior_weight
from src.trees.tree import TrivalentTree
from src.tropcore.examples import REPLACEMENT, X, hypersurface_example
from src.tropcore.poly import (
    TermOrder,
    initial_form,
    pair_symbols,
    plucker_quadrics,
    poly_from_json,
    poly_to_json,
    trop_member_principal,
)
from src.tropcore.rewriting import BinomialRewriter, RewriteRule, algebraic_crossing


def test_plucker_quadric_count():
    assert len(plucker_quadrics(4)) == 1
    assert len(plucker_quadrics(6)) == 15
    with pytest.raises(InvalidInput):
        plucker_quadrics(3)


def test_initial_binomial_at_tree_weight():
    p12, p13, p14, p23, p24, p34 = pair_symbols(4)
    (f,) = plucker_quadrics(4)
    t = TrivalentTree.from_splits(4, [[1, 2]])
    init = initial_form(f, interior_weight(t), TermOrder.LEX)
    assert init.as_expr() == sympy.expand(-p13 * p24 + p14 * p23), f"got {init.as_expr()}"


def test_trop_membership():
    ex = hypersurface_example()
    assert trop_member_principal(ex.f, (0, 0, -1, 4))
    assert trop_member_principal(ex.f, (0, 0, 3, -1))
    assert not trop_member_principal(ex.f, (0, -1, 0, 0)), "x2^11 alone is a monomial initial form"


def test_degree_refined_order_on_matrices():
    ex = hypersurface_example()
    x1, x2, x3, x4 = X
    assert initial_form(ex.f, ex.M1).as_expr() == x2**11 - x1**6 * x3**4 * x4
    assert initial_form(ex.f, ex.M2).as_expr() == x2**11 - x1**7 * x3 * x4**3


def test_hypersurface_rewriter():
    rw = hypersurface_example().rewriter
    assert rw.normal_form((0, 11, 0, 0)) == REPLACEMENT
    assert rw.normal_form((0, 22, 0, 1)) == (12, 0, 8, 3)
    assert rw.is_standard((3, 10, 0, 0)) and not rw.is_standard((0, 11, 0, 0))
    with pytest.raises(InvalidInput):
        rw.normal_form((0, -1, 0, 0))


def test_from_binomials_needs_binomials():
    x1, x2, _, _ = X
    mono = sympy.Poly(x1 * x2, *X, domain=sympy.QQ)
    with pytest.raises(InvalidInput):
        BinomialRewriter.from_binomials([mono], [(1, 1, 0, 0)])


def test_cycling_rules_hit_the_step_limit():
    rw = BinomialRewriter(2, [RewriteRule((1, 0), (0, 1), "a"), RewriteRule((0, 1), (1, 0), "b")])
    with pytest.raises(TheoremViolation):
        rw.trace((1, 0), max_steps=10)


def test_normal_form_ignores_rule_order():
    rw = default_rewriter(5)
    rng = make_rng(7)
    for _ in range(RANDOM_TEST_EXPONENTS):
        alpha = tuple(int(x) for x in rng.integers(0, 3, size=10))
        assert rw.normal_form(alpha, rng) == rw.normal_form(alpha), f"two normal forms for {alpha}"


def test_algebraic_crossing_checks_witness():
    ex = hypersurface_example()
    assert algebraic_crossing(ex.M1, ex.M2, ex.rewriter, vec((11, 11, 0)), (0, 11, 0, 0)) == vec((11, 11, 11))
    with pytest.raises(InvalidInput):
        algebraic_crossing(ex.M1, ex.M2, ex.rewriter, vec((1, 1, 1)), (0, 1, 0, 0))


def test_poly_json_keeps_coefficients():
    f = hypersurface_example().f
    g = poly_from_json(poly_to_json(f))
    assert sorted(g.terms()) == sorted(f.terms())
    with pytest.raises(InvalidInput):
        poly_from_json({"terms": []})


def test_initial_form_of_zero_rejected():
    with pytest.raises(InvalidInput):
        initial_form(sympy.Poly(0, *X, domain=sympy.QQ), RatMat.from_rows([[1, 1, 1, 1]]))


TESTS = [
    test_plucker_quadric_count,
    test_initial_binomial_at_tree_weight,
    test_trop_membership,
    test_degree_refined_order_on_matrices,
    test_hypersurface_rewriter,
    test_from_binomials_needs_binomials,
    test_cycling_rules_hit_the_step_limit,
    test_normal_form_ignores_rule_order,
    test_algebraic_crossing_checks_witness,
    test_poly_json_keeps_coefficients,
    test_initial_form_of_zero_rejected,
]


def main():
    from ._runner import run_tests
    run_tests(TESTS)


if __name__ == "__main__":
    main()

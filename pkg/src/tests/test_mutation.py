# src/tests/test_mutation.py
"""
Triples of concave functions, their bodies, the dual cones and mutation slices.

Usage (from repo root):
  python -m src.tests.test_mutation
"""

from __future__ import annotations

import pytest

from src.kernel.errors import InvalidInput
from src.kernel.polyhedron import convex_hull, linear_image
from src.mutation.dual import build_frame, dual_slice, nabla
from src.mutation.triple import (
    EXAMPLE_ELL0,
    EXAMPLE_ELL1,
    EXAMPLE_POINTS,
    EXAMPLE_SIMPLICES,
    PLTriple,
    mutation_example,
    body_from_triple,
    shear,
    triangulated,
)

ELL2 = tuple(-a - b for a, b in zip(EXAMPLE_ELL0, EXAMPLE_ELL1))


def base():
    return convex_hull(EXAMPLE_POINTS)


def fn(values):
    return triangulated(base(), EXAMPLE_POINTS, EXAMPLE_SIMPLICES, values)


def test_triple_rejects_convex_function():
    with pytest.raises(InvalidInput):
        PLTriple(base(), fn((1, 0, 1, 0)), fn((0, 0, -1, -1)), fn((0, 0, 0, 0)))


def test_triple_rejects_negative_length():
    with pytest.raises(InvalidInput):
        PLTriple(base(), fn((-1, -1, -1, -1)), fn((0, 0, 0, 0)), fn((0, 0, 0, 0)))


def test_bodies_match_matrix_hulls():
    ex = mutation_example()
    for side in (1, 2):
        assert body_from_triple(ex.triple, side).same_set(ex.expected_body(side)), f"side {side}"
    with pytest.raises(InvalidInput):
        body_from_triple(ex.triple, 3)


def test_regauge_shears_bodies():
    ex = mutation_example()
    for side, ell in ((1, EXAMPLE_ELL1), (2, ELL2)):
        want = linear_image(body_from_triple(ex.triple, side), shear(3, ell))
        assert body_from_triple(ex.regauged, side).same_set(want), f"side {side}"
    for p in ex.triple.points():
        before = sum(f(p) for f in ex.triple.psis)
        after = sum(f(p) for f in ex.regauged.psis)
        assert before == after, "regauging keeps the total fiber length"


def test_printed_gauge_rejects_eta():
    ex = mutation_example()
    with pytest.raises(InvalidInput) as info:
        build_frame(ex.triple, ex.eta)
    assert "nabla0" in str(info.value)
    assert tuple(info.value.witness) in {(1, 0, 0), (1, 1, 0)}, "witness is a vertex of nabla0"


def test_eta_position_checks():
    ex = mutation_example()
    with pytest.raises(InvalidInput):
        build_frame(ex.regauged, (1, 5, 0))        # outside
    with pytest.raises(InvalidInput):
        build_frame(ex.regauged, (1, 0, 0))        # on the edge through a and c
    with pytest.raises(InvalidInput):
        build_frame(ex.regauged, (1, 0))           # wrong length


def test_nabla_contains_gradients():
    ex = mutation_example()
    n1 = nabla(ex.regauged.psi1)
    for piece in ex.regauged.psi1.pieces():
        assert n1.contains_point(piece.coeffs), "each gradient dominates a concave function"


def test_dual_slices_recover_bodies():
    ex = mutation_example()
    frame = build_frame(ex.regauged, ex.eta)
    for side, sigma in ((1, frame.sigma1), (2, frame.sigma2)):
        assert dual_slice(sigma).same_set(body_from_triple(ex.regauged, side)), f"side {side}"


def test_mutation_slices_differ():
    ex = mutation_example()
    frame = build_frame(ex.regauged, ex.eta)
    assert not frame.d1.is_empty and not frame.d2.is_empty
    assert not frame.d1.same_set(frame.d2)
    assert frame.d1.is_bounded and frame.d2.is_bounded


def test_triple_json():
    ex = mutation_example()
    again = PLTriple.from_json(ex.regauged.to_json())
    assert body_from_triple(again, 1).same_set(body_from_triple(ex.regauged, 1))
    with pytest.raises(InvalidInput):
        PLTriple.from_json({"base": ex.regauged.to_json()["base"]})


TESTS = [
    test_triple_rejects_convex_function,
    test_triple_rejects_negative_length,
    test_bodies_match_matrix_hulls,
    test_regauge_shears_bodies,
    test_printed_gauge_rejects_eta,
    test_eta_position_checks,
    test_nabla_contains_gradients,
    test_dual_slices_recover_bodies,
    test_mutation_slices_differ,
    test_triple_json,
]


def main():
    from ._runner import run_tests
    run_tests(TESTS)


if __name__ == "__main__":
    main()

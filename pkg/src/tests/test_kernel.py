# src/tests/test_kernel.py
"""
Exact arithmetic, polyhedra, piecewise-linear functions and JSON codecs.

Usage (from repo root):
  python -m src.tests.test_kernel
  python -m pytest src/tests/test_kernel.py
"""

from __future__ import annotations
import os
from fractions import Fraction

import pytest

from src.kernel.config import MAX_M_DEFAULT, MAX_M_ENV, max_m
from src.kernel.errors import DomainError, InvalidInput, Unbounded
from src.kernel.plfunction import PLFunction, Triangulated, chamber_cells, envelopes
from src.kernel.polyhedron import (
    Polyhedron,
    barycenter,
    cone_hull,
    convex_hull,
    dual_cone,
    fiber_interval,
    minkowski_sum,
    project,
    random_point,
    slice_hyperplane,
)
from src.kernel.rational import RatMat, dot, make_rng, rat, vec
from src.kernel.serialize import dumps, mat_from_json, to_jsonable, vec_from_json

F = Fraction


def square() -> Polyhedron:
    return convex_hull([(0, 0), (1, 0), (0, 1), (1, 1), (F(1, 2), F(1, 2))])


def test_rat_rejects_floats():
    assert rat("3/6") == F(1, 2), "string rationals parse exactly"
    with pytest.raises(InvalidInput):
        rat(0.5)
    with pytest.raises(InvalidInput):
        vec_from_json([1, 0.25])


def test_hull_is_minimal():
    p = square()
    assert set(p.vertices) == set(vec(v) for v in [(0, 0), (1, 0), (0, 1), (1, 1)]), "interior point kept"
    assert len(p.inequalities) == 4 and not p.equations, f"square has 4 facets, got {p.hrep}"
    assert p.dimension == 2
    assert p.contains_point((F(1, 3), 1)) and not p.contains_point((2, 0))


def test_redundant_inequalities_dropped():
    p = Polyhedron.from_inequalities([((1, 0), 0), ((0, 1), 0), ((-1, -1), -1), ((-1, 0), -5)])
    assert len(p.inequalities) == 3, "x <= 5 is redundant in the unit triangle"
    assert p.same_set(convex_hull([(0, 0), (1, 0), (0, 1)]))


def test_lower_dimensional_hull():
    seg = convex_hull([(0, 0, 1), (2, 2, 1), (1, 1, 1)])
    assert seg.dimension == 1
    assert len(seg.vertices) == 2 and len(seg.equations) == 2, "segment in R^3 has two implicit equations"


def test_project_and_slice():
    cube = convex_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    assert project(cube, [0, 1]).same_set(square())
    cut = slice_hyperplane(cube, (1, 1, 1), F(3, 2))
    assert len(cut.vertices) == 6, "middle slice of a cube is a hexagon"


def test_cones_and_duals():
    quadrant = cone_hull([(1, 0), (0, 1)])
    assert quadrant.is_cone and not quadrant.is_bounded
    assert dual_cone(quadrant).same_set(quadrant), "positive quadrant is self-dual"
    with pytest.raises(InvalidInput):
        dual_cone(square())
    with pytest.raises(Unbounded):
        barycenter(quadrant)


def test_dual_of_dual_beyond_simplicial_cones():
    square_cone = cone_hull([(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)])
    d = dual_cone(square_cone)
    assert len(d.rays) == 4, "a cone over a square has a four-ray dual"
    assert dual_cone(d).same_set(square_cone)

    wedge = Polyhedron.from_generators([(0, 0, 0)], rays=[(1, 0, 0)], lineality=[(0, 1, 1)], dim=3)
    assert wedge.is_cone and wedge.lineality
    d = dual_cone(wedge)
    assert d.dimension == 2, "lines in a cone become equations of its dual"
    assert dual_cone(d).same_set(wedge)


def test_minkowski_sum_of_segments():
    a = convex_hull([(0, 0), (1, 0)])
    b = convex_hull([(0, 0), (0, 1)])
    assert minkowski_sum(a, b).same_set(square())


def test_envelopes_and_fibers():
    tent = convex_hull([(-1, 0), (1, 0), (0, 1)])
    phi, psi = envelopes(tent)
    assert phi((F(1, 2),)) == 0 and psi((F(1, 2),)) == F(1, 2)
    assert psi((F(-1, 4),)) == F(3, 4)
    assert fiber_interval(tent, (F(1, 2),)) == (0, F(1, 2))
    assert fiber_interval(tent, (2,)) is None
    with pytest.raises(DomainError):
        psi((3,))
    cells = chamber_cells(phi.domain, [phi, psi])
    assert len(cells) == 2, f"tent top splits the base at 0, got {len(cells)} cells"


def test_triangulated_concavity():
    pts = [(1, 0), (1, 1), (1, 2)]
    base = convex_hull(pts)
    cap = PLFunction(base, Triangulated(tuple(vec(p) for p in pts), ((0, 1), (1, 2)), vec((0, 1, 0))))
    cup = PLFunction(base, Triangulated(tuple(vec(p) for p in pts), ((0, 1), (1, 2)), vec((0, -1, 0))))
    assert cap.is_concave and not cup.is_concave
    assert cap((1, F(1, 2))) == F(1, 2)
    assert cap((1, F(3, 2))) == F(1, 2)


def test_random_point_is_interior():
    tri = convex_hull([(0, 0), (4, 0), (0, 4)])
    rng = make_rng(0)
    for _ in range(20):
        x = random_point(tri, rng)
        assert all(dot(a, x) > b for a, b in tri.inequalities), f"{x} touches the boundary"


def test_json_is_exact():
    M = mat_from_json([["1", "1/2"], [0, "-3"]])
    assert M == RatMat.from_rows([[1, F(1, 2)], [0, -3]])
    assert to_jsonable({"k": F(2, 6), "s": {3, 1}}) == {"k": "1/3", "s": [1, 3]}
    assert dumps({"b": 1, "a": 2}).startswith('{\n  "a"'), "keys are sorted"


def test_max_m_env_override():
    old = os.environ.pop(MAX_M_ENV, None)
    try:
        assert max_m() == MAX_M_DEFAULT
        os.environ[MAX_M_ENV] = "9"
        assert max_m() == 9
        os.environ[MAX_M_ENV] = "many"
        with pytest.raises(InvalidInput):
            max_m()
    finally:
        os.environ.pop(MAX_M_ENV, None)
        if old is not None:
            os.environ[MAX_M_ENV] = old


TESTS = [
    test_rat_rejects_floats,
    test_hull_is_minimal,
    test_redundant_inequalities_dropped,
    test_lower_dimensional_hull,
    test_project_and_slice,
    test_cones_and_duals,
    test_dual_of_dual_beyond_simplicial_cones,
    test_minkowski_sum_of_segments,
    test_envelopes_and_fibers,
    test_triangulated_concavity,
    test_random_point_is_interior,
    test_json_is_exact,
    test_max_m_env_override,
]


def main():
    from ._runner import run_tests
    run_tests(TESTS)


if __name__ == "__main__":
    main()

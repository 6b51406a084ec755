# src/tests/test_kernel_properties.py
"""
Property checks for the double-description layer on small random point sets.

Usage (from repo root):
  python -m src.tests.test_kernel_properties
"""

from __future__ import annotations
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from src.kernel.plfunction import envelopes
from src.kernel.polyhedron import (
    Polyhedron,
    convex_hull,
    dual_cone,
    fiber_interval,
    minkowski_sum,
    project,
    random_point,
)
from src.kernel.rational import is_zero, make_rng, vec

coord = st.integers(min_value=-3, max_value=3)
points2 = st.lists(st.tuples(coord, coord), min_size=1, max_size=7)
points3 = st.lists(st.tuples(coord, coord, coord), min_size=1, max_size=7)
fast = settings(max_examples=40, deadline=None)


@fast
@given(points3)
def test_hull_contains_inputs_and_vertices_are_inputs(pts):
    p = convex_hull(pts)
    given_pts = {vec(x) for x in pts}
    assert all(p.contains_point(x) for x in given_pts), "an input point fell outside its hull"
    assert set(p.vertices) <= given_pts, "a vertex was invented"


@fast
@given(points3)
def test_h_to_v_recovers_hull(pts):
    p = convex_hull(pts)
    q = Polyhedron.from_inequalities(p.inequalities, p.equations, dim=3)
    assert set(q.vertices) == set(p.vertices), "H -> V lost or gained vertices"
    assert q.dimension == p.dimension


@fast
@given(points3)
def test_envelopes_match_vertex_fibers(pts):
    p = convex_hull(pts)
    phi, psi = envelopes(p)
    base = project(p, [0, 1])
    for x in base.vertices:
        zs = [Fraction(z) for a, b, z in pts if (Fraction(a), Fraction(b)) == x]
        assert (phi(x), psi(x)) == (min(zs), max(zs)), f"fiber over base vertex {x}"


@fast
@given(points2, st.integers(min_value=0, max_value=2**16))
def test_random_points_stay_inside(pts, seed):
    p = convex_hull(pts)
    rng = make_rng(seed)
    for _ in range(5):
        assert p.contains_point(random_point(p, rng))


@fast
@given(points2, points2)
def test_minkowski_vertices_are_sums(a_pts, b_pts):
    a, b = convex_hull(a_pts), convex_hull(b_pts)
    s = minkowski_sum(a, b)
    sums = {tuple(x + y for x, y in zip(u, w)) for u in a.vertices for w in b.vertices}
    assert set(s.vertices) <= sums
    assert all(s.contains_point(v) for v in sums)


@fast
@given(points3, st.integers(min_value=0, max_value=2**16))
def test_envelopes_match_interior_fibers(pts, seed):
    p = convex_hull(pts)
    phi, psi = envelopes(p)
    base = project(p, [0, 1])
    rng = make_rng(seed)
    for _ in range(10):
        x = random_point(base, rng)
        assert (phi(x), psi(x)) == fiber_interval(p, x), f"fiber over {x}"


@fast
@given(points2, points2, points2)
def test_minkowski_identities(a_pts, b_pts, c_pts):
    a, b, c = convex_hull(a_pts), convex_hull(b_pts), convex_hull(c_pts)
    assert minkowski_sum(a, b).same_set(minkowski_sum(b, a)), "not commutative"
    assert minkowski_sum(minkowski_sum(a, b), c).same_set(minkowski_sum(a, minkowski_sum(b, c))), "not associative"
    assert minkowski_sum(a, convex_hull([(0, 0)])).same_set(a), "origin is not neutral"
    assert minkowski_sum(a, Polyhedron.empty(2)).is_empty


@fast
@given(points3)
def test_projection_commutes_with_hull(pts):
    hull = convex_hull(pts)
    from_h = Polyhedron.from_inequalities(hull.inequalities, hull.equations, dim=3)
    want = convex_hull([(x, z) for x, _, z in pts])
    assert project(from_h, [0, 2]).same_set(want)


@fast
@given(st.lists(st.tuples(coord, coord, coord), min_size=0, max_size=5),
       st.lists(st.tuples(coord, coord, coord), min_size=0, max_size=1))
def test_dual_cone_is_an_involution(rays, lines):
    rays = [r for r in rays if not is_zero(vec(r))]
    lines = [l for l in lines if not is_zero(vec(l))]
    c = Polyhedron.from_generators([(0, 0, 0)], rays=rays, lineality=lines, dim=3)
    assert c.is_cone
    d = dual_cone(c)
    assert d.is_cone, "a dual cone is a cone"
    assert dual_cone(d).same_set(c), f"dual of dual differs for rays={rays} lines={lines}"


TESTS = [
    test_hull_contains_inputs_and_vertices_are_inputs,
    test_h_to_v_recovers_hull,
    test_envelopes_match_vertex_fibers,
    test_random_points_stay_inside,
    test_minkowski_vertices_are_sums,
    test_envelopes_match_interior_fibers,
    test_minkowski_identities,
    test_projection_commutes_with_hull,
    test_dual_cone_is_an_involution,
]


def main():
    from ._runner import run_tests
    run_tests(TESTS)


if __name__ == "__main__":
    main()

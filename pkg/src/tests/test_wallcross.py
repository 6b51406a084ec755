# src/tests/test_wallcross.py
"""
Generic crossing data and the hypersurface counterexample.

Usage (from repo root):
  python -m src.tests.test_wallcross
"""

from __future__ import annotations
from fractions import Fraction

import pytest

from src.cli.reproduce import gr24_pair, gr25_pair
from src.cli.verify import adjacent_pairs
from src.gr2m.pair import GrPair, flip, shift
from src.kernel.errors import DomainError, InvalidInput
from src.kernel.polyhedron import project, random_point
from src.kernel.rational import RatMat, make_rng, vec
from src.tropcore.examples import hypersurface_example
from src.wallcross.counterexample import verify_counterexample
from src.wallcross.engine import ConePairInput, crossing_data, flip_generic, no_body, shift_generic


def gr24_input() -> ConePairInput:
    p = gr24_pair()
    return ConePairInput(p.M1, p.M2)


def test_input_validation():
    ones = [1, 1, 1]
    with pytest.raises(InvalidInput):
        ConePairInput(RatMat.from_rows([ones, [0, 1, 2]]), RatMat.from_rows([ones, [0, 1, 2], [1, 1, 1]]))
    with pytest.raises(InvalidInput):
        ConePairInput(RatMat.from_rows([[1, 2, 1], [0, 1, 2]]), RatMat.from_rows([[1, 2, 1], [0, 2, 1]]))
    with pytest.raises(InvalidInput):
        ConePairInput(RatMat.from_rows([ones, [0, 1, 2], [0, 0, 1]]),
                      RatMat.from_rows([ones, [0, 2, 1], [0, 0, 1]]))
    with pytest.raises(InvalidInput):
        crossing_data(gr24_input(), mode="guess")


def test_gr24_exact_crossing():
    rep = crossing_data(gr24_input(), mode="exact")
    assert rep.ok, [c.to_json() for c in rep.checks if not c.ok]
    assert rep.kappa == 1
    assert rep.checked_points > 0


def test_generic_flip_matches_closed_form():
    pair = gr25_pair()
    rep = crossing_data(ConePairInput(pair.M1, pair.M2), mode="exact")
    assert rep.ok and rep.kappa == 1
    rng = make_rng(2)
    for _ in range(10):
        y = tuple(2 * c for c in random_point(rep.body1, rng))
        assert flip_generic(rep, y) == flip(pair, y)
        assert shift_generic(rep, y) == shift(pair, y)


def test_generic_maps_invert_each_other():
    inp = gr24_input()
    rep, back = crossing_data(inp, mode="exact"), crossing_data(inp.reversed(), mode="exact")
    rng = make_rng(4)
    for _ in range(10):
        x = random_point(rep.body1, rng)
        assert flip_generic(back, flip_generic(rep, x)) == x
        assert shift_generic(back, shift_generic(rep, x)) == x


def test_cone_extension_is_homogeneous():
    rep = crossing_data(gr24_input(), mode="exact")
    x = vec((2, 1, 1, 1, 0))
    half = tuple(c / 2 for c in x)
    assert flip_generic(rep, x) == tuple(2 * c for c in flip_generic(rep, half))
    assert flip_generic(rep, (0, 0, 0, 0, 0)) == vec((0, 0, 0, 0, 0))
    with pytest.raises(DomainError):
        flip_generic(rep, (1, 5, 0, 0, 0))
    with pytest.raises(DomainError):
        flip_generic(rep, (-1, 0, 0, 0, 0))


def test_sample_mode_is_seeded():
    a = crossing_data(gr24_input(), mode="sample", seed=99, samples=30)
    b = crossing_data(gr24_input(), mode="sample", seed=99, samples=30)
    assert a.ok and a.checked_points == 30
    assert a.to_json() == b.to_json()


def test_hypersurface_crossing_values():
    ex = hypersurface_example()
    rep = crossing_data(ConePairInput(ex.M1, ex.M2), mode="exact")
    assert rep.kappa == 1
    assert flip_generic(rep, (1, 1, 0)) == vec((1, 1, 1))
    assert shift_generic(rep, (1, 1, 0)) == (1, 1, Fraction(1, 6))


def test_counterexample_report():
    rep = verify_counterexample()
    bad = [c.to_json() for c in rep.checks if not c.ok]
    assert rep.ok, f"failed checks: {bad}"
    names = {c.name for c in rep.checks}
    assert {"theta-not-additive", "geometric-moves-point", "straightening-witness"} <= names


def test_projection_equal_all_pairs_up_to_m6():
    for m in (4, 5, 6):
        for t1, t2 in adjacent_pairs(m):
            pair = GrPair.from_trees(t1, t2, relabel_leaves=True)
            d = pair.M1.nrows - 1
            base1 = project(no_body(pair.M1), range(d))
            base2 = project(no_body(pair.M2), range(d))
            assert base1.same_set(base2), f"{pair.key()}: bodies project to different bases"


TESTS = [
    test_input_validation,
    test_gr24_exact_crossing,
    test_generic_flip_matches_closed_form,
    test_generic_maps_invert_each_other,
    test_cone_extension_is_homogeneous,
    test_sample_mode_is_seeded,
    test_hypersurface_crossing_values,
    test_counterexample_report,
    test_projection_equal_all_pairs_up_to_m6,
]


def main():
    from ._runner import run_tests
    run_tests(TESTS)


if __name__ == "__main__":
    main()

# src/cli/reproduce.py
"""Named worked examples, each a list of exact expected/actual checks."""

from __future__ import annotations
from typing import Any, Callable, Dict, List, Tuple

from src.gr2m.algebraic import straighten, straighten_gr24, theta
from src.gr2m.matrices import build_M, build_Mtilde, nohara_ueda, nohara_ueda_polytope
from src.gr2m.pair import GrPair, flip
from src.kernel.errors import InvalidInput
from src.kernel.polyhedron import Polyhedron, convex_hull, linear_image
from src.kernel.rational import RatMat
from src.kernel.serialize import mat_to_json, polyhedron_to_json, to_jsonable
from src.mutation.dual import build_frame, dual_slice
from src.mutation.triple import mutation_example, body_from_triple, shear
from src.trees.tree import TrivalentTree
from src.tropcore.poly import weight_value
from src.wallcross.counterexample import verify_counterexample
from src.wallcross.engine import Check

Result = Tuple[List[Check], Dict[str, Any]]

GR24_M1 = [[1, 1, 1, 1, 1, 1], [1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1], [1, 0, 0, 0, 0, 1]]
GR24_M2 = GR24_M1[:4] + [[0, 0, 1, 1, 0, 0]]
GR24_MTILDE = [[1, 1, 1, 0, 0, 0], [1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1], [0, 1, 1, 1, 1, 0]]
GR25_TOP = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 1, 1, 0],
    [0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
    [0, 0, 0, 1, 0, 0, 1, 0, 1, 1],
    [1, 1, 0, 0, 1, 0, 0, 0, 0, 1],
]
GR25_M1 = GR25_TOP + [[1, 0, 0, 0, 0, 0, 0, 1, 1, 1]]
GR25_M2 = GR25_TOP + [[0, 0, 1, 1, 1, 0, 0, 0, 0, 1]]


def gr24_pair() -> GrPair:
    return GrPair.from_trees(TrivalentTree.from_splits(4, [[1, 2]]), TrivalentTree.from_splits(4, [[1, 4]]))


def gr25_pair() -> GrPair:
    return GrPair.from_trees(TrivalentTree.from_splits(5, [[4, 5], [1, 2]]),
                             TrivalentTree.from_splits(5, [[4, 5], [2, 3]]))


def _eq(name: str, actual: Any, expected: Any) -> Check:
    ok = actual == expected
    return Check(name, ok, f"expected {to_jsonable(expected)}, got {to_jsonable(actual)}",
                 witness=None if ok else actual)


def gr24_matrices() -> Result:
    pair = gr24_pair()
    checks = [
        _eq("M_tau1", pair.M1, RatMat.from_rows(GR24_M1)),
        _eq("M_tau2", pair.M2, RatMat.from_rows(GR24_M2)),
        _eq("Mtilde_tau1", pair.Mtilde1, RatMat.from_rows(GR24_MTILDE)),
    ]
    return checks, {"M1": mat_to_json(pair.M1), "M2": mat_to_json(pair.M2)}


def gr25_matrices() -> Result:
    pair = gr25_pair()
    adj = pair.adj
    checks = [
        _eq("M_tau1", pair.M1, RatMat.from_rows(GR25_M1)),
        _eq("M_tau2", pair.M2, RatMat.from_rows(GR25_M2)),
        _eq("blocks", [sorted(b) for b in adj.blocks()], [[1], [2], [3], [4, 5]]),
    ]
    return checks, {"M1": mat_to_json(pair.M1), "M2": mat_to_json(pair.M2), "adjacency": adj.to_json()}


def nohara_ueda_check() -> Result:
    t = gr24_pair().t1
    # z_a <= z_b + z_c written as -z_a + z_b + z_c >= 0, edges indexed 1..5
    listed = {
        (-1, 1, 0, 0, 1), (1, -1, 0, 0, 1), (1, 1, 0, 0, -1),
        (0, 0, -1, 1, 1), (0, 0, 1, -1, 1), (0, 0, 1, 1, -1),
    }
    got = {tuple(int(x) for x in a) for a, _ in nohara_ueda(t).inequalities}
    hull = convex_hull(build_Mtilde(t).columns())
    checks = [
        _eq("inequalities", sorted(got), sorted(listed)),
        Check("hull-equals-inequalities", hull.same_set(nohara_ueda_polytope(t)),
              "hull of the path-indicator columns equals the inequality polytope"),
    ]
    return checks, {"polytope": polyhedron_to_json(hull)}


def gr24_theta() -> Result:
    pair = gr24_pair()
    e13_e24 = (0, 1, 0, 0, 1, 0)
    checks = [
        _eq("straighten e13+e24", straighten(e13_e24), (0, 0, 1, 1, 0, 0)),
        _eq("straighten 2e13+e24", straighten((0, 2, 0, 0, 1, 0)), (0, 1, 1, 1, 0, 0)),
        _eq("theta(M1 e12)", theta(pair, weight_value(pair.M1, (1, 0, 0, 0, 0, 0)), (1, 0, 0, 0, 0, 0)),
            weight_value(pair.M2, (1, 0, 0, 0, 0, 0))),
        _eq("theta(M1 (e13+e24))", theta(pair, weight_value(pair.M1, e13_e24), e13_e24),
            weight_value(pair.M2, (0, 0, 1, 1, 0, 0))),
        _eq("flip(M1 (e13+e24))", flip(pair, weight_value(pair.M1, e13_e24)), (2, 1, 1, 1, 2)),
    ]
    for alpha in [(1, 3, 0, 2, 1, 0), (0, 1, 2, 0, 4, 1), (2, 2, 1, 1, 2, 2)]:
        checks.append(_eq(f"closed form {alpha}", straighten(alpha), straighten_gr24(alpha)))
    return checks, {}


def counterexample() -> Result:
    rep = verify_counterexample()
    return rep.checks + list(rep.crossing.checks), rep.to_json()


def mutation_example_check() -> Result:
    ex = mutation_example()
    checks = []
    for side in (1, 2):
        body = body_from_triple(ex.triple, side)
        checks.append(Check(f"body{side}-equals-hull", body.same_set(ex.expected_body(side)),
                            f"side {side} body against the matrix columns"))
    try:
        build_frame(ex.triple, ex.eta)
        checks.append(Check("printed-gauge-rejects-eta", False, "expected the standing assumption to fail"))
    except InvalidInput as e:
        checks.append(Check("printed-gauge-rejects-eta", True, str(e), witness=e.witness))

    frame = build_frame(ex.regauged, ex.eta)
    ells = {1: (1, 0, -1), 2: (0, 0, 1)}
    for side, sigma in ((1, frame.sigma1), (2, frame.sigma2)):
        want = linear_image(ex.expected_body(side), shear(3, ells[side]))
        checks.append(Check(f"dual-slice{side}", dual_slice(sigma).same_set(want),
                            "sigma dual at x1 = 1 recovers the sheared body"))
    checks.append(Check("slices-differ", not frame.d1.same_set(frame.d2), "the mutation is nontrivial"))
    payload = {
        "eta": to_jsonable(frame.eta),
        "d1": polyhedron_to_json(frame.d1),
        "d2": polyhedron_to_json(frame.d2),
    }
    return checks, payload


REPRODUCERS: Dict[str, Callable[[], Result]] = {
    "gr24-matrices": gr24_matrices,
    "gr25-matrices": gr25_matrices,
    "nohara-ueda": nohara_ueda_check,
    "gr24-theta": gr24_theta,
    "counterexample": counterexample,
    "appendix-example": mutation_example_check,
}


def reproduce(item: str) -> Dict[str, Any]:
    if item not in REPRODUCERS:
        raise InvalidInput(f"unknown example {item!r}; known: {sorted(REPRODUCERS)}")
    checks, payload = REPRODUCERS[item]()
    return {
        "item": item,
        "checks": [c.to_json() for c in checks],
        "data": payload,
        "ok": all(c.ok for c in checks),
    }

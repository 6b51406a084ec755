# src/wallcross/counterexample.py
"""
The degree-11 hypersurface: its algebraic crossing is not additive, so it
cannot be the restriction of any piecewise-linear geometric crossing.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Any, Dict, List

import sympy

from src.kernel.logging_config import get_logger
from src.kernel.rational import vec
from src.kernel.serialize import to_jsonable
from src.tropcore.examples import HypersurfaceExample, X, hypersurface_example
from src.tropcore.poly import initial_form
from src.tropcore.rewriting import algebraic_crossing

from .engine import Check, ConePairInput, CrossingReport, crossing_data, flip_generic, shift_generic

log = get_logger(__name__)


@dataclass
class CounterexampleReport:
    crossing: CrossingReport
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks) and self.crossing.ok

    def to_json(self) -> Dict[str, Any]:
        return {
            "checks": [c.to_json() for c in self.checks],
            "crossing": [c.to_json() for c in self.crossing.checks],
            "kappa": to_jsonable(self.crossing.kappa),
            "ok": self.ok,
        }


def _expect(name: str, actual: Any, expected: Any) -> Check:
    return Check(name, actual == expected, f"expected {to_jsonable(expected)}, got {to_jsonable(actual)}",
                 witness=None if actual == expected else actual)


def verify_counterexample(mode: str = "exact") -> CounterexampleReport:
    ex: HypersurfaceExample = hypersurface_example()
    x1, x2, x3, x4 = X
    rep = crossing_data(ConePairInput(ex.M1, ex.M2, ("x1", "x2", "x3", "x4")), mode=mode)
    out = CounterexampleReport(rep)

    want1 = sympy.Poly(x2**11 - x1**6 * x3**4 * x4, *X, domain=sympy.QQ)
    want2 = sympy.Poly(x2**11 - x1**7 * x3 * x4**3, *X, domain=sympy.QQ)
    out.checks.append(_expect("initial-form-w1", initial_form(ex.f, ex.w1).as_expr(), want1.as_expr()))
    out.checks.append(_expect("initial-form-w2", initial_form(ex.f, ex.w2).as_expr(), want2.as_expr()))

    trace = ex.rewriter.trace((0, 11, 0, 0))
    out.checks.append(_expect("straightening-witness", [list(a) for _, a in trace], [[6, 0, 4, 1]]))

    theta = lambda s, w: algebraic_crossing(ex.M1, ex.M2, ex.rewriter, vec(s), w)
    small = theta((1, 1, 0), (0, 1, 0, 0))
    big = theta((11, 11, 0), (0, 11, 0, 0))
    out.checks.append(_expect("theta(1,1,0)", small, vec((1, 1, 0))))
    out.checks.append(_expect("theta(11,11,0)", big, vec((11, 11, 11))))
    out.checks.append(Check("theta-not-additive", big != tuple(11 * c for c in small),
                            "theta(11,11,0) differs from 11 * theta(1,1,0)", witness=big))

    # x1 is standard in every degree, so theta is additive along it
    e1 = [theta(ex.M1 @ (k, 0, 0, 0), (k, 0, 0, 0)) for k in (1, 2)]
    out.checks.append(_expect("theta-additive-x1", e1[1], tuple(2 * c for c in e1[0])))

    p = vec((1, 1, 0))
    f_img, s_img = flip_generic(rep, p), shift_generic(rep, p)
    out.checks.append(_expect("flip(1,1,0)", f_img, vec((1, 1, 1))))
    out.checks.append(_expect("shift(1,1,0)", s_img, vec((1, 1, "1/6"))))
    out.checks.append(Check("geometric-moves-point", f_img != p and s_img != p and small == p,
                            "theta fixes (1,1,0) while flip and shift move it",
                            witness={"flip": f_img, "shift": s_img}))
    out.checks.append(_expect("kappa", rep.kappa, 1))
    log.info("counterexample: %d checks, ok=%s", len(out.checks), out.ok)
    return out

# src/tropcore/rewriting.py
"""
Binomial rewriting modulo an initial ideal.

Each rule replaces a lead monomial by the other monomial of a binomial initial
form. The normal form of an exponent is the unique standard representative
when the rules come from a Gröbner basis; tests check uniqueness by comparing
rewrite orders.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy

from src.kernel.config import STRAIGHTEN_MAX_STEPS
from src.kernel.errors import InvalidInput, TheoremViolation
from src.kernel.logging_config import get_logger
from src.kernel.rational import RatMat, RatVec

from .poly import Exponent, weight_value

log = get_logger(__name__)


@dataclass(frozen=True)
class RewriteRule:
    lead: Exponent
    tail: Exponent
    label: str = ""

    def applies(self, alpha: Sequence[int]) -> bool:
        return all(a >= l for a, l in zip(alpha, self.lead))

    def apply(self, alpha: Sequence[int]) -> Exponent:
        return tuple(a - l + t for a, l, t in zip(alpha, self.lead, self.tail))


class BinomialRewriter:
    def __init__(self, nvars: int, rules: Sequence[RewriteRule]):
        for r in rules:
            if len(r.lead) != nvars or len(r.tail) != nvars:
                raise InvalidInput(f"rule {r.label or r.lead} does not match {nvars} variables")
        self.nvars = nvars
        self.rules: Tuple[RewriteRule, ...] = tuple(rules)

    @classmethod
    def from_binomials(cls, binomials: Sequence[sympy.Poly], leads: Sequence[Exponent],
                       labels: Optional[Sequence[str]] = None) -> "BinomialRewriter":
        """One rule per binomial initial form: its `lead` term is rewritten into the other term."""
        rules = []
        for k, (b, lead) in enumerate(zip(binomials, leads)):
            monos = [tuple(u) for u, _ in b.terms()]
            if len(monos) != 2 or tuple(lead) not in monos:
                raise InvalidInput(f"{b.as_expr()} is not a binomial with lead {lead}")
            tail = monos[1] if monos[0] == tuple(lead) else monos[0]
            rules.append(RewriteRule(tuple(lead), tail, labels[k] if labels else ""))
        n = len(binomials[0].gens) if binomials else 0
        return cls(n, rules)

    def _check(self, alpha: Sequence[int]) -> Exponent:
        a = tuple(int(x) for x in alpha)
        if len(a) != self.nvars:
            raise InvalidInput(f"exponent of length {len(a)}, expected {self.nvars}")
        if any(x < 0 for x in a):
            raise InvalidInput("exponents must be non-negative", witness=a)
        return a

    def applicable(self, alpha: Sequence[int]) -> List[RewriteRule]:
        return [r for r in self.rules if r.applies(alpha)]

    def is_standard(self, alpha: Sequence[int]) -> bool:
        a = self._check(alpha)
        return not any(r.applies(a) for r in self.rules)

    def trace(self, alpha: Sequence[int], rng: Optional[np.random.Generator] = None,
              max_steps: int = STRAIGHTEN_MAX_STEPS) -> List[Tuple[RewriteRule, Exponent]]:
        """
        Rewrite steps until standard: the first applicable rule each time, or a
        random applicable one when `rng` is given. Each entry is (rule, result).
        """
        a = self._check(alpha)
        steps: List[Tuple[RewriteRule, Exponent]] = []
        while True:
            if rng is None:
                rule = next((r for r in self.rules if r.applies(a)), None)
            else:
                live = self.applicable(a)
                rule = live[int(rng.integers(len(live)))] if live else None
            if rule is None:
                return steps
            a = rule.apply(a)
            steps.append((rule, a))
            if len(steps) > max_steps:
                raise TheoremViolation(f"rewriting did not terminate within {max_steps} steps",
                                       witness=tuple(alpha))

    def normal_form(self, alpha: Sequence[int], rng: Optional[np.random.Generator] = None) -> Exponent:
        steps = self.trace(alpha, rng)
        return steps[-1][1] if steps else self._check(alpha)


def algebraic_crossing(M1: RatMat, M2: RatMat, rewriter: BinomialRewriter,
                       s: Sequence, witness: Sequence[int]) -> RatVec:
    """Theta(s) = M2 . normal_form(witness), after checking M1 . witness = s."""
    got = weight_value(M1, witness)
    if tuple(got) != tuple(s):
        raise InvalidInput("witness exponent does not realize the given value",
                           witness={"expected": tuple(s), "M1.witness": got})
    standard = rewriter.normal_form(witness)
    log.debug("theta: witness %s -> standard %s", tuple(witness), standard)
    return weight_value(M2, standard)

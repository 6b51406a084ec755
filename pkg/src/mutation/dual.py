# src/mutation/dual.py
"""
Dual polyhedra of a triple and the mutation slices.

nabla(Psi) is the set of linear functionals dominating Psi on the base. The
cone sigma_1 is spanned by nabla_1 at height +1 and nabla_2 + nabla_0 at
height -1 (sigma_2 swaps nabla_1 and nabla_2); slicing its dual at x_1 = 1
gives back the side-1 body. Slicing sigma_i itself along (eta, 0) = 1 gives
the polytopes D_i.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from src.kernel.errors import InvalidInput
from src.kernel.logging_config import get_logger
from src.kernel.plfunction import PLFunction, Triangulated
from src.kernel.polyhedron import Polyhedron, dual_cone, minkowski_sum, slice_hyperplane
from src.kernel.rational import RatLike, RatVec, dot, unit, vec

from .triple import PLTriple

log = get_logger(__name__)


def nabla(psi: PLFunction) -> Polyhedron:
    """{u : <u, x> >= Psi(x) on the base}, one constraint per vertex of Psi's pieces."""
    if isinstance(psi.form, Triangulated):
        data = zip(psi.form.points, psi.form.values)
    else:
        data = ((p, psi(p)) for p in psi.vertices())
    return Polyhedron.from_inequalities([(p, v) for p, v in data], dim=psi.domain.dim)


def _lift(p: Polyhedron, height: int) -> Tuple[list, list, list]:
    v = p.vrep
    h = Fraction(height)
    return ([x + (h,) for x in v.vertices],
            [r + (Fraction(0),) for r in v.rays],
            [l + (Fraction(0),) for l in v.lineality])


def build_sigma(n0: Polyhedron, n1: Polyhedron, n2: Polyhedron) -> Tuple[Polyhedron, Polyhedron]:
    def cone(top: Polyhedron, bottom: Polyhedron) -> Polyhedron:
        tv, tr, tl = _lift(top, 1)
        bv, br, bl = _lift(minkowski_sum(bottom, n0), -1)
        k = top.dim + 1
        return Polyhedron.from_generators([(0,) * k], rays=tv + bv + tr + br, lineality=tl + bl, dim=k)

    return cone(n1, n2), cone(n2, n1)


def dual_slice(sigma: Polyhedron) -> Polyhedron:
    """sigma^dual cut by x_1 = 1: the body the cone encodes."""
    return slice_hyperplane(dual_cone(sigma), unit(sigma.dim, 0), 1)


@dataclass
class MutationFrame:
    triple: PLTriple
    eta: RatVec
    nabla0: Polyhedron
    nabla1: Polyhedron
    nabla2: Polyhedron
    sigma1: Polyhedron
    sigma2: Polyhedron
    d1: Optional[Polyhedron] = None
    d2: Optional[Polyhedron] = None


def check_eta(frame: MutationFrame) -> None:
    """eta must be interior to the base with Psi0(eta) = 0 < Psi1(eta), Psi2(eta), and orthogonal to nabla0."""
    t, eta = frame.triple, frame.eta
    if len(eta) != t.dim:
        raise InvalidInput(f"eta of length {len(eta)} for a base in dimension {t.dim}")
    if not t.base.contains_point(eta):
        raise InvalidInput("eta lies outside the base", witness=eta)
    for a, b in t.base.inequalities:
        if dot(a, eta) == b:
            raise InvalidInput("eta lies on the boundary of the base", witness={"eta": eta, "facet": (a, b)})
    for u in frame.nabla0.vertices:
        if dot(u, eta) != 0:
            raise InvalidInput("eta is not orthogonal to a vertex of nabla0", witness=u)
    if t.psi0(eta) != 0:
        raise InvalidInput("Psi0(eta) must vanish", witness=t.psi0(eta))
    for k, f in ((1, t.psi1), (2, t.psi2)):
        if f(eta) <= 0:
            raise InvalidInput(f"Psi{k}(eta) must be positive", witness=f(eta))


def mutation_slices(frame: MutationFrame) -> Tuple[Polyhedron, Polyhedron]:
    check_eta(frame)
    normal = frame.eta + (Fraction(0),)
    d1 = slice_hyperplane(frame.sigma1, normal, 1)
    d2 = slice_hyperplane(frame.sigma2, normal, 1)
    log.info("mutation slices: %d and %d vertices", len(d1.vertices), len(d2.vertices))
    return d1, d2


def build_frame(t: PLTriple, eta: Sequence[RatLike]) -> MutationFrame:
    n0, n1, n2 = (nabla(f) for f in t.psis)
    s1, s2 = build_sigma(n0, n1, n2)
    frame = MutationFrame(t, vec(eta), n0, n1, n2, s1, s2)
    frame.d1, frame.d2 = mutation_slices(frame)
    return frame

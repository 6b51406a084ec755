# src/mutation/triple.py
"""
Bodies from a triple of concave piecewise-linear functions on a base polytope.

Side 1 is {(x, y) : -Psi1(x) <= y <= Psi2(x) + Psi0(x)}; side 2 swaps Psi1 and
Psi2. Both sides have fiber length Psi0 + Psi1 + Psi2 over every base point.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from src.kernel.errors import InvalidInput
from src.kernel.logging_config import get_logger
from src.kernel.plfunction import PLFunction, Triangulated
from src.kernel.polyhedron import Polyhedron, convex_hull
from src.kernel.rational import RatLike, RatMat, RatVec, dot, vec
from src.kernel.serialize import plfunction_to_json, polyhedron_from_json, polyhedron_to_json, triangulated_from_json

log = get_logger(__name__)


@dataclass(frozen=True)
class PLTriple:
    base: Polyhedron
    psi0: PLFunction
    psi1: PLFunction
    psi2: PLFunction

    def __post_init__(self):
        for k, f in enumerate(self.psis):
            if f.domain.dim != self.base.dim:
                raise InvalidInput(f"Psi{k} lives in dimension {f.domain.dim}, base in {self.base.dim}")
            if not f.is_concave:
                raise InvalidInput(f"Psi{k} is not concave")
        for p in self.points():
            total = sum((f(p) for f in self.psis), Fraction(0))
            if total < 0:
                raise InvalidInput("Psi0 + Psi1 + Psi2 is negative", witness=p)

    @property
    def psis(self) -> Tuple[PLFunction, PLFunction, PLFunction]:
        return self.psi0, self.psi1, self.psi2

    @property
    def dim(self) -> int:
        return self.base.dim

    def points(self) -> List[RatVec]:
        pts = set()
        for f in self.psis:
            pts.update(f.vertices())
        return sorted(pts)

    def to_json(self) -> Dict[str, Any]:
        return {"base": polyhedron_to_json(self.base), "psi": [plfunction_to_json(f) for f in self.psis]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "PLTriple":
        try:
            base = polyhedron_from_json(data["base"])
            forms = [triangulated_from_json(f) for f in data["psi"]]
        except (KeyError, TypeError) as e:
            raise InvalidInput(f"triple JSON needs 'base' and three 'psi' entries: {e}")
        if len(forms) != 3:
            raise InvalidInput(f"expected three functions, got {len(forms)}")
        return cls(base, *(PLFunction(base, f) for f in forms))


def triangulated(base: Polyhedron, points: Sequence[Sequence[RatLike]],
                 simplices: Sequence[Sequence[int]], values: Sequence[RatLike]) -> PLFunction:
    return PLFunction(base, Triangulated(tuple(vec(p) for p in points),
                                         tuple(tuple(s) for s in simplices), vec(values)))


def body_from_triple(t: PLTriple, side: int) -> Polyhedron:
    """
    H-rep in (x, y): the base constraints, y + f(x) >= 0 for every piece f of
    the lower function, and g(x) + h(x) - y >= 0 for every pair of pieces of
    the two upper functions. Concavity makes the minimum of the pieces equal
    to the function on the base.
    """
    if side not in (1, 2):
        raise InvalidInput(f"side must be 1 or 2, got {side}")
    lower, upper = (t.psi1, t.psi2) if side == 1 else (t.psi2, t.psi1)
    h = t.base._constraints()
    ineqs = [(a + (Fraction(0),), b) for a, b in h.inequalities]
    eqs = [(a + (Fraction(0),), b) for a, b in h.equations]
    for f in lower.pieces():
        ineqs.append((f.coeffs + (Fraction(1),), -f.const))
    for g in upper.pieces():
        for k in t.psi0.pieces():
            s = g + k
            ineqs.append((s.coeffs + (Fraction(-1),), -s.const))
    return Polyhedron.from_inequalities(ineqs, eqs, dim=t.dim + 1)


def regauge(t: PLTriple, ell0: Sequence[RatLike], ell1: Sequence[RatLike]) -> PLTriple:
    """
    Add linear functions l0, l1 and l2 = -l0 - l1 to Psi0, Psi1, Psi2. The sum
    is unchanged; side 1 is sheared by y -> y - l1 and side 2 by y -> y - l2.
    """
    ell0, ell1 = vec(ell0), vec(ell1)
    ell2 = tuple(-a - b for a, b in zip(ell0, ell1))
    out = []
    for f, ell in zip(t.psis, (ell0, ell1, ell2)):
        if not isinstance(f.form, Triangulated):
            raise InvalidInput("regauge expects triangulated functions")
        tri = f.form
        values = tuple(v + dot(ell, p) for p, v in zip(tri.points, tri.values))
        out.append(PLFunction(f.domain, Triangulated(tri.points, tri.simplices, values)))
    return PLTriple(t.base, *out)


def shear(dim: int, ell: Sequence[RatLike]) -> RatMat:
    """Linear map (x, y) -> (x, y - ell.x) on R^dim x R."""
    ell = vec(ell)
    rows = []
    for i in range(dim):
        rows.append(tuple(Fraction(int(i == j)) for j in range(dim + 1)))
    rows.append(tuple(-c for c in ell) + (Fraction(1),))
    return RatMat(tuple(rows))


# --- the worked example: a triangle split into two simplices ---

EXAMPLE_POINTS = ((1, -1, 0), (1, 0, 0), (1, 1, 0), (1, 0, 1))
EXAMPLE_SIMPLICES = ((0, 1, 3), (1, 2, 3))
EXAMPLE_VALUES = ((0, 1, 1, 1), (0, 0, -1, -1), (0, 0, 0, 0))
EXAMPLE_MATRIX = RatMat.from_rows([
    [1, 1, 1, 1, 1],
    [1, -1, 0, 0, 0],
    [0, 0, 0, 0, 1],
    [1, 0, 0, 1, 1],
    [0, 0, 1, 0, 0],
])
EXAMPLE_ELL0 = (-1, 0, 0)
EXAMPLE_ELL1 = (1, 0, -1)
EXAMPLE_ETA = (1, 0, Fraction(1, 4))


@dataclass(frozen=True)
class MutationExample:
    triple: PLTriple            # as printed
    regauged: PLTriple          # admits eta
    matrix: RatMat
    eta: RatVec

    def expected_body(self, side: int) -> Polyhedron:
        """Hull of the matrix columns with row 5 (side 1) or row 4 (side 2) removed."""
        drop = 4 if side == 1 else 3
        return convex_hull(self.matrix.drop_rows(drop).columns())


def mutation_example() -> MutationExample:
    base = convex_hull(EXAMPLE_POINTS)
    fs = [triangulated(base, EXAMPLE_POINTS, EXAMPLE_SIMPLICES, v) for v in EXAMPLE_VALUES]
    t = PLTriple(base, *fs)
    return MutationExample(t, regauge(t, EXAMPLE_ELL0, EXAMPLE_ELL1), EXAMPLE_MATRIX, vec(EXAMPLE_ETA))

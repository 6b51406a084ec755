# src/kernel/plfunction.py
from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import List, Sequence, Tuple, Union

from .errors import DomainError, InvalidInput, Unbounded
from .polyhedron import Polyhedron, project
from .rational import RatLike, RatVec, dot, solve, vec


class Combiner(str, Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class AffineFunctional:
    """x -> coeffs.x + const."""
    coeffs: RatVec
    const: Fraction = Fraction(0)

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        return dot(self.coeffs, x) + self.const

    def __add__(self, other: "AffineFunctional") -> "AffineFunctional":
        return AffineFunctional(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                                self.const + other.const)

    def __neg__(self) -> "AffineFunctional":
        return AffineFunctional(tuple(-a for a in self.coeffs), -self.const)

    def __sub__(self, other: "AffineFunctional") -> "AffineFunctional":
        return self + (-other)


@dataclass(frozen=True)
class Envelope:
    combiner: Combiner
    pieces: Tuple[AffineFunctional, ...]

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        vals = [f(x) for f in self.pieces]
        return min(vals) if self.combiner is Combiner.MIN else max(vals)


@dataclass(frozen=True)
class Triangulated:
    """Values at `points`; each simplex is a tuple of point indices spanning a full cell."""
    points: Tuple[RatVec, ...]
    simplices: Tuple[Tuple[int, ...], ...]
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.points) != len(self.values):
            raise InvalidInput(f"{len(self.points)} points but {len(self.values)} values")
        for s in self.simplices:
            if any(i < 0 or i >= len(self.points) for i in s):
                raise InvalidInput(f"simplex {s} references a missing point")

    @cached_property
    def simplex_pieces(self) -> Tuple[AffineFunctional, ...]:
        """
        One linear functional per simplex interpolating its vertex values. Points
        carry a leading homogenizing coordinate, so a linear functional on them is
        affine on the base.
        """
        pieces = []
        for s in self.simplices:
            rows = [self.points[i] for i in s]
            u = solve(rows, [self.values[i] for i in s])
            if u is None:
                raise InvalidInput(f"simplex {s} is degenerate", witness=rows)
            pieces.append(AffineFunctional(u))
        return tuple(pieces)

    def barycentric(self, s: Tuple[int, ...], x: Sequence[Fraction]) -> RatVec:
        cols = [self.points[i] for i in s]
        transposed = [tuple(c[k] for c in cols) for k in range(len(x))]
        lam = solve(transposed, x)
        if lam is None:
            raise InvalidInput(f"simplex {s} is degenerate")
        return lam

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        for s, piece in zip(self.simplices, self.simplex_pieces):
            if all(l >= 0 for l in self.barycentric(s, x)):
                return piece(x)
        raise DomainError("point is not covered by the triangulation", witness=tuple(x))

    def is_concave(self) -> bool:
        return all(piece(p) >= v for piece in self.simplex_pieces
                   for p, v in zip(self.points, self.values))


@dataclass(frozen=True)
class PLFunction:
    domain: Polyhedron
    form: Union[Envelope, Triangulated]

    def __call__(self, x: Sequence[RatLike]) -> Fraction:
        x = vec(x)
        if len(x) != self.domain.dim:
            raise InvalidInput(f"point of length {len(x)} for a function on dimension {self.domain.dim}")
        if not self.domain.contains_point(x):
            raise DomainError("point outside the domain", witness=x)
        return self.form(x)

    def pieces(self) -> Tuple[AffineFunctional, ...]:
        if isinstance(self.form, Envelope):
            return self.form.pieces
        return self.form.simplex_pieces

    @property
    def is_concave(self) -> bool:
        if isinstance(self.form, Envelope):
            return self.form.combiner is Combiner.MIN
        return self.form.is_concave()

    def as_min_envelope(self) -> "PLFunction":
        """Concave function as the minimum of its pieces (valid on the domain only)."""
        if not self.is_concave:
            raise InvalidInput("only concave functions are minima of their pieces")
        return PLFunction(self.domain, Envelope(Combiner.MIN, self.pieces()))

    def vertices(self) -> Tuple[RatVec, ...]:
        """Points at which the function is determined: the triangulation points, or chamber-cell vertices."""
        if isinstance(self.form, Triangulated):
            return self.form.points
        pts = set()
        for cell in chamber_cells(self.domain, [self]):
            pts.update(cell.vertices)
        return tuple(sorted(pts))


def envelopes(p: Polyhedron) -> Tuple[PLFunction, PLFunction]:
    """
    Lower (max) and upper (min) envelopes of the last coordinate of p over the
    projection onto the other coordinates, read straight off the H-rep.
    """
    if p.is_empty:
        raise InvalidInput("envelopes of an empty polyhedron")
    if any(r[-1] != 0 for r in p.rays + p.lineality):
        raise Unbounded("last coordinate is unbounded", witness=(p.rays, p.lineality))
    lower: List[AffineFunctional] = []
    upper: List[AffineFunctional] = []
    h = p.hrep
    for (a, b), is_eq in [(c, False) for c in h.inequalities] + [(c, True) for c in h.equations]:
        az = a[-1]
        if az == 0:
            continue
        # az*z >= b - a'.x  ->  z compared with (b - a'.x) / az
        f = AffineFunctional(tuple(-c / az for c in a[:-1]), b / az)
        if is_eq or az > 0:
            lower.append(f)
        if is_eq or az < 0:
            upper.append(f)
    base = project(p, range(p.dim - 1))
    phi = PLFunction(base, Envelope(Combiner.MAX, tuple(_dedupe(lower))))
    psi = PLFunction(base, Envelope(Combiner.MIN, tuple(_dedupe(upper))))
    return phi, psi


def _dedupe(fs: List[AffineFunctional]) -> List[AffineFunctional]:
    seen, out = set(), []
    for f in fs:
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


def chamber_cells(domain: Polyhedron, functions: Sequence[PLFunction]) -> List[Polyhedron]:
    """
    Full-dimensional cells of `domain` on which every envelope function has a
    single active piece. Cells are refined one function at a time, dropping
    empty and lower-dimensional pieces as soon as they appear.
    """
    full = domain.dimension
    cells = [domain]
    for fn in functions:
        if not isinstance(fn.form, Envelope):
            raise InvalidInput("chamber cells need envelope-form functions")
        pieces = fn.form.pieces
        if len(pieces) == 1:
            continue
        sign = 1 if fn.form.combiner is Combiner.MAX else -1
        refined = []
        for cell in cells:
            hc = cell.hrep
            for i, f in enumerate(pieces):
                extra = []
                for j, g in enumerate(pieces):
                    if i == j:
                        continue
                    d = f - g if sign > 0 else g - f     # active piece wins: d >= 0
                    extra.append((d.coeffs, -d.const))
                c = Polyhedron.from_inequalities(hc.inequalities + tuple(extra), hc.equations, dim=domain.dim)
                if c.dimension == full:
                    refined.append(c)
        cells = refined
    assert cells or full < 0, "refinement lost the whole domain"
    return cells

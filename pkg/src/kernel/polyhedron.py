# src/kernel/polyhedron.py
"""
Polyhedron: a double-description value object.

A Polyhedron is built from one representation (generators or constraints); the
other is computed on first use and cached. Cached values are derived purely
from the immutable source, so concurrent first accesses at worst compute the
same result twice.
"""

from __future__ import annotations
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from . import dd
from .dd import HRep, VRep
from .errors import InvalidInput, Unbounded
from .logging_config import get_logger
from .rational import RatLike, RatMat, RatVec, dot, is_zero, random_combination, rank, rat, sub, vec

log = get_logger(__name__)

Constraint = Tuple[RatVec, Fraction]


class Polyhedron:
    def __init__(self, dim: int, *, vrep: Optional[VRep] = None, hrep: Optional[HRep] = None):
        if (vrep is None) == (hrep is None):
            raise InvalidInput("exactly one representation must be given")
        self.dim = dim
        self._source_v = vrep
        self._source_h = hrep

    # --- construction ---

    @classmethod
    def from_generators(cls, vertices: Iterable[Sequence[RatLike]],
                        rays: Iterable[Sequence[RatLike]] = (),
                        lineality: Iterable[Sequence[RatLike]] = (),
                        dim: Optional[int] = None) -> "Polyhedron":
        V = tuple(vec(v) for v in vertices)
        R = tuple(vec(r) for r in rays)
        L = tuple(vec(l) for l in lineality)
        dims = {len(g) for g in V + R + L}
        if dim is not None:
            dims.add(dim)
        if len(dims) > 1:
            raise InvalidInput(f"generators of mixed dimensions {sorted(dims)}")
        if not dims:
            raise InvalidInput("cannot infer the dimension of an empty generator list")
        k = dims.pop()
        if not V and (R or L):
            raise InvalidInput("rays or lineality without a vertex")
        return cls(k, vrep=VRep(V, R, L))

    @classmethod
    def from_inequalities(cls, inequalities: Iterable[Tuple[Sequence[RatLike], RatLike]] = (),
                          equations: Iterable[Tuple[Sequence[RatLike], RatLike]] = (),
                          dim: Optional[int] = None) -> "Polyhedron":
        ineqs = tuple((vec(a), rat(b)) for a, b in inequalities)
        eqs = tuple((vec(a), rat(b)) for a, b in equations)
        dims = {len(a) for a, _ in ineqs + eqs}
        if dim is not None:
            dims.add(dim)
        if len(dims) != 1:
            raise InvalidInput(f"constraints of inconsistent dimension {sorted(dims)}")
        return cls(dims.pop(), hrep=HRep(ineqs, eqs))

    @classmethod
    def empty(cls, dim: int) -> "Polyhedron":
        return cls(dim, vrep=VRep(()))

    # --- representations ---

    @cached_property
    def vrep(self) -> VRep:
        """Minimal generators."""
        h = self._source_h if self._source_h is not None else self.hrep
        return dd.h_to_v(h, self.dim)

    @cached_property
    def hrep(self) -> HRep:
        """Minimal constraints (facets and a basis of the implicit equations)."""
        v = self._source_v if self._source_v is not None else self.vrep
        return dd.v_to_h(v, self.dim)

    def _generators(self) -> VRep:
        # Containment tests are happy with redundant generators.
        return self._source_v if self._source_v is not None else self.vrep

    def _constraints(self) -> HRep:
        return self._source_h if self._source_h is not None else self.hrep

    @property
    def vertices(self) -> Tuple[RatVec, ...]:
        return self.vrep.vertices

    @property
    def rays(self) -> Tuple[RatVec, ...]:
        return self.vrep.rays

    @property
    def lineality(self) -> Tuple[RatVec, ...]:
        return self.vrep.lineality

    @property
    def inequalities(self) -> Tuple[Constraint, ...]:
        return self.hrep.inequalities

    @property
    def equations(self) -> Tuple[Constraint, ...]:
        return self.hrep.equations

    # --- predicates ---

    @property
    def is_empty(self) -> bool:
        return not self.vrep.vertices

    @property
    def is_bounded(self) -> bool:
        v = self.vrep
        return not v.rays and not v.lineality

    @property
    def is_cone(self) -> bool:
        # With lines the single vertex may be any point of the lineality space.
        v = self.vrep
        if len(v.vertices) != 1:
            return False
        p = v.vertices[0]
        return is_zero(p) or rank(list(v.lineality) + [p]) == rank(list(v.lineality))

    @cached_property
    def dimension(self) -> int:
        """Affine dimension; -1 for the empty set."""
        v = self.vrep
        if not v.vertices:
            return -1
        base = v.vertices[0]
        rows = [sub(p, base) for p in v.vertices[1:]] + list(v.rays) + list(v.lineality)
        rows = [r for r in rows if not is_zero(r)]
        return rank(rows)

    def contains_point(self, x: Sequence[RatLike]) -> bool:
        x = vec(x)
        if len(x) != self.dim:
            raise InvalidInput(f"point of length {len(x)} in a {self.dim}-dimensional polyhedron")
        h = self._constraints()
        return (all(dot(a, x) >= b for a, b in h.inequalities)
                and all(dot(a, x) == b for a, b in h.equations))

    def violated_constraint(self, x: Sequence[RatLike]) -> Optional[Constraint]:
        x = vec(x)
        h = self._constraints()
        for a, b in h.inequalities:
            if dot(a, x) < b:
                return a, b
        for a, b in h.equations:
            if dot(a, x) != b:
                return a, b
        return None

    def contains(self, other: "Polyhedron") -> bool:
        """other is a subset of self, decided on other's generators against self's constraints."""
        _check_same_dim(self, other)
        g = other._generators()
        if not g.vertices:
            return True
        h = self._constraints()
        for p in g.vertices:
            if not all(dot(a, p) >= b for a, b in h.inequalities):
                return False
            if not all(dot(a, p) == b for a, b in h.equations):
                return False
        for r in g.rays:
            if not all(dot(a, r) >= 0 for a, _ in h.inequalities):
                return False
            if not all(dot(a, r) == 0 for a, _ in h.equations):
                return False
        for l in g.lineality:
            if not all(dot(a, l) == 0 for a, _ in h.inequalities + h.equations):
                return False
        return True

    def same_set(self, other: "Polyhedron") -> bool:
        return self.contains(other) and other.contains(self)

    def __repr__(self) -> str:
        if self._source_v is not None or "vrep" in self.__dict__:
            v = self.vrep
            return (f"Polyhedron(dim={self.dim}, vertices={len(v.vertices)}, "
                    f"rays={len(v.rays)}, lineality={len(v.lineality)})")
        h = self.hrep
        return f"Polyhedron(dim={self.dim}, inequalities={len(h.inequalities)}, equations={len(h.equations)})"


def _check_same_dim(p: Polyhedron, q: Polyhedron) -> None:
    if p.dim != q.dim:
        raise InvalidInput(f"ambient dimensions differ: {p.dim} vs {q.dim}")


# --- operations ---

def dd_convert(p: Polyhedron) -> Polyhedron:
    """Force both minimal representations; returns p itself with its caches filled."""
    _ = p.vrep, p.hrep
    for v in p.vrep.vertices:
        assert all(dot(a, v) >= b for a, b in p.hrep.inequalities), "vertex violates its own H-rep"
        assert all(dot(a, v) == b for a, b in p.hrep.equations), "vertex violates its own equations"
    return p


def convex_hull(points: Sequence[Sequence[RatLike]]) -> Polyhedron:
    if not points:
        raise InvalidInput("convex_hull of no points")
    return Polyhedron.from_generators(points)


def cone_hull(gens: Sequence[Sequence[RatLike]]) -> Polyhedron:
    if not gens:
        raise InvalidInput("cone_hull of no generators")
    k = len(gens[0])
    return Polyhedron.from_generators([(0,) * k], rays=gens, dim=k)


def project(p: Polyhedron, keep: Sequence[int]) -> Polyhedron:
    """Image under the coordinate projection onto `keep` (0-based, in the given order)."""
    keep = list(keep)
    if any(i < 0 or i >= p.dim for i in keep) or len(set(keep)) != len(keep):
        raise InvalidInput(f"bad projection indices {keep} for dimension {p.dim}")
    g = p._generators()
    if not g.vertices:
        return Polyhedron.empty(len(keep))
    pick = lambda v: tuple(v[i] for i in keep)
    return Polyhedron.from_generators(
        [pick(v) for v in g.vertices],
        rays=[pick(r) for r in g.rays if not is_zero(pick(r))],
        lineality=[pick(l) for l in g.lineality if not is_zero(pick(l))],
        dim=len(keep),
    )


def linear_image(p: Polyhedron, A: RatMat) -> Polyhedron:
    if A.ncols != p.dim:
        raise InvalidInput(f"matrix with {A.ncols} columns applied in dimension {p.dim}")
    g = p._generators()
    if not g.vertices:
        return Polyhedron.empty(A.nrows)
    return Polyhedron.from_generators(
        [A @ v for v in g.vertices],
        rays=[A @ r for r in g.rays if not is_zero(A @ r)],
        lineality=[A @ l for l in g.lineality if not is_zero(A @ l)],
        dim=A.nrows,
    )


def minkowski_sum(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    _check_same_dim(a, b)
    if a.is_empty or b.is_empty:
        return Polyhedron.empty(a.dim)
    va, vb = a.vrep, b.vrep
    sums = {tuple(x + y for x, y in zip(u, w)) for u, w in product(va.vertices, vb.vertices)}
    return Polyhedron.from_generators(sorted(sums), rays=va.rays + vb.rays,
                                      lineality=va.lineality + vb.lineality, dim=a.dim)


def intersection(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    _check_same_dim(a, b)
    ha, hb = a._constraints(), b._constraints()
    return Polyhedron(a.dim, hrep=HRep(ha.inequalities + hb.inequalities, ha.equations + hb.equations))


def slice_hyperplane(p: Polyhedron, a: Sequence[RatLike], b: RatLike) -> Polyhedron:
    """p intersected with {x : a.x = b}."""
    a, b = vec(a), rat(b)
    if len(a) != p.dim:
        raise InvalidInput(f"hyperplane of length {len(a)} in dimension {p.dim}")
    h = p._constraints()
    return Polyhedron(p.dim, hrep=HRep(h.inequalities, h.equations + ((a, b),)))


def dual_cone(c: Polyhedron) -> Polyhedron:
    """{u : <u, x> >= 0 for all x in c}."""
    if not c.is_cone:
        raise InvalidInput("dual_cone expects a cone (single vertex at the origin)", witness=c.vertices)
    v = c.vrep
    zero = Fraction(0)
    return Polyhedron(c.dim, hrep=HRep(tuple((r, zero) for r in v.rays),
                                       tuple((l, zero) for l in v.lineality)))


def barycenter(p: Polyhedron) -> RatVec:
    if not p.is_bounded or p.is_empty:
        raise Unbounded("barycenter of an unbounded or empty polyhedron")
    vs = p.vertices
    n = len(vs)
    return tuple(sum((v[i] for v in vs), Fraction(0)) / n for i in range(p.dim))


def random_point(p: Polyhedron, rng) -> RatVec:
    """Relative-interior point of a polytope: positive integer combination of its vertices."""
    if not p.is_bounded or p.is_empty:
        raise Unbounded("random_point needs a nonempty polytope")
    return random_combination(rng, p.vertices)


# --- fibers ---

def fiber_interval(p: Polyhedron, base: Sequence[RatLike]) -> Optional[Tuple[Fraction, Fraction]]:
    """
    Exact [lo, hi] of the last coordinate over the fiber of p above `base`,
    or None when base lies outside the projection of p.
    """
    base = vec(base)
    if len(base) != p.dim - 1:
        raise InvalidInput(f"base point of length {len(base)} for a {p.dim}-dimensional polyhedron")
    if p.is_empty:
        return None
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    h = p.hrep
    for (a, b), is_eq in [(c, False) for c in h.inequalities] + [(c, True) for c in h.equations]:
        az = a[-1]
        rest = b - dot(a[:-1], base)
        if az == 0:
            if rest > 0 or (is_eq and rest != 0):
                return None
            continue
        bound = rest / az
        if is_eq or az > 0:
            lo = bound if lo is None else max(lo, bound)
        if is_eq or az < 0:
            hi = bound if hi is None else min(hi, bound)
    if lo is None or hi is None:
        raise Unbounded("fiber is unbounded in the last coordinate", witness=base)
    if lo > hi:
        return None
    return lo, hi

# src/kernel/dd.py
"""
Double description conversions on top of cddlib (pycddlib), in exact rational
arithmetic.

cdd rows are [b, a] with b + a.x >= 0 for constraints, and [t, x] with t = 1
for vertices and t = 0 for rays; rows listed in `lin_set` are equations or
lines. We keep our own a.x >= b convention and convert at the boundary, so no
cdd type leaks out of this module.

Both conversions canonicalize the result, so the representations they return
are minimal: facets plus a basis of the implicit equations, extreme generators
plus a lineality basis. Rows are scaled to primitive integers so outputs do not
depend on how cdd happened to scale them.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import cdd

from .errors import InvalidInput
from .logging_config import get_logger
from .rational import RatVec, primitive

log = get_logger(__name__)

NUMBER_TYPE = "fraction"


@dataclass(frozen=True)
class VRep:
    vertices: Tuple[RatVec, ...]
    rays: Tuple[RatVec, ...] = ()
    lineality: Tuple[RatVec, ...] = ()


@dataclass(frozen=True)
class HRep:
    inequalities: Tuple[Tuple[RatVec, Fraction], ...]   # a.x >= b
    equations: Tuple[Tuple[RatVec, Fraction], ...] = ()  # a.x == b


def _matrix(rows: List[Sequence[Fraction]], lines: List[Sequence[Fraction]], rep_type) -> "cdd.Matrix":
    mat = cdd.Matrix(rows, number_type=NUMBER_TYPE)
    if lines:
        mat.extend(lines, linear=True)
    mat.rep_type = rep_type
    return mat


def _rows(mat) -> Tuple[List[Tuple[Fraction, ...]], List[Tuple[Fraction, ...]]]:
    """Split a cdd matrix into (ordinary rows, linearity rows) as Fraction tuples."""
    lin = mat.lin_set
    plain, linear = [], []
    for i in range(mat.row_size):
        row = tuple(Fraction(x) for x in mat[i])
        (linear if i in lin else plain).append(row)
    return plain, linear


def _check_len(rows: Sequence[Sequence[Fraction]], dim: int, what: str) -> None:
    for r in rows:
        if len(r) != dim:
            raise InvalidInput(f"{what} of length {len(r)} in dimension {dim}")


def _scaled(row: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in primitive(row))


def _sign_fixed(row: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Equations and lines have no orientation; make the first nonzero entry positive."""
    row = _scaled(row)
    lead = next((x for x in row if x), Fraction(0))
    return tuple(-x for x in row) if lead < 0 else row


def h_to_v(h: HRep, dim: int) -> VRep:
    _check_len([a for a, _ in h.inequalities + h.equations], dim, "constraint")
    # 1 >= 0 keeps the matrix nonempty when there are no constraints at all.
    rows = [(Fraction(1),) + (Fraction(0),) * dim]
    rows += [(-b,) + tuple(a) for a, b in h.inequalities]
    eqs = [(-b,) + tuple(a) for a, b in h.equations]

    gens = cdd.Polyhedron(_matrix(rows, eqs, cdd.RepType.INEQUALITY)).get_generators()
    if gens.row_size:
        gens.canonicalize()
    plain, linear = _rows(gens)

    vertices, rays = [], []
    for r in plain:
        if r[0]:
            vertices.append(tuple(x / r[0] for x in r[1:]))
        elif any(r[1:]):
            rays.append(_scaled(r[1:]))
    lineality = [_sign_fixed(l[1:]) for l in linear if any(l[1:])]
    assert all(l[0] == 0 for l in linear), "lines must have t = 0"

    log.debug("dd h->v: %d inequalities, %d equations in dim %d -> %d vertices, %d rays, lineality %d",
              len(h.inequalities), len(h.equations), dim, len(vertices), len(rays), len(lineality))
    if not vertices:
        return VRep(vertices=(), rays=(), lineality=())
    return VRep(tuple(sorted(vertices)), tuple(sorted(rays)), tuple(lineality))


def v_to_h(v: VRep, dim: int) -> HRep:
    _check_len(list(v.vertices) + list(v.rays) + list(v.lineality), dim, "generator")
    if not v.vertices:
        return HRep(inequalities=((tuple(Fraction(0) for _ in range(dim)), Fraction(1)),))
    rows = [(Fraction(1),) + tuple(p) for p in v.vertices]
    rows += [(Fraction(0),) + tuple(r) for r in v.rays]
    lines = [(Fraction(0),) + tuple(l) for l in v.lineality]

    ineqs = cdd.Polyhedron(_matrix(rows, lines, cdd.RepType.GENERATOR)).get_inequalities()
    if ineqs.row_size:
        ineqs.canonicalize()
    plain, linear = _rows(ineqs)

    inequalities = []
    for c in plain:
        c = _scaled(c)
        if any(c[1:]):
            inequalities.append((c[1:], -c[0]))
        # rows with a = 0 are 1 >= 0 or the face at infinity
    equations = []
    for c in linear:
        c = _sign_fixed(c)
        if any(c[1:]):
            equations.append((c[1:], -c[0]))

    log.debug("dd v->h: %d vertices, %d rays, %d lines in dim %d -> %d facets, %d equations",
              len(v.vertices), len(v.rays), len(v.lineality), dim, len(inequalities), len(equations))
    return HRep(tuple(sorted(inequalities)), tuple(equations))

# src/wallcross/engine.py
"""
Generic wall-crossing between two weight matrices that differ only in their
last row.

The bodies are the convex hulls of the matrix columns. Both project to the same
base; over each base point the fibers are intervals [phi_i, psi_i] whose
lengths differ by a global factor kappa. Shift translates a fiber onto the
other, flip reflects it.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.kernel.config import SAMPLE_POINTS, SEED_DEFAULT
from src.kernel.errors import DomainError, InvalidInput, TheoremViolation
from src.kernel.logging_config import get_logger
from src.kernel.plfunction import PLFunction, chamber_cells, envelopes
from src.kernel.polyhedron import Polyhedron, barycenter, cone_hull, convex_hull, project, random_point
from src.kernel.rational import RatLike, RatMat, RatVec, make_rng, vec
from src.kernel.serialize import mat_to_json, plfunction_to_json, polyhedron_to_json, to_jsonable

log = get_logger(__name__)

MODES = ("exact", "sample")


@dataclass(frozen=True)
class ConePairInput:
    M1: RatMat
    M2: RatMat
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.M1.shape != self.M2.shape:
            raise InvalidInput(f"matrix shapes differ: {self.M1.shape} vs {self.M2.shape}")
        if self.M1.nrows < 2:
            raise InvalidInput("weight matrices need at least two rows")
        for M in (self.M1, self.M2):
            if any(x != 1 for x in M.row(0)):
                raise InvalidInput("the first row must be all ones", witness=M.row(0))
        if self.M1.top(self.d) != self.M2.top(self.d):
            raise InvalidInput("matrices must agree except in the last row")
        if self.labels and len(self.labels) != self.M1.ncols:
            raise InvalidInput(f"{len(self.labels)} labels for {self.M1.ncols} variables")

    @property
    def d(self) -> int:
        """Number of shared rows."""
        return self.M1.nrows - 1

    def reversed(self) -> "ConePairInput":
        return ConePairInput(self.M2, self.M1, self.labels)

    def to_json(self) -> Dict[str, Any]:
        return {"M1": mat_to_json(self.M1), "M2": mat_to_json(self.M2), "labels": list(self.labels)}


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""
    witness: Any = None

    def to_json(self) -> Dict[str, Any]:
        out = {"name": self.name, "ok": self.ok, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = to_jsonable(self.witness)
        return out


@dataclass
class CrossingReport:
    inp: ConePairInput
    cone1: Polyhedron
    cone2: Polyhedron
    body1: Polyhedron
    body2: Polyhedron
    base: Polyhedron
    kappa: Fraction
    phi1: PLFunction
    psi1: PLFunction
    phi2: PLFunction
    psi2: PLFunction
    mode: str
    seed: int
    checked_points: int = 0
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> Dict[str, Any]:
        return {
            "input": self.inp.to_json(),
            "base": polyhedron_to_json(self.base),
            "body1": polyhedron_to_json(self.body1),
            "body2": polyhedron_to_json(self.body2),
            "kappa": to_jsonable(self.kappa),
            "phi1": plfunction_to_json(self.phi1),
            "psi1": plfunction_to_json(self.psi1),
            "phi2": plfunction_to_json(self.phi2),
            "psi2": plfunction_to_json(self.psi2),
            "mode": self.mode,
            "seed": self.seed,
            "checked_points": self.checked_points,
            "checks": [c.to_json() for c in self.checks],
            "ok": self.ok,
        }


def no_body(M: RatMat) -> Polyhedron:
    """Convex hull of the columns of M."""
    return convex_hull(M.columns())


def no_cone(M: RatMat) -> Polyhedron:
    return cone_hull(M.columns())


def _length(phi: PLFunction, psi: PLFunction, x: RatVec) -> Fraction:
    return psi(x) - phi(x)


def _kappa(base: Polyhedron, phi1, psi1, phi2, psi2) -> Tuple[Fraction, RatVec]:
    """Fiber-length ratio at the barycenter, or at midpoints toward the vertices if that fiber is a point."""
    center = barycenter(base)
    candidates = [center] + [tuple((c + v) / 2 for c, v in zip(center, p)) for p in base.vertices]
    for x in candidates:
        l1 = _length(phi1, psi1, x)
        if l1 > 0:
            k = _length(phi2, psi2, x) / l1
            if k <= 0:
                raise TheoremViolation("second fiber degenerates where the first does not", witness=x)
            return k, x
    log.info("every probed fiber is a point; taking kappa = 1")
    return Fraction(1), center


def crossing_data(inp: ConePairInput, mode: str = "sample", seed: int = SEED_DEFAULT,
                  samples: int = SAMPLE_POINTS) -> CrossingReport:
    if mode not in MODES:
        raise InvalidInput(f"unknown mode {mode!r}; expected one of {MODES}")
    d = inp.d
    body1, body2 = no_body(inp.M1), no_body(inp.M2)
    base = project(body1, range(d))
    base2 = project(body2, range(d))
    if not base.same_set(base2):
        witness = next((v for v in base2.vertices if not base.contains_point(v)),
                       next((v for v in base.vertices if not base2.contains_point(v)), None))
        raise TheoremViolation("the two bodies project to different bases", witness=witness)

    phi1, psi1 = envelopes(body1)
    phi2, psi2 = envelopes(body2)
    kappa, where = _kappa(base, phi1, psi1, phi2, psi2)
    report = CrossingReport(inp, no_cone(inp.M1), no_cone(inp.M2), body1, body2, base, kappa,
                            phi1, psi1, phi2, psi2, mode, seed)
    report.checks.append(Check("projection-equal", True, f"base has {len(base.vertices)} vertices"))
    full = d - 1
    report.checks.append(Check("degenerate-base", True,
                               f"base dimension {base.dimension} of {full}"
                               + ("; envelopes live on its affine hull" if base.dimension < full else "")))

    if mode == "exact":
        pts = set()
        for cell in chamber_cells(base, [phi1, psi1, phi2, psi2]):
            pts.update(cell.vertices)
        points = sorted(pts)
    else:
        rng = make_rng(seed)
        points = [random_point(base, rng) for _ in range(samples)]

    bad: Optional[RatVec] = None
    for x in points:
        if kappa * _length(phi1, psi1, x) != _length(phi2, psi2, x):
            bad = x
            break
    report.checked_points = len(points)
    report.checks.append(Check("fiber-length", bad is None,
                               f"kappa={kappa} from {where}; {len(points)} {mode} points",
                               witness=bad))

    stray = None
    for col in inp.M1.columns():
        img = flip_generic(report, col)
        if not report.cone2.contains_point(img):
            stray = {"column": col, "flip": img}
            break
    report.checks.append(Check("columns-in-cone", stray is None, "flip images of the first matrix's columns",
                               witness=stray))
    log.info("crossing_data: kappa=%s mode=%s points=%d ok=%s", kappa, mode, len(points), report.ok)
    return report


def _fiber_coords(rep: CrossingReport, x: Sequence[RatLike]) -> Tuple[Fraction, RatVec, Fraction]:
    x = vec(x)
    if len(x) != rep.inp.d + 1:
        raise InvalidInput(f"point of length {len(x)}, expected {rep.inp.d + 1}")
    s = x[0]
    if s < 0 or (s == 0 and any(x)):
        raise DomainError("point outside the first cone", witness=x)
    if s == 0:
        return s, x[:-1], x[-1]
    y = tuple(c / s for c in x)
    if not rep.body1.contains_point(y):
        raise DomainError("point outside the first cone", witness=x)
    return s, y[:-1], y[-1]


def shift_generic(rep: CrossingReport, x: Sequence[RatLike]) -> RatVec:
    """(1, v, z) -> (1, v, kappa (z - phi1) + phi2), extended to the cone by homogeneity."""
    s, v, z = _fiber_coords(rep, x)
    if s == 0:
        return vec(x)
    new = rep.kappa * (z - rep.phi1(v)) + rep.phi2(v)
    return tuple(s * c for c in v + (new,))


def flip_generic(rep: CrossingReport, x: Sequence[RatLike]) -> RatVec:
    """(1, v, z) -> (1, v, kappa (phi1 - z) + psi2), extended to the cone by homogeneity."""
    s, v, z = _fiber_coords(rep, x)
    if s == 0:
        return vec(x)
    new = rep.kappa * (rep.phi1(v) - z) + rep.psi2(v)
    return tuple(s * c for c in v + (new,))

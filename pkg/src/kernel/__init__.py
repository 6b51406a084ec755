# src/kernel/__init__.py
from .errors import DomainError, InvalidInput, TheoremViolation, Unbounded, WallCrossError
from .rational import Rat, RatMat, RatVec, rat, vec
from .polyhedron import (
    Polyhedron,
    barycenter,
    cone_hull,
    convex_hull,
    dd_convert,
    dual_cone,
    fiber_interval,
    intersection,
    linear_image,
    minkowski_sum,
    project,
    random_point,
    slice_hyperplane,
)
from .plfunction import AffineFunctional, Combiner, Envelope, PLFunction, Triangulated, chamber_cells, envelopes

__all__ = [
    "DomainError", "InvalidInput", "TheoremViolation", "Unbounded", "WallCrossError",
    "Rat", "RatMat", "RatVec", "rat", "vec",
    "Polyhedron", "barycenter", "cone_hull", "convex_hull", "dd_convert", "dual_cone",
    "fiber_interval", "intersection", "linear_image", "minkowski_sum", "project", "random_point", "slice_hyperplane",
    "AffineFunctional", "Combiner", "Envelope", "PLFunction", "Triangulated", "chamber_cells", "envelopes",
]

# src/kernel/serialize.py
"""JSON codecs. Rationals always travel as strings ("p/q", or "p" when q = 1)."""

from __future__ import annotations
import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from .config import JSON_INDENT
from .errors import InvalidInput
from .plfunction import AffineFunctional, PLFunction, Triangulated
from .polyhedron import Polyhedron
from .rational import RatMat, RatVec, fmt_rat, rat, vec


def rat_to_json(x: Fraction) -> str:
    return fmt_rat(x)


def vec_to_json(v: Sequence[Fraction]) -> List[str]:
    return [fmt_rat(x) for x in v]


def vec_from_json(data: Any) -> RatVec:
    if not isinstance(data, list):
        raise InvalidInput(f"expected a JSON list for a vector, got {type(data).__name__}")
    return vec(str(x) if isinstance(x, (int, str)) else _reject(x) for x in data)


def _reject(x: Any):
    raise InvalidInput(f"non-exact JSON number {x!r}; encode rationals as strings")


def mat_to_json(M: RatMat) -> List[List[str]]:
    return M.to_lists()


def mat_from_json(data: Any) -> RatMat:
    if not isinstance(data, list) or not data:
        raise InvalidInput("expected a nonempty list of rows for a matrix")
    return RatMat(tuple(vec_from_json(r) for r in data))


def polyhedron_to_json(p: Polyhedron) -> Dict[str, Any]:
    v, h = p.vrep, p.hrep
    return {
        "dim": p.dim,
        "vertices": [vec_to_json(x) for x in v.vertices],
        "rays": [vec_to_json(x) for x in v.rays],
        "lineality": [vec_to_json(x) for x in v.lineality],
        "inequalities": [{"a": vec_to_json(a), "b": fmt_rat(b)} for a, b in h.inequalities],
        "equations": [{"a": vec_to_json(a), "b": fmt_rat(b)} for a, b in h.equations],
    }


def polyhedron_from_json(data: Dict[str, Any]) -> Polyhedron:
    """Generators win when both are present; the constraints are recomputed."""
    try:
        dim = int(data["dim"])
    except (KeyError, TypeError, ValueError):
        raise InvalidInput("polyhedron JSON needs an integer 'dim'")
    if data.get("vertices"):
        return Polyhedron.from_generators(
            [vec_from_json(x) for x in data["vertices"]],
            rays=[vec_from_json(x) for x in data.get("rays", [])],
            lineality=[vec_from_json(x) for x in data.get("lineality", [])],
            dim=dim,
        )
    ineqs = [(vec_from_json(c["a"]), rat(str(c["b"]))) for c in data.get("inequalities", [])]
    eqs = [(vec_from_json(c["a"]), rat(str(c["b"]))) for c in data.get("equations", [])]
    if not ineqs and not eqs and "vertices" in data:
        return Polyhedron.empty(dim)
    return Polyhedron.from_inequalities(ineqs, eqs, dim=dim)


def plfunction_to_json(f: PLFunction) -> Dict[str, Any]:
    if isinstance(f.form, Triangulated):
        t = f.form
        return {
            "points": [vec_to_json(p) for p in t.points],
            "simplices": [list(s) for s in t.simplices],
            "values": vec_to_json(t.values),
        }
    e = f.form
    return {
        "combiner": e.combiner.value,
        "pieces": [{"a": vec_to_json(p.coeffs), "c": fmt_rat(p.const)} for p in e.pieces],
    }


def triangulated_from_json(data: Dict[str, Any]) -> Triangulated:
    try:
        return Triangulated(
            points=tuple(vec_from_json(p) for p in data["points"]),
            simplices=tuple(tuple(int(i) for i in s) for s in data["simplices"]),
            values=vec_from_json(data["values"]),
        )
    except KeyError as e:
        raise InvalidInput(f"triangulated function JSON is missing {e}")


def affine_to_json(f: AffineFunctional) -> Dict[str, Any]:
    return {"a": vec_to_json(f.coeffs), "c": fmt_rat(f.const)}


def dumps(obj: Any) -> str:
    """Deterministic JSON: sorted keys, fixed indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=JSON_INDENT, ensure_ascii=False) + "\n"


def to_jsonable(obj: Any) -> Any:
    """Witnesses and report fields: Fractions become strings, sets become sorted lists."""
    if isinstance(obj, Fraction):
        return fmt_rat(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(x) for x in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, Polyhedron):
        return polyhedron_to_json(obj)
    return str(obj)

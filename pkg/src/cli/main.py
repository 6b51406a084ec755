# src/cli/main.py
"""
Command-line front end.

Usage examples (from repo root):
  python -m src.cli.main trees --m 5
  python -m src.cli.main matrices --m 4 --split 1,2
  python -m src.cli.main crossing --pair pair.json --map flip --point '["2","1","1","1","0"]'
  python -m src.cli.main run --m1 m1.json --m2 m2.json --mode exact
  python -m src.cli.main verify --m 5 --degree 3 --workers 4
  python -m src.cli.main counterexample
  python -m src.cli.main mutate --example appendix
  python -m src.cli.main reproduce gr24-matrices

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations
import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.gr2m.algebraic import theta
from src.gr2m.matrices import build_M, build_Mtilde, nohara_ueda
from src.gr2m.pair import GrPair, flip, shift
from src.kernel.config import DEFAULT_DEGREE, SAMPLE_POINTS, SEED_DEFAULT
from src.kernel.errors import DomainError, InvalidInput, TheoremViolation
from src.kernel.logging_config import get_logger, setup_logging
from src.kernel.serialize import dumps, mat_from_json, mat_to_json, polyhedron_to_json, to_jsonable, vec_from_json
from src.mutation.dual import build_frame
from src.mutation.triple import PLTriple, mutation_example, body_from_triple
from src.trees.tree import TrivalentTree, enumerate_trees
from src.wallcross.counterexample import verify_counterexample
from src.wallcross.engine import ConePairInput, crossing_data, no_body

from .reproduce import REPRODUCERS, reproduce
from .verify import verify

log = get_logger(__name__)


def _load_json(arg: str) -> Any:
    """A path to a JSON file, or inline JSON."""
    p = Path(arg)
    text = p.read_text(encoding="utf-8") if p.is_file() else arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"cannot parse JSON from {arg!r}: {e}")


def _tree(m: int, splits: Optional[List[str]]) -> TrivalentTree:
    sides = [[int(x) for x in s.split(",") if x.strip()] for s in (splits or [])]
    return TrivalentTree.from_splits(m, sides)


# ------------------------ Commands ------------------------

def cmd_trees(args) -> Dict[str, Any]:
    trees = enumerate_trees(args.m)
    return {"m": args.m, "count": len(trees), "trees": [t.to_json() for t in trees]}


def cmd_matrices(args) -> Dict[str, Any]:
    t = _tree(args.m, args.split)
    h = nohara_ueda(t)
    return {
        "tree": t.to_json(),
        "M": mat_to_json(build_M(t)),
        "Mtilde": mat_to_json(build_Mtilde(t)),
        "nohara_ueda": {
            "inequalities": [{"a": to_jsonable(a), "b": to_jsonable(b)} for a, b in h.inequalities],
            "equations": [{"a": to_jsonable(a), "b": to_jsonable(b)} for a, b in h.equations],
        },
    }


def cmd_body(args) -> Dict[str, Any]:
    if args.matrix:
        M = mat_from_json(_load_json(args.matrix))
    else:
        if args.m is None:
            raise InvalidInput("body needs --matrix or --m with --split")
        M = build_M(_tree(args.m, args.split))
    return {"matrix": mat_to_json(M), "body": polyhedron_to_json(no_body(M))}


def cmd_crossing(args) -> Dict[str, Any]:
    data = _load_json(args.pair)
    try:
        t1, t2 = TrivalentTree.from_json(data["t1"]), TrivalentTree.from_json(data["t2"])
    except (KeyError, TypeError):
        raise InvalidInput("pair JSON needs 't1' and 't2' trees")
    pair = GrPair.from_trees(t1, t2, relabel_leaves=args.relabel)
    y = vec_from_json(_load_json(args.point))
    if args.map == "flip":
        out = flip(pair, y)
    elif args.map == "shift":
        out = shift(pair, y)
    else:
        if not args.alpha:
            raise InvalidInput("theta needs a witness exponent via --alpha")
        out = theta(pair, y, [int(x) for x in _load_json(args.alpha)])
    return {"adjacency": pair.adj.to_json(), "map": args.map, "point": to_jsonable(y), "image": to_jsonable(out),
            "permutation": to_jsonable(pair.permutation)}


def cmd_run(args) -> Dict[str, Any]:
    inp = ConePairInput(mat_from_json(_load_json(args.m1)), mat_from_json(_load_json(args.m2)))
    return crossing_data(inp, mode=args.mode, seed=args.seed, samples=args.samples).to_json()


def cmd_verify(args) -> Dict[str, Any]:
    return verify(args.m, args.degree, args.mode, args.seed, args.samples, args.workers)


def cmd_counterexample(args) -> Dict[str, Any]:
    return verify_counterexample(args.mode).to_json()


def cmd_mutate(args) -> Dict[str, Any]:
    if args.example == "appendix":
        ex = mutation_example()
        triple, eta = ex.regauged, ex.eta
    else:
        if not (args.triple and args.eta):
            raise InvalidInput("mutate needs --triple and --eta, or --example appendix")
        triple = PLTriple.from_json(_load_json(args.triple))
        eta = vec_from_json(_load_json(args.eta))
    frame = build_frame(triple, eta)
    return {
        "eta": to_jsonable(frame.eta),
        "body1": polyhedron_to_json(body_from_triple(triple, 1)),
        "body2": polyhedron_to_json(body_from_triple(triple, 2)),
        "d1": polyhedron_to_json(frame.d1),
        "d2": polyhedron_to_json(frame.d2),
        "ok": True,
    }


def cmd_reproduce(args) -> Dict[str, Any]:
    return reproduce(args.item)


# ------------------------ Parser ------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wallcross", description="Exact wall-crossing for Newton-Okounkov bodies")
    ap.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    ap.add_argument("--out", type=str, default="", help="Write the JSON report here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trees", help="List all trivalent trees on m leaves")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("matrices", help="M, Mtilde and the vertex inequalities of one tree")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--split", action="append", help="Comma-separated split side; repeat m-3 times")
    p.set_defaults(func=cmd_matrices)

    p = sub.add_parser("body", help="Convex hull of a weight matrix's columns")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--split", action="append")
    p.add_argument("--matrix", type=str, default="", help="Matrix JSON (file or inline)")
    p.set_defaults(func=cmd_body)

    p = sub.add_parser("crossing", help="Apply flip, shift or theta for an adjacent tree pair")
    p.add_argument("--pair", type=str, required=True, help='{"t1": tree, "t2": tree}')
    p.add_argument("--map", choices=["flip", "shift", "theta"], default="flip")
    p.add_argument("--point", type=str, required=True, help="Point as a JSON list of rationals")
    p.add_argument("--alpha", type=str, default="", help="Witness exponent for theta")
    p.add_argument("--relabel", action="store_true", help="Relabel leaves into the common Gröbner cone first")
    p.set_defaults(func=cmd_crossing)

    p = sub.add_parser("run", help="Generic crossing data for two weight matrices")
    p.add_argument("--m1", type=str, required=True)
    p.add_argument("--m2", type=str, required=True)
    p.add_argument("--mode", choices=["exact", "sample"], default="sample")
    p.add_argument("--seed", type=int, default=SEED_DEFAULT)
    p.add_argument("--samples", type=int, default=SAMPLE_POINTS)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="Sweep all adjacent tree pairs on m leaves")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--mode", choices=["exact", "sample"], default=None)
    p.add_argument("--seed", type=int, default=SEED_DEFAULT)
    p.add_argument("--samples", type=int, default=SAMPLE_POINTS)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", help="The degree-11 hypersurface example")
    p.add_argument("--mode", choices=["exact", "sample"], default="exact")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("mutate", help="Mutation slices of a PL triple")
    p.add_argument("--triple", type=str, default="")
    p.add_argument("--eta", type=str, default="")
    p.add_argument("--example", choices=["appendix"], default=None)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("reproduce", help="Re-check a worked example")
    p.add_argument("item", choices=sorted(REPRODUCERS))
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        report = args.func(args)
    except (InvalidInput, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        if e.witness is not None:
            print(f"witness: {json.dumps(to_jsonable(e.witness))}", file=sys.stderr)
        return 2
    except TheoremViolation as e:
        report = {"ok": False, "error": str(e), "witness": to_jsonable(e.witness)}

    text = dumps(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        log.info("report written to %s", args.out)
    else:
        sys.stdout.write(text)
    return 0 if report.get("ok", True) else 1


if __name__ == "__main__":
    sys.exit(main())

# src/cli/verify.py
"""
Sweep every adjacent pair of trivalent trees on m leaves: generic crossing
data (kappa, projections, fiber lengths), closed-form against generic flip,
flip involution and flip = theta on standard exponents.
"""

from __future__ import annotations
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Tuple

from src.gr2m.algebraic import verify_flip_equals_theta
from src.gr2m.pair import GrPair, flip, shift
from src.kernel.config import EXACT_MODE_MAX_M, SAMPLE_POINTS, SEED_DEFAULT, max_m
from src.kernel.errors import InvalidInput
from src.kernel.logging_config import get_logger
from src.kernel.serialize import to_jsonable
from src.trees.tree import TrivalentTree, enumerate_trees, neighbors
from src.wallcross.engine import Check, ConePairInput, crossing_data, flip_generic

log = get_logger(__name__)


def adjacent_pairs(m: int) -> List[Tuple[TrivalentTree, TrivalentTree]]:
    """Each unordered adjacent pair once, in enumeration order."""
    trees = enumerate_trees(m)
    pos = {t: k for k, t in enumerate(trees)}
    out = []
    for t in trees:
        for u in neighbors(t):
            if pos[u] > pos[t]:
                out.append((t, u))
    return out


def tree_key(t: TrivalentTree) -> str:
    return "|".join("".join(map(str, sorted(s))) for s in sorted(t.splits, key=sorted))


def default_mode(m: int) -> str:
    return "exact" if m <= EXACT_MODE_MAX_M else "sample"


def check_pair(t1: TrivalentTree, t2: TrivalentTree, degree: int, mode: str,
               seed: int = SEED_DEFAULT, samples: int = SAMPLE_POINTS) -> Dict[str, Any]:
    pair = GrPair.from_trees(t1, t2, relabel_leaves=True)
    back = pair.reversed()
    rep = crossing_data(ConePairInput(pair.M1, pair.M2), mode=mode, seed=seed, samples=samples)
    checks: List[Check] = list(rep.checks)
    checks.append(Check("kappa-one", rep.kappa == 1, f"kappa={rep.kappa}", witness=None if rep.kappa == 1 else rep.kappa))

    cols = pair.M1.columns()
    mismatch = next(({"point": y, "closed": flip(pair, y), "generic": flip_generic(rep, y)}
                     for y in cols if flip(pair, y) != flip_generic(rep, y)), None)
    checks.append(Check("flip-closed-form", mismatch is None, "closed form agrees with the generic flip", mismatch))

    loop = next((y for y in cols if flip(back, flip(pair, y)) != y or shift(back, shift(pair, y)) != y), None)
    checks.append(Check("involution", loop is None, "flip21.flip12 and shift21.shift12 fix every column", loop))

    ft = verify_flip_equals_theta(pair, degree)
    checks.append(Check("flip-equals-theta", ft.ok, f"{ft.checked} standard exponents",
                        ft.violations[0] if ft.violations else None))
    ok = all(c.ok for c in checks)
    log.info("pair %s: kappa=%s points=%d theta=%d ok=%s", pair.key(), rep.kappa, rep.checked_points,
             ft.checked, ok)
    return {
        "pair": f"{tree_key(t1)}~{tree_key(t2)}",
        "relabelled": pair.key(),
        "trees": [t1.to_json(), t2.to_json()],
        "permutation": {str(k): v for k, v in sorted((pair.permutation or {}).items())},
        "kappa": to_jsonable(rep.kappa),
        "checked_points": rep.checked_points,
        "theta_checked": ft.checked,
        "checks": [c.to_json() for c in checks],
        "ok": ok,
    }


def _task(args: Tuple[Dict, Dict, int, str, int, int]) -> Dict[str, Any]:
    j1, j2, degree, mode, seed, samples = args
    return check_pair(TrivalentTree.from_json(j1), TrivalentTree.from_json(j2), degree, mode, seed, samples)


def verify(m: int, degree: int, mode: Optional[str] = None, seed: int = SEED_DEFAULT,
           samples: int = SAMPLE_POINTS, workers: int = 1) -> Dict[str, Any]:
    limit = max_m()
    if not 4 <= m <= limit:
        raise InvalidInput(f"m={m} outside 4..{limit}; raise WALLCROSS_MAX_M to go further")
    if degree < 0:
        raise InvalidInput(f"negative degree {degree}")
    mode = mode or default_mode(m)
    tasks = [(a.to_json(), b.to_json(), degree, mode, seed, samples) for a, b in adjacent_pairs(m)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_task, tasks))
    else:
        results = [_task(t) for t in tasks]
    results.sort(key=lambda r: r["pair"])
    failed = [r["pair"] for r in results if not r["ok"]]
    return {
        "m": m,
        "degree": degree,
        "mode": mode,
        "seed": seed,
        "samples": samples if mode == "sample" else None,
        "pairs_checked": len(results),
        "failed": failed,
        "pairs": results,
        "ok": not failed,
    }

# /experiments/verify_sweep.py
"""
Per-pair sweep over all adjacent trivalent trees on m leaves:
- Runs the crossing checks, the closed-form flip and flip = theta for every pair
- Appends one CSV row per pair for later analysis
- Optionally saves each pair's full JSON report

Usage examples (from repo root):
  # Exact sweep for m = 4 and 5, degree 4, reports saved:
  python -m experiments.verify_sweep --m 4,5 --degree 4 --save-reports

  # Sampled m = 6 sweep, degree 3, custom seed:
  python -m experiments.verify_sweep --m 6 --degree 3 --mode sample --seed 7

  # Quick smoke into a scratch dir:
  python -m experiments.verify_sweep --m 4 --degree 2 --out-dir /tmp/sweep
"""

from __future__ import annotations
import argparse
import csv
import sys
import time
from pathlib import Path
from typing import List

from src.cli.verify import adjacent_pairs, check_pair, default_mode, tree_key
from src.kernel.config import DEFAULT_DEGREE, SAMPLE_POINTS, SEED_DEFAULT, max_m
from src.kernel.logging_config import setup_logging
from src.kernel.serialize import dumps

HEADER = [
    "m", "pair", "relabelled", "mode", "seed", "samples", "degree",
    "kappa", "checked_points", "theta_checked", "ok", "failed_checks", "seconds",
]


def ensure_dir(p: Path):
    p.mkdir(parents=True, exist_ok=True)


def write_pair_row(csv_path: Path, row: List):
    exists = csv_path.exists()
    with csv_path.open("a", newline="") as f:
        w = csv.writer(f)
        if not exists:
            w.writerow(HEADER)
        w.writerow(row)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=str, default="4,5", help="Comma-separated leaf counts")
    ap.add_argument("--degree", type=int, default=DEFAULT_DEGREE, help="Exponent degree bound for flip = theta")
    ap.add_argument("--mode", type=str, default="", choices=["", "exact", "sample"],
                    help="Empty picks exact for m <= 5 and sample above")
    ap.add_argument("--seed", type=int, default=SEED_DEFAULT)
    ap.add_argument("--samples", type=int, default=SAMPLE_POINTS, help="Points per pair in sample mode")
    ap.add_argument("--out-dir", type=str, default="experiments/runs", help="Directory for pairs.csv and reports/")
    ap.add_argument("--save-reports", action="store_true", help="Also write one JSON report per pair")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    args = ap.parse_args()
    setup_logging(args.verbose)

    ms = [int(s) for s in args.m.split(",") if s.strip()]
    limit = max_m()
    too_big = [m for m in ms if not 4 <= m <= limit]
    if too_big:
        print(f"✗ m={too_big} outside 4..{limit}; raise WALLCROSS_MAX_M to go further", file=sys.stderr)
        sys.exit(2)

    out_dir = Path(args.out_dir)
    ensure_dir(out_dir)
    pairs_csv = out_dir / "pairs.csv"
    print(f"Sweeping m={ms} (degree={args.degree}, seed={args.seed}) into {pairs_csv}")

    failed = 0
    for m in ms:
        mode = args.mode or default_mode(m)
        for t1, t2 in adjacent_pairs(m):
            start = time.perf_counter()
            rep = check_pair(t1, t2, args.degree, mode, args.seed, args.samples)
            secs = time.perf_counter() - start
            bad = [c["name"] for c in rep["checks"] if not c["ok"]]
            failed += int(not rep["ok"])

            write_pair_row(pairs_csv, [
                m, rep["pair"], rep["relabelled"], mode, args.seed,
                args.samples if mode == "sample" else "", args.degree,
                rep["kappa"], rep["checked_points"], rep["theta_checked"],
                int(rep["ok"]), ";".join(bad), f"{secs:.2f}",
            ])
            if args.save_reports:
                report_dir = out_dir / "reports" / f"m{m}"
                ensure_dir(report_dir)
                name = f"{tree_key(t1)}~{tree_key(t2)}".replace("|", "_")
                (report_dir / f"{name}.json").write_text(dumps(rep), encoding="utf-8")

            print(f"[m={m}] {rep['pair']}  kappa={rep['kappa']}  points={rep['checked_points']}  "
                  f"theta={rep['theta_checked']}  ok={rep['ok']}  {secs:.2f}s")

    if failed:
        print(f"✗ {failed} pair(s) failed", file=sys.stderr)
        sys.exit(1)
    print("✓ Sweep complete")


if __name__ == "__main__":
    main()

# src/tests/_runner.py
"""
Script entry point shared by the test modules, so each one runs both under
pytest and as `python -m src.tests.<module>`.
"""

from __future__ import annotations
import argparse
import sys
from typing import Callable, List, Optional, Sequence

from src.kernel.logging_config import setup_logging


def run_tests(tests: Sequence[Callable[[], None]], argv: Optional[List[str]] = None) -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("-k", type=str, default="", help="Only run tests whose name contains this")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    args = ap.parse_args(argv)
    setup_logging(args.verbose)

    try:
        for t in tests:
            if args.k and args.k not in t.__name__:
                continue
            t()
            print(f"✓ {t.__name__[len('test_'):]} ok")
    except AssertionError as e:
        print(f"✗ Test failed: {e}", file=sys.stderr)
        sys.exit(1)
    except Exception as e:
        print(f"✗ Unexpected error: {e}", file=sys.stderr)
        raise
    else:
        print("🎉 All selected tests passed")

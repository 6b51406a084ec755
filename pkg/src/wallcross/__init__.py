# src/wallcross/__init__.py
from .engine import (
    Check,
    ConePairInput,
    CrossingReport,
    crossing_data,
    flip_generic,
    no_body,
    no_cone,
    shift_generic,
)
from .counterexample import CounterexampleReport, verify_counterexample

__all__ = [
    "Check", "ConePairInput", "CrossingReport", "crossing_data", "flip_generic", "no_body", "no_cone",
    "shift_generic", "CounterexampleReport", "verify_counterexample",
]

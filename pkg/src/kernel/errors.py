# src/kernel/errors.py
from __future__ import annotations
from typing import Any, Optional


class WallCrossError(Exception):
    """Base error; `witness` holds the exact object that triggered it, if any."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class InvalidInput(WallCrossError, ValueError):
    pass


class Unbounded(WallCrossError):
    pass


class DomainError(WallCrossError, ValueError):
    pass


class TheoremViolation(WallCrossError):
    """A statement that must hold on valid inputs failed; always carries a witness."""

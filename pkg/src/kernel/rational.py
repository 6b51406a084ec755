# src/kernel/rational.py
"""
Exact scalars, vectors and matrices.

Rat is `fractions.Fraction`; a RatVec is a tuple of Fractions; RatMat is an
immutable row-major matrix. Floats are rejected everywhere: a float that sneaks
into a polytope silently breaks every equality test downstream.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from .config import MAX_DENOMINATOR
from .errors import InvalidInput

Rat = Fraction
RatVec = Tuple[Fraction, ...]
RatLike = Union[int, str, Fraction, sympy.Rational]


def rat(x: RatLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InvalidInput(f"not a rational: {x!r}")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidInput(f"not a rational: {x!r}")
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    raise InvalidInput(f"not an exact rational: {x!r} ({type(x).__name__})")


def fmt_rat(x: Fraction) -> str:
    """Canonical "p/q" form, "p" when q = 1."""
    return str(x)


def vec(xs: Iterable[RatLike]) -> RatVec:
    return tuple(rat(x) for x in xs)


def zeros(n: int) -> RatVec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> RatVec:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> RatVec:
    _same_len(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> RatVec:
    _same_len(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c: RatLike, v: Sequence[Fraction]) -> RatVec:
    c = rat(c)
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    _same_len(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def _same_len(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise InvalidInput(f"dimension mismatch: {len(u)} vs {len(v)}")


def primitive(v: Sequence[Fraction]) -> Tuple[int, ...]:
    """Positive multiple of v with coprime integer entries (zero stays zero)."""
    den = 1
    for a in v:
        den = lcm(den, Fraction(a).denominator)
    ints = [int(Fraction(a) * den) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(ints)


# --- small exact linear algebra (sympy) ---

def _to_sympy(rows: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> sympy.Matrix:
    if not rows:
        return sympy.zeros(0, ncols or 0)
    return sympy.Matrix([[sympy.Rational(a.numerator, a.denominator) for a in r] for r in rows])


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return int(_to_sympy(rows).rank())


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[RatVec]:
    """Unique solution of a square nonsingular system, None if singular."""
    A = _to_sympy(rows)
    if A.rows != A.cols or A.det() == 0:
        return None
    b = sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in rhs])
    return tuple(rat(x) for x in A.LUsolve(b))


# --- matrices ---

@dataclass(frozen=True)
class RatMat:
    rows: Tuple[RatVec, ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise InvalidInput(f"ragged matrix rows: widths {sorted(widths)}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RatLike]]) -> "RatMat":
        return cls(tuple(vec(r) for r in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> RatVec:
        return self.rows[i]

    def column(self, j: int) -> RatVec:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> List[RatVec]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "RatMat":
        return RatMat(tuple(self.columns()))

    def drop_rows(self, *idx: int) -> "RatMat":
        return RatMat(tuple(r for i, r in enumerate(self.rows) if i not in idx))

    def top(self, k: int) -> "RatMat":
        return RatMat(self.rows[:k])

    def __matmul__(self, v: Sequence[RatLike]) -> RatVec:
        if len(v) != self.ncols:
            raise InvalidInput(f"matrix has {self.ncols} columns, vector has {len(v)} entries")
        w = [rat(a) for a in v]
        return tuple(sum((a * b for a, b in zip(r, w) if b), Fraction(0)) for r in self.rows)

    def to_lists(self) -> List[List[str]]:
        return [[fmt_rat(a) for a in r] for r in self.rows]


# --- seeded randomness ---

def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, lo: int = -10, hi: int = 10,
                    max_den: int = MAX_DENOMINATOR) -> Fraction:
    den = int(rng.integers(1, max_den + 1))
    num = int(rng.integers(lo * den, hi * den + 1))
    return Fraction(num, den)


def random_vector(rng: np.random.Generator, n: int, lo: int = -10, hi: int = 10,
                  max_den: int = MAX_DENOMINATOR) -> RatVec:
    return tuple(random_rational(rng, lo, hi, max_den) for _ in range(n))


def random_combination(rng: np.random.Generator, points: Sequence[RatVec],
                       max_den: int = MAX_DENOMINATOR) -> RatVec:
    """
    Convex combination with strictly positive integer weights whose sum is at
    most `max_den`, so the result sits in the relative interior of the hull and
    integral inputs give denominators <= max_den.
    """
    k = len(points)
    if k == 0:
        raise InvalidInput("random_combination of no points")
    cap = max(1, max_den // k)
    w = [int(x) for x in rng.integers(1, cap + 1, size=k)]
    total = sum(w)
    n = len(points[0])
    out = [Fraction(0)] * n
    for wi, p in zip(w, points):
        for j in range(n):
            if p[j]:
                out[j] += wi * p[j]
    return tuple(Fraction(x) / total for x in out)

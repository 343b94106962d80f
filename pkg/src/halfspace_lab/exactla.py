"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  Vectors are tuples of fractions and matrices are tuples of
row tuples, so every value is immutable and hashable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...]

# exponents are refused: "1e999999999" would build a huge integer
_LITERAL = re.compile(r"[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.)")

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a finite decimal; a leading U+2212 minus is accepted."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    s = str(text).strip().replace("−", "-")
    if not _LITERAL.fullmatch(s):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(values: Iterable) -> Vector:
    return tuple(parse_rational(v) for v in values)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(vector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionMismatch("rows of a matrix must have equal length")
    return out


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit(n, i) for i in range(n))


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"dot product of lengths {len(u)} and {len(v)}")
    return sum((x * y for x, y in zip(u, v)), ZERO)


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * x for x in v)


def neg(v: Sequence) -> Vector:
    return tuple(-x for x in v)


def mat_vec(M: Sequence[Sequence], x: Sequence) -> Vector:
    return tuple(dot(row, x) for row in M)


def vec_mat(y: Sequence, M: Sequence[Sequence], ncols: Optional[int] = None) -> Vector:
    if len(y) != len(M):
        raise DimensionMismatch("vector length must equal the row count")
    if ncols is None:
        ncols = len(M[0]) if M else 0
    out = [ZERO] * ncols
    for c, row in zip(y, M):
        if c:
            for j, x in enumerate(row):
                out[j] += c * x
    return tuple(out)


def transpose(M: Sequence[Sequence], ncols: Optional[int] = None) -> Matrix:
    if ncols is None:
        ncols = len(M[0]) if M else 0
    return tuple(tuple(row[j] for row in M) for j in range(ncols))


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def rref(M: Sequence[Sequence], ncols: Optional[int] = None) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns.

    Pivots are taken as the first nonzero entry scanning columns left to
    right; zero rows are dropped from the result.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    rows = [list(map(Fraction, r)) for r in M]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r]), tuple(pivots)


def rank(M: Sequence[Sequence]) -> int:
    return len(rref(M)[1])


def right_nullspace(M: Sequence[Sequence], ncols: Optional[int] = None) -> Matrix:
    """Basis of ``{x : M x = 0}``, one basis vector per free column."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(M, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return tuple(basis)


def nullspace(M: Sequence[Sequence]) -> Matrix:
    """Basis of the left nullspace ``{y : y M = 0}`` (rows are the basis)."""
    ncols = len(M[0]) if M else 0
    return right_nullspace(transpose(M, ncols), len(M))


def solve_linear(M: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """One solution of ``M x = b``, or ``None`` when the system is inconsistent.

    Free variables are set to zero.
    """
    if len(b) != len(M):
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {len(M)}")
    ncols = len(M[0]) if M else 0
    aug = [tuple(row) + (rhs,) for row, rhs in zip(M, b)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return tuple(x)


def in_row_space(v: Sequence, M: Sequence[Sequence]) -> bool:
    return rank(tuple(M) + (tuple(v),)) == rank(M)


def primitive_integer(v: Sequence) -> Vector:
    """Scale ``v`` to coprime integers with first nonzero entry positive."""
    v = [Fraction(x) for x in v]
    nz = [x for x in v if x != 0]
    if not nz:
        return tuple(v)
    den = 1
    for x in nz:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for k in ints:
        g = gcd(g, abs(k))
    if nz[0] < 0:
        g = -g
    return tuple(Fraction(k // g) for k in ints)


def proportional(u: Sequence, v: Sequence) -> bool:
    """True when ``u`` and ``v`` are nonzero multiples of each other."""
    if is_zero(u) or is_zero(v):
        return False
    return rank((tuple(u), tuple(v))) == 1

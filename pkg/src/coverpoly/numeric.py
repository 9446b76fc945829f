"""Exact rational vectors and fraction-free linear algebra.

Scalars are :class:`fractions.Fraction`, which is always stored reduced with a
positive denominator, so equality is structural.  Vectors are tuples of
fractions and matrices are tuples of such rows; both are immutable.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionError, FormatError

QVector = tuple[Fraction, ...]
QMatrix = tuple[QVector, ...]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def qvec(values: Iterable) -> QVector:
    return tuple(Fraction(v) for v in values)


def qmat(rows: Iterable[Iterable]) -> QMatrix:
    out = tuple(qvec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionError("matrix rows have different lengths")
    return out


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; anything else (decimals, blanks) is rejected."""
    text = text.strip()
    if not _RATIONAL_RE.fullmatch(text):
        raise FormatError(f"not a rational number: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise FormatError(f"zero denominator: {text!r}") from None


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_vector(text: str) -> QVector:
    """Parse a comma separated list such as ``"1/2,1/2,1/2"``."""
    if not text.strip():
        raise FormatError("empty vector")
    return tuple(parse_rational(tok) for tok in text.split(","))


def format_vector(v: Sequence[Fraction]) -> str:
    return ",".join(format_rational(x) for x in v)


def format_point(v: Sequence[Fraction]) -> str:
    return "(" + format_vector(v) + ")"


def _check_same_length(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} != {len(v)}")


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    _check_same_length(u, v)
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> QVector:
    _check_same_length(u, v)
    return tuple(Fraction(a) + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> QVector:
    _check_same_length(u, v)
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def scale(c, v: Sequence[Fraction]) -> QVector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def unit(n: int, i: int) -> QVector:
    return tuple(Fraction(int(j == i)) for j in range(n))


def is_binary(v: Sequence[Fraction]) -> bool:
    return all(x == 0 or x == 1 for x in v)


class Order(enum.Enum):
    """Outcome of comparing two vectors under the componentwise partial order.

    ``GE`` means ``>=`` in every coordinate with at least one coordinate
    differing, but not strictly greater everywhere (which is ``GT``).
    """

    EQ = "EQ"
    GT = "GT"
    GE = "GE"
    LT = "LT"
    LE = "LE"
    INCOMPARABLE = "INCOMPARABLE"


def compare_componentwise(u: Sequence[Fraction], v: Sequence[Fraction]) -> Order:
    _check_same_length(u, v)
    diffs = [Fraction(a) - b for a, b in zip(u, v)]
    if all(d == 0 for d in diffs):
        return Order.EQ
    if all(d > 0 for d in diffs):
        return Order.GT
    if all(d >= 0 for d in diffs):
        return Order.GE
    if all(d < 0 for d in diffs):
        return Order.LT
    if all(d <= 0 for d in diffs):
        return Order.LE
    return Order.INCOMPARABLE


def integer_row(row: Sequence[Fraction]) -> list[int]:
    """Scale ``row`` by the lcm of its denominators (a positive factor)."""
    row = [Fraction(x) for x in row]
    m = lcm(*(x.denominator for x in row)) if row else 1
    return [int(x * m) for x in row]


def primitive(row: Sequence[Fraction]) -> tuple[int, ...]:
    """Positive multiple of ``row`` with coprime integer entries.

    The zero vector is returned unchanged.
    """
    ints = integer_row(row)
    g = gcd(*ints) if ints else 0
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def _bareiss(a: list[list[int]], ncols: int) -> tuple[int, list[int]]:
    """In-place fraction-free forward elimination of an integer matrix.

    Only the first ``ncols`` columns are used as pivot columns.  Returns the
    rank and the list of pivot columns.  Every intermediate entry is a minor
    of the input, so the integer division is exact.
    """
    nrows = len(a)
    width = len(a[0]) if a else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        top = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, width):
                row[j] = (row[j] * p - f * top[j]) // prev
            row[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return r, pivots


def rank(m: Iterable[Sequence]) -> int:
    """Exact rank over the rationals; the empty matrix has rank 0."""
    rows = [integer_row(r) for r in m]
    if not rows:
        return 0
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DimensionError("matrix rows have different lengths")
    return _bareiss(rows, width)[0]


def integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix; ``rows`` is copied, not modified."""
    if not rows:
        return 0
    return _bareiss([list(r) for r in rows], len(rows[0]))[0]


def solve(m: Sequence[Sequence], b: Sequence) -> QVector | None:
    """Unique solution of the square system ``m x = b``, or ``None`` if singular."""
    n = len(m)
    if len(b) != n or any(len(r) != n for r in m):
        raise DimensionError("solve needs a square system")
    aug = [integer_row(list(r) + [bv]) for r, bv in zip(m, b)]
    r, _ = _bareiss(aug, n)
    if r < n:
        return None
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(aug[i][n]) - sum(aug[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / aug[i][i]
    return tuple(x)


def transpose(m: Sequence[Sequence]) -> QMatrix:
    if not m:
        return ()
    return tuple(tuple(Fraction(x) for x in col) for col in zip(*m))

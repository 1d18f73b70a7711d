"""Brute-force oracle: enumerate every up/stay/down walk on the levels 0, 1, 2, ...

Each move is weighted by the triad weight at the level it departs from
(``i`` for up, ``q`` for stay, ``d`` for down), and a path's weight is the
product of its move weights.  Nothing here shares code with the recurrence or
matrix engines.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from duality_triads.core import ConnectionTriangle
from duality_triads.errors import EnumerationBoundExceeded
from duality_triads.sequences import TriadSpec

MAX_STEPS = 14
MAX_ORACLE_ROWS = 12

UP, STAY, DOWN = 1, 0, -1
MOVES = (UP, STAY, DOWN)


def _as_exact(x: Fraction) -> int | Fraction:
    # integer weights multiply much faster as int; the sum is the same
    return x.numerator if x.denominator == 1 else x


def _weight_table(triad: TriadSpec, top: int) -> dict[int, list[int | Fraction]]:
    # move -> weight of that move from each level 0..top
    return {
        UP: [_as_exact(triad.up(k)) for k in range(top + 1)],
        STAY: [_as_exact(triad.stay(k)) for k in range(top + 1)],
        DOWN: [_as_exact(triad.down(k)) for k in range(top + 1)],
    }


def _check(n: int, start: int) -> None:
    if n > MAX_STEPS:
        raise EnumerationBoundExceeded(f"{n} steps exceeds the enumeration bound {MAX_STEPS}")
    if n < 0 or start < 0:
        raise ValueError("steps and levels must be nonnegative")


def enumerate_paths(triad: TriadSpec, n: int, start: int):
    """Yield ``(moves, end_level, weight)`` for every walk of length ``n`` that
    never drops below level 0."""
    _check(n, start)
    weights = _weight_table(triad, start + n)
    moves: list[int] = []

    def walk(level: int, weight):
        if len(moves) == n:
            yield tuple(moves), level, Fraction(weight)
            return
        for m in MOVES:
            nxt = level + m
            if nxt < 0:
                continue
            moves.append(m)
            yield from walk(nxt, weight * weights[m][level])
            moves.pop()

    yield from walk(start, 1)


@lru_cache(maxsize=512)
def _walk_totals(triad: TriadSpec, n: int, start: int) -> dict[int, Fraction]:
    # one full enumeration from ``start``, summed by end level
    weights = _weight_table(triad, start + n)
    totals: dict[int, int | Fraction] = {}
    stack = [(start, n, 1)]
    while stack:
        level, left, weight = stack.pop()
        if left == 0:
            totals[level] = totals.get(level, 0) + weight
            continue
        for m in MOVES:
            nxt = level + m
            if nxt >= 0:
                stack.append((nxt, left - 1, weight * weights[m][level]))
    return {end: Fraction(w) for end, w in totals.items()}


def count_paths(triad: TriadSpec, n: int, start: int, end: int) -> Fraction:
    """Sum of path weights over all length-``n`` walks ``start -> end``.

    With nonnegative integer weights this is the number of histories.
    """
    _check(n, start)
    if end < 0:
        raise ValueError("steps and levels must be nonnegative")
    return _walk_totals(triad, n, start).get(end, Fraction(0))


def oracle_triangle(triad: TriadSpec, max_index: int) -> ConnectionTriangle:
    """Rows ``0..max_index`` with ``c_{n,k}`` = weighted walks ``0 -> k`` in n steps."""
    if max_index > MAX_ORACLE_ROWS:
        raise EnumerationBoundExceeded(
            f"oracle triangle limited to {MAX_ORACLE_ROWS} rows beyond row 0"
        )
    rows = []
    for n in range(max_index + 1):
        row = [Fraction(0)] * (n + 1)
        for end, weight in _walk_totals(triad, n, 0).items():
            row[end] = weight
        rows.append(tuple(row))
    return ConnectionTriangle(tuple(rows), triad)

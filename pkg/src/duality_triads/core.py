"""Connection-constant triangles: forward recurrence and transition matrix.

Row ``n`` of a triangle holds ``c_{n,0..n}``.  One step of the recurrence is

    c_{n+1,k} = i_{k-1} c_{n,k-1} + q_k c_{n,k} + d_{k+1} c_{n,k+1}

and the same dynamics is ``C_{n+1} = C_n X`` for the tridiagonal matrix ``X``
with ``d`` below, ``q`` on and ``i`` above the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from duality_triads.sequences import TriadSpec

Row = tuple[Fraction, ...]
Matrix = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class ConnectionTriangle:
    rows: tuple[Row, ...]
    triad: TriadSpec | None = None

    def __post_init__(self) -> None:
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")

    def __getitem__(self, n: int) -> Row:
        return self.rows[n]

    def __len__(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> Fraction:
        """``c_{n,k}``, zero above the diagonal."""
        if k > n:
            return ZERO
        return self.rows[n][k]

    @property
    def max_index(self) -> int:
        return len(self.rows) - 1


def step_row(triad: TriadSpec, row: Sequence[Fraction]) -> Row:
    """Advance one time step: row ``n`` (length n+1) to row ``n+1``."""
    n = len(row) - 1
    out = []
    for k in range(n + 2):
        acc = ZERO
        if k >= 1:
            acc += triad.up(k - 1) * row[k - 1]
        if k <= n:
            acc += triad.stay(k) * row[k]
        if k + 1 <= n:
            acc += triad.down(k + 1) * row[k + 1]
        out.append(acc)
    return tuple(out)


def triangle(triad: TriadSpec, row_count: int) -> ConnectionTriangle:
    """Rows ``0..row_count-1`` of the connection-constant triangle."""
    if row_count < 1:
        raise ValueError("row_count must be at least 1")
    rows: list[Row] = [(ONE,)]
    for _ in range(row_count - 1):
        rows.append(step_row(triad, rows[-1]))
    return ConnectionTriangle(tuple(rows), triad)


def row_sums(tri: ConnectionTriangle) -> list[Fraction]:
    """Cumulative connection constants ``K_n = sum_k c_{n,k}``."""
    return [sum(row, ZERO) for row in tri.rows]


@dataclass(frozen=True)
class BandedMatrix:
    """Finite truncation of the tridiagonal transition matrix."""

    sub: tuple[Fraction, ...]
    main: tuple[Fraction, ...]
    super: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        n = len(self.main)
        if n < 1 or len(self.sub) != n - 1 or len(self.super) != n - 1:
            raise ValueError("inconsistent diagonal lengths")

    @property
    def size(self) -> int:
        return len(self.main)

    def entry(self, r: int, c: int) -> Fraction:
        if r == c:
            return self.main[r]
        if c == r + 1:
            return self.super[r]
        if c == r - 1:
            return self.sub[c]
        return ZERO

    def to_dense(self) -> Matrix:
        return [[self.entry(r, c) for c in range(self.size)] for r in range(self.size)]


def transition_matrix(triad: TriadSpec, size: int) -> BandedMatrix:
    """The ``size x size`` truncation of ``X``."""
    if size < 1:
        raise ValueError("size must be at least 1")
    return BandedMatrix(
        sub=tuple(triad.down(k) for k in range(1, size)),
        main=tuple(triad.stay(k) for k in range(size)),
        super=tuple(triad.up(k) for k in range(size - 1)),
    )


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * cols
        for t, v in enumerate(row):
            if v:
                bt = b[t]
                for c in range(cols):
                    acc[c] += v * bt[c]
        out.append(acc)
    return out


def identity(size: int) -> Matrix:
    return [[ONE if r == c else ZERO for c in range(size)] for r in range(size)]


def matrix_power(m: BandedMatrix | Matrix, n: int) -> Matrix:
    """Dense ``m**n`` by repeated squaring."""
    if n < 0:
        raise ValueError("power must be nonnegative")
    base = m.to_dense() if isinstance(m, BandedMatrix) else [list(r) for r in m]
    result = identity(len(base))
    while n:
        if n & 1:
            result = matmul(result, base)
        n >>= 1
        if n:
            base = matmul(base, base)
    return result


def vector_times(vec: Sequence[Fraction], m: BandedMatrix) -> list[Fraction]:
    """Row vector times matrix, ``C X``."""
    size = m.size
    out = [ZERO] * size
    for r, v in enumerate(vec):
        if v:
            for c in range(max(r - 1, 0), min(r + 2, size)):
                out[c] += v * m.entry(r, c)
    return out


def state_vectors(triad: TriadSpec, steps: int, size: int | None = None) -> list[list[Fraction]]:
    """``C_0 X^n`` for ``n = 0..steps`` with a truncation of the given size."""
    size = steps + 1 if size is None else size
    if size < steps + 1:
        raise ValueError("truncation must have at least steps+1 levels")
    x = transition_matrix(triad, size)
    c = [ONE] + [ZERO] * (size - 1)
    out = [c]
    for _ in range(steps):
        c = vector_times(c, x)
        out.append(c)
    return out


def matrix_power_entry(triad: TriadSpec, n: int, k: int, l: int) -> Fraction:
    """``(X^n)_{k,l}``, the weighted number of ways from level k to level l in n steps."""
    if min(n, k, l) < 0:
        raise ValueError("n, k, l must be nonnegative")
    if abs(k - l) > n:
        return ZERO
    # one step moves at most one level, so size k+n+1 is exact for l <= k+n
    size = k + n + 1
    x = transition_matrix(triad, size)
    row = [ONE if c == k else ZERO for c in range(size)]
    for _ in range(n):
        row = vector_times(row, x)
    return row[l]

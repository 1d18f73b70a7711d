"""Built-in triads with closed-form oracles, generalized Lah numbers, and the
non-triad counterexamples (Eulerian numbers, Abel connection constants).

The counterexamples live here on purpose: their recurrences depend on the
time step ``n`` and so cannot be written as a :class:`TriadSpec`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional

from duality_triads.duality import connection_coefficients
from duality_triads.errors import IndexOutOfTriangle, NoOracle, UnknownName
from duality_triads.polynomials import Polynomial
from duality_triads.sequences import (
    Scalar,
    SequenceSpec,
    TriadSpec,
    eval_sequence,
    format_rational,
    parse_sequence,
)

NAMES = (
    "pascal",
    "pascal_s",
    "stirling2",
    "stirling2_signed",
    "newton_gregory",
    "hermite",
    "laguerre",
    "lah",
    "tchebychev",
)

Oracle = Callable[[int, int], Fraction]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    triad: TriadSpec
    oracle: Optional[Oracle] = None
    note: str = ""


# -- closed forms ------------------------------------------------------------

def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind by inclusion-exclusion."""
    total = sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))
    return total // factorial(k)


def lah_number(n: int, k: int) -> int:
    """Unsigned Lah number ``C(n-1, k-1) n!/k!``; ``L(0,0) = 1``."""
    if n == 0 and k == 0:
        return 1
    if k == 0:
        return 0
    return comb(n - 1, k - 1) * factorial(n) // factorial(k)


def ballot(n: int, k: int) -> int:
    """Nonnegative +-1 paths from 0 to k in n steps."""
    if (n - k) % 2:
        return 0
    m = (n - k) // 2
    return comb(n, m) - (comb(n, m - 1) if m >= 1 else 0)


def hermite_count(n: int, k: int) -> int:
    """Partial matchings of n points leaving k unmatched."""
    if (n - k) % 2:
        return 0
    m = (n - k) // 2
    return factorial(n) // (factorial(k) * 2**m * factorial(m))


def _closed_forms(s: Fraction) -> dict[str, Oracle]:
    return {
        "pascal": lambda n, k: Fraction(comb(n, k)),
        "pascal_s": lambda n, k: comb(n, k) * s ** (n - k),
        "stirling2": lambda n, k: Fraction(stirling2(n, k)),
        "stirling2_signed": lambda n, k: Fraction((-1) ** (n - k) * stirling2(n, k)),
        "newton_gregory": lambda n, k: Fraction(factorial(k) * stirling2(n, k)),
        "hermite": lambda n, k: Fraction(hermite_count(n, k)),
        "lah": lambda n, k: Fraction(lah_number(n, k)),
        "laguerre": lambda n, k: Fraction((-1) ** k * lah_number(n, k)),
        "tchebychev": lambda n, k: Fraction(ballot(n, k)),
    }


# -- the catalog -------------------------------------------------------------

_PARAM = re.compile(r"^(\w+)\s*(?:\((.+)\)|:(.+))$")


def _split_name(name: str, s: Scalar | None) -> tuple[str, Fraction | None]:
    m = _PARAM.match(name.strip())
    if m:
        base, arg = m.group(1), m.group(2) or m.group(3)
        try:
            return base, Fraction(arg.strip())
        except (ValueError, ZeroDivisionError):
            raise UnknownName(f"bad parameter in {name!r}") from None
    return name.strip(), None if s is None else Fraction(s)


def _triad(name: str, i: SequenceSpec, q: SequenceSpec, d: SequenceSpec) -> TriadSpec:
    return TriadSpec(i, q, d, name)


P = SequenceSpec.poly


def builtin(name: str, s: Scalar | None = None) -> CatalogEntry:
    """Look up a catalog triad.

    ``pascal_s`` needs its parameter, either as ``s=`` or spelled into the
    name as ``pascal_s(3)`` / ``pascal_s:3``.
    """
    base, param = _split_name(name, s)
    if base not in NAMES:
        raise UnknownName(f"unknown triad {name!r}; known: {', '.join(NAMES)}")
    if base == "pascal_s":
        if param is None:
            raise UnknownName("pascal_s needs a parameter, e.g. pascal_s(3)")
    elif param is not None:
        raise UnknownName(f"{base} takes no parameter")
    oracle = _closed_forms(param if param is not None else Fraction(1))[base]
    label = base if base != "pascal_s" else f"pascal_s({format_rational(param)})"

    if base == "pascal":
        triad, note = _triad(label, P(1), P(1), P(0)), "binomial coefficients; Phi_n = (x-1)^n"
    elif base == "pascal_s":
        triad = _triad(label, P(1), P(param), P(0))
        note = "C(n,k) s^(n-k); Phi_n = (x-s)^n"
    elif base == "stirling2":
        triad, note = _triad(label, P(1), P(0, 1), P(0)), "Stirling numbers of the second kind; falling factorials"
    elif base == "stirling2_signed":
        triad, note = _triad(label, P(1), P(0, -1), P(0)), "signed Stirling numbers; rising factorials"
    elif base == "newton_gregory":
        triad, note = _triad(label, P(1, 1), P(0, 1), P(0)), "k! S(n,k); Phi_k = binom(x,k)"
    elif base == "hermite":
        triad, note = _triad(label, P(1), P(0), P(0, 1)), "monic Hermite polynomials"
    elif base == "laguerre":
        triad, note = _triad(label, P(-1), P(0, 2), P(0, 1, -1)), "signed Lah numbers; Laguerre binomial sequence"
    elif base == "lah":
        triad, note = _triad(label, P(1), P(0, 2), P(0, -1, 1)), "unsigned Lah numbers"
    else:
        triad, note = _triad(label, P(1), P(0), P(1)), "ballot numbers; Phi_k = U_k(x/2)"
    return CatalogEntry(label, triad, oracle, note)


def default_entries() -> list[CatalogEntry]:
    """All nine catalog triads, ``pascal_s`` with ``s = 3``."""
    return [builtin(n, s=3 if n == "pascal_s" else None) for n in NAMES]


def closed_form(name: str, n: int, k: int, s: Scalar | None = None) -> Fraction:
    if not 0 <= k <= n:
        raise IndexOutOfTriangle(f"(n, k) = ({n}, {k}) is outside the triangle")
    try:
        entry = builtin(name, s)
    except UnknownName:
        raise NoOracle(f"no closed form for {name!r}") from None
    if entry.oracle is None:
        raise NoOracle(f"no closed form for {name!r}")
    return Fraction(entry.oracle(n, k))


# -- generalized Lah numbers -------------------------------------------------

@dataclass(frozen=True)
class RootSequence:
    """Roots ``r_1, r_2, ...`` of the monic sequence ``q_k = prod_{j<=k} (x - r_j)``.

    A polynomial spec is evaluated at ``j``; an explicit list holds
    ``r_1, r_2, ...`` in order.
    """

    spec: SequenceSpec

    @classmethod
    def of(cls, expr: str | SequenceSpec) -> RootSequence:
        if isinstance(expr, SequenceSpec):
            return cls(expr)
        return cls(parse_sequence(expr, variable="j"))

    def root(self, j: int) -> Fraction:
        if j < 1:
            raise ValueError("roots are indexed from 1")
        if self.spec.is_explicit:
            return eval_sequence(self.spec, j - 1)
        return eval_sequence(self.spec, j)

    def polynomial(self, k: int) -> Polynomial:
        return Polynomial.from_roots(self.root(j) for j in range(1, k + 1))


Rows = list[list[Fraction]]


def generalized_lah(r: RootSequence, s: RootSequence, max_index: int) -> Rows:
    """``L_{n+1,k} = L_{n,k-1} + (r_{k+1} - s_{n+1}) L_{n,k}``, ``L_{0,0} = 1``.

    ``p_n = sum_k L_{n,k} q_k`` where ``p``/``q`` have roots ``s``/``r``.
    """
    rows: Rows = [[Fraction(1)]]
    for n in range(max_index):
        prev = rows[-1]
        s_next = s.root(n + 1)
        row = []
        for k in range(n + 2):
            acc = prev[k - 1] if k >= 1 else Fraction(0)
            if k <= n:
                acc += (r.root(k + 1) - s_next) * prev[k]
            row.append(acc)
        rows.append(row)
    return rows


def expand_roots(r: RootSequence, s: RootSequence, max_index: int) -> Rows:
    """Same triangle as :func:`generalized_lah`, by building ``p_n``, ``q_k``
    explicitly and solving the triangular change of basis."""
    basis = [r.polynomial(k) for k in range(max_index + 1)]
    return [
        connection_coefficients(s.polynomial(n), basis[: n + 1])
        for n in range(max_index + 1)
    ]


def lah_recurrence(max_index: int) -> Rows:
    """``L_{n+1,k} = L_{n,k-1} + 2k L_{n,k} + k(k+1) L_{n,k+1}`` from ``L_{0,0} = 1``."""
    rows: Rows = [[Fraction(1)]]
    for n in range(max_index):
        prev = rows[-1] + [Fraction(0), Fraction(0)]
        rows.append([
            (prev[k - 1] if k else 0) + 2 * k * prev[k] + k * (k + 1) * prev[k + 1]
            for k in range(n + 2)
        ])
    return rows


# -- non-triad counterexamples -----------------------------------------------

def euler_numbers(max_index: int) -> Rows:
    """Eulerian triangle ``<n k>`` for ``k = 0..n``.

    ``<n+1 k> = (k+1)<n k> + (n+1-k)<n k-1>``.  The coefficient of the second
    term depends on ``n``, which is exactly what no triad can express.
    Row ``n`` keeps all ``n+1`` slots, so rows ``n >= 1`` end in 0.
    """
    if max_index < 0:
        raise ValueError("max_index must be nonnegative")
    rows: Rows = [[Fraction(1)]]
    for n in range(max_index):
        prev = rows[-1] + [Fraction(0)]
        rows.append([
            (k + 1) * prev[k] + (n + 1 - k) * (prev[k - 1] if k else 0)
            for k in range(n + 2)
        ])
    return [[Fraction(v) for v in row] for row in rows]


def euler_step_coefficients(n: int, k: int) -> tuple[int, int]:
    """Weights ``(k+1, n+1-k)`` applied to ``<n k>`` and ``<n k-1>``."""
    return k + 1, n + 1 - k


def abel_connection(n: int, k: int) -> Fraction:
    """``C(n,k) k^(n-k)``: coefficients of ``x^n`` in the Abel polynomials."""
    if not 0 <= k <= n:
        raise IndexOutOfTriangle(f"(n, k) = ({n}, {k}) is outside the triangle")
    return Fraction(comb(n, k) * k ** (n - k))

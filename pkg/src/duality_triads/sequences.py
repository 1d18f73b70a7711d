"""Weight sequences ``k -> w_k`` and the triads built from three of them.

A sequence is either a polynomial in the index of degree at most two, or an
explicit finite list.  Expressions use a small grammar::

    2*k^2 - k + 1/2        polynomial in k (``j`` for root sequences)
    list:1,-1,3/2          explicit list; reading past the end is an error
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from duality_triads.errors import IndexBeyondExplicitList, SequenceParseError

Scalar = Union[int, Fraction]

MAX_DEGREE = 2


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def format_rational(x: Fraction) -> str:
    """``p/q``, or ``p`` when the denominator is one."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SequenceSpec:
    """Closed-form or explicit description of a weight sequence.

    Exactly one of ``coefficients`` (ascending powers of the index) and
    ``values`` is set.
    """

    coefficients: tuple[Fraction, ...] | None = None
    values: tuple[Fraction, ...] | None = None
    variable: str = "k"

    def __post_init__(self) -> None:
        if (self.coefficients is None) == (self.values is None):
            raise ValueError("exactly one of coefficients / values must be given")
        if self.coefficients is not None:
            coeffs = _trim(Fraction(c) for c in self.coefficients)
            if len(coeffs) - 1 > MAX_DEGREE:
                raise SequenceParseError(
                    f"degree {len(coeffs) - 1} exceeds the maximum of {MAX_DEGREE}"
                )
            object.__setattr__(self, "coefficients", coeffs)
        else:
            object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @classmethod
    def poly(cls, *coefficients: Scalar, variable: str = "k") -> SequenceSpec:
        return cls(coefficients=tuple(Fraction(c) for c in coefficients), variable=variable)

    @classmethod
    def constant(cls, c: Scalar, variable: str = "k") -> SequenceSpec:
        return cls.poly(c, variable=variable)

    @classmethod
    def explicit(cls, values: Iterable[Scalar], variable: str = "k") -> SequenceSpec:
        return cls(values=tuple(Fraction(v) for v in values), variable=variable)

    @property
    def is_explicit(self) -> bool:
        return self.values is not None

    def __call__(self, k: int) -> Fraction:
        return eval_sequence(self, k)

    def to_expression(self) -> str:
        """Render in the grammar accepted by :func:`parse_sequence`."""
        if self.values is not None:
            return "list:" + ",".join(format_rational(v) for v in self.values)
        v = self.variable
        terms = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = {0: "", 1: v, 2: f"{v}^2"}[power]
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def eval_sequence(spec: SequenceSpec, k: int) -> Fraction:
    """Exact value ``w_k``."""
    if k < 0:
        raise ValueError(f"sequence index must be nonnegative, got {k}")
    if spec.values is not None:
        if k >= len(spec.values):
            raise IndexBeyondExplicitList(k, len(spec.values))
        return spec.values[k]
    acc = Fraction(0)
    for c in reversed(spec.coefficients):
        acc = acc * k + c
    return acc


# -- expression parser -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


def _mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _add(a: list[Fraction], b: list[Fraction], sign: int = 1) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x + sign * y for x, y in zip(a, b)]


def _degree(p: list[Fraction]) -> int:
    return len(_trim(p)) - 1


class _Parser:
    # expr   := term (('+'|'-') term)*
    # term   := factor (('*'|'/') factor)*
    # factor := ('-'|'+') factor | atom ('^' INT)?
    # atom   := INT | VAR | '(' expr ')'

    def __init__(self, text: str, variable: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variable = variable

    def fail(self, msg: str) -> SequenceParseError:
        return SequenceParseError(f"{msg} in expression {self.text!r}")

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise self.fail("unexpected end")
        self.pos += 1
        return tok

    def parse(self) -> list[Fraction]:
        if not self.tokens:
            raise self.fail("empty expression")
        p = self.expr()
        if self.peek() is not None:
            raise self.fail(f"unexpected token {self.peek()!r}")
        return p

    def expr(self) -> list[Fraction]:
        p = self.term()
        while self.peek() in ("+", "-"):
            sign = 1 if self.take() == "+" else -1
            p = _add(p, self.term(), sign)
        return p

    def term(self) -> list[Fraction]:
        p = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op == "*":
                p = _mul(p, rhs)
                if _degree(p) > MAX_DEGREE:
                    raise self.fail(f"degree exceeds {MAX_DEGREE}")
            else:
                if _degree(rhs) > 0:
                    raise self.fail("division by a non-constant")
                if _degree(rhs) < 0:
                    raise self.fail("division by zero")
                p = [c / rhs[0] for c in p]
        return p

    def factor(self) -> list[Fraction]:
        if self.peek() in ("-", "+"):
            sign = 1 if self.take() == "+" else -1
            return [sign * c for c in self.factor()]
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not exp.isdigit():
                raise self.fail("exponent must be a nonnegative integer literal")
            e = int(exp)
            if e > MAX_DEGREE:
                raise self.fail(f"exponent {e} exceeds {MAX_DEGREE}")
            out = [Fraction(1)]
            for _ in range(e):
                out = _mul(out, base)
            if _degree(out) > MAX_DEGREE:
                raise self.fail(f"degree exceeds {MAX_DEGREE}")
            return out
        return base

    def atom(self) -> list[Fraction]:
        tok = self.take()
        if tok.isdigit():
            return [Fraction(int(tok))]
        if tok == self.variable:
            return [Fraction(0), Fraction(1)]
        if tok == "(":
            p = self.expr()
            if self.take() != ")":
                raise self.fail("expected ')'")
            return p
        raise self.fail(f"unexpected token {tok!r}")


def parse_sequence(text: str, variable: str = "k") -> SequenceSpec:
    """Parse a weight-sequence expression (see module docstring)."""
    text = text.strip()
    if text.startswith("list:"):
        items = [s.strip() for s in text[len("list:"):].split(",")]
        if items == [""]:
            items = []
        try:
            values = [Fraction(s) for s in items]
        except (ValueError, ZeroDivisionError) as exc:
            raise SequenceParseError(f"bad list literal in {text!r}: {exc}") from None
        return SequenceSpec.explicit(values, variable=variable)
    coeffs = _Parser(text, variable).parse()
    return SequenceSpec(coefficients=tuple(coeffs), variable=variable)


@dataclass(frozen=True)
class TriadSpec:
    """The three weight sequences ``(i, q, d)`` of one duality triad.

    ``d_0`` is read as zero whatever ``d`` says: the forward recurrence never
    uses it and the duality proof assumes it.
    """

    i: SequenceSpec
    q: SequenceSpec
    d: SequenceSpec
    name: str | None = None

    @classmethod
    def from_expressions(cls, i: str, q: str, d: str, name: str | None = None) -> TriadSpec:
        return cls(parse_sequence(i), parse_sequence(q), parse_sequence(d), name)

    def up(self, k: int) -> Fraction:
        return eval_sequence(self.i, k)

    def stay(self, k: int) -> Fraction:
        return eval_sequence(self.q, k)

    def down(self, k: int) -> Fraction:
        if k == 0:
            return Fraction(0)
        return eval_sequence(self.d, k)

    @property
    def label(self) -> str:
        return self.name or "custom"

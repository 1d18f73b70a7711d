"""Exact dense univariate polynomials and the triad polynomial sequence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from duality_triads.errors import NoPolynomialSequence
from duality_triads.sequences import TriadSpec, format_rational

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Polynomial:
    """Coefficient ``coeffs[j]`` multiplies ``x**j``; trailing zeros are trimmed.

    The zero polynomial has ``degree is None``.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        c = [Fraction(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> Polynomial:
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Polynomial:
        return cls((Fraction(0),) * n + (Fraction(c),))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Polynomial:
        """Monic ``prod (x - r)``."""
        p = cls.constant(1)
        for r in roots:
            p = mul_by_x(p) - p * Fraction(r)
        return p

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_combine(self, 1, other, 1)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return poly_combine(self, 1, other, -1)

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(tuple(out))
        s = Fraction(other)
        return Polynomial(tuple(c * s for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> Fraction:
        return evaluate(self, x)

    def __str__(self) -> str:
        return format_polynomial(self)


def poly_combine(a: Polynomial, alpha: Scalar, b: Polynomial, beta: Scalar) -> Polynomial:
    """``alpha*a + beta*b``."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    n = max(len(a.coeffs), len(b.coeffs))
    return Polynomial(tuple(alpha * a.coeff(j) + beta * b.coeff(j) for j in range(n)))


def mul_by_x(a: Polynomial) -> Polynomial:
    if a.is_zero():
        return a
    return Polynomial((Fraction(0),) + a.coeffs)


def evaluate(a: Polynomial, x: Scalar) -> Fraction:
    """Horner evaluation."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def format_polynomial(p: Polynomial, var: str = "x") -> str:
    """Human form, e.g. ``x^2 - 2x + 1`` or ``(1/2)x^2 - (1/2)x``."""
    terms = []
    for j in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[j]
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        elif mag.denominator == 1:
            body = f"{mag.numerator}{mono}"
        else:
            body = f"({format_rational(mag)}){mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def triad_polynomials(triad: TriadSpec, max_degree: int) -> list[Polynomial]:
    """``Phi_0..Phi_M`` from ``x Phi_n = d_n Phi_{n-1} + q_n Phi_n + i_n Phi_{n+1}``.

    Solved forward as ``Phi_{n+1} = ((x - q_n) Phi_n - d_n Phi_{n-1}) / i_n``
    with ``Phi_0 = 1`` and ``Phi_{-1} = 0``.  ``i_n`` need not be 1, so the
    sequence may be non-monic.

    Raises:
        NoPolynomialSequence: if ``i_n == 0`` for some ``n < max_degree``.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    polys = [Polynomial.constant(1)]
    prev = Polynomial()
    for n in range(max_degree):
        i_n = triad.up(n)
        if i_n == 0:
            raise NoPolynomialSequence(n)
        cur = polys[-1]
        nxt = mul_by_x(cur) - cur * triad.stay(n) - prev * triad.down(n)
        polys.append(nxt * (1 / i_n))
        prev = cur
    return polys


def eigen_residual(triad: TriadSpec, polys: Sequence[Polynomial]) -> list[Polynomial]:
    """``x Phi_n - (d_n Phi_{n-1} + q_n Phi_n + i_n Phi_{n+1})`` for ``n < len(polys)-1``.

    All zero iff ``polys`` solves ``x Phi = X Phi`` on the given range.
    """
    out = []
    for n in range(len(polys) - 1):
        prev = polys[n - 1] if n >= 1 else Polynomial()
        rhs = prev * triad.down(n) + polys[n] * triad.stay(n) + polys[n + 1] * triad.up(n)
        out.append(mul_by_x(polys[n]) - rhs)
    return out

"""Machine check of the duality identity ``x^n = sum_k c_{n,k} Phi_k(x)``.

The expansion side never touches the forward recurrence: monomials are
expanded in the polynomial basis by back-substitution on the basis
coefficients, then compared against the triangle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from duality_triads.core import triangle
from duality_triads.errors import DegenerateBasis
from duality_triads.polynomials import Polynomial, triad_polynomials
from duality_triads.sequences import TriadSpec


def connection_coefficients(target: Polynomial, basis: Sequence[Polynomial]) -> list[Fraction]:
    """``a_k`` with ``target = sum_k a_k basis[k]``, by back-substitution.

    ``basis[k]`` must have degree exactly ``k`` and ``target`` degree at most
    ``len(basis) - 1``.

    Raises:
        DegenerateBasis: if the basis is not degree-graded.
    """
    for k, b in enumerate(basis):
        if b.degree != k:
            raise DegenerateBasis(f"basis polynomial {k} has degree {b.degree}")
    top = len(basis) - 1
    if target.degree is not None and target.degree > top:
        raise ValueError(f"degree {target.degree} target needs a basis up to that degree")
    rem = [target.coeff(j) for j in range(top + 1)]
    a = [Fraction(0)] * (top + 1)
    for k in range(top, -1, -1):
        coeffs = basis[k].coeffs
        a[k] = rem[k] / coeffs[k]
        if a[k]:
            for j in range(k + 1):
                rem[j] -= a[k] * coeffs[j]
    return a


def expand_in_basis(polys: Sequence[Polynomial], n: int) -> list[Fraction]:
    """Coefficients ``a_0..a_n`` with ``x^n = sum_k a_k polys[k]``.

    Raises:
        DegenerateBasis: if some ``polys[k]`` with ``k <= n`` is not of degree k.
    """
    if n < 0 or n >= len(polys):
        raise ValueError(f"need a basis up to degree {n}, have {len(polys)} polynomials")
    return connection_coefficients(Polynomial.monomial(n), polys[: n + 1])


@dataclass
class DualityReport:
    name: str
    max_index: int
    matches: list[bool] = field(default_factory=list)
    # (n, k, from triangle, from expansion)
    first_mismatch: tuple[int, int, Fraction, Fraction] | None = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None and len(self.matches) == self.max_index + 1


def verify_triad(triad: TriadSpec, max_index: int) -> DualityReport:
    """Compare the expansion of ``x^n`` with triangle row ``n`` for ``n <= max_index``."""
    polys = triad_polynomials(triad, max_index)
    tri = triangle(triad, max_index + 1)
    report = DualityReport(triad.label, max_index)
    for n in range(max_index + 1):
        expansion = expand_in_basis(polys, n)
        row = tri.rows[n]
        same = list(row) == expansion
        report.matches.append(same)
        if not same and report.first_mismatch is None:
            k = next(k for k in range(n + 1) if row[k] != expansion[k])
            report.first_mismatch = (n, k, row[k], expansion[k])
    return report

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ENTRIES
from duality_triads.catalog import builtin
from duality_triads.duality import (
    DualityReport,
    connection_coefficients,
    expand_in_basis,
    verify_triad,
)
from duality_triads.errors import DegenerateBasis
from duality_triads.polynomials import Polynomial, triad_polynomials

BASES = {e.name: triad_polynomials(e.triad, 20) for e in ENTRIES}
entry_names = st.sampled_from(sorted(BASES))


def combine(coeffs, basis) -> Polynomial:
    total = Polynomial()
    for a, p in zip(coeffs, basis):
        total = total + p * a
    return total


class TestExpandInBasis:
    def test_stirling(self) -> None:
        assert expand_in_basis(BASES["stirling2"], 3) == [0, 1, 3, 1]

    @pytest.mark.parametrize("name", sorted(BASES))
    def test_degree_zero(self, name) -> None:
        assert expand_in_basis(BASES[name], 0) == [1]

    def test_hermite(self) -> None:
        assert expand_in_basis(BASES["hermite"], 4) == [3, 0, 6, 0, 1]

    def test_degenerate(self) -> None:
        basis = [Polynomial.constant(1), Polynomial.from_coeffs([1, 0, 1])]
        with pytest.raises(DegenerateBasis):
            expand_in_basis(basis, 1)

    def test_basis_too_short(self) -> None:
        with pytest.raises(ValueError):
            expand_in_basis(BASES["pascal"][:3], 3)

    @given(name=entry_names, n=st.integers(0, 20))
    def test_round_trip_at_points(self, name, n) -> None:
        basis = BASES[name]
        coeffs = expand_in_basis(basis, n)
        for x in range(-3, 4):
            assert sum(a * p(x) for a, p in zip(coeffs, basis)) == Fraction(x) ** n

    @given(name=entry_names, n=st.integers(0, 12), data=st.data())
    def test_uniqueness(self, name, n, data) -> None:
        basis = BASES[name]
        coeffs = expand_in_basis(basis, n)
        k = data.draw(st.integers(0, n))
        bumped = list(coeffs)
        bumped[k] += 1
        assert combine(coeffs, basis) == Polynomial.monomial(n)
        assert combine(bumped, basis) != Polynomial.monomial(n)


class TestConnectionCoefficients:
    @given(coeffs=st.lists(st.integers(-9, 9), min_size=1, max_size=8), name=entry_names)
    def test_recovers_combination(self, coeffs, name) -> None:
        basis = BASES[name][: len(coeffs)]
        target = combine(coeffs, basis)
        assert connection_coefficients(target, basis) == coeffs

    def test_target_too_high(self) -> None:
        with pytest.raises(ValueError):
            connection_coefficients(Polynomial.monomial(3), BASES["pascal"][:2])


class TestVerifyTriad:
    def test_pascal(self) -> None:
        assert verify_triad(builtin("pascal").triad, 10).ok

    def test_tchebychev(self) -> None:
        report = verify_triad(builtin("tchebychev").triad, 12)
        assert report.ok and report.matches == [True] * 13

    def test_laguerre(self) -> None:
        assert verify_triad(builtin("laguerre").triad, 10).ok

    def test_report_name(self) -> None:
        report = verify_triad(builtin("hermite").triad, 0)
        assert isinstance(report, DualityReport)
        assert report.name == "hermite" and report.max_index == 0 and report.ok

    def test_mismatch_recorded(self, monkeypatch) -> None:
        from duality_triads import duality

        real = duality.expand_in_basis

        def corrupt(polys, n):
            out = real(polys, n)
            if n == 3:
                out[1] += 1
            return out

        monkeypatch.setattr(duality, "expand_in_basis", corrupt)
        report = verify_triad(builtin("stirling2").triad, 5)
        assert not report.ok
        assert report.matches == [True, True, True, False, True, True]
        assert report.first_mismatch == (3, 1, 1, 2)

from __future__ import annotations

from fractions import Fraction
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ENTRIES
from duality_triads.catalog import builtin
from duality_triads.core import (
    ConnectionTriangle,
    matrix_power,
    matrix_power_entry,
    row_sums,
    state_vectors,
    step_row,
    transition_matrix,
    triangle,
)
from duality_triads.errors import IndexBeyondExplicitList
from duality_triads.sequences import TriadSpec
from reference_triangles import DISPLAYED_X

PASCAL = builtin("pascal").triad
STIRLING = builtin("stirling2").triad
HERMITE = builtin("hermite").triad
TCHEB = builtin("tchebychev").triad
LAGUERRE = builtin("laguerre").triad

entries = st.sampled_from(ENTRIES)


def ints(row):
    return [int(v) for v in row]


class TestStepRow:
    def test_pascal(self) -> None:
        assert ints(step_row(PASCAL, [Fraction(1), Fraction(1)])) == [1, 2, 1]

    @pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
    def test_from_row_zero(self, entry) -> None:
        t = entry.triad
        assert step_row(t, [Fraction(1)]) == (t.stay(0), t.up(0))

    def test_tchebychev_rows_three_to_four(self) -> None:
        row3 = [Fraction(v) for v in (0, 2, 0, 1)]
        assert ints(step_row(TCHEB, row3)) == [2, 0, 3, 0, 1]

    def test_explicit_list_exhausted(self) -> None:
        triad = TriadSpec.from_expressions("list:1,1", "1", "0")
        row = triangle(triad, 3).rows[-1]
        with pytest.raises(IndexBeyondExplicitList):
            step_row(triad, row)


class TestTriangle:
    def test_stirling_row5(self) -> None:
        assert ints(triangle(STIRLING, 6).rows[5]) == [0, 1, 15, 25, 10, 1]

    def test_hermite_row4(self) -> None:
        assert ints(triangle(HERMITE, 5).rows[4]) == [3, 0, 6, 0, 1]

    def test_laguerre_row4(self) -> None:
        # (-1)^k C(n-1,k-1) n!/k! at n = 4
        assert ints(triangle(LAGUERRE, 5).rows[4]) == [0, -24, 36, -12, 1]

    def test_single_row(self) -> None:
        assert triangle(PASCAL, 1).rows == ((Fraction(1),),)

    def test_rejects_empty(self) -> None:
        with pytest.raises(ValueError):
            triangle(PASCAL, 0)

    def test_ragged_shape_enforced(self) -> None:
        with pytest.raises(ValueError):
            ConnectionTriangle(((Fraction(1),), (Fraction(1),)))

    def test_entry_above_diagonal_is_zero(self) -> None:
        tri = triangle(STIRLING, 4)
        assert tri.entry(2, 3) == 0
        assert tri.entry(3, 2) == 3
        assert tri.max_index == 3

    @given(e=entries, n=st.integers(0, 25))
    def test_diagonal_is_product_of_up_weights(self, e, n) -> None:
        tri = triangle(e.triad, n + 1)
        assert tri.rows[n][n] == prod((e.triad.up(j) for j in range(n)), start=Fraction(1))

    def test_hermite_parity_zeros(self) -> None:
        tri = triangle(HERMITE, 31)
        for n, row in enumerate(tri.rows):
            for k, v in enumerate(row):
                if (n - k) % 2:
                    assert v == 0

    def test_signed_stirling_is_sign_flip(self) -> None:
        plain = triangle(STIRLING, 21)
        signed = triangle(builtin("stirling2_signed").triad, 21)
        for n in range(21):
            for k in range(n + 1):
                assert signed.rows[n][k] == (-1) ** (n - k) * plain.rows[n][k]


class TestTransitionMatrix:
    def test_tchebychev(self) -> None:
        x = transition_matrix(TCHEB, 3)
        assert x.main == (0, 0, 0) and x.sub == (1, 1) and x.super == (1, 1)

    def test_stirling(self) -> None:
        x = transition_matrix(STIRLING, 4)
        assert x.main == (0, 1, 2, 3) and x.super == (1, 1, 1) and x.sub == (0, 0, 0)

    def test_hermite(self) -> None:
        x = transition_matrix(HERMITE, 4)
        assert x.sub == (1, 2, 3) and x.main == (0, 0, 0, 0) and x.super == (1, 1, 1)

    @pytest.mark.parametrize("name", sorted(DISPLAYED_X))
    def test_displayed_blocks(self, name) -> None:
        dense = transition_matrix(builtin(name).triad, 4).to_dense()
        assert [ints(r) for r in dense] == DISPLAYED_X[name]

    def test_band_structure(self) -> None:
        x = transition_matrix(LAGUERRE, 6)
        for r in range(6):
            for c in range(6):
                if abs(r - c) > 1:
                    assert x.entry(r, c) == 0


class TestMatrixPowerEntry:
    def test_tchebychev_return_to_ground(self) -> None:
        # only path: up then down, weight i_0 d_1
        assert matrix_power_entry(TCHEB, 2, 0, 0) == 1

    def test_tchebychev_level_one(self) -> None:
        # 1->2->1 and 1->0->1
        assert matrix_power_entry(TCHEB, 2, 1, 1) == 2

    @given(e=entries, k=st.integers(0, 6), l=st.integers(0, 6))
    def test_zero_steps_is_identity(self, e, k, l) -> None:
        assert matrix_power_entry(e.triad, 0, k, l) == (1 if k == l else 0)

    @given(e=entries, n=st.integers(0, 12), data=st.data())
    def test_first_row_is_triangle(self, e, n, data) -> None:
        k = data.draw(st.integers(0, n))
        assert matrix_power_entry(e.triad, n, 0, k) == triangle(e.triad, n + 1).rows[n][k]

    @given(e=entries, n=st.integers(0, 6), k=st.integers(0, 5), extra=st.integers(1, 6), data=st.data())
    def test_truncation_does_not_matter(self, e, n, k, extra, data) -> None:
        l = data.draw(st.integers(0, k + n))
        tight = matrix_power(transition_matrix(e.triad, k + n + 1), n)
        loose = matrix_power(transition_matrix(e.triad, k + n + 1 + extra), n)
        assert tight[k][l] == loose[k][l] == matrix_power_entry(e.triad, n, k, l)

    def test_unreachable_level(self) -> None:
        assert matrix_power_entry(PASCAL, 2, 0, 5) == 0


class TestRowDynamics:
    @pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
    def test_state_vectors_match_recurrence(self, entry) -> None:
        N = 30
        tri = triangle(entry.triad, N + 1)
        states = state_vectors(entry.triad, N, size=N + 1)
        for n in range(N + 1):
            assert tuple(states[n][: n + 1]) == tri.rows[n]
            assert all(v == 0 for v in states[n][n + 1 :])

    @pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
    def test_dense_power_first_row(self, entry) -> None:
        N = 12
        tri = triangle(entry.triad, N + 1)
        x = transition_matrix(entry.triad, N + 1)
        for n in range(N + 1):
            assert tuple(matrix_power(x, n)[0][: n + 1]) == tri.rows[n]


class TestRowSums:
    def test_pascal(self) -> None:
        assert ints(row_sums(triangle(PASCAL, 5))) == [1, 2, 4, 8, 16]

    def test_stirling_bell_numbers(self) -> None:
        assert ints(row_sums(triangle(STIRLING, 5))) == [1, 1, 2, 5, 15]

    def test_hermite(self) -> None:
        assert ints(row_sums(triangle(HERMITE, 5))) == [1, 1, 2, 4, 10]

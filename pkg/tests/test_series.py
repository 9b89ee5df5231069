import pytest
from hypothesis import given, strategies as st

from mzvodd.series import (IntSeries, bk_coefficient, bk_coefficients, bk_rows, compare_rank_to_bk,
                           period_dimension_series, series_O, series_S)

import oracle


def test_O_and_S_coefficients():
    assert series_O(12).coeffs[:12] == (0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1)
    S = series_S(30)
    assert [S[n] for n in range(31)] == [oracle.s_coeff(n) for n in range(31)]
    assert S[12] == 1 and S[22] == 1 and S[24] == 2


def test_bk_rows_match_expansion():
    O, S = series_O(40), series_S(40)
    rows = bk_rows(40, 4)
    assert rows[0] == IntSeries.constant(1, 40)
    assert rows[1] == O
    assert rows[2] == O * O - S
    assert rows[3] == O ** 3 - O * S * 2
    assert rows[4] == O ** 4 - O * O * S * 3 + S * S


def test_bk_known_values():
    assert bk_coefficient(12, 2) == 3
    assert bk_coefficient(15, 3) == 8
    assert bk_coefficient(18, 4) == 17
    assert bk_coefficients(30, 4)[4][24] == 64


def test_period_dimension_series():
    assert period_dimension_series(2, 30) == series_S(30)
    assert period_dimension_series(4, 40)[24] == 7
    assert period_dimension_series(3, 40)[15] == 1
    with pytest.raises(ValueError):
        period_dimension_series(1)


def test_rank_comparison():
    res = compare_rank_to_bk(15, 3)
    assert (res["rank"], res["bk"], res["equal"]) == (8, 8, True)
    res = compare_rank_to_bk(20, 4)
    assert res["inequality"] and res["equal"]


def test_series_truncation_and_inverse():
    a = IntSeries([1, -1], 10)
    assert a.inverse() == IntSeries([1] * 11, 10)
    assert (a * a.inverse()) == IntSeries.constant(1, 10)
    with pytest.raises(ValueError):
        IntSeries([0, 1], 5).inverse()


@given(st.integers(0, 40), st.integers(0, 4))
def test_O_powers_count_compositions(N, r):
    assert (series_O(40) ** r)[N] == oracle.o_power_coeff(N, r)

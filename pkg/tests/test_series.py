"""Power series, product expansion and exponent extraction."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from x3top.core.series import (
    PowerSeries,
    loop_space_dims,
    loop_space_ranks,
    pbw_extract,
    pbw_extract_log,
    series_from_product,
)


def test_loop_space_recurrence():
    h = loop_space_dims(8)
    assert [int(c) for c in h.coefficients] == [1, 3, 8, 21, 55, 144, 377, 987, 2584]


def test_product_reproduces_loop_space_dims():
    # r_1..r_5 reproduce 1, 3, 8, 21, 55, 144 through degree 5
    s = series_from_product({1: 3, 3: 5, 5: 24}, {2: 5, 4: 10}, 5)
    assert [int(c) for c in s.coefficients] == [1, 3, 8, 21, 55, 144]


def test_empty_product_is_one():
    s = series_from_product({}, {}, 4)
    assert [int(c) for c in s.coefficients] == [1, 0, 0, 0, 0]


def test_square_factor():
    s = series_from_product({1: 2}, {}, 3)
    assert [int(c) for c in s.coefficients] == [1, 2, 1, 0]


def test_extract_loop_space_ranks():
    r = loop_space_ranks(6)
    assert r == {1: 3, 2: 5, 3: 5, 4: 10, 5: 24, 6: 55}


def test_degree_six_exponent_by_hand_oracle():
    # independent derivation: log(1/(1-3z+z^2)) = sum (a^m + b^m)/m z^m
    # with a+b = 3, ab = 1; power sums satisfy p_m = 3p_{m-1} - p_{m-2}
    p = [None, 3, 7]
    for _ in range(6):
        p.append(3 * p[-1] - p[-2])
    L6 = Fraction(p[6], 6)
    r = loop_space_ranks(6)
    # degree-6 log coefficient: -r1/6 - r3/2 + r2/3 + r6
    r6 = L6 + Fraction(r[1], 6) + Fraction(r[3], 2) - Fraction(r[2], 3)
    assert r6 == 55 == r[6]
    # the recurrence-consistent value differs from the sometimes-quoted 352
    assert r6 != 352


def test_log_oracle_agrees_with_division():
    series = loop_space_dims(8)
    odd, even = pbw_extract(series)
    by_log = pbw_extract_log(series)
    for n in range(1, 9):
        assert by_log[n] == (odd | even)[n]


def test_extract_requires_unit_constant():
    with pytest.raises(ValueError):
        pbw_extract(PowerSeries.from_coeffs([0, 1], 1))


def test_extract_rejects_non_integral():
    # 1 + z + z^2 forces r_2 = -1/2... actually r_1=1 then remaining
    # (1+z+z^2)/(1+z) = 1 + z^2/(1+z): coefficient z^2 = +1 -> r_2 = 1,
    # but degree 3 coefficient goes negative; use a series built to fail
    bad = PowerSeries.from_coeffs([1, 2, 0, 0], 3)  # (1+z)^2 has c2=1, not 0
    with pytest.raises(ValueError):
        pbw_extract(bad)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=4), min_size=6, max_size=6)
)
def test_round_trip_random_exponents(rs):
    odd = {1: rs[0], 3: rs[2], 5: rs[4]}
    even = {2: rs[1], 4: rs[3], 6: rs[5]}
    s = series_from_product(odd, even, 6)
    got_odd, got_even = pbw_extract(s)
    assert {n: int(v) for n, v in got_odd.items()} == {1: rs[0], 3: rs[2], 5: rs[4]}
    assert {n: int(v) for n, v in got_even.items()} == {2: rs[1], 4: rs[3], 6: rs[5]}


def test_series_arithmetic_exact():
    a = PowerSeries.from_coeffs([1, Fraction(1, 3), Fraction(2, 7)], 2)
    assert (a * a.reciprocal()).coefficients == (Fraction(1), Fraction(0), Fraction(0))


@settings(max_examples=40, deadline=None)
@given(st.fractions(), st.fractions())
def test_rational_exactness(a, b):
    if a and b:
        assert (a / b) * (b / a) == 1

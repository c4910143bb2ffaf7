import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gesselwalks.exact import (
    ClosedFormFamily,
    binom_general,
    catalan,
    conjectured_value,
    gessel_closed_form,
    pochhammer,
)
from oracles import GESSEL_NUMBERS


class TestBinomGeneral:
    def test_plain_binomial(self):
        assert binom_general(5, 2) == 10

    def test_negative_upper(self):
        assert binom_general(-1, 1) == -1

    def test_zero_factor(self):
        assert binom_general(0, 1) == 0

    def test_negative_lower_vanishes(self):
        assert binom_general(3, -1) == 0
        assert binom_general(-3, -2) == 0

    @given(st.integers(min_value=-12, max_value=-1), st.integers(min_value=0, max_value=12))
    def test_reflection(self, a, t):
        assert binom_general(a, t) == (-1) ** t * binom_general(-a + t - 1, t)

    @given(st.integers(min_value=0, max_value=20), st.integers(min_value=0, max_value=20))
    def test_matches_math_comb(self, a, t):
        assert binom_general(a, t) == math.comb(a, t)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(Fraction(5, 6), 0) == 1

    def test_single_factor(self):
        assert pochhammer(Fraction(1, 2), 1) == Fraction(1, 2)

    def test_two_factors(self):
        assert pochhammer(Fraction(5, 6), 2) == Fraction(55, 36)

    @pytest.mark.parametrize("q", [Fraction(1, 2), Fraction(5, 6), Fraction(5, 3)])
    @given(m=st.integers(min_value=0, max_value=10), n=st.integers(min_value=0, max_value=10))
    def test_multiplicative(self, q, m, n):
        assert pochhammer(q, m + n) == pochhammer(q, m) * pochhammer(q + m, n)


class TestCatalan:
    def test_values(self):
        assert catalan(0) == 1
        assert catalan(3) == 5
        assert catalan(7) == 429

    def test_binomial_difference(self):
        for n in range(31):
            assert catalan(n) == binom_general(2 * n, n) - binom_general(2 * n, n + 1)


class TestGesselClosedForm:
    def test_first_values(self):
        assert gessel_closed_form(0) == 1
        assert gessel_closed_form(1) == 2
        assert gessel_closed_form(2) == 11

    def test_full_frozen_list(self):
        for n, expected in enumerate(GESSEL_NUMBERS):
            value = gessel_closed_form(n)
            assert value.denominator == 1
            assert value == expected

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            gessel_closed_form(-1)


class TestConjecturedValue:
    def test_f201_at_one(self):
        assert conjectured_value(ClosedFormFamily.F201, None, 1) == 1

    def test_hor_k1_at_zero(self):
        assert conjectured_value(ClosedFormFamily.HOR, 1, 0) == 2

    def test_vert_k0_at_two(self):
        assert conjectured_value(ClosedFormFamily.VERT, 0, 2) == 2

    def test_undisplayed_k_rejected(self):
        with pytest.raises(ValueError):
            conjectured_value(ClosedFormFamily.VERT, 4, 1)
        with pytest.raises(ValueError):
            conjectured_value(ClosedFormFamily.HOR, -1, 1)
        with pytest.raises(ValueError):
            conjectured_value(ClosedFormFamily.F201, 0, 1)

    def test_vert_k0_is_catalan(self):
        for n in range(12):
            assert conjectured_value(ClosedFormFamily.VERT, 0, n) == catalan(n)

    def test_hor_k0_is_one(self):
        for n in range(12):
            assert conjectured_value(ClosedFormFamily.HOR, 0, n) == 1

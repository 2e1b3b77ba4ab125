from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qexact.laurent_series import LaurentSeries
from qexact.q_gadgets import (
    QProduct,
    binomial,
    f_q,
    one_minus_power,
    pochhammer,
    pochhammer_at,
    q_factorial,
    q_int,
    q_shifted_factorial,
)
from utils.errors import NonDivisibleError


def poly(*coeffs):
    return LaurentSeries.from_q_coefficients(list(coeffs))


def test_q_int_small_values():
    assert q_int(1) == poly(1)
    assert q_int(3) == poly(1, 1, 1)


def test_q_int_half_integer_needs_truncation():
    with pytest.raises(NonDivisibleError):
        q_int("3/2")
    # (1 - t^3)/(1 - t^2) = 1 + t^2 - t^3 + t^4 - t^5 + ...
    assert q_int("3/2", trunc=6) == LaurentSeries({0: 1, 2: 1, 3: -1, 4: 1, 5: -1}, trunc=6)


def test_q_int_rejects_nonpositive():
    with pytest.raises(NonDivisibleError):
        q_int(0)


def test_q_factorial_and_f_q():
    assert q_factorial(0) == LaurentSeries.one()
    assert q_factorial(3) == poly(1, 2, 2, 1)
    assert f_q(0) == LaurentSeries.one()
    assert f_q(1) == LaurentSeries.one()
    # [1]! [2]! = 1 + q
    assert f_q(3) == poly(1, 1)


def test_q_factorial_at_one_is_factorial():
    assert q_factorial(5).eval_at_one() == 120


def test_pochhammer():
    # (q;q)_2 = (1 - q)(1 - q^2)
    assert q_shifted_factorial(2) == poly(1, -1, -1, 1)
    assert pochhammer(LaurentSeries.monomial(2), 2) == q_shifted_factorial(2)
    assert pochhammer_at(1, 0) == LaurentSeries.one()
    with pytest.raises(ValueError):
        pochhammer(LaurentSeries.one(), -1)


def test_binomial_out_of_range_is_zero():
    assert binomial(3, 2) == 3
    assert binomial(2, 3) == 0
    assert binomial(-1, 0) == 0


def test_qproduct_cancels_before_expanding():
    product = QProduct().times_q_factorial(4).over_q_factorial(3)
    assert product.exact() == poly(1, 1, 1, 1)
    assert product.expand(4) == LaurentSeries({0: 1, 2: 1}, trunc=4)


def test_qproduct_expand_series():
    # 1/((1 - q)(1 - q^2))
    product = QProduct().times_one_minus(2, -1).times_one_minus(4, -1)
    assert product.expand(8) == LaurentSeries.from_q_coefficients([1, 1, 2, 2], trunc_q=4)


def test_qproduct_shift_and_scalar():
    product = QProduct().times_scalar(Fraction(1, 2)).times_q_power(2).times(poly(1, 1))
    assert product.exact() == LaurentSeries({4: Fraction(1, 2), 6: Fraction(1, 2)})
    assert product.expand(6) == LaurentSeries({4: Fraction(1, 2)}, trunc=6)


def test_qproduct_reciprocal_q_int():
    # 1/[2]_q = 1 - q + q^2 - ...
    assert QProduct().over_q_int(2).expand(8) == LaurentSeries({0: 1, 2: -1, 4: 1, 6: -1}, trunc=8)


def test_qproduct_zero_numerator():
    assert QProduct().times(LaurentSeries.zero()).expand(6) == LaurentSeries.zero(6)


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
def test_q_binomial_from_qproduct_is_a_polynomial(n, k):
    if k > n:
        return
    gaussian = QProduct().times_q_factorial(n).over_q_factorial(k).over_q_factorial(n - k).exact()
    assert gaussian.eval_at_one() == binomial(n, k)
    assert all(c > 0 for _, c in gaussian.items())


@given(st.integers(min_value=1, max_value=10))
def test_one_minus_power_divides_q_int_numerator(k):
    assert (q_int(k) * one_minus_power(2)) == one_minus_power(2 * k)

# qexact/q_gadgets.py
"""q-Pochhammer symbols, q-integers, q-factorials and formal q-products."""
import math
from collections import Counter
from fractions import Fraction

from qexact.laurent_series import LaurentSeries, series_product, to_twice
from utils.errors import NonDivisibleError, SeriesZeroDivisionError

Q = LaurentSeries.monomial(2)
T = LaurentSeries.monomial(1)


def one_minus_power(twice_exp, coeff=1):
    """Returns 1 - coeff * t^{twice_exp}."""
    if twice_exp == 0:
        return LaurentSeries.constant(1 - coeff)
    return LaurentSeries({0: 1, twice_exp: -coeff})


def one_plus_power(twice_exp):
    """Returns 1 + t^{twice_exp}."""
    return one_minus_power(twice_exp, coeff=-1)


def binomial(n, k):
    """C(n, k), zero when k > n or n < 0."""
    if n < 0 or k < 0:
        return 0
    return math.comb(n, k)


def pochhammer(x, s, trunc=None):
    """
    q-Pochhammer symbol (x;q)_s = prod_{i=0}^{s-1} (1 - q^i x).
    Args:
        x (LaurentSeries): The base.
        s (int): Nonnegative length.
        trunc (int, optional): Keep only exponents below this HalfExp bound.
    Returns:
        LaurentSeries: (x;q)_s.
    """
    if s < 0:
        raise ValueError(f"Pochhammer length must be nonnegative, got {s}")
    factors = [LaurentSeries.one() - x.shift(2 * i) for i in range(s)]
    return series_product(factors, trunc)


def pochhammer_at(twice_exp, s, trunc=None):
    """(t^{twice_exp};q)_s for a monomial base; the fast path used by integrands."""
    return series_product((one_minus_power(twice_exp + 2 * i) for i in range(s)), trunc)


def q_shifted_factorial(h, trunc=None):
    """(q;q)_h."""
    return pochhammer_at(2, h, trunc)


def q_int(x, trunc=None):
    """
    q-integer [x]_q = (1 - q^x)/(1 - q) for x on the positive half-integer grid.
    Args:
        x (int | Fraction | str): The argument; 2x must be a positive integer.
        trunc (int, optional): HalfExp truncation, required when 2x is odd.
    Returns:
        LaurentSeries: Exact polynomial for integral x, truncated series otherwise.
    """
    twice = to_twice(x)
    if twice <= 0:
        raise NonDivisibleError(f"q-integer needs a positive argument, got {x}")
    if twice % 2 == 0:
        value = LaurentSeries({2 * j: 1 for j in range(twice // 2)})
        return value if trunc is None else value.truncate(trunc)
    if trunc is None:
        raise NonDivisibleError(f"[{x}]_q is not a polynomial in q^(1/2); pass a truncation order")
    return one_minus_power(twice) * one_minus_power(2).inverse(trunc)


def q_factorial(n):
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError(f"q-factorial needs n >= 0, got {n}")
    return series_product(q_int(i) for i in range(1, n + 1))


def f_q(l):
    """F_q(l) = prod_{i=1}^{l-1} [i]_q!, with F_q(0) = F_q(1) = 1."""
    return series_product(q_factorial(i) for i in range(1, l))


class QProduct:
    """
    A formal product  c * q^e * prod(numerator) / prod(denominator)  of polynomial factors.

    Factors of the form (1 - t^k) are kept as a signed multiset so that the many
    q-integers of a closed form cancel before anything is expanded.
    """

    def __init__(self):
        self.coeff = Fraction(1)
        self.shift = 0
        self.cyclotomic = Counter()
        self.numerator = []
        self.denominator = []

    # Each mutator returns self so closed forms read as one chain.

    def times_scalar(self, value):
        self.coeff *= Fraction(value)
        return self

    def times_q_power(self, q_exponent):
        self.shift += to_twice(q_exponent)
        return self

    def times(self, factor):
        self.numerator.append(factor)
        return self

    def divided_by(self, factor):
        self.denominator.append(factor)
        return self

    def times_one_minus(self, twice_exp, power=1):
        self.cyclotomic[twice_exp] += power
        return self

    def times_q_int(self, x, power=1):
        twice = to_twice(x)
        if twice <= 0:
            raise NonDivisibleError(f"q-integer needs a positive argument, got {x}")
        self.cyclotomic[twice] += power
        self.cyclotomic[2] -= power
        return self

    def over_q_int(self, x):
        return self.times_q_int(x, power=-1)

    def times_q_factorial(self, n, power=1):
        for i in range(2, n + 1):
            self.times_q_int(i, power)
        return self

    def over_q_factorial(self, n):
        return self.times_q_factorial(n, power=-1)

    def times_f_q(self, l, power=1):
        for i in range(1, l):
            self.times_q_factorial(i, power)
        return self

    def over_f_q(self, l):
        return self.times_f_q(l, power=-1)

    def times_q_shifted_factorial(self, h, power=1):
        for i in range(1, h + 1):
            self.cyclotomic[2 * i] += power
        return self

    def over_q_shifted_factorial(self, h):
        return self.times_q_shifted_factorial(h, power=-1)

    def _split(self):
        num = [one_minus_power(k) for k, p in sorted(self.cyclotomic.items()) if p > 0 for _ in range(p)]
        den = [one_minus_power(k) for k, p in sorted(self.cyclotomic.items()) if p < 0 for _ in range(-p)]
        return num + self.numerator, den + self.denominator

    def expand(self, trunc):
        """
        Expands the product as a series modulo t^{trunc}.
        Args:
            trunc (int): HalfExp truncation of the result.
        Returns:
            LaurentSeries: The expansion, with truncation exactly trunc.
        """
        num, den = self._split()
        if any(f.is_zero() for f in num):
            return LaurentSeries.zero(trunc)
        if any(f.is_zero() for f in den):
            raise SeriesZeroDivisionError("Zero factor in the denominator of a q-product")
        num_val = sum(f.valuation for f in num)
        den_val = sum(f.valuation for f in den)
        total_shift = self.shift + num_val - den_val
        precision = trunc - total_shift
        if precision <= 0:
            return LaurentSeries.zero(trunc)
        num_unit = series_product((f.shift(-f.valuation) for f in num), precision)
        den_unit = series_product((f.shift(-f.valuation) for f in den), precision)
        unit = num_unit * den_unit.inverse(precision)
        return unit.shift(total_shift).scale(self.coeff).truncate(trunc)

    def exact(self):
        """Evaluates the product as an exact Laurent polynomial (the division must be exact)."""
        num, den = self._split()
        value = series_product(num).shift(self.shift).scale(self.coeff)
        divisor = series_product(den)
        return value if divisor == LaurentSeries.one() else value.exact_div(divisor)

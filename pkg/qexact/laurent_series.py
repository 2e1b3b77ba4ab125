# qexact/laurent_series.py
"""Exact Laurent polynomials and truncated power series in t = q^{1/2}.

Exponents are stored as integers counting halves of a q-exponent (a HalfExp),
so q^{3/2} is t^3 and q^{-1} is t^{-2}. Coefficients are Python ints or
fractions.Fraction. A series may carry a truncation bound: every term with
exponent >= trunc is unknown and never stored.
"""
import json
from fractions import Fraction

from utils.errors import (
    InexactDivisionError,
    OffGridExponentError,
    SeriesZeroDivisionError,
    TruncatedSeriesError,
)

HalfExp = int


def to_twice(q_exponent):
    """
    Converts an exponent of q (int, Fraction or 'a/b' string) to a HalfExp.
    Args:
        q_exponent (int | Fraction | str): Exponent of q on the half-integer grid.
    Returns:
        int: Twice the exponent.
    """
    doubled = Fraction(q_exponent) * 2
    if doubled.denominator != 1:
        raise OffGridExponentError(f"Exponent {q_exponent} is not on the half-integer grid")
    return int(doubled)


def from_twice(twice):
    """Returns the q-exponent (as Fraction) of a HalfExp."""
    return Fraction(twice, 2)


def _coerce(coeff):
    if isinstance(coeff, int):
        return coeff
    coeff = Fraction(coeff)
    return coeff.numerator if coeff.denominator == 1 else coeff


def _divide(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _coerce(Fraction(a) / b)


def _min_bound(*bounds):
    known = [b for b in bounds if b is not None]
    return min(known) if known else None


class LaurentSeries:
    """Immutable sparse Laurent series over the rationals, in the variable t = q^{1/2}."""

    __slots__ = ("_terms", "_trunc")

    def __init__(self, terms=None, trunc=None):
        """
        Args:
            terms (dict | iterable, optional): Mapping (or pairs) HalfExp -> coefficient.
                Repeated exponents are summed.
            trunc (int, optional): Truncation bound in HalfExp units. None means exact.
        """
        collected = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, coeff in items:
                exp = int(exp)
                if trunc is not None and exp >= trunc:
                    continue
                collected[exp] = collected.get(exp, 0) + _coerce(coeff)
        self._terms = {e: _coerce(c) for e, c in sorted(collected.items()) if c}
        self._trunc = None if trunc is None else int(trunc)

    @classmethod
    def _build(cls, raw, trunc):
        # raw may hold zero coefficients and unsorted keys, but no exponent >= trunc
        series = cls.__new__(cls)
        series._terms = {e: _coerce(c) for e, c in sorted(raw.items()) if c}
        series._trunc = trunc
        return series

    # --- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, trunc=None):
        return cls({}, trunc)

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def monomial(cls, twice_exp, coeff=1):
        """Returns coeff * t^{twice_exp}."""
        return cls({twice_exp: coeff})

    @classmethod
    def q_power(cls, q_exponent, coeff=1):
        """Returns coeff * q^{q_exponent} for an exponent on the half grid."""
        return cls({to_twice(q_exponent): coeff})

    @classmethod
    def from_q_coefficients(cls, coeffs, trunc_q=None):
        """
        Builds c_0 + c_1 q + c_2 q^2 + ... from a coefficient list.
        Args:
            coeffs (list): Coefficients of q^0, q^1, ...
            trunc_q (int, optional): Truncation order in q (the result is mod q^{trunc_q}).
        """
        trunc = None if trunc_q is None else 2 * trunc_q
        return cls({2 * i: c for i, c in enumerate(coeffs)}, trunc)

    # --- accessors ----------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def trunc(self):
        return self._trunc

    @property
    def is_exact(self):
        return self._trunc is None

    @property
    def valuation(self):
        """Smallest stored exponent, or None for a zero series."""
        return next(iter(self._terms), None)

    @property
    def degree(self):
        if not self._terms:
            return None
        return next(reversed(self._terms))

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1 and self._trunc is None

    def coefficient(self, twice_exp):
        if self._trunc is not None and twice_exp >= self._trunc:
            raise TruncatedSeriesError(f"Coefficient of t^{twice_exp} lies beyond truncation t^{self._trunc}")
        return self._terms.get(twice_exp, 0)

    def items(self):
        return self._terms.items()

    def _lower_bound(self):
        # a truncated zero is only known to have valuation >= trunc
        return self.valuation if self._terms else self._trunc

    # --- structural operations ----------------------------------------------

    def truncate(self, trunc):
        """Returns the series modulo t^{trunc} (never loosens an existing bound)."""
        bound = _min_bound(self._trunc, trunc)
        if bound == self._trunc:
            return self
        return LaurentSeries._build({e: c for e, c in self._terms.items() if e < bound}, bound)

    def shift(self, twice_exp):
        """Multiplies by t^{twice_exp}."""
        if twice_exp == 0:
            return self
        trunc = None if self._trunc is None else self._trunc + twice_exp
        return LaurentSeries._build({e + twice_exp: c for e, c in self._terms.items()}, trunc)

    def scale(self, coeff):
        coeff = _coerce(coeff)
        if coeff == 0:
            return LaurentSeries.zero(None if self._trunc is None else self._trunc)
        return LaurentSeries._build({e: c * coeff for e, c in self._terms.items()}, self._trunc)

    def dilate(self, factor):
        """Substitutes t -> t^{factor} (factor a positive integer)."""
        trunc = None if self._trunc is None else self._trunc * factor
        return LaurentSeries._build({e * factor: c for e, c in self._terms.items()}, trunc)

    def compress(self, factor):
        """Inverse of dilate: substitutes t^{factor} -> t. All exponents must be multiples of factor."""
        odd = [e for e in self._terms if e % factor]
        if odd:
            raise OffGridExponentError(f"Exponents {odd[:3]} are not multiples of {factor}")
        trunc = None if self._trunc is None else -(-self._trunc // factor)
        return LaurentSeries._build({e // factor: c for e, c in self._terms.items()}, trunc)

    # --- ring operations ----------------------------------------------------

    def _as_series(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentSeries.constant(other)
        return None

    def __add__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        trunc = _min_bound(self._trunc, other._trunc)
        raw = {}
        for source in (self._terms, other._terms):
            for e, c in source.items():
                if trunc is None or e < trunc:
                    raw[e] = raw.get(e, 0) + c
        return LaurentSeries._build(raw, trunc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries._build({e: -c for e, c in self._terms.items()}, self._trunc)

    def __sub__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if (not self._terms and self._trunc is None) or (not other._terms and other._trunc is None):
            return LaurentSeries.zero()

        candidates = []
        if self._trunc is not None:
            candidates.append(self._trunc + other._lower_bound())
        if other._trunc is not None:
            candidates.append(other._trunc + self._lower_bound())
        trunc = min(candidates) if candidates else None

        raw = {}
        right = list(other._terms.items())
        if right:
            lowest = right[0][0]
            for e1, c1 in self._terms.items():
                if trunc is not None and e1 + lowest >= trunc:
                    break
                for e2, c2 in right:
                    e = e1 + e2
                    if trunc is not None and e >= trunc:
                        break
                    raw[e] = raw.get(e, 0) + c1 * c2
        return LaurentSeries._build(raw, trunc)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Only nonnegative integer powers are supported, got {exponent}")
        result = LaurentSeries.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        return self._trunc == other._trunc and self._terms == other._terms

    def __hash__(self):
        return hash((tuple(self._terms.items()), self._trunc))

    # --- division -----------------------------------------------------------

    def exact_div(self, divisor):
        """
        Exact division of Laurent polynomials.
        Args:
            divisor (LaurentSeries): Nonzero exact divisor.
        Returns:
            LaurentSeries: The quotient. Raises InexactDivisionError on a nonzero remainder.
        """
        if self._trunc is not None or divisor._trunc is not None:
            raise TruncatedSeriesError("exact_div needs exact Laurent polynomials")
        if not divisor._terms:
            raise SeriesZeroDivisionError("Division by the zero polynomial")
        if not self._terms:
            return LaurentSeries.zero()

        num_val, den_val = self.valuation, divisor.valuation
        remainder = [0] * (self.degree - num_val + 1)
        for e, c in self._terms.items():
            remainder[e - num_val] = c
        den_terms = [(e - den_val, c) for e, c in divisor._terms.items()]
        den_len = den_terms[-1][0] + 1
        if len(remainder) < den_len:
            raise InexactDivisionError(f"Divisor of degree {den_len - 1} exceeds dividend degree {len(remainder) - 1}")
        lead = den_terms[-1][1]

        quotient = {}
        for i in range(len(remainder) - den_len, -1, -1):
            top = remainder[i + den_len - 1]
            if not top:
                continue
            factor = _divide(top, lead)
            quotient[i] = factor
            for j, c in den_terms:
                remainder[i + j] -= factor * c
        if any(remainder):
            raise InexactDivisionError("Nonzero remainder in exact polynomial division")
        shift = num_val - den_val
        return LaurentSeries._build({i + shift: c for i, c in quotient.items()}, None)

    def inverse(self, trunc):
        """
        Series inverse b with self*b = 1 modulo t^{trunc}.
        Args:
            trunc (int): Requested precision (HalfExp) of the product self*b.
        Returns:
            LaurentSeries: b, with valuation -valuation(self). Exact for exact monomials.
        """
        if not self._terms:
            raise SeriesZeroDivisionError("Cannot invert a series that is zero up to its truncation")
        v = self.valuation
        if self.is_monomial():
            c = self._terms[v]
            return LaurentSeries._build({-v: _divide(1, c)}, None)

        precision = trunc if self._trunc is None else min(trunc, self._trunc - v)
        if precision <= 0:
            return LaurentSeries.zero(precision - v)
        unit = [(e - v, c) for e, c in self._terms.items() if e - v < precision]
        lead = unit[0][1]
        tail = unit[1:]
        inv = [0] * precision
        inv[0] = _divide(1, lead)
        for k in range(1, precision):
            acc = 0
            for j, c in tail:
                if j > k:
                    break
                w = inv[k - j]
                if w:
                    acc += c * w
            if acc:
                inv[k] = -acc if lead == 1 else _coerce(Fraction(-acc) / lead)
        return LaurentSeries._build({k - v: c for k, c in enumerate(inv)}, precision - v)

    # --- evaluation / serialization -----------------------------------------

    def eval_at_one(self):
        """Sum of coefficients (the value at q = 1). Raises TruncatedSeriesError if truncated."""
        if self._trunc is not None:
            raise TruncatedSeriesError(f"Cannot evaluate a series truncated at t^{self._trunc} at q = 1")
        return Fraction(sum(self._terms.values()))

    def to_json(self):
        payload = {"terms": [[e, str(c)] for e, c in self._terms.items()]}
        if self._trunc is not None:
            payload["trunc_twice"] = self._trunc
        return payload

    @classmethod
    def from_json(cls, payload):
        """Accepts the dict form produced by to_json, a bare term list, or a JSON string."""
        if isinstance(payload, str):
            payload = json.loads(payload)
        if isinstance(payload, list):
            payload = {"terms": payload}
        terms = [(int(e), Fraction(c)) for e, c in payload.get("terms", [])]
        return cls(terms, payload.get("trunc_twice"))

    def __str__(self):
        pieces = []
        for e, c in self._terms.items():
            power = _format_power(e)
            if not power:
                body = str(c)
            elif c == 1:
                body = power
            elif c == -1:
                body = f"-{power}"
            else:
                body = f"{c}*{power}" if isinstance(c, Fraction) else f"{c}{power}"
            pieces.append(body)
        text = " + ".join(pieces).replace("+ -", "- ") if pieces else "0"
        if self._trunc is not None:
            text += f" + O({_format_power(self._trunc) or '1'})"
        return text

    def __repr__(self):
        return f"LaurentSeries({self._terms!r}, trunc={self._trunc!r})"


def _format_power(twice_exp):
    if twice_exp == 0:
        return ""
    if twice_exp % 2 == 0:
        half = twice_exp // 2
        return "q" if half == 1 else f"q^{half}"
    return f"q^({twice_exp}/2)"


def series_inv(a, trunc):
    """Functional form of LaurentSeries.inverse."""
    return a.inverse(trunc)


def series_sum(parts, trunc=None):
    """
    Sums many series in one pass.
    Args:
        parts (iterable): LaurentSeries values.
        trunc (int, optional): Extra truncation bound applied to the total.
    Returns:
        LaurentSeries: The sum, truncated at the smallest bound seen.
    """
    bound = trunc
    raw = {}
    for part in parts:
        bound = _min_bound(bound, part.trunc)
        for e, c in part.items():
            if bound is None or e < bound:
                raw[e] = raw.get(e, 0) + c
    if bound is not None:
        raw = {e: c for e, c in raw.items() if e < bound}
    return LaurentSeries._build(raw, bound)


def series_product(factors, trunc=None):
    """
    Multiplies factors left to right, keeping only exponents below trunc.
    Factors are expected to have nonnegative valuation when trunc is given.
    """
    result = LaurentSeries.one() if trunc is None else LaurentSeries.one().truncate(trunc)
    for factor in factors:
        result = result * factor
        if result.is_zero() and result.is_exact:
            break
    return result


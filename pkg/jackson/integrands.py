# jackson/integrands.py
"""
Integrand families for Jackson integrals over [0,1]^n.

An integrand is evaluated at points x_i = t^{a_i} (a_i a HalfExp, t = q^{1/2}).
Every built-in family is a polynomial in the x_i with nonnegative powers, so at
lattice points q^{k} its value has nonnegative valuation.
"""
from abc import ABC, abstractmethod

from partitions.partition import as_composition
from qexact.laurent_series import LaurentSeries, series_product
from qexact.q_gadgets import one_minus_power, one_plus_power
from utils.errors import BadShapeError


class AbsConvention:
    """|x_j - x_i| at exact q-power points: the lower-exponent monomial is taken positive."""

    @staticmethod
    def split(a, b):
        """
        Args:
            a (int): HalfExp of the first point.
            b (int): HalfExp of the second point.
        Returns:
            tuple: (shift, unit) with |t^a - t^b| = t^shift * unit, unit = 1 - t^{|a-b|}.
        """
        return min(a, b), one_minus_power(abs(a - b))

    @staticmethod
    def difference(a, b):
        """|t^a - t^b| = t^{min(a,b)} (1 - t^{|a-b|}); zero when a == b."""
        shift, unit = AbsConvention.split(a, b)
        return unit.shift(shift)


class _Factors:
    """Accumulates a monomial t^shift and a list of factors with constant term 0 or 1."""

    def __init__(self):
        self.shift = 0
        self.factors = []

    def monomial(self, twice_exp):
        self.shift += twice_exp

    def one_minus(self, twice_exp, power=1):
        self.factors.extend([one_minus_power(twice_exp)] * power)

    def one_plus(self, twice_exp):
        self.factors.append(one_plus_power(twice_exp))

    def pochhammer(self, twice_exp, length):
        # (t^{twice_exp};q)_length
        for i in range(length):
            self.one_minus(twice_exp + 2 * i)

    def abs_difference(self, a, b, power=1):
        shift, unit = AbsConvention.split(a, b)
        self.shift += power * shift
        self.factors.extend([unit] * power)

    def collect(self, trunc):
        if trunc is None:
            return series_product(self.factors).shift(self.shift)
        if trunc <= self.shift:
            return LaurentSeries.zero(trunc)
        return series_product(self.factors, trunc - self.shift).shift(self.shift).truncate(trunc)


def _abs_vandermonde(factors, exps, power):
    for i in range(len(exps)):
        for j in range(i + 1, len(exps)):
            factors.abs_difference(exps[i], exps[j], power)


class BaseIntegrand(ABC):
    """
    Abstract base class for integrands.
    All concrete families must inherit from this class and implement evaluate.
    """

    def __init__(self, name, arity, params=None, declared_symmetric=True, declared_vanishing=True,
                 blocks=None, valuation_bound=0):
        """
        Args:
            name (str): Family name, e.g. 'multipage'.
            arity (int): Number of integration variables.
            params (dict, optional): JSON-friendly family parameters.
            declared_symmetric (bool): Symmetric within each block.
            declared_vanishing (bool): Vanishes when two coordinates of one block coincide.
            blocks (tuple, optional): Block sizes, summing to arity. Defaults to one block.
            valuation_bound (int, optional): Lower bound (HalfExp) for the valuation of the
                value at any lattice point; None means unknown.
        """
        self.name = name
        self.arity = arity
        self.params = params or {}
        self.declared_symmetric = declared_symmetric
        self.declared_vanishing = declared_vanishing
        self.blocks = tuple(blocks) if blocks is not None else (arity,)
        self.valuation_bound = valuation_bound
        if sum(self.blocks) != arity:
            raise BadShapeError(f"Blocks {self.blocks} do not add up to arity {arity}")

    @abstractmethod
    def evaluate(self, exps, trunc=None):
        """
        Value at x_i = t^{exps[i]}.
        Args:
            exps (tuple): HalfExp exponents, one per variable.
            trunc (int, optional): HalfExp truncation of the value.
        Returns:
            LaurentSeries: The value, exact when trunc is None.
        """
        pass

    def _check_arity(self, exps):
        if len(exps) != self.arity:
            raise BadShapeError(f"{self.name} takes {self.arity} points, got {len(exps)}")

    def get_name(self):
        return self.name

    def get_params(self):
        return self.params

    def __str__(self):
        return f"Integrand: {self.name}, Params: {self.params}"


IntegrandSpec = BaseIntegrand


class MultiPageIntegrand(BaseIntegrand):
    """prod_k ( prod_i x_i^{r_k} (q x_i;q)_{s_k} prod_{i<j} |x_j - x_i| )."""

    def __init__(self, n, rvec, svec):
        rvec, svec = as_composition(rvec), as_composition(svec)
        if len(rvec) != len(svec) or len(rvec) < 1:
            raise BadShapeError(f"r and s must have the same positive length, got {rvec} and {svec}")
        if n < 1:
            raise BadShapeError(f"Need n >= 1, got {n}")
        super().__init__("multipage", n, {"n": n, "r": list(rvec), "s": list(svec)})
        self.n = n
        self.rvec = rvec
        self.svec = svec

    def evaluate(self, exps, trunc=None):
        self._check_arity(exps)
        factors = _Factors()
        factors.monomial(self.rvec.total * sum(exps))
        for s in self.svec:
            for a in exps:
                factors.pochhammer(a + 2, s)
        _abs_vandermonde(factors, exps, len(self.rvec))
        return factors.collect(trunc)


class SelbergIntegrand(BaseIntegrand):
    """prod_i x_i^r (q x_i;q)_s prod_{i<j} |x_j - x_i|^power."""

    def __init__(self, n, r, s, power):
        if n < 1 or r < 0 or s < 0 or power < 0:
            raise BadShapeError(f"Bad single-page parameters n={n}, r={r}, s={s}, power={power}")
        super().__init__(
            "single", n, {"n": n, "r": r, "s": s, "m": power},
            declared_vanishing=power >= 1 or n == 1,
        )
        self.n = n
        self.r = r
        self.s = s
        self.power = power

    def evaluate(self, exps, trunc=None):
        self._check_arity(exps)
        factors = _Factors()
        factors.monomial(self.r * sum(exps))
        for a in exps:
            factors.pochhammer(a + 2, self.s)
        _abs_vandermonde(factors, exps, self.power)
        return factors.collect(trunc)


class VariantIntegrand(BaseIntegrand):
    """
    x^r (qx;q)_s |Δ(x)|^2 times one of four pair / point products:
      1: prod_{i<j} (1 - q^{s+1} x_i x_j)
      2: as 1, times prod_i (1 + q^{(s+1)/2} x_i)
      3: as 1, times prod_i (1 - q^{(s+1)/2} x_i)
      4: prod_{i<=j} (1 - q^{s+1} x_i x_j)
    """

    def __init__(self, which, n, r, s):
        if which not in (1, 2, 3, 4):
            raise BadShapeError(f"Variant must be 1..4, got {which}")
        if n < 1 or r < 0 or s < 0:
            raise BadShapeError(f"Bad variant parameters n={n}, r={r}, s={s}")
        super().__init__(f"variant{which}", n, {"n": n, "r": r, "s": s})
        self.which = which
        self.n = n
        self.r = r
        self.s = s

    def evaluate(self, exps, trunc=None):
        self._check_arity(exps)
        s = self.s
        factors = _Factors()
        factors.monomial(self.r * sum(exps))
        for a in exps:
            factors.pochhammer(a + 2, s)
            if self.which == 2:
                factors.one_plus(s + 1 + a)
            elif self.which == 3:
                factors.one_minus(s + 1 + a)
        for i, a in enumerate(exps):
            first = i if self.which == 4 else i + 1
            for b in exps[first:]:
                factors.one_minus(2 * (s + 1) + a + b)
        _abs_vandermonde(factors, exps, 2)
        return factors.collect(trunc)


class RationalIntegrand(BaseIntegrand):
    """
    Two-block integrand in x_1..x_n, y_1..y_m:
    prod x_i^r (q x_i;q)_l prod y_j^s (q y_j;q)_l prod_{i,j} (1 - q^{l+1} x_i y_j) |Δ(x)|^2 |Δ(y)|^2.
    """

    def __init__(self, n, m, l, r, s):
        if min(n, m, l, r, s) < 0 or n + m + l == 0:
            raise BadShapeError(f"Bad rational parameters n={n}, m={m}, l={l}, r={r}, s={s}")
        super().__init__(
            "rational", n + m, {"n": n, "m": m, "l": l, "r": r, "s": s}, blocks=(n, m)
        )
        self.n = n
        self.m = m
        self.l = l
        self.r = r
        self.s = s

    def evaluate(self, exps, trunc=None):
        self._check_arity(exps)
        xs, ys = tuple(exps[:self.n]), tuple(exps[self.n:])
        factors = _Factors()
        factors.monomial(self.r * sum(xs) + self.s * sum(ys))
        for a in xs + ys:
            factors.pochhammer(a + 2, self.l)
        for a in xs:
            for b in ys:
                factors.one_minus(2 * (self.l + 1) + a + b)
        _abs_vandermonde(factors, xs, 2)
        _abs_vandermonde(factors, ys, 2)
        return factors.collect(trunc)


class CallableIntegrand(BaseIntegrand):
    """Wraps a function exps -> LaurentSeries; brute force needs a declared valuation bound."""

    def __init__(self, func, arity, valuation_bound=None, name="custom", declared_symmetric=False,
                 declared_vanishing=False, blocks=None, params=None):
        super().__init__(
            name, arity, params, declared_symmetric=declared_symmetric,
            declared_vanishing=declared_vanishing, blocks=blocks, valuation_bound=valuation_bound,
        )
        self.func = func

    def evaluate(self, exps, trunc=None):
        self._check_arity(exps)
        value = self.func(tuple(exps))
        if not isinstance(value, LaurentSeries):
            value = LaurentSeries.constant(value)
        return value if trunc is None else value.truncate(trunc)


FAMILIES = ("multipage", "single", "variant1", "variant2", "variant3", "variant4", "rational")
FAMILY_ALIASES = {"qko": "multipage"}


def build_integrand(family, n, r=0, s=0, m=1, l=0):
    """
    Builds a built-in family from CLI-style parameters.
    Args:
        family (str): One of FAMILIES.
        n (int): Number of variables (first block for 'rational').
        r: Composition (multipage) or integer exponent.
        s: Composition (multipage) or integer.
        m (int): Power of |Δ| for 'single', second block size for 'rational'.
        l (int): Pochhammer length for 'rational'.
    Returns:
        BaseIntegrand: The integrand.
    """
    family = FAMILY_ALIASES.get(family, family)
    if family == "multipage":
        return MultiPageIntegrand(n, r, s)
    if family == "single":
        return SelbergIntegrand(n, int(r), int(s), m)
    if family.startswith("variant") and family[7:] in ("1", "2", "3", "4"):
        return VariantIntegrand(int(family[7:]), n, int(r), int(s))
    if family == "rational":
        return RationalIntegrand(n, m, l, int(r), int(s))
    raise ValueError(f"Unsupported integrand family: {family}")

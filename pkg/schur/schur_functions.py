# schur/schur_functions.py
"""Schur polynomials evaluated at q-power points."""
from dataclasses import dataclass
from functools import lru_cache

import config
from partitions.partition import enum_partitions
from qexact.laurent_series import LaurentSeries, series_product, series_sum, to_twice
from qexact.q_gadgets import QProduct, binomial, pochhammer_at, q_shifted_factorial
from schur.determinant import determinant
from utils.errors import NonConvergentError, TooLargeError
from utils.logger import logger


@dataclass(frozen=True)
class GeomPoints:
    """Points q^{e_1}, ..., q^{e_N}; exps are HalfExp values and must be distinct."""

    exps: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if len(set(exps)) != len(exps):
            raise ValueError(f"Geometric points must be distinct, got exponents {exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def from_q_exponents(cls, *q_exponents):
        return cls(tuple(to_twice(e) for e in q_exponents))

    @classmethod
    def principal(cls, count, start=0):
        """(q^start, q^{start+1}, ..., q^{start+count-1})."""
        return cls(tuple(2 * (start + i) for i in range(count)))

    def shifted(self, twice_exp):
        """Multiplies every point by t^{twice_exp}."""
        return GeomPoints(tuple(e + twice_exp for e in self.exps))

    def __len__(self):
        return len(self.exps)

    def __iter__(self):
        return iter(self.exps)


def _as_points(pts):
    return pts if isinstance(pts, GeomPoints) else GeomPoints(tuple(pts))


def vandermonde(exps):
    """prod_{i<j} (t^{e_i} - t^{e_j})."""
    factors = [
        LaurentSeries({exps[i]: 1, exps[j]: -1})
        for i in range(len(exps)) for j in range(i + 1, len(exps))
    ]
    return series_product(factors)


@lru_cache(maxsize=8192)
def _bialternant(parts, exps):
    size = len(exps)
    shifted = [part + size - 1 - j for j, part in enumerate(parts)]
    matrix = [[LaurentSeries.monomial(a * k) for k in shifted] for a in exps]
    return determinant(matrix).exact_div(vandermonde(exps))


def schur_at(lam, pts):
    """
    s_λ(q^{a_1}, ..., q^{a_N}) by the bialternant formula.
    Args:
        lam (Partition): Partition with length <= N.
        pts (GeomPoints | tuple): The points, as HalfExp exponents.
    Returns:
        LaurentSeries: Exact Laurent polynomial in t.
    """
    pts = _as_points(pts)
    parts = lam.padded(len(pts))
    if not pts.exps:
        return LaurentSeries.one()
    return _bialternant(parts, pts.exps)


def schur_ssyt_oracle(lam, pts):
    """
    Sum of monomials over semistandard tableaux of shape λ with entries in [N].
    Args:
        lam (Partition): Shape, |λ| <= config.SSYT_MAX_SIZE.
        pts (GeomPoints | tuple): At most config.SSYT_MAX_POINTS points.
    Returns:
        LaurentSeries: Same value as schur_at, by enumeration.
    """
    pts = _as_points(pts)
    if lam.size > config.SSYT_MAX_SIZE or len(pts) > config.SSYT_MAX_POINTS:
        raise TooLargeError(
            f"SSYT enumeration limited to |λ| <= {config.SSYT_MAX_SIZE} and N <= {config.SSYT_MAX_POINTS}, "
            f"got |λ| = {lam.size}, N = {len(pts)}"
        )
    lam.padded(len(pts))
    cells = [(i, j) for i, row in enumerate(lam.parts) for j in range(row)]
    filling = {}
    weights = {}

    def place(index, weight):
        if index == len(cells):
            weights[weight] = weights.get(weight, 0) + 1
            return
        i, j = cells[index]
        low = 0
        if j > 0:
            low = filling[(i, j - 1)]
        if i > 0:
            low = max(low, filling[(i - 1, j)] + 1)
        for value in range(low, len(pts)):
            filling[(i, j)] = value
            place(index + 1, weight + pts.exps[value])
        filling.pop((i, j), None)

    place(0, 0)
    return LaurentSeries(weights)


@lru_cache(maxsize=4096)
def _principal_spec(parts, n, s):
    frame = [part + n - 1 - i for i, part in enumerate(parts)]
    factors = [pochhammer_at(2 * (k + 1), s) for k in frame]
    factors += [
        LaurentSeries({2 * frame[j]: 1, 2 * frame[i]: -1})
        for i in range(n) for j in range(i + 1, n)
    ]
    denominator = series_product(q_shifted_factorial(h) for h in range(s, n + s))
    return series_product(factors).exact_div(denominator).shift(-2 * binomial(n, 3))


def principal_spec(lam, n, s):
    """
    s_λ(1, q, ..., q^{n+s-1}) through its closed product form.
    Args:
        lam (Partition): Partition with length <= n.
        n (int): Number of frame coordinates.
        s (int): Extra points beyond n.
    Returns:
        LaurentSeries: Exact polynomial in q.
    """
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    parts = lam.padded(n)
    if n == 0:
        return LaurentSeries.one()
    return _principal_spec(parts, n, s)


def _require_positive(exps, label):
    bad = [e for e in exps if e <= 0]
    if bad:
        raise NonConvergentError(f"{label} exponents must be positive for a formal expansion, got {bad}")


def littlewood_rhs(pts, trunc):
    """
    prod_i 1/(1 - x_i) prod_{i<j} 1/(1 - x_i x_j) at x_i = q^{a_i}, as a series mod t^{trunc}.
    """
    exps = _as_points(pts).exps
    _require_positive(exps, "Littlewood point")
    product = QProduct()
    for i, a in enumerate(exps):
        product.times_one_minus(a, power=-1)
        for b in exps[i + 1:]:
            product.times_one_minus(a + b, power=-1)
    return product.expand(trunc)


def cauchy_rhs(pts_x, pts_u, trunc):
    """prod_{i,j} 1/(1 - x_i u_j) at q-power points, as a series mod t^{trunc}."""
    combined = [a + b for a in _as_points(pts_x).exps for b in _as_points(pts_u).exps]
    _require_positive(combined, "Cauchy product")
    product = QProduct()
    for c in combined:
        product.times_one_minus(c, power=-1)
    return product.expand(trunc)


def schur_sum(pts, max_size, max_length, weight=None, trunc=None):
    """
    Sum_{|λ| <= max_size, len(λ) <= max_length} weight(λ) * s_λ(pts), truncated.
    Args:
        pts (GeomPoints | tuple): Evaluation points.
        max_size (int): Size bound of the enumeration.
        max_length (int): Length bound of the enumeration.
        weight (callable, optional): Partition -> LaurentSeries factor.
        trunc (int, optional): HalfExp truncation of the total.
    """
    pts = _as_points(pts)
    length = min(max_length, len(pts))
    terms = []
    for lam in enum_partitions(max_size, length):
        term = schur_at(lam, pts)
        if weight is not None:
            term = term * weight(lam)
        terms.append(term if trunc is None else term.truncate(trunc))
    logger.debug(f"Schur sum over {len(terms)} partitions at points {pts.exps}")
    return series_sum(terms, trunc)

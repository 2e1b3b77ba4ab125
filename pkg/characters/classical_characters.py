# characters/classical_characters.py
"""
Irreducible characters of the classical groups at q-power points.

Every character is a ratio of two alternants in x_i^{±w}. With x_i = q^{a_i/2}
(a_i a HalfExp) and w a half-integer, x_i^w = q^{a_i w / 2} may sit on the
quarter grid, so both determinants are formed in u = q^{1/4} and the exact
quotient is mapped back to t = q^{1/2} at the end.
"""
from dataclasses import dataclass
from enum import Enum

from partitions.partition import Partition
from qexact.laurent_series import LaurentSeries, series_product, to_twice
from schur.determinant import determinant
from utils.errors import DegenerateDenominatorError, LengthExceededError


class CharKind(Enum):
    C = "C"
    B = "B"
    D = "D"
    B_SPIN = "Bspin"
    D_SPIN = "Dspin"
    GL_RATIONAL = "GLrational"

    @classmethod
    def parse(cls, text):
        for kind in cls:
            if text in (kind.value, kind.name):
                return kind
        raise ValueError(f"Unsupported character kind: {text}")


@dataclass(frozen=True)
class SignedPointList:
    """Points x_i = q^{e_i / 2}; a negative exponent stands for a reciprocal point."""

    exps: tuple

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))

    @classmethod
    def from_q_exponents(cls, *q_exponents):
        return cls(tuple(to_twice(e) for e in q_exponents))

    def reciprocal(self, index):
        """The same list with x_index replaced by its inverse."""
        exps = list(self.exps)
        exps[index] = -exps[index]
        return SignedPointList(tuple(exps))

    def __len__(self):
        return len(self.exps)


def _as_signed(pts):
    return pts if isinstance(pts, SignedPointList) else SignedPointList(tuple(pts))


def _alternant_entry(a, weight_twice, sign):
    # x^w + sign * x^{-w} on the quarter grid
    e = a * weight_twice
    return LaurentSeries([(e, 1), (-e, sign)])


def _alternant(exps, weights_twice, sign):
    return determinant([[_alternant_entry(a, w, sign) for w in weights_twice] for a in exps])


def _gl_weights(lam, mu, size):
    if lam.length + mu.length > size:
        raise LengthExceededError(
            f"l(λ) + l(μ) = {lam.length + mu.length} exceeds the number of points {size}"
        )
    middle = size - lam.length - mu.length
    return lam.parts + (0,) * middle + tuple(-p for p in reversed(mu.parts))


# per kind: (numerator weight offset, denominator weight offset, sign); weights in halves
_ALTERNANT_SHAPES = {
    CharKind.C: (2, 2, -1),
    CharKind.B: (1, 1, -1),
    CharKind.D: (0, 0, 1),
    CharKind.B_SPIN: (2, 1, -1),
    CharKind.D_SPIN: (1, 0, 1),
}


def char_at(kind, lam, pts, mu=None):
    """
    Evaluates a classical (or rational GL) character at q-power points.
    Args:
        kind (CharKind): Which character family.
        lam (Partition): Highest weight data (length <= N).
        pts (SignedPointList | tuple): Exponents (HalfExp) of the points.
        mu (Partition, optional): Negative part for CharKind.GL_RATIONAL.
    Returns:
        LaurentSeries: Exact Laurent polynomial in t.
    """
    pts = _as_signed(pts)
    size = len(pts)
    if size == 0:
        if lam.length or (mu is not None and mu.length):
            raise LengthExceededError(f"Nonempty highest weight with no points: {lam}, {mu}")
        return LaurentSeries.one()

    if kind is CharKind.GL_RATIONAL:
        weights = _gl_weights(lam, mu or Partition(()), size)
        numerator = determinant([
            [LaurentSeries.monomial(2 * a * (w + size - 1 - j)) for j, w in enumerate(weights)]
            for a in pts.exps
        ])
        denominator = determinant([
            [LaurentSeries.monomial(2 * a * (size - 1 - j)) for j in range(size)] for a in pts.exps
        ])
    else:
        parts = lam.padded(size)
        num_offset, den_offset, sign = _ALTERNANT_SHAPES[kind]
        num_weights = [2 * (part + size - 1 - j) + num_offset for j, part in enumerate(parts)]
        den_weights = [2 * (size - 1 - j) + den_offset for j in range(size)]
        numerator = _alternant(pts.exps, num_weights, sign)
        denominator = _alternant(pts.exps, den_weights, sign)
        halved = kind is CharKind.D_SPIN or (kind is CharKind.D and parts[-1] > 0)
        if halved:
            numerator = numerator.scale(2)

    if denominator.is_zero():
        raise DegenerateDenominatorError(f"Weyl denominator of {kind.value} vanishes at points {pts.exps}")
    return numerator.exact_div(denominator).compress(2)


def weyl_denominator_product(kind, pts):
    """
    Product form of the denominator alternant used by char_at (an independent oracle).
    Args:
        kind (CharKind): C, B or D (spinor kinds share the B / D denominators).
        pts (SignedPointList | tuple): Exponents of the points.
    Returns:
        LaurentSeries: The denominator determinant, in t.
    """
    exps = _as_signed(pts).exps
    base = {CharKind.B_SPIN: CharKind.B, CharKind.D_SPIN: CharKind.D}.get(kind, kind)
    factors = []
    for i, a in enumerate(exps):
        if base is CharKind.C:
            factors.append(LaurentSeries([(2 * a, 1), (-2 * a, -1)]))
        elif base is CharKind.B:
            factors.append(LaurentSeries([(a, 1), (-a, -1)]))
        for b in exps[i + 1:]:
            factors.append(LaurentSeries([(2 * a, 1), (-2 * a, 1), (2 * b, -1), (-2 * b, -1)]))
    value = series_product(factors)
    if base is CharKind.D:
        value = value.scale(2)
    return value.compress(2)


def weyl_denominator(kind, pts):
    """The denominator alternant of char_at itself, in t."""
    exps = _as_signed(pts).exps
    _, den_offset, sign = _ALTERNANT_SHAPES[kind]
    size = len(exps)
    return _alternant(exps, [2 * (size - 1 - j) + den_offset for j in range(size)], sign).compress(2)


def spin_prefactor(pts):
    """prod_i (x_i^{1/2} + x_i^{-1/2}) in t; needs even exponents (integral q-powers)."""
    exps = _as_signed(pts).exps
    return series_product(LaurentSeries([(a, 1), (-a, 1)]) for a in exps).compress(2)

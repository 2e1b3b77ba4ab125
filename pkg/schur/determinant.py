# schur/determinant.py
"""
Determinants of matrices of exact Laurent polynomials in t, computed by sympy.

Each row is shifted by its lowest exponent so the entries become polynomials;
the determinant picks up the sum of the shifts as a monomial factor.
"""
import sympy as sp
from fractions import Fraction

import config
from qexact.laurent_series import LaurentSeries
from utils.errors import TruncatedSeriesError

T = sp.Symbol("t")
METHODS = ("berkowitz", "bareiss")


def to_sympy(series, shift=0):
    """t^{-shift} * series as a sympy polynomial expression in t."""
    if not series.is_exact:
        raise TruncatedSeriesError(f"Determinant entries must be exact, got a series truncated at t^{series.trunc}")
    return sp.Add(*(sp.Rational(c.numerator, c.denominator) * T ** (e - shift) for e, c in series.items()))


def from_sympy(expr, shift=0):
    """Converts a polynomial expression in t back to a LaurentSeries times t^{shift}."""
    poly = sp.Poly(sp.expand(expr), T)
    return LaurentSeries({
        exp + shift: Fraction(int(coeff.p), int(coeff.q)) for (exp,), coeff in poly.terms()
    })


def determinant(matrix, method=None):
    """
    Determinant of a square matrix of exact LaurentSeries entries.
    Args:
        matrix (list[list[LaurentSeries]]): Square matrix.
        method (str, optional): 'berkowitz' (division free) or 'bareiss' (fraction free).
            Defaults to berkowitz up to config.DET_BERKOWITZ_MAX rows and bareiss above.
    Returns:
        LaurentSeries: The determinant (1 for the empty matrix).
    """
    size = len(matrix)
    if size == 0:
        return LaurentSeries.one()
    if any(len(row) != size for row in matrix):
        raise ValueError(f"Determinant needs a square matrix, got {size} rows of lengths {[len(r) for r in matrix]}")
    if method is None:
        method = "berkowitz" if size <= config.DET_BERKOWITZ_MAX else "bareiss"
    if method not in METHODS:
        raise ValueError(f"Unsupported determinant method: {method}")

    shifts = []
    for row in matrix:
        nonzero = [entry.valuation for entry in row if not entry.is_zero()]
        if not nonzero:
            return LaurentSeries.zero()
        shifts.append(min(nonzero))
    rows = [[to_sympy(entry, shift) for entry in row] for row, shift in zip(matrix, shifts)]
    det = sp.Matrix(rows).det(method=method)
    return from_sympy(det, sum(shifts))

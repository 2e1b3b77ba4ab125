# characters/cauchy_identities.py
"""Cauchy-type sums of classical characters against Schur polynomials, as truncated series."""
import time

from characters.classical_characters import CharKind, SignedPointList, char_at, spin_prefactor
from harness.verify_report import VerifyReport
from partitions.partition import enum_partitions
from qexact.laurent_series import series_sum
from qexact.q_gadgets import QProduct, one_minus_power, one_plus_power
from schur.schur_functions import GeomPoints, schur_at
from utils.errors import BadShapeError, NonConvergentError
from utils.logger import logger

CAUCHY_KINDS = {
    "c": CharKind.C,
    "b": CharKind.B,
    "b-spin": CharKind.B_SPIN,
    "d": CharKind.D,
    "d-spin": CharKind.D_SPIN,
    "rational": CharKind.GL_RATIONAL,
}


def _positive_gap(gap, which):
    if gap <= 0:
        raise NonConvergentError(f"Cauchy sum '{which}' does not converge formally: valuation gap {gap} <= 0")
    return gap


def _classical_rhs(which, x_exps, u_exps, trunc):
    product = QProduct()
    for a in x_exps:
        for b in u_exps:
            product.times_one_minus(b + a, power=-1)
            product.times_one_minus(b - a, power=-1)
    for i, b in enumerate(u_exps):
        for c in u_exps[i + 1:]:
            product.times_one_minus(b + c)
        if which == "d":
            product.times_one_minus(2 * b)
        elif which == "b":
            product.times(one_plus_power(b))
        elif which == "d-spin":
            product.times(one_minus_power(b))
    if which in ("b-spin", "d-spin"):
        product.times(spin_prefactor(x_exps))
    return product.expand(trunc)


def _rational_rhs(x_exps, u_exps, v_exps, trunc):
    product = QProduct()
    for b in u_exps:
        for c in v_exps:
            product.times_one_minus(b + c)
    for a in x_exps:
        for b in u_exps:
            product.times_one_minus(b + a, power=-1)
        for c in v_exps:
            product.times_one_minus(c - a, power=-1)
    return product.expand(trunc)


def cauchy_type_check(which, pts_x, u_exps, K, v_exps=(), trunc_twice=None):
    """
    Compares a Cauchy-type character sum with its product form.
    Args:
        which (str): One of 'c', 'b', 'b-spin', 'd', 'd-spin', 'rational'.
        pts_x (SignedPointList | tuple): Exponents (HalfExp) of x_1..x_N.
        u_exps (tuple): Exponents of u_1..u_n, all positive.
        K (int): Comparison order, mod q^{K+1}.
        v_exps (tuple): Exponents of v_1..v_m (rational identity only).
        trunc_twice (int, optional): Overrides the HalfExp truncation 2K+2.
    Returns:
        VerifyReport: identity id 'cauchy-<which>'.
    """
    if which not in CAUCHY_KINDS:
        raise ValueError(f"Unsupported Cauchy identity: {which}")
    started = time.time()
    kind = CAUCHY_KINDS[which]
    x_exps = (pts_x if isinstance(pts_x, SignedPointList) else SignedPointList(tuple(pts_x))).exps
    u_exps, v_exps = tuple(u_exps), tuple(v_exps)
    size, n, m = len(x_exps), len(u_exps), len(v_exps)
    trunc = 2 * K + 2 if trunc_twice is None else trunc_twice
    if size < n + m:
        raise BadShapeError(f"Cauchy identity '{which}' needs N >= n (+ m), got N={size}, n={n}, m={m}")
    if any(b <= 0 for b in u_exps + v_exps):
        raise NonConvergentError(f"u / v exponents must be positive, got {u_exps + v_exps}")
    params = {"which": which, "x": list(x_exps), "u": list(u_exps), "K": K}

    u_pts = GeomPoints(u_exps)
    terms = []
    if kind is CharKind.GL_RATIONAL:
        params["v"] = list(v_exps)
        v_pts = GeomPoints(v_exps)
        gaps = [min(u_exps) + min(x_exps)] if n else []
        gaps += [min(v_exps) - max(x_exps)] if m else []
        gap = _positive_gap(min(gaps), which) if gaps else 1
        bound = (trunc - 1) // gap if gaps else 0
        for lam in enum_partitions(bound, n):
            for mu in enum_partitions(bound - lam.size, m):
                value = char_at(kind, lam, x_exps, mu=mu) * schur_at(lam, u_pts) * schur_at(mu, v_pts)
                terms.append(value.truncate(trunc))
        rhs = _rational_rhs(x_exps, u_exps, v_exps, trunc)
    else:
        widest = max((abs(a) for a in x_exps), default=0)
        if n:
            gap = _positive_gap(min(u_exps) - widest, which)
            offset = -(-size * widest // 2) if kind in (CharKind.B_SPIN, CharKind.D_SPIN) else 0
            bound = (trunc + offset - 1) // gap
        else:
            bound = 0
        for lam in enum_partitions(max(bound, 0), n):
            value = char_at(kind, lam, x_exps) * schur_at(lam, u_pts)
            terms.append(value.truncate(trunc))
        rhs = _classical_rhs(which, x_exps, u_exps, trunc)

    logger.debug(f"cauchy-{which}: summed {len(terms)} character terms")
    lhs = series_sum(terms, trunc)
    return VerifyReport.compare(f"cauchy-{which}", params, lhs, rhs, started, trunc)

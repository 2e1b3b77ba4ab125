# jackson/jackson_integral.py
"""
Truncated Jackson integrals over [0,1]^n:

    int f d_qx = (1-q)^n sum_{k in N^n} f(q^{k_1}, ..., q^{k_n}) q^{k_1 + ... + k_n}

by direct lattice summation, and by the partition-sum reductions available for
integrands that are symmetric and vanish on diagonals (one block or two).
"""
import math

from jackson.integrand_validator import IntegrandValidator
from partitions.partition import enum_partitions, frame_exponents
from qexact.laurent_series import series_sum
from qexact.q_gadgets import binomial, one_minus_power
from utils.errors import BadShapeError, ContractViolationError
from utils.logger import logger


def _default_trunc(K, trunc_twice):
    if trunc_twice is not None:
        return trunc_twice
    if K < 0:
        raise ValueError(f"K must be nonnegative, got {K}")
    return 2 * K + 2


def _weight_budget(f, trunc):
    """Largest total q-weight W whose terms t^{2W} f(...) can still fall below trunc."""
    if f.valuation_bound is None:
        raise ContractViolationError(f"{f.name} declares no valuation lower bound; refusing to truncate its sum")
    return (trunc - 1 - f.valuation_bound) // 2


def _lattice(n, budget):
    # all k in N^n with k_1 + ... + k_n <= budget
    if n == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _lattice(n - 1, budget - first):
            yield (first,) + rest


def _finish(total, dimension, factorials, trunc):
    measure = one_minus_power(2) ** dimension
    return (total * measure).scale(factorials).truncate(trunc)


def jackson_bruteforce(f, n, K, trunc_twice=None):
    """
    Direct lattice sum of the Jackson integral.
    Args:
        f (BaseIntegrand): Integrand of arity n with a declared valuation bound.
        n (int): Dimension.
        K (int): Order; the result is modulo q^{K+1}.
        trunc_twice (int, optional): HalfExp truncation overriding 2K+2.
    Returns:
        LaurentSeries: The integral modulo t^{trunc}.
    """
    trunc = _default_trunc(K, trunc_twice)
    if f.arity != n:
        raise BadShapeError(f"{f.name} has arity {f.arity}, integral dimension is {n}")
    budget = _weight_budget(f, trunc)
    terms = []
    for point in _lattice(n, max(budget, -1)):
        weight = 2 * sum(point)
        value = f.evaluate(tuple(2 * k for k in point), trunc - weight)
        terms.append(value.shift(weight))
    logger.debug(f"Lattice sum of {f.name} in {n} variables: {len(terms)} points below t^{trunc}")
    return _finish(series_sum(terms, trunc), n, 1, trunc)


def _block_terms(f, blocks, trunc):
    budget = _weight_budget(f, trunc) - sum(binomial(size, 2) for size in blocks)
    if budget < 0:
        return []
    n, m = blocks
    terms = []
    for lam in enum_partitions(budget, n):
        for mu in enum_partitions(budget - lam.size, m):
            exps = tuple(2 * k for k in frame_exponents(lam, n) + frame_exponents(mu, m))
            weight = 2 * (lam.size + mu.size + binomial(n, 2) + binomial(m, 2))
            terms.append(f.evaluate(exps, trunc - weight).shift(weight))
    return terms


def jackson_partition_sum(f, n, K, trunc_twice=None):
    """
    Jackson integral of a symmetric integrand vanishing on diagonals, as a sum over
    partitions of length <= n at the staircase frame points.
    Args:
        f (BaseIntegrand): Integrand with one block of size n.
        n (int): Dimension.
        K (int): Order; the result is modulo q^{K+1}.
        trunc_twice (int, optional): HalfExp truncation overriding 2K+2.
    Returns:
        LaurentSeries: n! (1-q)^n sum_λ q^{|λ| + C(n,2)} f(q^{λ_1+n-1}, ..., q^{λ_n}).
    """
    trunc = _default_trunc(K, trunc_twice)
    if f.arity != n or len(f.blocks) != 1:
        raise BadShapeError(f"{f.name} (blocks {f.blocks}) is not a single block of {n} variables")
    IntegrandValidator.require(f)
    terms = _block_terms(f, (n, 0), trunc)
    logger.debug(f"Partition sum of {f.name}: {len(terms)} partitions below t^{trunc}")
    return _finish(series_sum(terms, trunc), n, math.factorial(n), trunc)


def jackson_two_block(g, n, m, K, trunc_twice=None):
    """
    Two-block analogue of jackson_partition_sum for g(x_1..x_n, y_1..y_m) symmetric
    and diagonal-vanishing within each block.
    Args:
        g (BaseIntegrand): Integrand with blocks (n, m).
        n (int): First block size.
        m (int): Second block size.
        K (int): Order; the result is modulo q^{K+1}.
        trunc_twice (int, optional): HalfExp truncation overriding 2K+2.
    Returns:
        LaurentSeries: The integral modulo t^{trunc}.
    """
    trunc = _default_trunc(K, trunc_twice)
    if g.arity != n + m:
        raise BadShapeError(f"{g.name} has arity {g.arity}, blocks need {n} + {m}")
    if g.blocks not in ((n, m), (n + m,)) or (g.blocks == (n + m,) and m):
        raise BadShapeError(f"{g.name} has blocks {g.blocks}, expected ({n}, {m})")
    IntegrandValidator.require(g)
    terms = _block_terms(g, (n, m), trunc)
    logger.debug(f"Two-block sum of {g.name}: {len(terms)} partition pairs below t^{trunc}")
    factorials = math.factorial(n) * math.factorial(m)
    return _finish(series_sum(terms, trunc), n + m, factorials, trunc)

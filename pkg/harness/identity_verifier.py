# harness/identity_verifier.py
"""
Checks of the q-integral, P-partition and character identities.

Every check computes its two sides through different code paths and returns a
VerifyReport. Integer identities compare modulo q^{K+1} (trunc_twice = 2K+2);
the variant family, whose right sides carry q^{1/2}, compares modulo t^{2K+1}.
"""
import inspect
import math
import time
from fractions import Fraction

import config
from characters.cauchy_identities import CAUCHY_KINDS, cauchy_type_check
from characters.classical_characters import CharKind, char_at, spin_prefactor
from harness.verify_report import VerifyReport
from jackson.integrands import (
    MultiPageIntegrand,
    RationalIntegrand,
    SelbergIntegrand,
    VariantIntegrand,
    build_integrand,
)
from jackson.jackson_integral import jackson_bruteforce, jackson_partition_sum, jackson_two_block
from partitions.partition import as_composition, as_partition, enum_partitions
from qexact.laurent_series import LaurentSeries, series_sum
from qexact.q_gadgets import QProduct, binomial
from schur.schur_functions import GeomPoints, principal_spec, schur_at
from utils.errors import BadShapeError, UsageError
from utils.logger import logger
from youngbooks.ppartitions import ppartition_gf
from youngbooks.staircase_poset import build_poset
from youngbooks.young_book import count_linear_extensions, maj_gf


def _integer_trunc(K):
    if K < 0:
        raise ValueError(f"K must be nonnegative, got {K}")
    return 2 * K + 2


def _principal_sum(n, specs, q_weight, trunc):
    """
    sum_{len(λ) <= n} q^{q_weight |λ|} prod_{(s, p) in specs} s_λ(1, q, ..., q^{n+s-1})^p mod t^{trunc}.
    """
    budget = (trunc - 1) // (2 * q_weight)
    terms = []
    for lam in enum_partitions(budget, n):
        term = LaurentSeries.monomial(2 * q_weight * lam.size).truncate(trunc)
        for s, power in specs:
            for _ in range(power):
                term = (term * principal_spec(lam, n, s)).truncate(trunc)
        terms.append(term)
    return series_sum(terms, trunc)


def _selberg_shift(r_total, n, pages):
    return (r_total + 1) * binomial(n, 2) + pages * binomial(n, 3)


class IdentityVerifier:
    """Runs one identity check per call; enumeration-backed checks honour guard_n."""

    def __init__(self, guard_n=None, default_k=None):
        """
        Args:
            guard_n (int, optional): Largest Young-book poset size. Defaults to config.ENUM_GUARD.
            default_k (int, optional): K used when a check is called without one. Defaults to config.DEFAULT_K.
        """
        self.guard_n = config.ENUM_GUARD if guard_n is None else guard_n
        self.default_k = config.DEFAULT_K if default_k is None else default_k
        logger.info("IdentityVerifier initialized.")

    def _k(self, K):
        return self.default_k if K is None else K

    # --- multi-page integral and its Schur form ------------------------------

    def verify_maj_integral(self, n, r, s, K=None):
        """
        (1/n!) times the multi-page integral against the Young-book major index series.
        The left side goes through the partition-sum reduction, the right side through
        maj_gf on the staircase poset.
        """
        K = config.HEADLINE_K if K is None else K
        started = time.time()
        trunc = _integer_trunc(K)
        rvec, svec = as_composition(r), as_composition(s)
        poset = build_poset(n, rvec, svec)
        params = {"n": n, "r": list(rvec), "s": list(svec), "K": K}

        integral = jackson_partition_sum(MultiPageIntegrand(n, rvec, svec), n, K)
        lhs = integral.scale(Fraction(1, math.factorial(n)))

        product = QProduct().times_q_power(_selberg_shift(rvec.total, n, len(rvec)))
        product.times(maj_gf(poset, guard=self.guard_n)).over_q_factorial(poset.size)
        for r_k, s_k in zip(rvec, svec):
            product.times_f_q(n + r_k + s_k).over_f_q(r_k).over_f_q(s_k)
        rhs = product.expand(trunc)
        return VerifyReport.compare("qko", params, lhs, rhs, started, trunc)

    def verify_schur_form(self, n, r, s, K=None):
        """Lattice brute force of the multi-page integral against a sum of principal specializations."""
        K = self._k(K)
        started = time.time()
        trunc = _integer_trunc(K)
        rvec, svec = as_composition(r), as_composition(s)
        params = {"n": n, "r": list(rvec), "s": list(svec), "K": K}

        lhs = jackson_bruteforce(MultiPageIntegrand(n, rvec, svec), n, K).scale(Fraction(1, math.factorial(n)))

        prefix = QProduct().times_one_minus(2, power=n)
        prefix.times_q_power(_selberg_shift(rvec.total, n, len(rvec)))
        for s_k in svec:
            for h in range(s_k, n + s_k):
                prefix.times_q_shifted_factorial(h)
        total = _principal_sum(n, [(s_k, 1) for s_k in svec], 1 + rvec.total, trunc)
        rhs = (prefix.expand(trunc) * total).truncate(trunc)
        return VerifyReport.compare("schur-form", params, lhs, rhs, started, trunc)

    def verify_selberg_single(self, n, r, s, m, K=None):
        """Single page with |Δ|^m: lattice brute force against the principal-specialization sum."""
        K = self._k(K)
        if m < 1:
            raise BadShapeError(f"The single-page form needs m >= 1, got {m}")
        started = time.time()
        trunc = _integer_trunc(K)
        params = {"n": n, "r": r, "s": s, "m": m, "K": K}

        lhs = jackson_bruteforce(SelbergIntegrand(n, r, s, m), n, K).scale(Fraction(1, math.factorial(n)))

        prefix = QProduct().times_one_minus(2, power=n).times_q_power(_selberg_shift(r, n, m))
        for h in range(s, n + s):
            prefix.times_q_shifted_factorial(h)
        for h in range(1, n):
            prefix.times_q_shifted_factorial(h, power=m - 1)
        total = _principal_sum(n, [(s, 1), (0, m - 1)], r + 1, trunc)
        rhs = (prefix.expand(trunc) * total).truncate(trunc)
        return VerifyReport.compare("selberg-single", params, lhs, rhs, started, trunc)

    # --- P-partitions --------------------------------------------------------

    def verify_ppar(self, n, r, s, K=None):
        """Brute-force P-partition series of the staircase against its Schur sum."""
        K = self._k(K)
        started = time.time()
        trunc = _integer_trunc(K)
        rvec, svec = as_composition(r), as_composition(s)
        params = {"n": n, "r": list(rvec), "s": list(svec), "K": K}

        lhs = ppartition_gf(build_poset(n, rvec, svec), K)

        prefix = QProduct()
        for r_k, s_k in zip(rvec, svec):
            for h in range(1, r_k):
                prefix.times_q_shifted_factorial(h)
            for h in range(n + s_k, n + r_k + s_k):
                prefix.over_q_shifted_factorial(h)
        total = _principal_sum(n, [(s_k, 1) for s_k in svec], 1 + rvec.total, trunc)
        rhs = (prefix.expand(trunc) * total).truncate(trunc)
        return VerifyReport.compare("ppar", params, lhs, rhs, started, trunc)

    def verify_ppar_profile(self, l, r, mu, K=None):
        """P-partitions of the one-page (l, r, 0) staircase with diagonal reading mu."""
        K = self._k(K)
        started = time.time()
        trunc = _integer_trunc(K)
        mu = as_partition(mu)
        params = {"l": l, "r": r, "mu": mu.to_json(), "K": K}

        lhs = ppartition_gf(build_poset(l, (r,), (0,)), K, profile=mu)

        product = QProduct()
        for h in range(1, r):
            product.times_q_shifted_factorial(h)
        for h in range(l, l + r):
            product.over_q_shifted_factorial(h)
        product.times(schur_at(mu, GeomPoints.principal(l, start=r + 1)))
        rhs = product.expand(trunc)
        return VerifyReport.compare("ppar-profile", params, lhs, rhs, started, trunc)

    def verify_stanley(self, n, r, s, K=None):
        """maj_gf of the staircase against (q;q)_N times its P-partition series, modulo q^{K+1}."""
        K = self._k(K)
        started = time.time()
        trunc = _integer_trunc(K)
        rvec, svec = as_composition(r), as_composition(s)
        poset = build_poset(n, rvec, svec)
        params = {"n": n, "r": list(rvec), "s": list(svec), "K": K}

        lhs = maj_gf(poset, guard=self.guard_n).truncate(trunc)
        rhs = (QProduct().times_q_shifted_factorial(poset.size).expand(trunc) * ppartition_gf(poset, K)).truncate(trunc)
        return VerifyReport.compare("stanley", params, lhs, rhs, started, trunc)

    # --- closed evaluations ---------------------------------------------------

    def verify_eval(self, which, n, r, s=0, K=None):
        """
        Closed product evaluations of single-page integrals.
        Args:
            which (int): 1 (|Δ|), 2 (|Δ| with one factor (1 - q x)), 3 (|Δ|^2 with (qx;q)_s).
            n (int): Dimension.
            r (int): Power of each x_i.
            s (int): Pochhammer length (which == 3 only).
            K (int, optional): Order of comparison.
        Returns:
            VerifyReport: id 'eval<which>'.
        """
        K = self._k(K)
        started = time.time()
        trunc = _integer_trunc(K)
        if which == 1:
            integrand, params = SelbergIntegrand(n, r, 0, 1), {"n": n, "r": r, "K": K}
        elif which == 2:
            integrand, params = SelbergIntegrand(n, r, 1, 1), {"n": n, "r": r, "K": K}
        elif which == 3:
            integrand, params = SelbergIntegrand(n, r, s, 2), {"n": n, "r": r, "s": s, "K": K}
        else:
            raise UsageError(f"Unknown evaluation eval{which}")
        lhs = jackson_partition_sum(integrand, n, K)

        product = QProduct().times_scalar(math.factorial(n))
        product.times_q_power((r + 1) * binomial(n, 2) + (2 if which == 3 else 1) * binomial(n, 3))
        if which == 1:
            for k in range(1, n):
                product.times_q_factorial(k)
            for i in range(1, n + 1):
                product.over_q_int(r + i)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    product.over_q_int(2 * r + i + j)
        elif which == 2:
            for k in range(1, n + 1):
                product.times_q_factorial(k)
            product.times_q_int((n + 1) * r + binomial(n + 2, 2))
            for i in range(1, n + 2):
                product.over_q_int(r + i)
            for i in range(1, n + 2):
                for j in range(i + 1, n + 2):
                    product.over_q_int(2 * r + i + j)
        else:
            for k in range(1, n):
                product.times_q_factorial(k)
            for k in range(s, s + n):
                product.times_q_factorial(k)
            for i in range(1, n + s + 1):
                for j in range(1, n + 1):
                    product.over_q_int(r + i + j - 1)
        rhs = product.expand(trunc)
        return VerifyReport.compare(f"eval{which}", params, lhs, rhs, started, trunc)

    def verify_variant(self, which, n, r, s, K=None):
        """The four single-page variants with x_i x_j pair factors; compared modulo t^{2K+1}."""
        K = self._k(K)
        if K < 0:
            raise ValueError(f"K must be nonnegative, got {K}")
        started = time.time()
        trunc = 2 * K + 1
        params = {"n": n, "r": r, "s": s, "K": K}

        lhs = jackson_partition_sum(VariantIntegrand(which, n, r, s), n, K, trunc_twice=trunc)

        product = QProduct().times_scalar(math.factorial(n))
        product.times_q_power((r + 1) * binomial(n, 2) + 2 * binomial(n, 3))
        for k in range(1, n):
            product.times_q_factorial(k)
        for k in range(1, n + 1):
            product.times_q_factorial(s + 2 * k - (1 if which == 4 else 2))
        if which == 1:
            pair_offset, rows = -2, 2 * n + s - 1
        elif which == 4:
            pair_offset, rows = 0, 2 * n + s + 1
        else:
            pair_offset, rows = -1, 2 * n + s
        for i in range(1, n + 1):
            for j in range(i if which == 4 else i + 1, n + 1):
                product.times_q_int(2 * n + 2 * r + s + i + j + pair_offset)
        for k in range(1, n + 1):
            half = s + 2 * k - 1  # HalfExp of s/2 + k - 1/2
            if which == 2:
                product.times_one_minus(half, power=-1).times_one_minus(2 * half)
                product.times_q_int(f"{2 * (n + r) + half}/2")
            elif which == 3:
                product.times_q_int(f"{half}/2")
                product.times_one_minus(2 * (n + r) + half, power=-1)
                product.times_one_minus(2 * (2 * (n + r) + half))
        for i in range(1, rows + 1):
            for j in range(1, n + 1):
                product.over_q_int(r + i + j - 1)
        rhs = product.expand(trunc)
        return VerifyReport.compare(f"variant{which}", params, lhs, rhs, started, trunc)

    def verify_rational(self, n, m, l, r, s, K=None):
        """Two-block integral with cross factors (1 - q^{l+1} x_i y_j) against its closed product."""
        K = self._k(K)
        started = time.time()
        trunc = _integer_trunc(K)
        params = {"n": n, "m": m, "l": l, "r": r, "s": s, "K": K}
        size = n + m + l

        lhs = jackson_two_block(RationalIntegrand(n, m, l, r, s), n, m, K)

        product = QProduct().times_scalar(math.factorial(n) * math.factorial(m))
        product.times_q_power(
            (r + 1) * binomial(n, 2) + (s + 1) * binomial(m, 2) + 2 * binomial(n, 3) + 2 * binomial(m, 3)
        )
        product.times_f_q(size).times_f_q(n).times_f_q(m).over_f_q(l)
        for i in range(1, n + 1):
            for j in range(1, m + 1):
                product.times_q_int(size + r + s + i + j - 1)
        for k in range(1, size + 1):
            for i in range(1, n + 1):
                product.over_q_int(r + i + k - 1)
            for j in range(1, m + 1):
                product.over_q_int(s + j + k - 1)
        rhs = product.expand(trunc)
        return VerifyReport.compare("rational", params, lhs, rhs, started, trunc)

    # --- characters -----------------------------------------------------------

    def verify_cauchy(self, which, N, n, m=0, K=None):
        """
        Cauchy-type character sums at the standard specializations:
        x_i = q^{N-i+1/2} (c, b), q^{N-i+1} (b-spin), q^{N-i} (d, d-spin), u_j = q^{N+j};
        for 'rational' x_i = q^{i-1}, u_j = q^j, v_j = q^{N-1+j}.
        """
        K = self._k(K)
        if which not in CAUCHY_KINDS:
            raise UsageError(f"Unknown Cauchy identity: {which}")
        if which == "rational":
            x_exps = tuple(2 * (i - 1) for i in range(1, N + 1))
            u_exps = tuple(2 * j for j in range(1, n + 1))
            v_exps = tuple(2 * (N - 1 + j) for j in range(1, m + 1))
        else:
            offset = {"c": 1, "b": 1, "b-spin": 2, "d": 0, "d-spin": 0}[which]
            x_exps = tuple(2 * (N - i) + offset for i in range(1, N + 1))
            u_exps = tuple(2 * (N + j) for j in range(1, n + 1))
            v_exps = ()
        return cauchy_type_check(which, x_exps, u_exps, K, v_exps=v_exps)

    def verify_spinor_factor(self, lam, N):
        """Spin character of type B equals prod (x^{1/2} + x^{-1/2}) times the symplectic character (exact)."""
        started = time.time()
        lam = as_partition(lam)
        pts = tuple(2 * (N - i + 1) for i in range(1, N + 1))
        lhs = char_at(CharKind.B_SPIN, lam, pts)
        rhs = spin_prefactor(pts) * char_at(CharKind.C, lam, pts)
        return VerifyReport.compare("spinor-factor", {"lam": lam.to_json(), "N": N}, lhs, rhs, started)

    # --- pipeline cross-checks ------------------------------------------------

    def verify_book_count(self, n, r, s):
        """Value of maj_gf at q = 1 against the memoized linear-extension count."""
        started = time.time()
        rvec, svec = as_composition(r), as_composition(s)
        poset = build_poset(n, rvec, svec)
        lhs = LaurentSeries.constant(maj_gf(poset, guard=self.guard_n).eval_at_one())
        rhs = LaurentSeries.constant(count_linear_extensions(poset))
        params = {"n": n, "r": list(rvec), "s": list(svec)}
        return VerifyReport.compare("book-count", params, lhs, rhs, started)

    def verify_principal_spec(self, lam, n, s):
        """Bialternant at (1, q, ..., q^{n+s-1}) against the product form (exact)."""
        started = time.time()
        lam = as_partition(lam)
        lhs = schur_at(lam, GeomPoints.principal(n + s))
        rhs = principal_spec(lam, n, s)
        return VerifyReport.compare("principal-spec", {"lam": lam.to_json(), "n": n, "s": s}, lhs, rhs, started)

    def verify_partition_sum(self, family, n, r=0, s=0, m=1, K=None):
        """Partition-sum reduction against the lattice sum for a single-block family."""
        K = self._k(K)
        started = time.time()
        integrand = build_integrand(family, n, r=r, s=s, m=m)
        if len(integrand.blocks) != 1:
            raise UsageError(f"partition-sum needs a single-block family, got {family}")
        trunc = 2 * K + 1 if family.startswith("variant") else _integer_trunc(K)
        lhs = jackson_partition_sum(integrand, n, K, trunc_twice=trunc)
        rhs = jackson_bruteforce(integrand, n, K, trunc_twice=trunc)
        params = dict(integrand.get_params(), family=family, K=K)
        return VerifyReport.compare("partition-sum", params, lhs, rhs, started, trunc)

    def verify_two_block_sum(self, n, m, l, r, s, K=None):
        """Two-block partition sum against the (n+m)-dimensional lattice sum."""
        K = self._k(K)
        started = time.time()
        trunc = _integer_trunc(K)
        integrand = RationalIntegrand(n, m, l, r, s)
        lhs = jackson_two_block(integrand, n, m, K)
        rhs = jackson_bruteforce(integrand, n + m, K)
        params = {"n": n, "m": m, "l": l, "r": r, "s": s, "K": K}
        return VerifyReport.compare("two-block-sum", params, lhs, rhs, started, trunc)

    # --- dispatch -------------------------------------------------------------

    def verify(self, identity_id, **params):
        """
        Runs a check by its stable id.
        Args:
            identity_id (str): e.g. 'qko', 'eval2', 'variant3', 'cauchy-b-spin' (or an alias such as 'maj-integral').
            **params: Keyword parameters of the matching verify_* method.
        Returns:
            VerifyReport: The outcome.
        """
        handler, leading = self.resolve(identity_id)
        try:
            inspect.signature(handler).bind(*leading, **params)
        except TypeError as e:
            raise UsageError(f"Bad parameters for {identity_id}: {e}") from e
        return handler(*leading, **params)

    def resolve(self, identity_id):
        """Maps an identity id to (bound method, leading positional arguments)."""
        name, leading = _handler_entry(identity_id)
        return getattr(self, name), leading


def _handler_entry(identity_id):
    identity_id = IDENTITY_ALIASES.get(identity_id, identity_id)
    if identity_id.startswith("cauchy-") and identity_id[len("cauchy-"):] in CAUCHY_KINDS:
        return "verify_cauchy", (identity_id[len("cauchy-"):],)
    if identity_id in ("eval1", "eval2", "eval3"):
        return "verify_eval", (int(identity_id[-1]),)
    if identity_id in ("variant1", "variant2", "variant3", "variant4"):
        return "verify_variant", (int(identity_id[-1]),)
    if identity_id not in _HANDLERS:
        raise UsageError(f"Unknown identity id: {identity_id}")
    return _HANDLERS[identity_id], ()


def identity_parameters(identity_id):
    """Keyword parameter names accepted by the check behind identity_id."""
    name, leading = _handler_entry(identity_id)
    names = list(inspect.signature(getattr(IdentityVerifier, name)).parameters)[1:]
    return tuple(names[len(leading):])


_HANDLERS = {
    "qko": "verify_maj_integral",
    "schur-form": "verify_schur_form",
    "selberg-single": "verify_selberg_single",
    "ppar": "verify_ppar",
    "ppar-profile": "verify_ppar_profile",
    "stanley": "verify_stanley",
    "rational": "verify_rational",
    "spinor-factor": "verify_spinor_factor",
    "book-count": "verify_book_count",
    "principal-spec": "verify_principal_spec",
    "partition-sum": "verify_partition_sum",
    "two-block-sum": "verify_two_block_sum",
}

IDENTITY_ALIASES = {"maj-integral": "qko"}

IDENTITY_IDS = (
    ["qko", "schur-form", "selberg-single", "ppar", "ppar-profile", "stanley"]
    + [f"eval{i}" for i in (1, 2, 3)]
    + [f"variant{i}" for i in (1, 2, 3, 4)]
    + ["rational"]
    + [f"cauchy-{which}" for which in CAUCHY_KINDS]
    + ["spinor-factor", "book-count", "principal-spec", "partition-sum", "two-block-sum"]
)


if __name__ == "__main__":
    verifier = IdentityVerifier()
    report = verifier.verify_maj_integral(2, (1,), (1,), K=10)
    print(report.summary_row())

import time

import pytest

from harness import identity_verifier
from harness.identity_verifier import IDENTITY_ALIASES, IDENTITY_IDS, IdentityVerifier, identity_parameters
from harness.verify_report import VerifyReport
from qexact.laurent_series import LaurentSeries
from qexact.q_gadgets import QProduct
from utils.errors import BadShapeError, TooLargeError, UsageError


@pytest.fixture(scope="module")
def verifier():
    return IdentityVerifier(guard_n=20, default_k=8)


def test_identity_ids_are_unique():
    assert len(IDENTITY_IDS) == len(set(IDENTITY_IDS)) == 25
    assert {"qko", "stanley", "cauchy-b-spin"} <= set(IDENTITY_IDS)
    assert not set(IDENTITY_ALIASES) & set(IDENTITY_IDS)


def test_alias_runs_the_same_check(verifier):
    report = verifier.verify("maj-integral", n=1, r="1", s="1", K=6)
    assert report.identity_id == "qko"
    assert report.passed


def test_identity_parameters():
    assert identity_parameters("qko") == ("n", "r", "s", "K")
    assert identity_parameters("maj-integral") == ("n", "r", "s", "K")
    assert identity_parameters("eval3") == ("n", "r", "s", "K")
    assert identity_parameters("cauchy-d") == ("N", "n", "m", "K")
    assert "K" not in identity_parameters("book-count")
    with pytest.raises(UsageError):
        identity_parameters("cauchy-e")


def test_eval2_single_variable_value(verifier):
    report = verifier.verify_eval(2, 1, 0, K=6)
    assert report.passed
    assert report.lhs == QProduct().over_q_int(2).expand(14)


def test_eval3_single_variable_value(verifier):
    report = verifier.verify_eval(3, 1, 0, s=2, K=6)
    assert report.passed
    assert report.lhs == QProduct().over_q_int(3).expand(14)


@pytest.mark.parametrize("which, numerator", [
    (2, {0: 1, 1: 1, 2: 1}),
    (3, {0: 1, 1: -1, 2: 1}),
])
def test_half_integer_variants_in_one_variable(verifier, which, numerator):
    report = verifier.verify_variant(which, 1, 0, 0, K=6)
    assert report.passed
    assert report.trunc_twice == 13
    assert report.lhs == QProduct().times(LaurentSeries(numerator)).over_q_int(2).expand(13)


def test_variant4_in_one_variable(verifier):
    report = verifier.verify_variant(4, 1, 0, 0, K=6)
    assert report.passed
    # (1 + q^2) / [3]
    assert report.lhs == QProduct().times(LaurentSeries({0: 1, 4: 1})).over_q_int(3).expand(13)


def test_rational_in_one_plus_one_variables(verifier):
    report = verifier.verify_rational(1, 1, 0, 0, 0, K=6)
    assert report.passed
    assert report.lhs == QProduct().times_q_int(3).over_q_int(2).over_q_int(2).expand(14)


@pytest.mark.parametrize("n, r, s", [
    (1, (0,), (0,)),
    (1, (1,), (1,)),
    (2, (0, 0), (0, 0)),
    (2, (1,), (0,)),
    (2, (1, 0), (0, 1)),
])
def test_maj_integral(verifier, n, r, s):
    assert verifier.verify_maj_integral(n, r, s, K=10).passed


def test_maj_integral_of_two_pages(verifier):
    # (1/2) int int (x - y)^2 = q / ([2]^2 [3])
    report = verifier.verify_maj_integral(2, (0, 0), (0, 0), K=8)
    expected = QProduct().times_q_power(1).over_q_int(2).over_q_int(2).over_q_int(3).expand(18)
    assert report.passed
    assert report.rhs == expected


@pytest.mark.parametrize("identity_id, params", [
    ("qko", {"n": 2, "r": "1", "s": "1", "K": 12}),
    ("schur-form", {"n": 2, "r": "1", "s": "1"}),
    ("schur-form", {"n": 2, "r": "0,1", "s": "1,0"}),
    ("selberg-single", {"n": 2, "r": 0, "s": 1, "m": 1}),
    ("selberg-single", {"n": 2, "r": 1, "s": 0, "m": 2}),
    ("ppar", {"n": 2, "r": "1", "s": "1", "K": 6}),
    ("ppar-profile", {"l": 2, "r": 1, "mu": "1", "K": 6}),
    ("eval1", {"n": 2, "r": 1}),
    ("eval2", {"n": 2, "r": 0}),
    ("eval3", {"n": 2, "r": 0, "s": 1}),
    ("variant1", {"n": 2, "r": 0, "s": 1}),
    ("variant2", {"n": 2, "r": 1, "s": 0}),
    ("variant3", {"n": 2, "r": 0, "s": 0}),
    ("variant4", {"n": 2, "r": 0, "s": 1}),
    ("rational", {"n": 2, "m": 1, "l": 1, "r": 0, "s": 1}),
    ("stanley", {"n": 2, "r": "1,0", "s": "0,1", "K": 12}),
    ("cauchy-c", {"N": 1, "n": 1}),
    ("cauchy-c", {"N": 2, "n": 1}),
    ("cauchy-b", {"N": 1, "n": 1}),
    ("cauchy-b-spin", {"N": 1, "n": 1}),
    ("cauchy-d", {"N": 1, "n": 1}),
    ("cauchy-d-spin", {"N": 1, "n": 1}),
    ("cauchy-rational", {"N": 1, "n": 1}),
    ("cauchy-b", {"N": 2, "n": 2}),
    ("cauchy-b-spin", {"N": 2, "n": 1}),
    ("cauchy-d", {"N": 2, "n": 1}),
    ("cauchy-d-spin", {"N": 2, "n": 1}),
    ("cauchy-rational", {"N": 2, "n": 1, "m": 1}),
    ("spinor-factor", {"lam": "2,1", "N": 2}),
    ("book-count", {"n": 2, "r": "1,0", "s": "0,1"}),
    ("principal-spec", {"lam": "2,1", "n": 3, "s": 2}),
    ("partition-sum", {"family": "multipage", "n": 2, "r": "1,0", "s": "0,1"}),
    ("partition-sum", {"family": "variant2", "n": 2, "r": 0, "s": 1}),
    ("two-block-sum", {"n": 1, "m": 1, "l": 1, "r": 1, "s": 0}),
])
def test_identities_pass(verifier, identity_id, params):
    report = verifier.verify(identity_id, **params)
    assert report.identity_id == identity_id
    assert report.passed, report.diff


def test_selberg_single_needs_positive_power(verifier):
    with pytest.raises(BadShapeError):
        verifier.verify_selberg_single(2, 0, 0, 0)


def test_dispatch_errors(verifier):
    with pytest.raises(UsageError):
        verifier.verify("no-such-identity")
    with pytest.raises(UsageError):
        verifier.verify("eval1", n=1, r=0, colour="red")
    with pytest.raises(UsageError):
        verifier.verify("cauchy-e", N=2, n=1)


def test_partition_sum_refuses_two_block_family(verifier):
    with pytest.raises(UsageError):
        verifier.verify_partition_sum("rational", 1, m=1)


def test_guard_is_honoured():
    small = IdentityVerifier(guard_n=5)
    with pytest.raises(TooLargeError):
        small.verify_book_count(3, (1, 2), (0, 1))


def test_failed_report():
    one = LaurentSeries.one()
    report = VerifyReport.compare("demo", {"n": 1}, one, one + LaurentSeries.q_power(1), time.time())
    assert not report.passed
    assert report.diff == -LaurentSeries.q_power(1)
    assert report.to_json()["pass"] is False
    assert report.summary_row()["params"] == "n=1"


def test_report_notes_lowered_truncation():
    lhs = LaurentSeries.one().truncate(4)
    report = VerifyReport.compare("demo", {}, lhs, LaurentSeries.one(), time.time(), trunc_twice=10)
    assert report.passed
    assert report.trunc_twice == 4
    assert report.notes


@pytest.mark.slow
@pytest.mark.parametrize("n, r, s", [
    (3, (1,), (1,)),
    (2, (1, 2), (0, 1)),
    (3, (0, 1), (1, 0)),
])
def test_maj_integral_headline(n, r, s):
    assert IdentityVerifier(guard_n=23).verify_maj_integral(n, r, s, K=30).passed


@pytest.mark.slow
@pytest.mark.parametrize("which", [1, 2, 3])
def test_closed_evaluations_to_order_forty(which):
    verifier = IdentityVerifier()
    for n in (1, 2, 3):
        for r in (0, 1, 2):
            assert verifier.verify_eval(which, n, r, s=1, K=40).passed


@pytest.mark.parametrize("identity_id, params", [
    ("eval1", {"n": 2, "r": 1}),
    ("eval3", {"n": 2, "r": 0, "s": 1}),
    ("variant2", {"n": 1, "r": 0, "s": 1}),
    ("variant3", {"n": 2, "r": 0, "s": 0}),
    ("qko", {"n": 2, "r": "1", "s": "1"}),
    ("schur-form", {"n": 2, "r": "0,1", "s": "1,0"}),
])
def test_truncation_is_monotone(verifier, identity_id, params):
    reports = {K: verifier.verify(identity_id, K=K, **params) for K in (3, 6, 9)}
    for small, large in [(3, 6), (6, 9), (3, 9)]:
        lhs, rhs = reports[small].lhs, reports[small].rhs
        assert reports[large].lhs.truncate(lhs.trunc) == lhs
        assert reports[large].rhs.truncate(rhs.trunc) == rhs
        assert reports[small].passed


# (identity, params, pipeline behind the left side, pipeline behind the right side)
SIDE_PIPELINES = [
    ("qko", {"n": 2, "r": "1", "s": "1", "K": 8}, "jackson_partition_sum", "maj_gf"),
    ("schur-form", {"n": 2, "r": "1", "s": "1", "K": 6}, "jackson_bruteforce", "principal_spec"),
    ("selberg-single", {"n": 2, "r": 0, "s": 1, "m": 1, "K": 6}, "jackson_bruteforce", "principal_spec"),
    ("ppar", {"n": 2, "r": "1", "s": "1", "K": 6}, "ppartition_gf", "principal_spec"),
    ("ppar-profile", {"l": 2, "r": 1, "mu": "1", "K": 6}, "ppartition_gf", "schur_at"),
    ("stanley", {"n": 2, "r": "1", "s": "1", "K": 6}, "maj_gf", "ppartition_gf"),
    ("book-count", {"n": 2, "r": "1", "s": "1"}, "maj_gf", "count_linear_extensions"),
    ("principal-spec", {"lam": "2,1", "n": 2, "s": 1}, "schur_at", "principal_spec"),
    ("partition-sum", {"family": "multipage", "n": 2, "r": "1,0", "s": "0,1", "K": 6},
     "jackson_partition_sum", "jackson_bruteforce"),
    ("two-block-sum", {"n": 1, "m": 1, "l": 1, "r": 1, "s": 0, "K": 6}, "jackson_two_block", "jackson_bruteforce"),
]


@pytest.mark.parametrize("identity_id, params, lhs_pipeline, rhs_pipeline", SIDE_PIPELINES)
def test_sides_use_disjoint_pipelines(monkeypatch, verifier, identity_id, params, lhs_pipeline, rhs_pipeline):
    assert lhs_pipeline != rhs_pipeline
    assert verifier.verify(identity_id, **params).passed
    for pipeline in (lhs_pipeline, rhs_pipeline):
        with monkeypatch.context() as patch:
            original = getattr(identity_verifier, pipeline)
            patch.setattr(identity_verifier, pipeline, lambda *a, _f=original, **kw: _f(*a, **kw) + 1)
            # a shared pipeline would shift both sides alike and still pass
            assert not verifier.verify(identity_id, **params).passed, pipeline

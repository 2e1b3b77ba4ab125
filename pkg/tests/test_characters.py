import pytest

from characters.cauchy_identities import CAUCHY_KINDS, cauchy_type_check
from characters.classical_characters import (
    CharKind,
    SignedPointList,
    char_at,
    spin_prefactor,
    weyl_denominator,
    weyl_denominator_product,
)
from partitions.partition import Partition, enum_partitions
from qexact.laurent_series import LaurentSeries
from schur.schur_functions import schur_at
from utils.errors import BadShapeError, DegenerateDenominatorError, LengthExceededError, NonConvergentError


def test_symplectic_vector_character():
    # Sp(2): x + 1/x at x = q
    assert char_at(CharKind.C, Partition.of(1), (2,)) == LaurentSeries({-2: 1, 2: 1})


def test_odd_orthogonal_vector_character():
    # SO(3): x + 1 + 1/x
    assert char_at(CharKind.B, Partition.of(1), (2,)) == LaurentSeries({-2: 1, 0: 1, 2: 1})


def test_spin_character_of_so3():
    assert char_at(CharKind.B_SPIN, Partition.of(), (2,)) == LaurentSeries({-1: 1, 1: 1})


def test_even_orthogonal_character_with_positive_last_part():
    # SO(2): x^k + x^{-k}, both signs of the last part together
    assert char_at(CharKind.D, Partition.of(2), (2,)) == LaurentSeries({-4: 1, 4: 1})


@pytest.mark.parametrize("kind, lam, dimension", [
    (CharKind.C, (1,), 4),
    (CharKind.B, (1,), 5),
    (CharKind.D, (1,), 4),
    (CharKind.B_SPIN, (), 4),
    (CharKind.C, (1, 1), 5),
])
def test_weyl_dimension_at_q_equal_one(kind, lam, dimension):
    assert char_at(kind, Partition(lam), (2, 4)).eval_at_one() == dimension


@pytest.mark.parametrize("kind", [CharKind.C, CharKind.B, CharKind.D, CharKind.B_SPIN, CharKind.D_SPIN])
@pytest.mark.parametrize("exps", [(2,), (0,), (2, 4), (2, 0), (1, 3, 6), (4, 2, 0)])
def test_denominator_alternant_matches_product(kind, exps):
    assert weyl_denominator(kind, exps) == weyl_denominator_product(kind, exps)


def test_rational_character_without_negative_part_is_schur():
    pts = (0, 2, 4)
    for lam in enum_partitions(3, 3):
        assert char_at(CharKind.GL_RATIONAL, lam, pts) == schur_at(lam, pts)


def test_rational_character_adjoint():
    # [1; 1] of GL_2 at (1, q): x1/x2 + 1 + x2/x1
    value = char_at(CharKind.GL_RATIONAL, Partition.of(1), (0, 2), mu=Partition.of(1))
    assert value == LaurentSeries({-2: 1, 0: 1, 2: 1})


def test_rational_character_length_guard():
    with pytest.raises(LengthExceededError):
        char_at(CharKind.GL_RATIONAL, Partition.of(1, 1), (0, 2), mu=Partition.of(1))


def test_degenerate_points_raise():
    with pytest.raises(DegenerateDenominatorError):
        char_at(CharKind.C, Partition.of(1), (2, 2))


def test_spin_prefactor_and_spinor_character():
    pts = SignedPointList((4, 2))
    assert char_at(CharKind.B_SPIN, Partition.of(), pts) == spin_prefactor(pts)
    for lam in enum_partitions(3, 2):
        expected = spin_prefactor(pts) * char_at(CharKind.C, lam, pts)
        assert char_at(CharKind.B_SPIN, lam, pts) == expected


def test_reciprocal_point_is_the_same_character():
    pts = SignedPointList((4, 2))
    lam = Partition.of(2, 1)
    assert char_at(CharKind.C, lam, pts.reciprocal(0)) == char_at(CharKind.C, lam, pts)


def test_char_kind_parse():
    assert CharKind.parse("Bspin") is CharKind.B_SPIN
    assert CharKind.parse("C") is CharKind.C
    with pytest.raises(ValueError):
        CharKind.parse("E8")


@pytest.mark.parametrize("which", ["c", "b", "b-spin", "d", "d-spin"])
def test_classical_cauchy_sums(which):
    x = (2,) if which != "b-spin" else (4,)
    report = cauchy_type_check(which, x, (8,), 6)
    assert report.passed, report.diff
    assert report.identity_id == f"cauchy-{which}"


def test_rational_cauchy_sum():
    report = cauchy_type_check("rational", (0, 2), (2,), 6, v_exps=(4,))
    assert report.passed, report.diff


def test_cauchy_guards():
    assert set(CAUCHY_KINDS) == {"c", "b", "b-spin", "d", "d-spin", "rational"}
    with pytest.raises(ValueError):
        cauchy_type_check("e", (2,), (8,), 4)
    with pytest.raises(BadShapeError):
        cauchy_type_check("c", (2,), (6, 8), 4)
    with pytest.raises(NonConvergentError):
        cauchy_type_check("c", (6,), (4,), 4)


def test_spin_prefactor_at_unit_point():
    # x^{1/2} + x^{-1/2} at x = 1 is 2, not 1
    assert spin_prefactor((0,)) == LaurentSeries.constant(2)
    assert spin_prefactor((4, 0)) == LaurentSeries({-2: 2, 2: 2})


def test_even_spin_character_at_unit_point():
    assert char_at(CharKind.D_SPIN, Partition.of(), (0,)) == LaurentSeries.constant(2)
    assert char_at(CharKind.D_SPIN, Partition.of(), (2, 0)).eval_at_one() == 4


@pytest.mark.parametrize("x", [(0,), (2, 0), (4, 2, 0)])
def test_even_orthogonal_cauchy_sums_with_unit_point(x):
    u = (2 * len(x) + 6,)
    for which in ("d", "d-spin"):
        report = cauchy_type_check(which, x, u, 5)
        assert report.passed, report.diff

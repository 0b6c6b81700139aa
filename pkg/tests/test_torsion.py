import itertools

import pytest

from distmap.curve import Curve, count_points, scalar_mul
from distmap.field import PrimeField
from distmap.pairing import weil_pairing
from distmap.torsion import (
    NotInTorsion,
    TorsionBasis,
    TorsionContext,
    TorsionNotRational,
    dlog2d,
    enumerate_subgroups,
    find_torsion_basis,
)


def test_paper_basis_ell5_validates(basis5):
    assert basis5.P == (224, 31)
    assert basis5.Q == (573, 450)
    assert not basis5.pairing_pq.is_trivial()


def test_paper_basis_ell2_validates(basis2):
    assert basis2.pairing_pq.value == 700


def test_ell3_not_rational(ex2_curve, ex2_frob):
    with pytest.raises(TorsionNotRational):
        TorsionContext(3, ex2_curve, ex2_frob)  # 9 does not divide 700


def test_congruence_guard():
    # y^2 = x^3 + x + 1 over F_29 has order 36 but t = -6 = 0 mod 3
    C = Curve(PrimeField(29), 1, 1)
    fd = count_points(C)
    assert fd.order_n % 9 == 0
    with pytest.raises(TorsionNotRational):
        TorsionContext(3, C, fd)


def test_dependent_pair_rejected(ex2_curve, ex2_frob):
    ctx = TorsionContext(5, ex2_curve, ex2_frob)
    P = (224, 31)
    with pytest.raises(NotInTorsion):
        TorsionBasis(ctx, P, scalar_mul(ex2_curve, 2, P))


def test_find_basis_deterministic(ex2_curve, ex2_frob):
    ctx = TorsionContext(5, ex2_curve, ex2_frob)
    B1 = find_torsion_basis(ctx, seed=7)
    B2 = find_torsion_basis(ctx, seed=7)
    assert (B1.P, B1.Q) == (B2.P, B2.Q)


@pytest.mark.parametrize("ell", [2, 5])
def test_find_basis_valid(ex2_curve, ex2_frob, ell):
    ctx = TorsionContext(ell, ex2_curve, ex2_frob)
    B = find_torsion_basis(ctx)
    assert scalar_mul(ex2_curve, ell, B.P) is None
    assert scalar_mul(ex2_curve, ell, B.Q) is None
    e = weil_pairing(ex2_curve, ell, B.P, B.Q)
    assert e.multiplicative_order() == ell


def test_dlog_identity(basis5):
    assert dlog2d(basis5, None) == (0, 0)


def test_dlog_constructed(basis5):
    assert dlog2d(basis5, basis5.combine(2, 3)) == (2, 3)


def test_dlog_paper_image(basis5):
    # [alpha]P = (173,194) = 0*P + 2*Q (first matrix column)
    assert dlog2d(basis5, (173, 194)) == (0, 2)


@pytest.mark.parametrize("ell", [2, 5, 7])
def test_dlog_round_trip_exhaustive(ell):
    # use a curve with rational ell-torsion for each ell
    if ell == 7:
        # y^2 = x^3 + 3 over F_43: order 49, t = -5 = 2 mod 7
        C = Curve(PrimeField(43), 0, 3)
    else:
        C = Curve(PrimeField(701), -35, 98)
    fd = count_points(C)
    ctx = TorsionContext(ell, C, fd)
    B = find_torsion_basis(ctx)
    for a, b in itertools.product(range(ell), repeat=2):
        assert dlog2d(B, B.combine(a, b)) == (a, b)


def test_dlog_rejects_non_torsion(basis5, ex2_curve):
    # a point of order 7 on the F_701 curve (700 = 4 * 25 * 7)
    A = scalar_mul(ex2_curve, 100, ex2_curve.lift_x(2))
    with pytest.raises(NotInTorsion):
        dlog2d(basis5, A)


def test_enumerate_subgroups_ell2(basis2):
    gens = enumerate_subgroups(basis2)
    assert len(gens) == 3
    assert gens[0] == basis2.Q


def test_enumerate_subgroups_ell5(basis5):
    assert len(enumerate_subgroups(basis5)) == 6


@pytest.mark.parametrize("ell", [2, 5])
def test_subgroups_partition_nonzero_points(ex2_curve, ex2_frob, ell):
    ctx = TorsionContext(ell, ex2_curve, ex2_frob)
    B = find_torsion_basis(ctx)
    seen = {}
    for g in enumerate_subgroups(B):
        for k in range(1, ell):
            A = scalar_mul(ex2_curve, k, g)
            assert A not in seen
            seen[A] = g
    assert len(seen) == ell * ell - 1

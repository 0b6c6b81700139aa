import pytest

from distmap import (
    Curve,
    PrimeField,
    TorsionBasis,
    TorsionContext,
    count_points,
    make_catalog_endo,
)


@pytest.fixture(scope="session")
def ex2_curve():
    return Curve(PrimeField(701), -35, 98)


@pytest.fixture(scope="session")
def ex2_frob(ex2_curve):
    return count_points(ex2_curve)


@pytest.fixture(scope="session")
def basis5(ex2_curve, ex2_frob):
    ctx = TorsionContext(5, ex2_curve, ex2_frob)
    return TorsionBasis(ctx, (224, 31), (573, 450))


@pytest.fixture(scope="session")
def basis2(ex2_curve, ex2_frob):
    ctx = TorsionContext(2, ex2_curve, ex2_frob)
    return TorsionBasis(ctx, (319, 0), (389, 0))


@pytest.fixture(scope="session")
def alpha(ex2_curve):
    return make_catalog_endo("alpha_701", ex2_curve)

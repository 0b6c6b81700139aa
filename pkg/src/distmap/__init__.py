"""Distortion maps on ordinary elliptic curves with rational ell-torsion.

Library + CLI: Weil-pairing DDH on <P>, endomorphism action on E[ell],
and the order-theoretic classification of distortion-map existence.
"""

from .field import PrimeField, kronecker
from .curve import (
    Curve,
    FrobeniusData,
    count_points,
    point_add,
    point_neg,
    reduce_rational_curve,
    scalar_mul,
)
from .torsion import (
    TorsionBasis,
    TorsionContext,
    dlog2d,
    enumerate_subgroups,
    find_torsion_basis,
)
from .pairing import PairingValue, miller_eval, weil_pairing
from .endo import (
    RationalEndomorphism,
    TorsionMatrix,
    char_poly_mod_ell,
    endo_eval,
    endo_matrix,
    make_catalog_endo,
    shifted_endo,
)
from .classify import (
    ClassificationReport,
    OrderData,
    classify_case,
    decompose_discriminant,
    distortion_census,
    verify_theorem1,
)
from .ddh import DdhInstance, ddh_decide, ddh_sample

__version__ = "0.1.0"

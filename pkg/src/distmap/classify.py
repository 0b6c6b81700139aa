"""Existence of distortion maps on ordinary curves with rational E[ell].

Case analysis over the tower Z[pi] <= O = End(E) <= O_K:

  - ell | [O_K : O]            -> no distortion maps at all;
  - otherwise, by the splitting of ell in O_K (Kronecker symbol of the
    fundamental discriminant): inert -> every order-ell subgroup has a
    distortion map, split -> all but two, ramified -> all but one.

The conductor c = [O_K : O] is supplied as input (curve catalog or CLI);
computing End(E) from scratch is out of scope.
"""

from .endo import TorsionMatrix, char_poly_mod_ell, quadratic_roots_mod
from .field import kronecker

NO_DISTORTION = "NoDistortion"
INERT = "Inert"
SPLIT = "Split"
RAMIFIED = "Ramified"


class NotImaginary(ValueError):
    """t^2 - 4q is not negative; not an ordinary/imaginary-quadratic setup."""


class InconsistentInput(ValueError):
    """Order data fails its divisibility or congruence sanity checks."""


class PredicateViolated(AssertionError):
    """Census count contradicts the case prediction."""


def _squarefree_decompose(n: int) -> tuple:
    """n = f^2 * d with d squarefree, by trial factorization; n >= 1."""
    f, d = 1, 1
    q = 2
    while q * q <= n:
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        f *= q ** (e // 2)
        if e % 2:
            d *= q
        q += 1 if q == 2 else 2
    return f, d * n


def decompose_discriminant(t: int, q: int) -> tuple:
    """(d_K, f_pi) with t^2 - 4q = f_pi^2 * d_K and d_K fundamental."""
    disc = t * t - 4 * q
    if disc >= 0:
        raise NotImaginary(f"t^2 - 4q = {disc} >= 0")
    f, d = _squarefree_decompose(-disc)
    d = -d
    if d % 4 == 1:  # Python: -7 % 4 == 1
        return d, f
    # d = 2, 3 mod 4: fundamental discriminant is 4d; f must absorb a 2
    if f % 2 != 0:
        raise NotImaginary(f"discriminant {disc} is not 0 or 1 mod 4")
    return 4 * d, f // 2


class OrderData:
    """Discriminant/conductor data for Z[pi] <= O <= O_K."""

    def __init__(self, d_K: int, f_pi: int, c: int):
        if d_K >= 0:
            raise InconsistentInput(f"d_K must be negative, got {d_K}")
        if d_K % 4 not in (0, 1):
            raise InconsistentInput(f"d_K = {d_K} is not 0 or 1 mod 4")
        if d_K % 4 == 1:
            _, sf = _squarefree_decompose(-d_K)
            if sf != -d_K:
                raise InconsistentInput(f"d_K = {d_K} is not fundamental")
        else:
            quo = d_K // 4
            _, sf = _squarefree_decompose(-quo)
            if sf != -quo or quo % 4 == 1:
                raise InconsistentInput(f"d_K = {d_K} is not fundamental")
        if f_pi < 1:
            raise InconsistentInput(f"f_pi must be positive, got {f_pi}")
        if c < 1 or f_pi % c != 0:
            raise InconsistentInput(f"conductor c = {c} must divide f_pi = {f_pi}")
        self.d_K = d_K
        self.f_pi = f_pi
        self.c = c
        self.index_O_Zpi = f_pi // c

    @classmethod
    def from_frobenius(cls, t: int, q: int, c: int) -> "OrderData":
        d_K, f_pi = decompose_discriminant(t, q)
        return cls(d_K, f_pi, c)

    def __repr__(self):
        return f"OrderData(d_K={self.d_K}, f_pi={self.f_pi}, c={self.c})"


class ClassificationReport:
    """Case tag plus (optionally) a per-subgroup distortion census."""

    def __init__(self, case_tag: str, ell: int, census_distorted=None,
                 eigen_subgroups=None, notes=None):
        self.case_tag = case_tag
        self.ell = ell
        self.census_distorted = census_distorted
        self.eigen_subgroups = eigen_subgroups
        self.notes = list(notes or [])

    def predicted_count(self) -> int:
        """Distorted-subgroup count predicted by the case tag."""
        return {
            NO_DISTORTION: 0,
            INERT: self.ell + 1,
            SPLIT: self.ell - 1,
            RAMIFIED: self.ell,
        }[self.case_tag]

    def __repr__(self):
        return (
            f"ClassificationReport({self.case_tag}, ell={self.ell}, "
            f"census={self.census_distorted})"
        )


def classify_case(od: OrderData, ell: int) -> ClassificationReport:
    """Case tag for the prime ell from the order data alone."""
    notes = []
    if od.c % ell == 0:
        return ClassificationReport(NO_DISTORTION, ell, notes=notes)
    if od.index_O_Zpi % ell == 0:
        notes.append(
            f"{ell} divides [O : Z[pi]] = {od.index_O_Zpi}; classification "
            "proceeds (only ell | [O_K : O] blocks distortion maps)"
        )
    if od.f_pi % ell != 0 and od.d_K % ell != 0:
        notes.append(
            f"warning: {ell} divides neither conductor index nor d_K; "
            "E[ell] cannot be fully rational for this curve"
        )
    symbol = kronecker(od.d_K, ell)
    tag = {-1: INERT, 1: SPLIT, 0: RAMIFIED}[symbol]
    return ClassificationReport(tag, ell, notes=notes)


def _vector_lines(ell: int) -> list:
    """Canonical generators of the ell + 1 lines in (Z/ell)^2.

    Matches torsion.enumerate_subgroups: (0,1) for <Q>, then (1,k)."""
    return [(0, 1)] + [(1, k) for k in range(ell)]


def _is_eigenvector(M: TorsionMatrix, v: tuple) -> bool:
    w = M.apply(v)
    # w proportional to v  <=>  cross product vanishes
    return (v[0] * w[1] - v[1] * w[0]) % M.ell == 0


def distortion_census(M: TorsionMatrix) -> ClassificationReport:
    """Mark each order-ell subgroup distorted iff it is not an eigenline."""
    ell = M.ell
    eigen = []
    distorted = 0
    for v in _vector_lines(ell):
        if _is_eigenvector(M, v):
            eigen.append(v)
        else:
            distorted += 1
    cp = char_poly_mod_ell(M)
    roots = quadratic_roots_mod(cp, ell)
    if M.is_scalar():
        tag = NO_DISTORTION
    elif not roots:
        tag = INERT
    elif len(roots) == 2:
        tag = SPLIT
    else:
        tag = RAMIFIED
    return ClassificationReport(
        tag, ell, census_distorted=distorted, eigen_subgroups=eigen
    )


def verify_theorem1(od: OrderData, M: TorsionMatrix, ell: int) -> ClassificationReport:
    """Cross-check the case prediction against a concrete census.

    M must act as a generator of O/(ell) (non-scalar), except in the
    NoDistortion case where every endomorphism reduces to a scalar.
    Raises PredicateViolated on mismatch; returns the census report."""
    predicted = classify_case(od, ell)
    census = distortion_census(M)
    if predicted.case_tag == NO_DISTORTION:
        if not M.is_scalar():
            raise PredicateViolated(
                f"predicted {predicted!r} but matrix {M!r} is not scalar"
            )
        return census
    if M.is_scalar():
        raise PredicateViolated(
            f"predicted {predicted!r} needs a non-scalar generator, got {M!r}"
        )
    if census.census_distorted != predicted.predicted_count():
        raise PredicateViolated(
            f"census {census!r} does not match prediction {predicted!r}"
        )
    if census.case_tag != predicted.case_tag:
        raise PredicateViolated(
            f"census case {census.case_tag} != predicted {predicted.case_tag}"
        )
    return census

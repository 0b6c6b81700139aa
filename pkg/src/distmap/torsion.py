"""ell-torsion bases, discrete logs in E[ell], and order-ell subgroups.

Requires the fully rational case E[ell] <= E(F_p), which forces
t = 2 mod ell and q = 1 mod ell.
"""

import random

from .curve import Curve, FrobeniusData, Point, PointNotOnCurve, point_add, scalar_mul
from .field import is_prime
from .pairing import weil_pairing

ELL_CAP = 997


class TorsionNotRational(ValueError):
    """E[ell] is not contained in E(F_p) for the requested ell."""


class SamplingExhausted(RuntimeError):
    """Random search for a basis point exceeded its trial budget."""


class NotInTorsion(ValueError):
    """Point is not killed by ell."""


class TorsionContext:
    """A curve together with a prime ell whose full torsion is rational."""

    def __init__(self, ell: int, curve: Curve, frob: FrobeniusData):
        if not is_prime(ell) or ell > ELL_CAP:
            raise ValueError(f"ell must be a prime <= {ELL_CAP}, got {ell}")
        if ell == curve.p:
            raise ValueError("ell must differ from the field characteristic")
        if frob.order_n % (ell * ell) != 0:
            raise TorsionNotRational(
                f"ell^2 = {ell * ell} does not divide #E = {frob.order_n}"
            )
        if frob.trace_t % ell != 2 % ell or frob.q % ell != 1:
            raise TorsionNotRational(
                f"need t = 2 and q = 1 mod {ell}; got t = {frob.trace_t}, q = {frob.q}"
            )
        self.ell = ell
        self.curve = curve
        self.frob = frob

    def __repr__(self):
        return f"TorsionContext(ell={self.ell}, {self.curve!r})"


class TorsionBasis:
    """A pair (P, Q) generating E[ell] with primitive Weil pairing."""

    def __init__(self, ctx: TorsionContext, P: Point, Q: Point):
        C = ctx.curve
        ell = ctx.ell
        for A in (P, Q):
            if A is None or scalar_mul(C, ell, A) is not None:
                raise NotInTorsion(f"{A} does not have exact order {ell}")
        e = weil_pairing(C, ell, P, Q)
        if e.is_trivial():
            raise NotInTorsion("pairing e(P, Q) = 1: Q lies in <P>, not a basis")
        self.ctx = ctx
        self.P = C.validate(P)
        self.Q = C.validate(Q)
        self.pairing_pq = e

    @property
    def curve(self) -> Curve:
        return self.ctx.curve

    @property
    def ell(self) -> int:
        return self.ctx.ell

    def combine(self, a: int, b: int) -> Point:
        """a*P + b*Q."""
        C = self.curve
        return point_add(C, scalar_mul(C, a, self.P), scalar_mul(C, b, self.Q))

    def __repr__(self):
        return f"TorsionBasis(ell={self.ell}, P={self.P}, Q={self.Q})"


def _random_ell_torsion_point(ctx: TorsionContext, rng: random.Random) -> Point:
    """One random point of exact order ell, or None if the draw failed."""
    C = ctx.curve
    ell = ctx.ell
    n = ctx.frob.order_n
    m = n
    while m % ell == 0:
        m //= ell
    x = rng.randrange(C.p)
    try:
        A = C.lift_x(x)
    except PointNotOnCurve:
        return None
    if rng.randrange(2):
        A = (A[0], -A[1] % C.p)
    A = scalar_mul(C, m, A)
    # A now has ell-power order; walk down to exact order ell
    while A is not None and scalar_mul(C, ell, A) is not None:
        A = scalar_mul(C, ell, A)
    return A


def find_torsion_basis(ctx: TorsionContext, seed: int = 0) -> TorsionBasis:
    """Sample a basis (P, Q) of E[ell] deterministically from the seed."""
    rng = random.Random(seed)
    budget = 64 * ctx.ell
    P = None
    for _ in range(budget):
        P = _random_ell_torsion_point(ctx, rng)
        if P is not None:
            break
    else:
        raise SamplingExhausted(f"no order-{ctx.ell} point in {budget} trials")
    for _ in range(budget):
        Q = _random_ell_torsion_point(ctx, rng)
        if Q is None:
            continue
        e = weil_pairing(ctx.curve, ctx.ell, P, Q)
        if not e.is_trivial():
            return TorsionBasis(ctx, P, Q)
    raise SamplingExhausted(
        f"no independent second generator in {budget} trials (ell={ctx.ell})"
    )


def dlog2d(B: TorsionBasis, R: Point) -> tuple:
    """The unique (a, b) mod ell with R = a*P + b*Q, by exhaustive search."""
    C = B.curve
    ell = B.ell
    R = C.validate(R)
    if scalar_mul(C, ell, R) is not None:
        raise NotInTorsion(f"{R} is not killed by {ell}")
    aP: Point = None
    for a in range(ell):
        T = aP
        for b in range(ell):
            if T == R:
                return (a, b)
            T = point_add(C, T, B.Q)
        aP = point_add(C, aP, B.P)
    raise NotInTorsion(f"{R} not expressible in the basis (corrupt basis?)")


def enumerate_subgroups(B: TorsionBasis) -> list:
    """Canonical generators of the ell + 1 order-ell subgroups of E[ell].

    Order: <Q> first, then <P + k*Q> for k = 0 .. ell-1.
    """
    gens = [B.Q]
    for k in range(B.ell):
        gens.append(B.combine(1, k))
    return gens

"""Explicit endomorphisms as rational maps and their action on E[ell].

The catalog holds exactly the built-in maps:

  sqrt_minus_one  (x, y) -> (-x, i*y) on curves y^2 = x^3 + a4*x with
                  p = 1 mod 4, where i is the smaller square root of -1;
                  minimal polynomial X^2 + 1.
  alpha_701       degree-2 endomorphism of y^2 = x^3 - 35x + 98 over F_701
                  with alpha = 386 and minimal polynomial X^2 - X + 2.
  scalar(k)       multiplication by k, minimal polynomial (X - k)^2.

Denominator zeros (kernel points) map to the identity.
"""

import re

from .curve import Curve, Point, point_add, scalar_mul
from .torsion import TorsionBasis, dlog2d


class IncompatibleCurve(ValueError):
    """Catalog endomorphism does not exist on the supplied curve."""


class ImageOffCurve(RuntimeError):
    """Internal consistency failure: a rational map left the curve."""


def _poly_eval(coeffs, x: int, p: int) -> int:
    """Evaluate a polynomial given by coefficients, highest degree first."""
    acc = 0
    for c in coeffs:
        acc = (acc * x + c) % p
    return acc


class RationalEndomorphism:
    """An endomorphism with evaluation data and minimal-polynomial data.

    minpoly is the monic quadratic X^2 - trace*X + norm.  kind selects the
    evaluation strategy: "rational" uses the stored rational maps,
    "scalar" multiplies by scalar_k, "shifted" evaluates base(A) + shift*A.
    """

    def __init__(self, curve: Curve, label: str, trace: int, norm: int,
                 kind: str = "rational", x_num=None, x_den=None,
                 y_num=None, y_den=None, scalar_k: int = 0,
                 base=None, shift: int = 0):
        self.curve = curve
        self.label = label
        self.trace = trace
        self.norm = norm
        self.kind = kind
        self.x_num = x_num
        self.x_den = x_den
        self.y_num = y_num
        self.y_den = y_den
        self.scalar_k = scalar_k
        self.base = base
        self.shift = shift

    def minpoly_mod(self, ell: int) -> tuple:
        """Coefficients (1, c1, c0) of the minimal polynomial mod ell."""
        return (1, -self.trace % ell, self.norm % ell)

    def __repr__(self):
        return f"RationalEndomorphism({self.label!r} on {self.curve!r})"


_SCALAR_RE = re.compile(r"^scalar\((-?\d+)\)$")


def make_catalog_endo(label: str, curve: Curve) -> RationalEndomorphism:
    """Instantiate a built-in endomorphism on a compatible curve."""
    p = curve.p
    if label == "sqrt_minus_one":
        if curve.a6 != 0:
            raise IncompatibleCurve(
                f"sqrt_minus_one needs y^2 = x^3 + a4*x (a6 = 0), got a6 = {curve.a6}"
            )
        if p % 4 != 1:
            raise IncompatibleCurve(f"sqrt_minus_one needs p = 1 mod 4, got p = {p}")
        i = curve.field.sqrt(p - 1)
        return RationalEndomorphism(
            curve, label, trace=0, norm=1,
            x_num=[-1 % p, 0], x_den=[1],
            y_num=[i], y_den=[1],
        )
    if label == "alpha_701":
        if p != 701 or curve.a4 != -35 % 701 or curve.a6 != 98:
            raise IncompatibleCurve(
                "alpha_701 exists only on y^2 = x^3 - 35x + 98 over F_701"
            )
        alpha = 386
        c = (alpha * alpha - 2) % p
        d = 7 * pow(1 - alpha, 4, p) % p
        ia2 = curve.field.inv(alpha * alpha)
        ia3 = curve.field.inv(pow(alpha, 3, p))
        # x-image:  alpha^-2 * (x^2 + c*x - d) / (x + c)
        # y-factor: alpha^-3 * ((x + c)^2 + d) / (x + c)^2
        return RationalEndomorphism(
            curve, label, trace=1, norm=2,
            x_num=[ia2, ia2 * c % p, ia2 * (-d) % p], x_den=[1, c],
            y_num=[ia3, ia3 * 2 * c % p, ia3 * (c * c + d) % p],
            y_den=[1, 2 * c % p, c * c % p],
        )
    m = _SCALAR_RE.match(label)
    if m:
        k = int(m.group(1))
        return RationalEndomorphism(
            curve, label, trace=2 * k, norm=k * k, kind="scalar", scalar_k=k
        )
    raise IncompatibleCurve(f"unknown endomorphism label {label!r}")


def shifted_endo(e: RationalEndomorphism, k: int) -> RationalEndomorphism:
    """The endomorphism A -> e(A) + k*A (add k times the identity map)."""
    return RationalEndomorphism(
        e.curve, f"{e.label}+scalar({k})",
        trace=e.trace + 2 * k, norm=e.norm + e.trace * k + k * k,
        kind="shifted", base=e, shift=k,
    )


def endo_eval(e: RationalEndomorphism, A: Point) -> Point:
    """Image of A; kernel points (denominator zeros) go to the identity."""
    C = e.curve
    A = C.validate(A)
    if e.kind == "scalar":
        return scalar_mul(C, e.scalar_k, A)
    if e.kind == "shifted":
        return point_add(C, endo_eval(e.base, A), scalar_mul(C, e.shift, A))
    if A is None:
        return None
    p = C.p
    x, y = A
    xd = _poly_eval(e.x_den, x, p)
    yd = _poly_eval(e.y_den, x, p)
    if xd == 0 or yd == 0:
        return None
    xi = _poly_eval(e.x_num, x, p) * C.field.inv(xd) % p
    yi = y * _poly_eval(e.y_num, x, p) % p * C.field.inv(yd) % p
    img = (xi, yi)
    if not C.contains(img):
        raise ImageOffCurve(f"{e.label} sent {A} to {img}, off the curve")
    return img


class TorsionMatrix:
    """2x2 action of an endomorphism on E[ell]; columns are the images
    of the basis points P and Q in (a, b)-coordinates."""

    def __init__(self, basis: TorsionBasis, entries):
        ell = basis.ell
        (a, b), (c, d) = entries
        self.basis = basis
        self.entries = ((a % ell, b % ell), (c % ell, d % ell))

    @property
    def ell(self) -> int:
        return self.basis.ell

    def trace(self) -> int:
        return (self.entries[0][0] + self.entries[1][1]) % self.ell

    def det(self) -> int:
        (a, b), (c, d) = self.entries
        return (a * d - b * c) % self.ell

    def is_scalar(self) -> bool:
        (a, b), (c, d) = self.entries
        return b == 0 and c == 0 and a == d

    def apply(self, v: tuple) -> tuple:
        (a, b), (c, d) = self.entries
        return ((a * v[0] + b * v[1]) % self.ell, (c * v[0] + d * v[1]) % self.ell)

    def __eq__(self, other):
        return isinstance(other, TorsionMatrix) and other.entries == self.entries

    def __repr__(self):
        (a, b), (c, d) = self.entries
        return f"TorsionMatrix(({a} {b} / {c} {d}) mod {self.ell})"


def endo_matrix(e: RationalEndomorphism, B: TorsionBasis) -> TorsionMatrix:
    """Action matrix of e on E[ell] relative to the basis (P, Q)."""
    if e.curve != B.curve:
        raise IncompatibleCurve("endomorphism and basis live on different curves")
    aP, bP = dlog2d(B, endo_eval(e, B.P))
    aQ, bQ = dlog2d(B, endo_eval(e, B.Q))
    return TorsionMatrix(B, ((aP, aQ), (bP, bQ)))


def char_poly_mod_ell(M: TorsionMatrix) -> tuple:
    """Coefficients (1, c1, c0) of X^2 - tr(M)*X + det(M) mod ell."""
    return (1, -M.trace() % M.ell, M.det() % M.ell)


def quadratic_roots_mod(coeffs: tuple, ell: int) -> list:
    """Roots in Z/ell of a monic quadratic given as (1, c1, c0)."""
    _, c1, c0 = coeffs
    return [x for x in range(ell) if (x * x + c1 * x + c0) % ell == 0]

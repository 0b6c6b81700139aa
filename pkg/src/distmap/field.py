"""Prime field arithmetic and elementary number-theoretic primitives.

Field elements are plain ints kept in canonical form [0, p).  Moduli are
capped below 2**62 so all intermediate products fit in machine arithmetic
on any sane Python build (Python ints are arbitrary precision anyway, the
cap keeps everything desk scale).
"""

MODULUS_CAP = 1 << 62


class ZeroInverse(ArithmeticError):
    """Raised when inverting 0 mod p."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3_317_044_064_679_887_385_961_981."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p for an odd prime p < 2**62.

    Immutable; safe to share between threads.
    """

    def __init__(self, p: int):
        if p < 3 or p >= MODULUS_CAP or not is_prime(p):
            raise ValueError(f"modulus must be an odd prime below 2^62, got {p}")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        """Multiplicative inverse of a mod p."""
        a %= self.p
        if a == 0:
            raise ZeroInverse(f"0 has no inverse mod {self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def legendre(self, a: int) -> int:
        """Legendre symbol (a|p) in {-1, 0, 1} via Euler's criterion."""
        a %= self.p
        if a == 0:
            return 0
        s = pow(a, (self.p - 1) // 2, self.p)
        return -1 if s == self.p - 1 else 1

    def sqrt(self, a: int):
        """Square root of a mod p, or None if a is a non-residue.

        Returns the numerically smaller root of the pair so that results
        are deterministic (r <= p - r).
        """
        p = self.p
        a %= p
        if a == 0:
            return 0
        if self.legendre(a) != 1:
            return None
        if p % 4 == 3:
            r = pow(a, (p + 1) // 4, p)
            return min(r, p - r)
        # Tonelli-Shanks
        q = p - 1
        s = 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while self.legendre(z) != -1:
            z += 1
        m = s
        c = pow(z, q, p)
        t = pow(a, q, p)
        r = pow(a, (q + 1) // 2, p)
        while t != 1:
            i = 0
            t2 = t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m = i
            c = b * b % p
            t = t * c % p
            r = r * b % p
        return min(r, p - r)


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D|n) for n >= 1.

    For odd prime n with gcd(D, n) = 1 this is the Legendre symbol.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    result = 1
    # strip factors of 2 from n
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    D %= n
    # Jacobi symbol via quadratic reciprocity on the remaining odd part
    while D != 0:
        while D % 2 == 0:
            D //= 2
            if n % 8 in (3, 5):
                result = -result
        D, n = n, D
        if D % 4 == 3 and n % 4 == 3:
            result = -result
        D %= n
    return result if n == 1 else 0

"""Exact arithmetic in Z[i] and the residue-class data attached to a primary prime."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, isqrt

import gmpy2


@dataclass(frozen=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    @classmethod
    def of(cls, z) -> "GaussianInt":
        if isinstance(z, GaussianInt):
            return z
        if isinstance(z, complex):
            if z.real != int(z.real) or z.imag != int(z.imag):
                raise ValueError(f"not a Gaussian integer: {z}")
            return cls(int(z.real), int(z.imag))
        if isinstance(z, tuple):
            return cls(int(z[0]), int(z[1]))
        return cls(int(z), 0)

    def __add__(self, other):
        o = GaussianInt.of(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianInt.of(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianInt.of(other) - self

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussianInt.of(other)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power in Z[i]")
        out, base = GaussianInt(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.re or self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(self.re, self.im)

    def divides(self, other) -> bool:
        if not self:
            return not GaussianInt.of(other)
        o = GaussianInt.of(other) * self.conj()
        n = self.norm()
        return o.re % n == 0 and o.im % n == 0

    def exact_div(self, other) -> "GaussianInt":
        o = GaussianInt.of(other)
        q, r = gi_divmod(self, o)
        if r:
            raise ValueError(f"{o} does not divide {self}")
        return q

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussianInt(0, 1)
ONE_PLUS_I = GaussianInt(1, 1)
UNITS = (GaussianInt(1), I, GaussianInt(-1), GaussianInt(0, -1))


def _round_half_to_zero(num: int, den: int) -> int:
    # nearest integer to num/den (den > 0), ties toward zero
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q < 0):
        q += 1
    return q


def gi_divmod(a, b) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division with norm(r) <= norm(b)/2."""
    a, b = GaussianInt.of(a), GaussianInt.of(b)
    if not b:
        raise ZeroDivisionError("Gaussian division by zero")
    n = b.norm()
    t = a * b.conj()
    q = GaussianInt(_round_half_to_zero(t.re, n), _round_half_to_zero(t.im, n))
    return q, a - q * b


def gi_gcd(a, b) -> GaussianInt:
    a, b = GaussianInt.of(a), GaussianInt.of(b)
    while b:
        a, b = b, gi_divmod(a, b)[1]
    return a


@dataclass(frozen=True)
class QuarticUnit:
    """i**k."""
    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 4)

    def __mul__(self, other: "QuarticUnit") -> "QuarticUnit":
        return QuarticUnit(self.k + other.k)

    def __pow__(self, n: int) -> "QuarticUnit":
        return QuarticUnit(self.k * n)

    def inverse(self) -> "QuarticUnit":
        return QuarticUnit(-self.k)

    def conj(self) -> "QuarticUnit":
        return QuarticUnit(-self.k)

    @property
    def value(self) -> GaussianInt:
        return UNITS[self.k]

    def __complex__(self):
        return complex(self.value)

    def __str__(self):
        return ("1", "i", "-1", "-i")[self.k]


def is_prime(n: int) -> bool:
    return n > 1 and bool(gmpy2.is_prime(n, 50))


def primes_1mod4(lo: int, hi: int) -> list[int]:
    """Primes l = 1 mod 4 with lo <= l < hi."""
    return [p for p in range(max(lo, 5), hi) if p % 4 == 1 and is_prime(p)]


def is_primary(z: GaussianInt) -> bool:
    # z = 1 mod (1+i)^3 = -2+2i
    return GaussianInt(-2, 2).divides(z - 1)


@dataclass(frozen=True)
class PrimaryPrime:
    lam: GaussianInt
    ell: int
    d: int
    hasse: int
    class16: int
    omega_cache: tuple = field(default=(), compare=False, repr=False)

    @property
    def a(self) -> int:
        return self.lam.re

    @property
    def b(self) -> int:
        return self.lam.im

    def omega(self, M: int = 1) -> int:
        for m, w in self.omega_cache:
            if m == M:
                return w
        return embed_i(self, M)

    def embed(self, z, M: int = 1) -> int:
        """Image of a Gaussian integer in Z/l^M under i -> omega."""
        z = GaussianInt.of(z)
        mod = self.ell ** M
        return (z.re + z.im * self.omega(M)) % mod

    def __str__(self):
        return f"l={self.ell}, lambda={self.lam}"


@lru_cache(maxsize=None)
def _omega_lift(a: int, b: int, ell: int, M: int) -> int:
    w = (-a * pow(b, -1, ell)) % ell
    mod = ell
    for _ in range(1, M):
        mod *= ell
        w = (w - (w * w + 1) * pow(2 * w, -1, mod)) % mod
    return w


def embed_i(lp: PrimaryPrime, M: int = 1) -> int:
    """The root of w^2 = -1 in Z/l^M with re(lambda) + im(lambda) w = 0 mod l."""
    if M < 1:
        raise ValueError("precision M must be >= 1")
    return _omega_lift(lp.lam.re, lp.lam.im, lp.ell, M)


def _sqrt_minus_one(ell: int) -> int:
    c = 2
    while pow(c, (ell - 1) // 2, ell) != ell - 1:
        c += 1
    return pow(c, (ell - 1) // 4, ell)


@lru_cache(maxsize=None)
def primary_decompose(ell: int, precisions: tuple = (1, 2, 3)) -> PrimaryPrime:
    if ell % 4 != 1 or not is_prime(ell):
        raise ValueError(f"{ell} is not a prime congruent to 1 mod 4")
    g = gi_gcd(GaussianInt(ell), GaussianInt(_sqrt_minus_one(ell), 1))
    cands = [u * g for u in UNITS] + [u * g.conj() for u in UNITS]
    lam = next(z for z in cands if is_primary(z) and z.im > 0)
    assert lam.norm() == ell
    lp = PrimaryPrime(lam, ell, 3 * (ell - 1) // 4, 2 * lam.re, ell % 16)
    cache = tuple((M, _omega_lift(lam.re, lam.im, ell, M)) for M in precisions)
    return PrimaryPrime(lam, ell, lp.d, lp.hasse, lp.class16, cache)


def quartic_symbol(nu, lp: PrimaryPrime) -> QuarticUnit:
    """(nu/lambda)_4 by Euler's criterion inside Z/l."""
    x = lp.embed(nu)
    if x == 0:
        raise ValueError(f"{nu} is divisible by lambda")
    ell, w = lp.ell, lp.omega()
    t = pow(x, (ell - 1) // 4, ell)
    return QuarticUnit((1, w, ell - 1, ell - w).index(t))


def chi_zero(alpha, level: int) -> QuarticUnit:
    alpha = GaussianInt.of(alpha)
    if (alpha.re + alpha.im) % 2 == 0:
        raise ValueError("chi_0 needs alpha prime to 1+i")
    if level == 2:
        # representatives {1, i} mod 2i; value eps^2
        return QuarticUnit(0) if alpha.re % 2 else QuarticUnit(2)
    if level == 3:
        mod = GaussianInt(-2, 2)
        return next(QuarticUnit(k) for k, e in enumerate(UNITS) if mod.divides(alpha - e))
    raise ValueError("level must be 2 or 3")


def hasse_check(lp: PrimaryPrime) -> bool:
    ell = lp.ell
    q = (ell - 1) // 4
    return (lp.hasse - (-1) ** q * comb(2 * q, q)) % ell == 0


@dataclass(frozen=True)
class QuarterSet:
    reps: tuple
    product: int            # prod(reps) mod l
    gamma_exp8: int         # gamma(S) = zeta_8**gamma_exp8
    gamma_sign_convention: str

    @property
    def gammaS(self) -> QuarticUnit | None:
        """gamma(S) as an element of mu_4, when it is one."""
        if self.gamma_exp8 % 2:
            return None
        return QuarticUnit(self.gamma_exp8 // 2)


def quarter_set(lp: PrimaryPrime) -> QuarterSet:
    ell, w = lp.ell, lp.omega()
    seen = bytearray(ell)
    reps = []
    for n in range(1, ell):
        if seen[n]:
            continue
        reps.append(n)
        for m in (n, ell - n, n * w % ell, (ell - n * w) % ell):
            seen[m] = 1
    P = 1
    for r in reps:
        P = P * r % ell
    roots = (1, w, ell - 1, ell - w)
    if ell % 8 == 5:
        return QuarterSet(tuple(reps), P, 2 * roots.index(P), "mu4")
    # P^2 = +-omega; gamma = zeta_8^m, the sign fixed by m in {1, 3}
    m = roots.index(P * P % ell)
    return QuarterSet(tuple(reps), P, m, "zeta8^m, m in {1,3}")


def sqrt_mod_prime(a: int, p: int) -> int:
    """Smallest square root of a mod an odd prime p (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return min(r, p - r)


def hensel_sqrt(a: int, root: int, p: int, M: int) -> int:
    """Lift a simple root of x^2 = a from Z/p to Z/p^M."""
    mod, x = p, root % p
    for _ in range(1, M):
        mod *= p
        x = (x - (x * x - a) * pow(2 * x, -1, mod)) % mod
    return x


def zeta8_residue(lp: PrimaryPrime, M: int = 1) -> int:
    """z with z^2 = omega in Z/l^M, the smaller root mod l (needs l = 1 mod 8)."""
    if lp.ell % 8 != 1:
        raise ValueError("zeta_8 lies in Z_l only for l = 1 mod 8")
    z = sqrt_mod_prime(lp.omega(), lp.ell)
    return hensel_sqrt(lp.omega(M), z, lp.ell, M)


def isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def gaussian_sqrt(z) -> GaussianInt | None:
    """Exact square root in Z[i] (the root with re > 0, or re = 0 and im >= 0), or None."""
    z = GaussianInt.of(z)
    n = isqrt_exact(z.norm())
    if n is None:
        return None
    c = isqrt_exact((n + z.re) // 2) if (n + z.re) % 2 == 0 else None
    d = isqrt_exact((n - z.re) // 2) if (n - z.re) % 2 == 0 else None
    if c is None or d is None:
        return None
    if z.im < 0:
        d = -d
    r = GaussianInt(c, d)
    if r * r != z:
        return None
    if r.re < 0 or (r.re == 0 and r.im < 0):
        r = -r
    return r

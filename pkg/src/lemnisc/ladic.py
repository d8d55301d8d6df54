"""l-adic numbers, the Lubin-Tate logarithm f0 and the ramified ring Z_l[eta].

Here eta is a root of x^(l-1) + lambda, with lambda sent into Z_l by i -> omega.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .gauss import PrimaryPrime, quarter_set, quartic_symbol, zeta8_residue, ONE_PLUS_I
from .series import cl_factorial_series, sl_factorial_series

INF = math.inf


class PrecisionError(ArithmeticError):
    """Working precision ran out before the result was determined."""


class UncoveredFamily(ValueError):
    """l = 5 mod 16: no integral A_lambda is attached to this class."""


class _Vanished:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "VANISHED"

    def __bool__(self):
        return False


VANISHED = _Vanished()


def ord_l(n: int, ell: int) -> float:
    if n == 0:
        return INF
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


# ---------------------------------------------------------------------------
# LAdicNumber

@dataclass(frozen=True)
class LAdicNumber:
    """ell^val * unit, known modulo ell^prec (absolute precision).

    Zero at working precision has val = inf and unit = 0.
    """
    ell: int
    val: float
    unit: int
    prec: int

    @classmethod
    def make(cls, ell: int, v, x: int, prec: int) -> "LAdicNumber":
        """Normalise ell^v * x mod ell^prec."""
        if x == 0 or v >= prec:
            return cls(ell, INF, 0, prec)
        while x % ell == 0:
            x //= ell
            v += 1
            if v >= prec:
                return cls(ell, INF, 0, prec)
        return cls(ell, v, x % ell ** (prec - v), prec)

    @classmethod
    def from_int(cls, ell: int, n: int, prec: int) -> "LAdicNumber":
        return cls.make(ell, 0, n, prec)

    @classmethod
    def from_fraction(cls, ell: int, q, prec: int) -> "LAdicNumber":
        q = Fraction(q)
        if q == 0:
            return cls(ell, INF, 0, prec)
        num, den = q.numerator, q.denominator
        v = 0
        while den % ell == 0:
            den //= ell
            v -= 1
        while num % ell == 0:
            num //= ell
            v += 1
        if v >= prec:
            return cls(ell, INF, 0, prec)
        m = ell ** (prec - v)
        return cls(ell, v, num * pow(den, -1, m) % m, prec)

    @classmethod
    def zero(cls, ell: int, prec: int) -> "LAdicNumber":
        return cls(ell, INF, 0, prec)

    @property
    def relprec(self):
        return self.prec - self.val

    def is_zero(self) -> bool:
        return self.val == INF

    def _veff(self):
        return self.prec if self.val == INF else self.val

    def _coerce(self, other):
        if isinstance(other, LAdicNumber):
            if other.ell != self.ell:
                raise ValueError("mixing different primes")
            return other
        if isinstance(other, (int, Fraction)):
            return LAdicNumber.from_fraction(self.ell, other, self.prec + 64)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec, other.prec)
        if self.is_zero() and other.is_zero():
            return LAdicNumber(self.ell, INF, 0, prec)
        v = min(self._veff(), other._veff())
        ell = self.ell
        x = 0
        for t in (self, other):
            if not t.is_zero():
                x += t.unit * ell ** (t.val - v)
        return LAdicNumber.make(ell, v, x, prec)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        m = self.ell ** (self.prec - self.val)
        return LAdicNumber(self.ell, self.val, -self.unit % m, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec + other._veff(), other.prec + self._veff())
        if self.is_zero() or other.is_zero():
            return LAdicNumber(self.ell, INF, 0, prec)
        return LAdicNumber.make(self.ell, self.val + other.val, self.unit * other.unit, prec)

    __rmul__ = __mul__

    def inverse(self) -> "LAdicNumber":
        if self.is_zero():
            raise ZeroDivisionError("l-adic zero at working precision")
        r = self.relprec
        m = self.ell ** r
        return LAdicNumber(self.ell, -self.val, pow(self.unit, -1, m), r - self.val)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return LAdicNumber(self.ell, INF, 0, self.prec - other.val)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = LAdicNumber.from_int(self.ell, 1, self.prec + 64 * (n == 0))
        base = self
        first = True
        while n:
            if n & 1:
                out = base if first else out * base
                first = False
            n >>= 1
            if n:
                base = base * base
        return out

    def residue(self, k: int) -> int:
        """Image in Z/l^k; requires an integral value known to that precision."""
        if self.prec < k:
            raise PrecisionError(f"need precision {k}, have {self.prec}")
        if self.is_zero():
            return 0
        if self.val < 0:
            raise ValueError("non-integral l-adic number has no residue")
        m = self.ell ** k
        return self.unit * self.ell ** self.val % m

    def __eq__(self, other):
        if not isinstance(other, LAdicNumber):
            other = self._coerce(other)
            if other is NotImplemented:
                return False
        p = min(self.prec, other.prec)
        return (self - other).is_zero() or (self - other).val >= p

    def __hash__(self):
        return hash((self.ell, self.prec))

    def __repr__(self):
        if self.is_zero():
            return f"O({self.ell}^{self.prec})"
        return f"{self.ell}^{self.val}*{self.unit} + O({self.ell}^{self.prec})"


@dataclass(frozen=True)
class LAdicSeries:
    coeffs: tuple
    trunc: int

    def __getitem__(self, n: int) -> LAdicNumber:
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def min_valuation(self):
        return min((c.val for c in self.coeffs), default=INF)

    def is_integral(self) -> bool:
        return self.min_valuation() >= 0

    def residues(self, k: int) -> list[int]:
        return [c.residue(k) for c in self.coeffs]


def _zeros(ell, n, prec):
    z = LAdicNumber.zero(ell, prec)
    return [z] * n


def _lseries_mul(a: list, b: list, n: int, ell: int, prec: int) -> list:
    out = _zeros(ell, n, prec)
    for i, x in enumerate(a[:n]):
        if x.is_zero():
            continue
        for j in range(min(len(b), n - i)):
            if not b[j].is_zero():
                out[i + j] = out[i + j] + x * b[j]
    return out


def _lseries_pow(a: list, e: int, n: int, ell: int, prec: int) -> list:
    out = [LAdicNumber.from_int(ell, 1, prec)] + _zeros(ell, n - 1, prec)
    base = list(a[:n])
    while e:
        if e & 1:
            out = _lseries_mul(out, base, n, ell, prec)
        e >>= 1
        if e:
            base = _lseries_mul(base, base, n, ell, prec)
    return out


# ---------------------------------------------------------------------------
# Z_l[eta]

@dataclass(frozen=True)
class EtaRingElement:
    """c_0 + c_1 eta + ... + c_{l-2} eta^(l-2) with c_j in Z/l^M and eta^(l-1) = -lambda."""
    coeffs: tuple
    lp: PrimaryPrime
    M: int

    @classmethod
    def constant(cls, lp: PrimaryPrime, c: int, M: int) -> "EtaRingElement":
        m = lp.ell ** M
        return cls((c % m,) + (0,) * (lp.ell - 2), lp, M)

    @classmethod
    def eta(cls, lp: PrimaryPrime, M: int) -> "EtaRingElement":
        cs = [0] * (lp.ell - 1)
        cs[1 % (lp.ell - 1)] = 1
        return cls(tuple(cs), lp, M)

    @property
    def modulus(self) -> int:
        return self.lp.ell ** self.M

    def _check(self, other):
        if not isinstance(other, EtaRingElement):
            return EtaRingElement.constant(self.lp, int(other), self.M)
        if other.lp != self.lp or other.M != self.M:
            raise ValueError("elements of different eta-rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        m = self.modulus
        return EtaRingElement(tuple((x + y) % m for x, y in zip(self.coeffs, other.coeffs)), self.lp, self.M)

    __radd__ = __add__

    def __neg__(self):
        m = self.modulus
        return EtaRingElement(tuple(-x % m for x in self.coeffs), self.lp, self.M)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        n = self.lp.ell - 1
        m = self.modulus
        lam = self.lp.embed(self.lp.lam, self.M)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        prod[i + j] += x * y
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            out[k - n] -= lam * prod[k]
        return EtaRingElement(tuple(c % m for c in out), self.lp, self.M)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = EtaRingElement.constant(self.lp, 1, self.M)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        return isinstance(other, EtaRingElement) and self.coeffs == other.coeffs and self.lp == other.lp

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def eta_valuation(self) -> float:
        """min_j (j + (l-1) ord_l c_j); inf if zero mod l^M (i.e. mod eta^((l-1)M))."""
        n = self.lp.ell - 1
        return min((j + n * ord_l(c, self.lp.ell) for j, c in enumerate(self.coeffs) if c), default=INF)


def eval_at_eta(series: LAdicSeries, lp: PrimaryPrime, M: int) -> EtaRingElement:
    """Sum s_m eta^m, with eta^m = eta^(m mod (l-1)) (-lambda)^(m div (l-1))."""
    ell = lp.ell
    n = ell - 1
    if series.trunc < n * M:
        raise PrecisionError("truncation must be at least (l-1)M")
    neg_lam = LAdicNumber.from_int(ell, -lp.embed(lp.lam, M + 2), M + 2)
    m = ell ** M
    out = [0] * n
    for k, s in enumerate(series.coeffs):
        if s.is_zero():
            continue
        q, r = divmod(k, n)
        if s.val + q >= M:
            continue
        out[r] = (out[r] + (s * neg_lam ** q).residue(M)) % m
    return EtaRingElement(tuple(out), lp, M)


# ---------------------------------------------------------------------------
# the Lubin-Tate logarithm

def _lam_ladic(lp: PrimaryPrime, K: int) -> LAdicNumber:
    return LAdicNumber.from_int(lp.ell, lp.embed(lp.lam, K), K)


def _f0_coeffs(lp: PrimaryPrime, N: int, K: int) -> list:
    """c_m for m < N.  Only m = 1 mod (l-1) are nonzero.

    Comparing x^m in f0(lam x + x^l) = lam f0(x):
        c_m (lam - lam^m) = sum_{j>=1} c_{m-j(l-1)} binom(m-j(l-1), j) lam^(m-j(l-1)-j).
    """
    ell = lp.ell
    n = ell - 1
    lam = _lam_ladic(lp, K)
    lam_pows = [LAdicNumber.from_int(ell, 1, K)]
    for _ in range(1, N):
        lam_pows.append(lam_pows[-1] * lam)
    c = _zeros(ell, N, K)
    if N > 1:
        c[1] = LAdicNumber.from_int(ell, 1, K)
    for m in range(1 + n, N, n):
        acc = LAdicNumber.zero(ell, K)
        for j in range(1, m // n + 1):
            k = m - j * n
            if k < 1 or c[k].is_zero():
                continue
            b = comb(k, j)
            if b == 0:
                continue
            acc = acc + c[k] * b * lam_pows[k - j]
        c[m] = acc / (lam - lam_pows[m])
    return c


def lubin_tate_log(lp: PrimaryPrime, N: int, M: int = 4) -> LAdicSeries:
    """f0 = x + ..., the logarithm of the formal group with [lambda](x) = lambda x + x^l.

    Coefficients are returned with absolute precision at least M; the internal
    precision carries a guard for the divisions by lambda - lambda^m.
    """
    ell = lp.ell
    guard = 2 + 2 * (N // (ell - 1) + 1).bit_length()
    for _ in range(6):
        c = _f0_coeffs(lp, N, M + guard)
        if all(x.prec >= M for x in c):
            return LAdicSeries(tuple(c), N)
        guard *= 2
    raise PrecisionError("could not reach the requested precision for f0")


def _compose_check_residual(lp: PrimaryPrime, f0: LAdicSeries) -> LAdicSeries:
    """f0(lam x + x^l) - lam f0(x), coefficientwise below trunc."""
    ell, N = lp.ell, f0.trunc
    prec = min(c.prec for c in f0.coeffs)
    lam = _lam_ladic(lp, prec + 8)
    out = _zeros(ell, N, prec)
    for k, ck in enumerate(f0.coeffs):
        if ck.is_zero():
            continue
        for j in range(k + 1):
            deg = k + j * (ell - 1)
            if deg >= N:
                break
            out[deg] = out[deg] + ck * comb(k, j) * lam ** (k - j)
    for k, ck in enumerate(f0.coeffs):
        out[k] = out[k] - lam * ck
    return LAdicSeries(tuple(out), N)


def lt_identity_residual_ok(lp: PrimaryPrime, f0: LAdicSeries, M: int) -> bool:
    """Every coefficient of f0(lam x + x^l) - lam f0(x) vanishes to precision M."""
    res = _compose_check_residual(lp, f0)
    return all(c.is_zero() or c.val >= M for c in res.coeffs)


def f0_valuation_bound_ok(lp: PrimaryPrime, f0: LAdicSeries) -> bool:
    n = lp.ell - 1
    return all(c.is_zero() or c.val >= -((m - 1) // n) for m, c in enumerate(f0.coeffs) if m)


def lt_type_check(lp: PrimaryPrime, f0: LAdicSeries, N: int | None = None) -> bool:
    """(l f0(x) - H f0(x^l) + f0(x^(l^2))) / l integral up to deg N."""
    ell, H = lp.ell, lp.hasse
    N = f0.trunc if N is None else min(N, f0.trunc)
    prec = min(c.prec for c in f0.coeffs[:N])
    acc = [c * ell for c in f0.coeffs[:N]]
    for k in range(1, N):
        if k * ell < N and not f0[k].is_zero():
            acc[k * ell] = acc[k * ell] - f0[k] * H
        if k * ell * ell < N and not f0[k].is_zero():
            acc[k * ell * ell] = acc[k * ell * ell] + f0[k]
    for c in acc:
        if c.is_zero():
            if c.prec < 1:
                raise PrecisionError("type check lost all precision")
            continue
        if c.val < 1:
            return False
    return prec >= 1


def _derivative_int_series(lp: PrimaryPrime, f0: LAdicSeries, K: int) -> list[int]:
    """f0' as integers mod l^K.  f0' is integral, which is asserted here."""
    out = []
    for m in range(1, f0.trunc):
        t = f0[m] * m
        if not t.is_zero() and t.val < 0:
            raise ValueError("f0' is not integral")
        out.append(t.residue(K))
    return out


def _int_mul(a: list[int], b: list[int], n: int, mod: int) -> list[int]:
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(min(len(b), n - i)):
                if b[j]:
                    out[i + j] += x * b[j]
    return [v % mod for v in out]


def _int_pow(a: list[int], e: int, n: int, mod: int) -> list[int]:
    out = [1 % mod] + [0] * (n - 1)
    base = a[:n]
    while e:
        if e & 1:
            out = _int_mul(out, base, n, mod)
        e >>= 1
        if e:
            base = _int_mul(base, base, n, mod)
    return out


def f0_derivative_relation(lp: PrimaryPrime, f0: LAdicSeries, N: int | None = None) -> bool:
    """f0^(l)(x) + H (f0'(x))^l = 0 mod l, checked below deg N - l."""
    ell, H = lp.ell, lp.hasse
    N = f0.trunc if N is None else min(N, f0.trunc)
    top = N - ell
    if top <= 0:
        raise ValueError("N must exceed l")
    fp = _derivative_int_series(lp, f0, 1)
    pw = _int_pow(fp, ell, top, ell)
    for k in range(top):
        m = k + ell
        fall = math.perm(m, ell)
        t = f0[m] * fall
        if not t.is_zero() and t.val < 0:
            return False
        if (t.residue(1) + H * pw[k]) % ell:
            return False
    return True


# ---------------------------------------------------------------------------
# Cl o f0, Sl o f0 and egs

def _kappas(lp: PrimaryPrime, count: int, K: int, kind: str) -> list:
    """Coefficients of Cl (kind 'cl') or Sl (kind 'sl') at u^(d + a(l-1)), a < count."""
    ell, d = lp.ell, lp.d
    top = d + (count - 1) * (ell - 1) + 1
    if kind == "cl":
        G = cl_factorial_series(top)
        factor = Fraction(ell - 1, 2)
    else:
        G = sl_factorial_series(top)
        factor = Fraction(ell - 1, 4)
    out = []
    for a in range(count):
        n = d + a * (ell - 1)
        out.append(LAdicNumber.from_fraction(ell, factor * Fraction(G[n], math.factorial(n)), K))
    return out


def _family(lp: PrimaryPrime) -> str:
    return "cl" if lp.ell % 8 == 1 else "sl"


def _phi_coeffs(lp: PrimaryPrime, J: int, K: int, kind: str) -> list:
    """Phi_0..Phi_{J-1} where (Cl o f0)(x) = x^d Phi(x^(l-1))."""
    ell, d, n = lp.ell, lp.d, lp.ell - 1
    c = _f0_coeffs(lp, 1 + n * J, K)
    F = [c[1 + n * j] for j in range(J)]
    kap = _kappas(lp, J, K, kind)
    Phi = _zeros(ell, J, K)
    for a in range(J):
        if kap[a].is_zero() and kap[a].prec >= K:
            continue
        P = _lseries_pow(F, d + a * n, J - a, ell, K)
        for j in range(J - a):
            Phi[a + j] = Phi[a + j] + kap[a] * P[j]
    return Phi


def _phi_checked(lp: PrimaryPrime, J: int, M: int, kind: str) -> list:
    guard = 4 + 2 * J
    for _ in range(6):
        Phi = _phi_coeffs(lp, J, M + guard, kind)
        if all(p.prec >= M for p in Phi):
            return Phi
        guard *= 2
    raise PrecisionError("precision exhausted composing with f0")


def _compose_f0(lp: PrimaryPrime, N: int, M: int, kind: str) -> LAdicSeries:
    ell, d, n = lp.ell, lp.d, lp.ell - 1
    if N < d + 1:
        raise ValueError("N must be at least d+1")
    J = (N - 1 - d) // n + 1
    Phi = _phi_checked(lp, J, M, kind)
    out = _zeros(ell, N, M)
    for j, p in enumerate(Phi):
        out[d + j * n] = p
    return LAdicSeries(tuple(out), N)


def cl_compose_f0(lp: PrimaryPrime, N: int, M: int = 3) -> LAdicSeries:
    """(Cl o f0)(x) to degree N, Cl(u) = ((l-1)/2) sum_a D_{d+a(l-1)} u^(d+a(l-1))."""
    return _compose_f0(lp, N, M, "cl")


def sl_compose_f0(lp: PrimaryPrime, N: int, M: int = 3) -> LAdicSeries:
    """(Sl o f0)(x) to degree N, Sl(u) = ((l-1)/4) sum_a C_{d+a(l-1)} u^(d+a(l-1))."""
    return _compose_f0(lp, N, M, "sl")


def egs_unit_part(lp: PrimaryPrime, M: int = 2) -> LAdicNumber:
    """E with egs = eta^d E; E = Phi(-lambda) is an l-adic integer, here mod l^M."""
    Phi = _phi_checked(lp, M, M, _family(lp))
    ell = lp.ell
    neg_lam = -_lam_ladic(lp, M + 2)
    E = LAdicNumber.zero(ell, M)
    for j, p in enumerate(Phi):
        if p.is_zero():
            continue
        if p.val < 0:
            raise ArithmeticError("Cl o f0 is not integral")
        E = E + p * neg_lam ** j
    return LAdicNumber.make(ell, 0, E.residue(M), M)


def egs_ladic(lp: PrimaryPrime, M: int = 2) -> EtaRingElement:
    """egs(lambda) in Z_l[eta]/l^M, through (Cl o f0)(eta) or (Sl o f0)(eta)."""
    E = egs_unit_part(lp, M)
    cs = [0] * (lp.ell - 1)
    cs[lp.d] = E.residue(M)
    return EtaRingElement(tuple(cs), lp, M)


def egs_leading_form(lp: PrimaryPrime, M: int = 1) -> EtaRingElement:
    """((l-1)/2) D_d eta^d (or ((l-1)/4) C_d eta^d), the expected value mod eta^l."""
    kap = _kappas(lp, 1, M + 4, _family(lp))[0]
    cs = [0] * (lp.ell - 1)
    cs[lp.d] = kap.residue(M)
    return EtaRingElement(tuple(cs), lp, M)


def egs_eta_valuation(lp: PrimaryPrime, M: int = 2) -> float:
    return egs_ladic(lp, M).eta_valuation()


# ---------------------------------------------------------------------------
# A_lambda

TABLE_UNITS = {
    # (l mod 16) -> units indexed by chi_lambda(1+i) in the order 1, -1, i, -i
    1: ("i*sqrt2", "sqrt2", "zeta8", "i*zeta8"),
    9: ("i*zeta8", "zeta8", "i*sqrt2", "sqrt2"),
}
_CHI_COLUMN = {0: 0, 2: 1, 1: 2, 3: 3}   # quartic exponent k of i^k -> column


def table_unit(lp: PrimaryPrime) -> str:
    """Name of the unit attached to the prime's (l mod 16, chi(1+i)) cell."""
    if lp.ell % 8 != 1:
        return "1"
    k = quartic_symbol(ONE_PLUS_I, lp).k
    return TABLE_UNITS[lp.ell % 16][_CHI_COLUMN[k]]


def unit_residue(name: str, lp: PrimaryPrime, M: int = 1) -> int:
    """Image of a unit of Z[zeta8] under zeta8 -> z, i -> omega (z^2 = omega)."""
    m = lp.ell ** M
    w = lp.omega(M)
    z = zeta8_residue(lp, M) if lp.ell % 8 == 1 else None
    if name == "1":
        return 1
    sqrt2 = (z + pow(z, -1, m)) % m
    return {"sqrt2": sqrt2, "i*sqrt2": w * sqrt2 % m, "zeta8": z, "i*zeta8": w * z % m}[name]


def kappa_residue(lp: PrimaryPrime, M: int = 1) -> int:
    """kappa with lambda~ = kappa eta^((l-1)/4) (1 + O(eta)), reduced mod l^M.

    l = 5 mod 8: kappa = 1.  l = 1 mod 8: kappa = P z^(-m) with P = prod S and
    gamma(S) = zeta8^m.  Only M = 1 is determined by the leading form.
    """
    if lp.ell % 8 == 5:
        return 1
    if M != 1:
        raise ValueError("kappa is only pinned down mod l")
    qs = quarter_set(lp)
    ell = lp.ell
    z = zeta8_residue(lp, 1)
    return qs.product * pow(pow(z, qs.gamma_exp8, ell), -1, ell) % ell


def minimal_residue(x: int, m: int) -> int:
    x %= m
    return x - m if x > m // 2 else x


def a_lambda_ladic(lp: PrimaryPrime, M: int = 2):
    """The integer a_lambda read off egs_ladic, or VANISHED.

    egs = A lambda~^3 and lambda~^3 = kappa^3 eta^d (1 + O(eta)), so A = E / kappa^3
    mod l; for l = 1 mod 8 A = a * unit and a is the minimal residue of A / unit.
    """
    if M < 2:
        raise ValueError("M >= 2 required")
    if lp.ell % 16 == 5:
        raise UncoveredFamily(f"l={lp.ell} = 5 mod 16")
    ell = lp.ell
    E = egs_unit_part(lp, M).residue(1)
    if E == 0:
        return VANISHED
    A = E * pow(kappa_residue(lp), -3, ell) % ell
    a = A * pow(unit_residue(table_unit(lp), lp), -1, ell) % ell
    return minimal_residue(a, ell)


# ---------------------------------------------------------------------------
# Omega_l = (d/du)^l - H d/du, with d/du = (1/f0'(x)) d/dx

def _inv_series(a: list[int], n: int, mod: int) -> list[int]:
    inv0 = pow(a[0], -1, mod)
    out = [0] * n
    out[0] = inv0
    for k in range(1, n):
        s = sum(a[j] * out[k - j] for j in range(1, min(k, len(a) - 1) + 1) if a[j])
        out[k] = -s * inv0 % mod
    return out


def omega_operator_apply(lp: PrimaryPrime, phi: LAdicSeries, a: int, K: int | None = None) -> LAdicSeries:
    """Omega_l^a phi, valid below deg trunc - a l.  phi must be integral."""
    ell, H = lp.ell, lp.hasse
    if a == 0:
        return phi
    if not phi.is_integral():
        raise ValueError("phi must be integral")
    N = phi.trunc
    top = N - a * ell
    if top <= 0:
        raise ValueError(f"truncation {N} too small for {a} applications")
    K = a + 2 if K is None else K
    mod = ell ** K
    f0 = lubin_tate_log(lp, N + 1, K + 1)
    inv = _inv_series(_derivative_int_series(lp, f0, K), N, mod)
    sparse = [(j, c) for j, c in enumerate(inv) if c]

    def D(s):
        ds = [(k + 1) * s[k + 1] % mod for k in range(len(s) - 1)]
        out = [0] * len(ds)
        for j, c in sparse:
            for k in range(len(ds) - j):
                if ds[k]:
                    out[k + j] += c * ds[k]
        return [v % mod for v in out]

    cur = phi.residues(K)
    for _ in range(a):
        d1 = D(cur)
        dl = d1
        for _ in range(ell - 1):
            dl = D(dl)
        cur = [(dl[k] - H * d1[k]) % mod for k in range(len(dl))]
    return LAdicSeries(tuple(LAdicNumber.from_int(ell, v, K) for v in cur[:top]), top)


def omega_integrality(lp: PrimaryPrime, phi: LAdicSeries, a: int) -> bool:
    return omega_operator_apply(lp, phi, a).min_valuation() >= a


def cl_f0_division_check(lp: PrimaryPrime, N: int, M: int | None = None, series: LAdicSeries | None = None,
                         require_vanishing: bool = True) -> bool:
    """(Cl o f0)(x) / (lambda x + x^l) integral up to deg N - l.

    Only meaningful when egs(lambda) = 0; a non-vanishing prime raises ValueError.
    """
    ell = lp.ell
    if series is None:
        if require_vanishing and egs_unit_part(lp, 2).residue(1) != 0:
            raise ValueError(f"l={ell}: egs does not vanish, the division hypothesis fails")
        M = 2 + N // (ell - 1) if M is None else M
        series = cl_compose_f0(lp, N, M) if ell % 8 == 1 else sl_compose_f0(lp, N, M)
    K = min(c.prec for c in series.coeffs)
    lam = _lam_ladic(lp, K + 4)
    # q (lam x + x^l) = s: lam q_{k-1} + q_{k-l} = s_k
    top = min(N, series.trunc) - ell
    q = _zeros(ell, max(top, 0), K)
    for k in range(top):
        t = series[k + 1]
        if k - (ell - 1) >= 0:
            t = t - q[k - (ell - 1)]
        q[k] = t / lam
    if any(c.prec < 1 for c in q):
        raise PrecisionError("division check lost all precision; raise M")
    return all(c.is_zero() or c.val >= 0 for c in q)

"""Arbitrary-precision evaluation: the lemniscate constant, sl and cl at complex points,
elliptic Gauss sums, lambda~, root numbers and the value L(1) of the Hecke L-series.

All functions take a precision P in bits and compute inside mpmath.workprec.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp
from mpmath import mpc, mpf

from .gauss import (GaussianInt, PrimaryPrime, QuarticUnit, chi_zero, quarter_set,
                    quartic_symbol, ONE_PLUS_I)
from .ladic import UncoveredFamily, table_unit
from .series import sl_factorial_series

BigComplex = mpc

DEFAULT_PREC = 256
VANISH_THRESHOLD = mpf("1e-20")
HALVING_RADIUS = 0.8
_GUARD = 24


class PoleError(ValueError):
    """Argument too close to a pole of sl."""


# ---------------------------------------------------------------------------
# the lemniscate constant

@lru_cache(maxsize=16)
def lemniscate_constant(P: int = DEFAULT_PREC) -> mpf:
    """varpi = pi / AGM(1, sqrt 2) = 2.62205..."""
    with mp.workprec(P + 8):
        return +(mp.pi / mp.agm(1, mp.sqrt(2)))


def lemniscate_quadrature(P: int = DEFAULT_PREC) -> mpf:
    """2 * int_0^1 dt / sqrt(1 - t^4) by Gauss-Legendre quadrature.

    With t = 1 - v^2 the integrand becomes 4 / sqrt((2 - v^2)(1 + (1 - v^2)^2)), smooth on [0, 1].
    """
    with mp.workprec(P + 16):
        f = lambda v: 4 / mp.sqrt((2 - v * v) * (1 + (1 - v * v) ** 2))
        return mp.quad(f, [0, 1], method="gauss-legendre")


# ---------------------------------------------------------------------------
# sl and cl

@dataclass(frozen=True)
class LatticePoint:
    """m (1-i) varpi + n (1-i) varpi i."""
    m: int
    n: int


def _period(P):
    return (1 - 1j) * lemniscate_constant(P)


def reduce_mod_lattice(u, P: int = DEFAULT_PREC) -> tuple[mpc, LatticePoint]:
    with mp.workprec(P + _GUARD):
        w = _period(P)
        z = mpc(u) / w
        m, n = int(mp.nint(z.real)), int(mp.nint(z.imag))
        return mpc(u) - w * mpc(m, n), LatticePoint(m, n)


@lru_cache(maxsize=32)
def _sl_coeffs(P: int) -> tuple:
    """Ordinary coefficients C_{4k+1} of sl, enough for |u| < HALVING_RADIUS at P bits."""
    # |C_n| ~ (sqrt 2 / varpi)^n and the nearest pole sits at varpi / sqrt 2
    ratio = HALVING_RADIUS * math.sqrt(2) / 2.62205755429
    deg = int((P + _GUARD + 10) / -math.log2(ratio)) + 8
    g = sl_factorial_series(deg + 2)
    with mp.workprec(P + _GUARD):
        out = []
        f = mpf(1)
        for n in range(1, deg + 1):
            f *= n
            if n % 4 == 1:
                out.append(mpf(g[n]) / f)
        return tuple(out)


def _sl_pair_small(u: mpc, P: int) -> tuple[mpc, mpc]:
    C = _sl_coeffs(P)
    u4 = u ** 4
    s = mpc(0)
    sp = mpc(0)
    # Horner in w = u^4
    for k in range(len(C) - 1, -1, -1):
        s = s * u4 + C[k]
        sp = sp * u4 + (4 * k + 1) * C[k]
    return s * u, sp


def _check_pole(u: mpc, P: int) -> None:
    w = _period(P)
    z = u / w
    for p in (mpf(1) / 2, -mpf(1) / 2, mpc(0, 0.5), mpc(0, -0.5)):
        if abs(z - p) * abs(w) < mpf(2) ** (-P // 4):
            raise PoleError(f"sl has a pole near {u}")


def sl_pair(u, P: int = DEFAULT_PREC) -> tuple[mpc, mpc]:
    """(sl(u), sl'(u)): reduce mod (1-i) varpi Z[i], halve, sum the series, duplicate back.

    sl(2u) = 2 s s' / (1 + s^4),  sl'(2u) = (1 - 6 s^4 + s^8) / (1 + s^4)^2.
    """
    with mp.workprec(P + _GUARD):
        v, _ = reduce_mod_lattice(u, P)
        _check_pole(v, P)
        k = 0
        while abs(v) >= HALVING_RADIUS:
            v /= 2
            k += 1
        s, sp = _sl_pair_small(v, P)
        for _ in range(k):
            s4 = s ** 4
            s, sp = 2 * s * sp / (1 + s4), (1 - 6 * s4 + s4 * s4) / (1 + s4) ** 2
        return s, sp


def sl_complex(u, P: int = DEFAULT_PREC) -> mpc:
    return sl_pair(u, P)[0]


def sl_prime_complex(u, P: int = DEFAULT_PREC) -> mpc:
    return sl_pair(u, P)[1]


def cl_complex(u, P: int = DEFAULT_PREC) -> mpc:
    """cl(u) = sl(u + varpi/2)."""
    with mp.workprec(P + _GUARD):
        return sl_complex(mpc(u) + lemniscate_constant(P) / 2, P)


def sl_oracle(u, P: int = DEFAULT_PREC) -> mpc:
    """sl(u) = sd(sqrt2 u | m = 1/2) / sqrt 2, via mpmath's Jacobi functions."""
    with mp.workprec(P + _GUARD):
        r2 = mp.sqrt(2)
        return mp.ellipfun("sd", r2 * mpc(u), m=mpf(1) / 2) / r2


# ---------------------------------------------------------------------------
# division values phi(r/lambda), psi(r/lambda)

def _reduce_fraction(r: GaussianInt, lp: PrimaryPrime) -> tuple[int, int]:
    """r / lambda = (x + y i) / l with x, y reduced into (-l/2, l/2]."""
    num = r * lp.lam.conj()
    ell = lp.ell

    def red(t):
        t %= ell
        return t - ell if t > ell // 2 else t

    return red(num.re), red(num.im)


def phi_psi_eval(r, lp: PrimaryPrime, P: int = DEFAULT_PREC) -> tuple[mpc, mpc]:
    """(phi(r/lambda), psi(r/lambda)) with phi(z) = sl((1-i) varpi z), psi(z) = cl((1-i) varpi z)."""
    r = GaussianInt.of(r)
    if lp.lam.divides(r):
        raise ValueError("lambda divides r")
    x, y = _reduce_fraction(r, lp)
    with mp.workprec(P + _GUARD):
        u = _period(P) * mpc(x, y) / lp.ell
        return sl_complex(u, P), cl_complex(u, P)


def _unit(q: QuarticUnit) -> mpc:
    return (mpc(1), mpc(0, 1), mpc(-1), mpc(0, -1))[q.k]


def egs_numeric(lp: PrimaryPrime, P: int = DEFAULT_PREC) -> mpc:
    """sum_{r in S} chi(r) phi(r/lambda) (l = 5 mod 8) or sum_{nu in S u iS} chi(nu) psi(nu/lambda)."""
    S = quarter_set(lp).reps
    with mp.workprec(P + _GUARD):
        total = mpc(0)
        if lp.ell % 8 == 5:
            for r in S:
                total += _unit(quartic_symbol(r, lp)) * phi_psi_eval(r, lp, P)[0]
        else:
            for r in S:
                for nu in (GaussianInt(r), GaussianInt(0, r)):
                    total += _unit(quartic_symbol(nu, lp)) * phi_psi_eval(nu, lp, P)[1]
        return total


def gamma_numeric(lp: PrimaryPrime) -> mpc:
    return mp.expjpi(mpf(quarter_set(lp).gamma_exp8) / 4)


def lambda_tilde_numeric(lp: PrimaryPrime, P: int = DEFAULT_PREC) -> mpc:
    """gamma(S)^-1 prod_{r in S} phi(r/lambda)."""
    S = quarter_set(lp).reps
    with mp.workprec(P + _GUARD):
        t = 1 / gamma_numeric(lp)
        for r in S:
            t *= phi_psi_eval(r, lp, P)[0]
        return t


# ---------------------------------------------------------------------------
# A_lambda

UNIT_VALUES = {
    "1": lambda: mpc(1),
    "sqrt2": lambda: mpc(mp.sqrt(2)),
    "i*sqrt2": lambda: mpc(0, mp.sqrt(2)),
    "zeta8": lambda: mp.expjpi(mpf(1) / 4),
    "i*zeta8": lambda: mpc(0, 1) * mp.expjpi(mpf(1) / 4),
}


@dataclass(frozen=True)
class ANumeric:
    ell: int
    unit: str
    a: int | None            # None for the uncovered class l = 5 mod 16
    residual: float
    A: mpc                   # egs / lambda~^3
    egs_abs: mpf
    vanished: bool

    @property
    def bound_half_ell(self) -> bool:
        return abs(self.A) < mpf(self.ell) / 2

    @property
    def bound_five_quarter(self) -> bool:
        """|A| < (16 sqrt2 / (pi varpi)) |lambda|^(5/4)."""
        with mp.workprec(64):
            c = 16 * mp.sqrt(2) / (mp.pi * lemniscate_constant(64))
            return abs(self.A) < c * mpf(self.ell) ** (mpf(5) / 8)

    @property
    def below_quarter_power(self) -> bool:
        return abs(self.A) < mpf(self.ell) ** (mpf(1) / 4)


def a_lambda_numeric(lp: PrimaryPrime, P: int = DEFAULT_PREC, egs: mpc | None = None,
                     lt: mpc | None = None) -> ANumeric:
    """egs / lambda~^3 projected onto the table unit's ray and rounded."""
    if P < 128:
        raise ValueError("P >= 128 required")
    with mp.workprec(P + _GUARD):
        egs = egs_numeric(lp, P) if egs is None else egs
        lt = lambda_tilde_numeric(lp, P) if lt is None else lt
        A = egs / lt ** 3
        name = table_unit(lp)
        q = A / UNIT_VALUES[name]()
        vanished = abs(egs) < VANISH_THRESHOLD
        if lp.ell % 16 == 5:
            a = int(mp.nint(q.real))
            return ANumeric(lp.ell, name, None, float(abs(q - a)), A, abs(egs), vanished)
        a = 0 if vanished else int(mp.nint(q.real))
        res = abs(q - a)
        if res > mpf("1e-10"):
            raise ArithmeticError(f"l={lp.ell}: A/unit = {mp.nstr(q, 15)} is not near an integer")
        return ANumeric(lp.ell, name, a, float(res), A, abs(egs), vanished)


# ---------------------------------------------------------------------------
# the Hecke character and L(1)

def _require_hecke_family(lp: PrimaryPrime) -> None:
    if lp.ell % 16 == 5:
        raise UncoveredFamily(f"l={lp.ell}: no Hecke character is attached for l = 5 mod 16")


def chi_one(nu, lp: PrimaryPrime) -> QuarticUnit | None:
    """chi_1(nu), or None when nu shares a factor with (1+i) lambda."""
    _require_hecke_family(lp)
    nu = GaussianInt.of(nu)
    if (nu.re + nu.im) % 2 == 0 or lp.lam.divides(nu):
        return None
    c = quartic_symbol(nu, lp)
    if lp.ell % 16 == 13:
        return c * chi_zero(nu, 2)
    if lp.ell % 16 == 1:
        return c * chi_zero(nu, 3)
    return c * chi_zero(nu, 3).conj()


def conductor(lp: PrimaryPrime) -> GaussianInt:
    """(1+i)^2 lambda for l = 13 mod 16, (1+i)^3 lambda for l = 1 mod 8."""
    _require_hecke_family(lp)
    return ONE_PLUS_I ** (2 if lp.ell % 8 == 5 else 3) * lp.lam


def hecke_b_coeffs(lp: PrimaryPrime, X: int) -> list[GaussianInt]:
    """b_1..b_X with b_m = 1/4 sum_{N(nu)=m} chi_1(nu) conj(nu)."""
    _require_hecke_family(lp)
    acc = [GaussianInt(0)] * (X + 1)
    R = math.isqrt(X)
    units = ((1, 0), (0, 1), (-1, 0), (0, -1))
    for x in range(-R, R + 1):
        for y in range(-R, R + 1):
            m = x * x + y * y
            if m == 0 or m > X:
                continue
            c = chi_one(GaussianInt(x, y), lp)
            if c is None:
                continue
            ur, ui = units[c.k]
            # (ur + ui i)(x - y i)
            acc[m] = acc[m] + GaussianInt(ur * x + ui * y, ui * x - ur * y)
    out = []
    for v in acc[1:]:
        if v.re % 4 or v.im % 4:
            raise ArithmeticError("orbit sums are not divisible by 4; chi_1(i) != i?")
        out.append(GaussianInt(v.re // 4, v.im // 4))
    return out


def root_number(lp: PrimaryPrime, P: int = DEFAULT_PREC) -> mpc:
    """C = -i beta^-1 sum_{gamma mod beta} chi_1(gamma) exp(2 pi i Re(gamma / beta))."""
    beta = conductor(lp)
    N = beta.norm()
    g = math.gcd(beta.re, beta.im)
    with mp.workprec(P + _GUARD):
        b = mpc(beta.re, beta.im)
        s = mpc(0)
        for x in range(N // g):
            for y in range(g):
                c = chi_one(GaussianInt(x, y), lp)
                if c is None:
                    continue
                # Re(gamma / beta) = Re(gamma conj(beta)) / N
                re = x * beta.re + y * beta.im
                s += _unit(c) * mp.expjpi(2 * mpf(re % N) / N)
        return -1j / b * s


def l_value_truncation(lp: PrimaryPrime, P: int) -> int:
    absb = math.sqrt(conductor(lp).norm())
    return int(absb * (P * math.log(2) + 20) / math.pi) + 10


def l_value_smoothed(lp: PrimaryPrime, P: int = DEFAULT_PREC, X: int | None = None,
                     C: mpc | None = None) -> mpc:
    """pi [C sum conj(b_m) e^(-pi m/|beta|)/(pi m) + sum b_m e^(-pi m/|beta|)/(pi m)]."""
    X = l_value_truncation(lp, P) if X is None else X
    if X < l_value_truncation(lp, P) // 4:
        raise ValueError("truncation too small for the requested precision")
    b = hecke_b_coeffs(lp, X)
    with mp.workprec(P + _GUARD):
        C = root_number(lp, P) if C is None else C
        absb = mp.sqrt(conductor(lp).norm())
        q = mp.exp(-mp.pi / absb)
        t1 = mpc(0)
        t2 = mpc(0)
        qm = mpf(1)
        for m, bm in enumerate(b, start=1):
            qm *= q
            if not bm:
                continue
            w = qm / m
            t1 += mpc(bm.re, -bm.im) * w
            t2 += mpc(bm.re, bm.im) * w
        return C * t1 + t2


def l_value_from_egs(lp: PrimaryPrime, P: int = DEFAULT_PREC, egs: mpc | None = None) -> mpc:
    """-varpi (1-i)^-1 chi(2) lambda^-1 egs (l = 13 mod 16);
    (-1)^((l-1)/8) varpi conj(chi(1+i)) lambda^-1 egs / 2 (l = 1 mod 8)."""
    _require_hecke_family(lp)
    with mp.workprec(P + _GUARD):
        egs = egs_numeric(lp, P) if egs is None else egs
        vp = lemniscate_constant(P)
        lam = mpc(lp.lam.re, lp.lam.im)
        if lp.ell % 8 == 5:
            return -vp / (1 - 1j) * _unit(quartic_symbol(2, lp)) / lam * egs
        sign = -1 if ((lp.ell - 1) // 8) % 2 else 1
        return sign * vp * mp.conj(_unit(quartic_symbol(ONE_PLUS_I, lp))) / 2 / lam * egs


def l_value_bound(lp: PrimaryPrime) -> mpf:
    """4 / (e^(pi/|beta|) - 1)."""
    with mp.workprec(64):
        absb = mp.sqrt(conductor(lp).norm())
        return 4 / (mp.exp(mp.pi / absb) - 1)


def sigma0(m: int) -> int:
    c = 0
    for d in range(1, math.isqrt(m) + 1):
        if m % d == 0:
            c += 1 if d * d == m else 2
    return c


def b_bound_check(b: list[GaussianInt]) -> bool:
    """|b_m| <= sigma_0(m) sqrt m <= 2m."""
    for m, bm in enumerate(b, start=1):
        n = bm.norm()
        if n > sigma0(m) ** 2 * m or sigma0(m) ** 2 * m > 4 * m * m:
            return False
    return True

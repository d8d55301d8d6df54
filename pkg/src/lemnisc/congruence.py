"""Residue-level statements: the vanishing criterion, Kummer-type and two-term
congruences, A_lambda from series coefficients, and Hurwitz's class number congruence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .gauss import PrimaryPrime, is_prime
from .ladic import (LAdicNumber, PrecisionError, kappa_residue, minimal_residue, ord_l,
                    table_unit, unit_residue)
from .series import cl_factorial_series_mod, sl_factorial_series_mod

SERIES_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """A series truncation above the configured budget was requested."""


def _check_budget(n: int, force: bool) -> None:
    if n > SERIES_BUDGET and not force:
        raise BudgetExceeded(f"series truncation {n} exceeds the budget {SERIES_BUDGET}")


def _require_1mod8(lp: PrimaryPrime) -> None:
    if lp.ell % 8 != 1:
        raise ValueError(f"l={lp.ell} is not 1 mod 8")


def Gd_mod_ell(lp: PrimaryPrime) -> int:
    """G_d mod l for the function carrying egs: cl when l = 1 mod 8, else sl (d! C_d)."""
    d = lp.d
    if lp.ell % 8 == 1:
        return cl_factorial_series_mod(d + 1, lp.ell, 1)[d]
    return sl_factorial_series_mod(d + 1, lp.ell, 1)[d]


def vanishing_by_congruence(lp: PrimaryPrime) -> bool:
    _require_1mod8(lp)
    return Gd_mod_ell(lp) == 0


# ---------------------------------------------------------------------------
# Kummer-type sums

@dataclass(frozen=True)
class KummerReport:
    ell: int
    e: int
    a: int
    sum_valuation: int
    required_valuation: int
    passed: bool
    capped: bool = False     # the sum was zero at working precision; valuation is a lower bound

    @property
    def pass_(self) -> bool:
        return self.passed


def required_valuation(a: int, ell: int) -> int:
    return a - a // ell + 1


def _g_over_n(G: int, n: int, ell: int, M: int) -> LAdicNumber:
    return LAdicNumber.from_int(ell, G, M) / LAdicNumber.from_int(ell, n, M + 8)


def _kummer_value(lp: PrimaryPrime, e: int, a: int, G, M: int) -> LAdicNumber:
    ell, H = lp.ell, lp.hasse
    total = LAdicNumber.zero(ell, M)
    for r in range(a + 1):
        n = e + r * (ell - 1)
        w = comb(a, r) * (-H) ** (a - r)
        total = total + _g_over_n(G[n], n, ell, M) * w
    return total


def kummer_modulus_needed(lp: PrimaryPrime, e: int, a: int) -> int:
    ell = lp.ell
    guard = max(ord_l(e + r * (ell - 1), ell) for r in range(a + 1))
    return required_valuation(a, ell) + guard + 1


def kummer_sum(lp: PrimaryPrime, e: int, a: int, M: int | None = None, series=None,
               force: bool = False) -> KummerReport:
    """l-adic valuation of sum_r binom(a,r) (-H)^(a-r) G_{e+r(l-1)} / (e+r(l-1))."""
    _require_1mod8(lp)
    ell = lp.ell
    if e <= 0 or (e - lp.d) % (ell - 1):
        raise ValueError("e must be positive and = d mod (l-1)")
    need = kummer_modulus_needed(lp, e, a)
    M = need if M is None else M
    if M < need:
        raise PrecisionError(f"modular precision {M} < {need}")
    top = e + a * (ell - 1) + 1
    _check_budget(top, force)
    if series is None or series.trunc < top or series.M < M:
        series = cl_factorial_series_mod(top, ell, M)
    s = _kummer_value(lp, e, a, series, M)
    req = required_valuation(a, ell)
    if s.is_zero():
        if s.prec < req:
            raise PrecisionError("sum vanished below the required modulus; raise M")
        return KummerReport(ell, e, a, s.prec, req, True, True)
    v = int(s.val)
    return KummerReport(ell, e, a, v, req, v >= req)


def kummer_table(lp: PrimaryPrime, amax: int = 10, offsets=(0, 1), force: bool = False) -> list[KummerReport]:
    """Reports for e = d + o(l-1), o in offsets, and 0 <= a <= amax, from one series."""
    ell = lp.ell
    es = [lp.d + o * (ell - 1) for o in offsets]
    M = max(kummer_modulus_needed(lp, e, a) for e in es for a in range(amax + 1))
    top = max(es) + amax * (ell - 1) + 1
    _check_budget(top, force)
    series = cl_factorial_series_mod(top, ell, M)
    return [kummer_sum(lp, e, a, M, series) for e in es for a in range(amax + 1)]


def reindex_identity(a: int, k: int) -> bool:
    """{(x+1)-1}^k (x+1)^a expanded two ways, coefficientwise."""
    left = [0] * (a + k + 1)
    for j in range(k + 1):
        for m in range(j + a + 1):
            left[m] += (-1) ** (k - j) * comb(k, j) * comb(j + a, m)
    right = [0] * (a + k + 1)
    for r in range(a + 1):
        right[r + k] += comb(a, r)
    return left == right


def reindex_on_values(lp: PrimaryPrime, a: int, k: int, M: int = 4, series=None) -> bool:
    """The shifted Kummer sum (e -> e + k(l-1)) equals the stated combination of unshifted sums."""
    ell, H = lp.ell, lp.hasse
    top = lp.d + (a + k) * (ell - 1) + 1
    if series is None or series.trunc < top or series.M < M:
        series = cl_factorial_series_mod(top, ell, M)
    shifted = _kummer_value(lp, lp.d + k * (ell - 1), a, series, M)
    combo = LAdicNumber.zero(ell, M)
    for j in range(k + 1):
        w = (-1) ** (k - j) * (-H) ** (k - j) * comb(k, j)
        combo = combo + _kummer_value(lp, lp.d, j + a, series, M) * w
    return shifted == combo


def ord_binom_check(ell: int, c: int) -> bool:
    """ord(binom(l^c, r)) = c - ord(r) for 1 <= r < l^c."""
    n = ell ** c
    return all(ord_l(comb(n, r), ell) == c - ord_l(r, ell) for r in range(1, n))


# ---------------------------------------------------------------------------
# two-term congruence

def two_term_check(lp: PrimaryPrime, e: int, k: int, b: int, M: int | None = None, series=None,
                   force: bool = False) -> bool:
    """G_{e+k(l-1)}/(e+k(l-1)) = H^k G_e / e mod l^(b+2), for a vanishing prime and ord(k) >= b."""
    _require_1mod8(lp)
    ell, H = lp.ell, lp.hasse
    if k < 1 or ord_l(k, ell) < b:
        raise ValueError("need k >= 1 with ord(k) >= b")
    if e <= 0 or (e - lp.d) % (ell - 1):
        raise ValueError("e must be positive and = d mod (l-1)")
    n = e + k * (ell - 1)
    _check_budget(n + 1, force)
    if not vanishing_by_congruence(lp):
        raise ValueError(f"l={ell}: egs does not vanish")
    need = b + 2 + max(ord_l(n, ell), ord_l(e, ell)) + 1
    M = need if M is None else max(M, need)
    if series is None or series.trunc <= n or series.M < M:
        series = cl_factorial_series_mod(n + 1, ell, M)
    lhs = _g_over_n(series[n], n, ell, M)
    rhs = _g_over_n(series[e], e, ell, M) * H ** k
    diff = lhs - rhs
    if not diff.is_zero():
        return diff.val >= b + 2
    if diff.prec < b + 2:
        raise PrecisionError("difference vanished below the target modulus")
    return True


# ---------------------------------------------------------------------------
# A_lambda from the coefficient at d

@dataclass(frozen=True)
class CongruenceA:
    ell: int
    value: int | None           # minimal residue under the default embedding
    candidates: tuple           # all values compatible with the congruence
    unit: str                   # table unit A = a * unit (or "1")
    provisional: bool = False   # l = 5 mod 16: no theorem behind the value

    @property
    def sign_ambiguous(self) -> bool:
        return len(set(self.candidates)) > 1


def a_lambda_congruence(lp: PrimaryPrime) -> CongruenceA:
    """Minimal residue of -C_d/4 (l = 5 mod 8) or of (-D_d/2) / unit (l = 1 mod 8).

    For l = 1 mod 8 the reduction Z[zeta8] -> F_l depends on the prime above lambda;
    the two choices z, -z flip the sign, so both candidates are returned.
    """
    ell, d = lp.ell, lp.d
    Gd = Gd_mod_ell(lp)
    fd_inv = pow(math.factorial(d) % ell, -1, ell)
    if ell % 8 == 5:
        v = minimal_residue(-Gd * fd_inv * pow(4, -1, ell), ell)
        return CongruenceA(ell, v, (v,), "1", provisional=ell % 16 == 5)
    name = table_unit(lp)
    u = unit_residue(name, lp)
    v = minimal_residue(-Gd * fd_inv * pow(2, -1, ell) * pow(u, -1, ell), ell)
    return CongruenceA(ell, v, (v, -v) if v else (0,), name)


def a_lambda_congruence_signed(lp: PrimaryPrime) -> int:
    """Sign fixed by lambda~ = kappa eta^((l-1)/4) (1 + O(eta)); agrees with the l-adic route."""
    c = a_lambda_congruence(lp)
    if lp.ell % 8 == 5:
        return c.value
    k3 = pow(kappa_residue(lp), 3, lp.ell)
    return minimal_residue(c.value * pow(k3, -1, lp.ell), lp.ell)


# ---------------------------------------------------------------------------
# Bernoulli and Euler numbers, class numbers, Hurwitz

@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(comb(m + 1, k) * B[k] for k in range(m)) / (m + 1))
    return tuple(B)


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n >= 0")
    return _bernoulli_table(n)[n]


@lru_cache(maxsize=None)
def _euler_table(n: int) -> tuple:
    E = [1]
    for m in range(1, n + 1):
        if m % 2:
            E.append(0)
        else:
            E.append(-sum(comb(m, k) * E[k] for k in range(0, m, 2)))
    return tuple(E)


def euler_number(n: int) -> int:
    """E_n with sech(u) = sum E_n u^n / n!."""
    if n < 0:
        raise ValueError("n >= 0")
    return _euler_table(n)[n]


def class_number_imag_quadratic(p: int) -> int:
    """h of Q(sqrt(-p)) by counting reduced primitive forms."""
    if p <= 3 or not is_prime(p):
        raise ValueError("p must be a prime > 3")
    D = -p if p % 4 == 3 else -4 * p
    h = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if math.gcd(math.gcd(a, b), c) != 1:
                continue
            h += 1
        a += 1
    return h


@dataclass(frozen=True)
class HurwitzReport:
    p: int
    h: int
    rhs_minimal_residue: int
    congruence_pass: bool
    equality_pass: bool


def hurwitz_rhs(p: int) -> int:
    """-2 B_{(p+1)/2} (p = 3 mod 4) or E_{(p-1)/2} / 2 (p = 1 mod 4), as a residue mod p."""
    if p % 4 == 3:
        q = -2 * bernoulli((p + 1) // 2)
    else:
        q = Fraction(euler_number((p - 1) // 2), 2)
    return q.numerator * pow(q.denominator, -1, p) % p


def hurwitz_check(p: int) -> HurwitzReport:
    h = class_number_imag_quadratic(p)
    r = hurwitz_rhs(p)
    mr = minimal_residue(r, p)
    cong = (r - h) % p == 0
    return HurwitzReport(p, h, mr, cong, cong and mr == h)

"""Truncated power series and the lemniscate coefficients.

Both sl and cl satisfy y'' = -2 y^3.  In factorial normalisation y = sum g_n u^n / n!
every g_n is an integer, which is what the kernels below produce.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from flint import fmpz, fmpz_poly

# (offset a, gap g): y = u^a * sum f_k u^(g k)
SL_SHAPE = (1, 4)
CL_SHAPE = (0, 2)


@dataclass(frozen=True)
class FactorialSeries:
    """sum g_n u^n / n! with integer g_n, n < trunc."""
    coeffs: tuple
    trunc: int

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def ordinary(self, n: int) -> Fraction:
        return Fraction(self.coeffs[n], math.factorial(n))

    def to_rational(self) -> "RationalSeries":
        out, f = [], 1
        for n, g in enumerate(self.coeffs):
            if n:
                f *= n
            out.append(Fraction(g, f))
        return RationalSeries(tuple(out), self.trunc)

    def mod(self, ell: int, M: int = 1) -> "ModSeries":
        m = ell ** M
        return ModSeries(tuple(g % m for g in self.coeffs), self.trunc, ell, M)


@dataclass(frozen=True)
class RationalSeries:
    coeffs: tuple
    trunc: int

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]


@dataclass(frozen=True)
class ModSeries:
    """Truncated series with coefficients in Z/l^M."""
    coeffs: tuple
    trunc: int
    ell: int
    M: int

    @property
    def modulus(self) -> int:
        return self.ell ** self.M

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


# ---------------------------------------------------------------------------
# direct recurrence (numpy; exact with object dtype or reduced mod m)

def _cube_ode_direct(a: int, g: int, K: int, m: int | None = None) -> list[int]:
    """f_0..f_{K-1} (f_k = G_{a+gk}) for y'' = -2y^3, y = u^a + ..., by the O(K^2) recurrence.

    With m given everything is reduced mod m; int64 is used while m < 2^31.
    """
    fast = m is not None and m < 2 ** 31
    dt = np.int64 if fast else object
    f = np.zeros(K, dtype=dt)
    q = np.zeros(K, dtype=dt)
    f[0] = 1
    # Pascal row for n_q = 2a + g k, kept in full
    row = np.ones(1, dtype=dt)
    for _ in range(2 * a):
        row = _pascal_step(row, m)
    for k in range(K - 1):
        # q_{2a+gk} = sum_i binom(2a+gk, a+gi) f_i f_{k-i}
        bq = row[a::g][: k + 1]
        t = bq * f[: k + 1]
        if m is not None:
            t %= m
        t = t * f[k::-1]
        if m is not None:
            t %= m
        qk = t.sum()
        q[k] = qk % m if m is not None else qk
        rh = row
        for _ in range(a):
            rh = _pascal_step(rh, m)
        # h_{3a+gk} = sum_i binom(3a+gk, a+gi) f_i q_{k-i}
        bh = rh[a::g][: k + 1]
        t = bh * f[: k + 1]
        if m is not None:
            t %= m
        t = t * q[k::-1]
        if m is not None:
            t %= m
        hk = -2 * t.sum()
        f[k + 1] = hk % m if m is not None else hk
        for _ in range(g):
            row = _pascal_step(row, m)
    return [int(v) for v in f]


def _pascal_step(row, m):
    new = np.zeros(len(row) + 1, dtype=row.dtype)
    new[:-1] += row
    new[1:] += row
    if m is not None:
        new %= m
    return new


# ---------------------------------------------------------------------------
# relaxed (divide and conquer) exact kernel on scaled integer polynomials

def _cube_ode_relaxed(a: int, g: int, K: int) -> list[int]:
    """Same output as _cube_ode_direct, via online products in fmpz_poly.

    Coefficients are stored as L * f_k / (a+gk)! with L = (3a + g(K-1))!, so the
    ordinary products of the scaled sequences are exact multiples of L.
    """
    L = fmpz(math.factorial(3 * a + g * (K - 1)))
    size = 1
    while size < K:
        size *= 2
    zero = fmpz(0)
    F, Q, H = [zero] * size, [zero] * size, [zero] * size
    AQ, AH = [zero] * size, [zero] * size

    def leaf(n):
        if n == 0:
            F[0] = L
            AQ[0] += L * L
        else:
            e = a + g * n
            F[n] = (-2 * H[n - 1]) // (e * (e - 1))
            AQ[n] += 2 * F[0] * F[n]
        Q[n] = AQ[n] // L
        AH[n] += F[0] * Q[n] if n == 0 else F[0] * Q[n] + Q[0] * F[n]
        H[n] = AH[n] // L

    def accumulate(acc, p, lo, hi, off):
        cs = p.coeffs()
        for n in range(lo, min(hi, off + len(cs))):
            acc[n] += cs[n - off]

    def solve(l, r):
        if r - l == 1:
            if l < K:
                leaf(l)
            return
        mid = (l + r) // 2
        solve(l, mid)
        if mid >= K:
            return
        hi = min(r, K)
        if l == 0:
            fp = fmpz_poly(F[:mid])
            accumulate(AQ, fp * fp, mid, hi, 0)
            accumulate(AH, fp * fmpz_poly(Q[:mid]), mid, hi, 0)
        else:
            w = r - l
            fl, f0 = fmpz_poly(F[l:mid]), fmpz_poly(F[:w])
            ql, q0 = fmpz_poly(Q[l:mid]), fmpz_poly(Q[:w])
            accumulate(AQ, 2 * fl * f0, mid, hi, l)
            accumulate(AH, fl * q0 + ql * f0, mid, hi, l)
        solve(mid, r)

    solve(0, size)
    out, fac, n0 = [], 1, 0
    for k in range(K):
        n = a + g * k
        for j in range(n0 + 1, n + 1):
            fac *= j
        n0 = n
        out.append(int(F[k] * fac // L))
    return out


# ---------------------------------------------------------------------------
# relaxed kernel over Z/l^M
#
# binom(n, x) = u(n) / (u(x) u(n-x)) * l^(v(n) - v(x) - v(n-x)) with n! = l^v(n) u(n).
# Inside a block product each sequence is rescaled by l^(vmax - v(index)) / u(index),
# so an ordinary integer convolution followed by one exact division by a power of l
# reproduces the binomially weighted sums.  The extra precision a block needs is the
# spread of v over its index range, not v itself.

def _cube_ode_relaxed_mod(a: int, g: int, K: int, ell: int, M: int) -> list[int]:
    mod = ell ** M
    nmax = 3 * a + g * max(K - 1, 0) + 1
    vf = [0] * (nmax + 1)
    for n in range(1, nmax + 1):
        t, e = n, 0
        while t % ell == 0:
            t //= ell
            e += 1
        vf[n] = vf[n - 1] + e
    pmax = M + 2 * vf[nmax] + 1
    big = ell ** pmax
    uf = [1] * (nmax + 1)
    for n in range(1, nmax + 1):
        t = n
        while t % ell == 0:
            t //= ell
        uf[n] = uf[n - 1] * t % big
    iuf = [1] * (nmax + 1)
    iuf[nmax] = pow(uf[nmax], -1, big)
    for n in range(nmax, 0, -1):
        t = n
        while t % ell == 0:
            t //= ell
        iuf[n - 1] = iuf[n] * t % big
    lpow = [1]
    for _ in range(pmax + 1):
        lpow.append(lpow[-1] * ell)
    us = [x % mod for x in uf]
    ius = [x % mod for x in iuf]

    def binom_mod(n, x):
        e = vf[n] - vf[x] - vf[n - x]
        if e >= M:
            return 0
        return us[n] * ius[x] * ius[n - x] * lpow[e]

    size = 1
    while size < K:
        size *= 2
    F, Q = [0] * size, [0] * size
    AQ, AH = [0] * size, [0] * size
    idx_f = lambda i: a + g * i
    idx_q = lambda j: 2 * a + g * j

    cache = {}

    def scaled(seq, idx, lo, hi, P):
        if lo == 0:
            key = (id(seq), idx is idx_f, hi, P)
            if key in cache:
                return cache[key]
            cache[key] = out = _scaled_block(seq, idx, lo, hi, P)
            return out
        return _scaled_block(seq, idx, lo, hi, P)

    def _scaled_block(seq, idx, lo, hi, P):
        vmax = vf[idx(hi - 1)]
        m = lpow[P]
        return vmax, fmpz_poly([seq[i] * (iuf[idx(i)] % m) * lpow[vmax - vf[idx(i)]] % m
                                for i in range(lo, hi)])

    def spread(idx, lo, hi):
        return vf[idx(hi - 1)] - vf[idx(lo)]

    def block(acc, out_idx, sa, ia, la, ha, sb, ib, lb, hb, lo, hi, off, mult=1):
        # acc[k] += mult * sum binom * sa[i] sb[j] for i in [la,ha), j in [lb,hb), i + j = k in [lo,hi)
        if (ha - la) * (hb - lb) <= 256:
            for i in range(la, ha):
                x = sa[i]
                if not x:
                    continue
                for j in range(max(lb, lo - i), min(hb, hi - i)):
                    if sb[j]:
                        acc[i + j] = (acc[i + j] + mult * binom_mod(out_idx(i + j), ia(i)) * x * sb[j]) % mod
            return
        P = M + spread(ia, la, ha) + spread(ib, lb, hb)
        va, A = scaled(sa, ia, la, ha, P)
        vb, B = scaled(sb, ib, lb, hb, P)
        m = lpow[P]
        cs = A.mul_low(B, hi - off).coeffs()
        for k in range(lo, min(hi, off + len(cs))):
            c = int(cs[k - off]) % m
            if not c:
                continue
            n = out_idx(k)
            e = vf[n] - va - vb
            if e >= 0:
                c *= lpow[e]
            else:
                c, r = divmod(c, lpow[-e])
                assert r == 0
            acc[k] = (acc[k] + mult * c * uf[n]) % mod

    out_q = lambda k: 2 * a + g * k
    out_h = lambda k: 3 * a + g * k

    def leaf(n):
        if n == 0:
            F[0] = 1
            AQ[0] = (AQ[0] + math.comb(2 * a, a)) % mod
        else:
            F[n] = -2 * AH[n - 1] % mod
            AQ[n] = (AQ[n] + 2 * math.comb(out_q(n), a) * F[n]) % mod
        Q[n] = AQ[n]
        if n == 0:
            AH[0] = (AH[0] + math.comb(3 * a, a) * Q[0]) % mod
        else:
            AH[n] = (AH[n] + math.comb(out_h(n), a) * Q[n]
                     + math.comb(out_h(n), 2 * a) * F[n] * Q[0]) % mod

    def solve(l, r):
        if r - l == 1:
            if l < K:
                leaf(l)
            return
        mid = (l + r) // 2
        solve(l, mid)
        if mid >= K:
            return
        hi = min(r, K)
        if l == 0:
            # F[:mid], Q[:mid] are not final yet for a later reuse
            cache.clear()
            block(AQ, out_q, F, idx_f, 0, mid, F, idx_f, 0, mid, mid, hi, 0)
            block(AH, out_h, F, idx_f, 0, mid, Q, idx_q, 0, mid, mid, hi, 0)
            cache.clear()
        else:
            w = r - l
            block(AQ, out_q, F, idx_f, l, mid, F, idx_f, 0, w, mid, hi, l, 2)
            block(AH, out_h, F, idx_f, l, mid, Q, idx_q, 0, w, mid, hi, l)
            block(AH, out_h, Q, idx_q, l, mid, F, idx_f, 0, w, mid, hi, l)
        solve(mid, r)

    solve(0, size)
    return F[:K]


# scaled-integer helpers: X_k = L * c_k for an ordinary series sum c_k t^k

def _scaled_mullow(X: fmpz_poly, Y: fmpz_poly, n: int, L: fmpz) -> fmpz_poly:
    return fmpz_poly([c // L for c in X.mul_low(Y, n).coeffs()])


def _scaled_inverse(A: fmpz_poly, n: int, L: fmpz) -> fmpz_poly:
    """1/A mod t^n for A(0) = L (i.e. constant term 1), by Newton iteration."""
    Y, k = fmpz_poly([L]), 1
    two = fmpz_poly([2 * L])
    while k < n:
        k = min(2 * k, n)
        Y = _scaled_mullow(Y, two - _scaled_mullow(A, Y, k, L), k, L)
    return Y


def _pad(cs, n):
    cs = list(cs)[:n]
    return cs + [0] * (n - len(cs))


@lru_cache(maxsize=4)
def _sl_cl_fast(N: int) -> tuple[tuple, tuple]:
    """Exact (sl, cl) factorial coefficients below N.

    sl = u S(w) with w = u^4 comes from the relaxed kernel.  For cl = sl'/(1 + sl^2) write
    X = S^2, so 1/(1 + u^2 X) = (1 - u^2 X)/(1 - w X^2) and cl = E - u^2 O with
    E = sl'/(1 - w X^2), O = E X: every product stays in w.
    """
    K = (N + 3) // 4
    s = _cube_ode_relaxed(*SL_SHAPE, K)
    L = fmpz(math.factorial(4 * K + 3))
    facs = [1]
    for i in range(1, 4 * K + 4):
        facs.append(facs[-1] * i)
    S = fmpz_poly([L * s[k] // facs[4 * k + 1] for k in range(K)])
    P = fmpz_poly([(4 * k + 1) * L * s[k] // facs[4 * k + 1] for k in range(K)])
    X = _scaled_mullow(S, S, K, L)
    B = fmpz_poly([L]) - _scaled_mullow(X, X, K, L).left_shift(1)
    E = _scaled_mullow(P, _scaled_inverse(B, K, L), K, L)
    O = _scaled_mullow(E, X, K, L)
    E, O = _pad(E.coeffs(), K), _pad(O.coeffs(), K)
    sl, cl = [0] * N, [0] * N
    for k in range(K):
        if 4 * k + 1 < N:
            sl[4 * k + 1] = s[k]
        if 4 * k < N:
            cl[4 * k] = int(E[k] * facs[4 * k] // L)
        if 4 * k + 2 < N:
            cl[4 * k + 2] = int(-O[k] * facs[4 * k + 2] // L)
    return tuple(sl), tuple(cl)


def _direct_full(shape, N):
    a, g = shape
    K = max(0, (N - a + g - 1) // g)
    f = _cube_ode_direct(a, g, K) if K else []
    out = [0] * N
    for k, v in enumerate(f):
        out[a + g * k] = v
    return tuple(out)


_DIRECT_LIMIT = 160
_DIRECT_MOD_LIMIT = 300


def cl_factorial_series(N: int, method: str = "auto") -> FactorialSeries:
    """G_0..G_{N-1} with cl(u) = sum G_n u^n / n!."""
    if N < 1:
        raise ValueError("truncation must be >= 1")
    if method == "direct" or (method == "auto" and N <= _DIRECT_LIMIT):
        return FactorialSeries(_direct_full(CL_SHAPE, N), N)
    return FactorialSeries(_sl_cl_fast(N)[1], N)


def sl_factorial_series(N: int, method: str = "auto") -> FactorialSeries:
    """n! C_n for n < N with sl(u) = sum C_n u^n."""
    if N < 2:
        raise ValueError("truncation must be >= 2")
    if method == "direct" or (method == "auto" and N <= _DIRECT_LIMIT):
        return FactorialSeries(_direct_full(SL_SHAPE, N), N)
    return FactorialSeries(_sl_cl_fast(N)[0], N)


def _mod_full(shape, N, ell, M):
    a, g = shape
    K = max(0, (N - a + g - 1) // g)
    if K > _DIRECT_MOD_LIMIT:
        f = _cube_ode_relaxed_mod(a, g, K, ell, M)
    else:
        f = _cube_ode_direct(a, g, K, ell ** M) if K else []
    out = [0] * N
    for k, v in enumerate(f):
        out[a + g * k] = v
    return ModSeries(tuple(out), N, ell, M)


def cl_factorial_series_mod(N: int, ell: int, M: int = 1) -> ModSeries:
    """G_n mod l^M for n < N, computed natively in Z/l^M."""
    if N < 1 or M < 1:
        raise ValueError("need N >= 1 and M >= 1")
    return _mod_full(CL_SHAPE, N, ell, M)


def sl_factorial_series_mod(N: int, ell: int, M: int = 1) -> ModSeries:
    """n! C_n mod l^M for n < N."""
    if N < 2 or M < 1:
        raise ValueError("need N >= 2 and M >= 1")
    return _mod_full(SL_SHAPE, N, ell, M)


def sl_integral_oracle(N: int) -> RationalSeries:
    """Reversion of u = sum binom(-1/2, n) (-1)^n t^(4n+1)/(4n+1), an independent route to C_n."""
    K = (N + 2) // 4
    a = [Fraction(math.comb(2 * n, n), 4 ** n * (4 * n + 1)) for n in range(K)]
    # sl = t + sum_{k>=1} s_k t^(4k+1): match u = F(sl) order by order in w = t^4
    # F(sl) = sum_n a_n sl^(4n+1); work with sl = t * S(w), S(0) = 1
    # F(sl) = t * sum_n a_n w^n S^(4n+1); the w^k coefficient must vanish for k >= 1,
    # and S_k enters it only through the n = 0 term
    S = [Fraction(1)] + [Fraction(0)] * (K - 1)
    for k in range(1, K):
        tot = Fraction(0)
        for n in range(k + 1):
            tot += a[n] * _series_pow(S, 4 * n + 1, k - n + 1)[k - n]
        S[k] = -tot
    out = [Fraction(0)] * N
    for k in range(K):
        if 4 * k + 1 < N:
            out[4 * k + 1] = S[k]
    return RationalSeries(tuple(out), N)


def _series_pow(s: list, e: int, n: int) -> list:
    out = [Fraction(1)] + [Fraction(0)] * (n - 1)
    base = list(s[:n]) + [Fraction(0)] * (n - len(s))
    while e:
        if e & 1:
            out = _mul_trunc(out, base, n)
        base = _mul_trunc(base, base, n)
        e >>= 1
    return out


def _mul_trunc(a: list, b: list, n: int) -> list:
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(min(len(b), n - i)):
                out[i + j] += x * b[j]
    return out


# ---------------------------------------------------------------------------
# exact identity checks on the fast path

def ode_residuals(N: int, sl: tuple | None = None, cl: tuple | None = None) -> dict[str, bool]:
    """Exact truncated checks of cl'' + 2cl^3 = 0, sl'' + 2sl^3 = 0 and sl'^2 = 1 - sl^4.

    Everything is split by u-degree mod 4 and multiplied as series in w = u^4.  The
    coefficient tuples default to the fast engine's output.
    """
    if sl is None or cl is None:
        fsl, fcl = _sl_cl_fast(N)
        sl = fsl if sl is None else sl
        cl = fcl if cl is None else cl
    K = (N + 3) // 4
    L = fmpz(math.factorial(4 * K + 3))
    facs = [1]
    for i in range(1, 4 * K + 4):
        facs.append(facs[-1] * i)

    def part(seq, r):
        return [L * seq[4 * k + r] // facs[4 * k + r] if 4 * k + r < N else 0 for k in range(K)]

    def mul(x, y):
        return _pad(_scaled_mullow(fmpz_poly(x), fmpz_poly(y), K, L).coeffs(), K)

    def shift(x):
        return [0] + x[:-1]

    out = {}
    # cl = E - u^2 O;  cl^3 = (E^3 + 3w E O^2) - u^2 (3 E^2 O + w O^3)
    E = part(cl, 0)
    O = [-c for c in part(cl, 2)]
    E2, O2 = mul(E, E), mul(O, O)
    even = [a + 3 * b for a, b in zip(mul(E, E2), shift(mul(E, O2)))]
    odd = [3 * a + b for a, b in zip(mul(E2, O), shift(mul(O, O2)))]
    ok = True
    for k in range(K):
        if 4 * k + 2 < N:        # u^(4k): cl'' uses the u^(4k+2) term
            ok &= -O[k] * (4 * k + 2) * (4 * k + 1) + 2 * even[k] == 0
        if 4 * k + 4 < N and k + 1 < K:
            ok &= E[k + 1] * (4 * k + 4) * (4 * k + 3) - 2 * odd[k] == 0
    out["cl''+2cl^3"] = bool(ok)

    # sl = u S(w): sl'' at u^(4k+3) against sl^3 = u^3 S^3
    S = part(sl, 1)
    S2 = mul(S, S)
    S3 = mul(S, S2)
    out["sl''+2sl^3"] = all(S[k + 1] * (4 * k + 5) * (4 * k + 4) + 2 * S3[k] == 0
                            for k in range(K - 1) if 4 * k + 5 < N)

    # sl'^2 = 1 - sl^4 = 1 - w S^4
    D = [(4 * k + 1) * S[k] for k in range(K)]
    lhs = mul(D, D)
    S4 = mul(S2, S2)
    rhs = [L] + [-S4[k - 1] for k in range(1, K)]
    out["sl'^2-(1-sl^4)"] = all(lhs[k] == rhs[k] for k in range(K) if 4 * k + 1 < N)
    return out


def pythagorean_check(N: int) -> bool:
    """cl^2 (1 + sl^2) = 1 - sl^2 as truncated series."""
    sl, cl = sl_factorial_series(N).to_rational(), cl_factorial_series(N).to_rational()
    s2 = series_mul(sl, sl)
    c2 = series_mul(cl, cl)
    one_plus = RationalSeries(tuple((1 if n == 0 else 0) + s2[n] for n in range(N)), N)
    lhs = series_mul(c2, one_plus)
    return all(lhs[n] == (1 if n == 0 else 0) - s2[n] for n in range(N))


# ---------------------------------------------------------------------------
# generic truncated algebra on RationalSeries / ModSeries

def _like(f, coeffs):
    if isinstance(f, ModSeries):
        m = f.modulus
        return ModSeries(tuple(c % m for c in coeffs), f.trunc, f.ell, f.M)
    return RationalSeries(tuple(coeffs), f.trunc)


def _as_series(f):
    if isinstance(f, FactorialSeries):
        return f.to_rational()
    return f


def series_mul(f, g):
    f, g = _as_series(f), _as_series(g)
    n = min(f.trunc, g.trunc)
    out = [0] * n
    for i in range(n):
        if f.coeffs[i]:
            fi = f.coeffs[i]
            for j in range(n - i):
                if g.coeffs[j]:
                    out[i + j] += fi * g.coeffs[j]
    return _like(f, out) if f.trunc == n else _like(g, out)


def series_derive(f):
    f = _as_series(f)
    n = f.trunc - 1
    return _with_trunc(f, [(k + 1) * f.coeffs[k + 1] for k in range(n)], n)


def _with_trunc(f, coeffs, n):
    if isinstance(f, ModSeries):
        m = f.modulus
        return ModSeries(tuple(c % m for c in coeffs), n, f.ell, f.M)
    return RationalSeries(tuple(coeffs), n)


def _inv_scalar(f, c):
    if isinstance(f, ModSeries):
        if c % f.ell == 0:
            raise ZeroDivisionError("leading coefficient not invertible mod l")
        return pow(c, -1, f.modulus)
    if c == 0:
        raise ZeroDivisionError("leading coefficient is zero")
    return 1 / Fraction(c)


def series_divide(f, g):
    """f / g with g(0) invertible."""
    f, g = _as_series(f), _as_series(g)
    n = min(f.trunc, g.trunc)
    inv0 = _inv_scalar(g, g.coeffs[0])
    q = [0] * n
    for k in range(n):
        acc = f.coeffs[k] - sum(q[j] * g.coeffs[k - j] for j in range(k) if g.coeffs[k - j])
        q[k] = acc * inv0
        if isinstance(g, ModSeries):
            q[k] %= g.modulus
    return _with_trunc(g if isinstance(g, ModSeries) else f, q, n)


def series_compose(f, g):
    """f(g(u)) with g(0) = 0, Horner scheme."""
    f, g = _as_series(f), _as_series(g)
    if g.coeffs[0] != 0 and not (isinstance(g, ModSeries) and g.coeffs[0] % g.modulus == 0):
        raise ValueError("inner series must have zero constant term")
    n = min(f.trunc, g.trunc)
    acc = _with_trunc(g, [0] * n, n)
    for k in range(n - 1, -1, -1):
        acc = series_mul(acc, g)
        c = list(acc.coeffs)
        c[0] += f.coeffs[k]
        acc = _with_trunc(g, c, n)
    return acc


def dump_csv(series: FactorialSeries, path, kind: str = "G") -> None:
    """Write n, G_n (kind='G') or n, numerator, denominator of g_n/n! (kind='C')."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        if kind == "G":
            w.writerow(["n", "G_n"])
            for n, g in enumerate(series.coeffs):
                w.writerow([n, g])
        else:
            w.writerow(["n", "numerator", "denominator"])
            for n in range(series.trunc):
                c = series.ordinary(n)
                w.writerow([n, c.numerator, c.denominator])

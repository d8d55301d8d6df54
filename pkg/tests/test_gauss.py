from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, strategies as st

from lemnisc.gauss import (GaussianInt, I, QuarticUnit, chi_zero, gaussian_sqrt, gi_divmod, gi_gcd,
                           hasse_check, hensel_sqrt, is_primary, primary_decompose, primes_1mod4,
                           quarter_set, quartic_symbol, sqrt_mod_prime, zeta8_residue)

ints = st.integers(-10**6, 10**6)
gis = st.builds(GaussianInt, ints, ints)


# --- oracles -------------------------------------------------------------

def primary_by_search(ell):
    """Solve a^2 + b^2 = l by brute force, keep the primary unit multiple with im > 0."""
    for a in range(-ell, ell + 1):
        for b in range(1, ell):
            if a * a + b * b == ell and (GaussianInt(a, b) - 1).re % 2 == 0:
                z = GaussianInt(a, b)
                # primary: z - 1 divisible by -2+2i
                w = (z - 1) * GaussianInt(-2, -2)
                if w.re % 8 == 0 and w.im % 8 == 0:
                    return z


def symbol_by_gaussian_power(nu, lam, ell):
    """nu^((l-1)/4) reduced mod lambda inside Z[i], matched against the four units."""
    nu = GaussianInt.of(nu)
    x = GaussianInt(1)
    for _ in range((ell - 1) // 4):
        x = gi_divmod(x * nu, lam)[1]
    for k, u in enumerate((GaussianInt(1), I, GaussianInt(-1), GaussianInt(0, -1))):
        if lam.divides(x - u):
            return k


# --- GaussianInt ---------------------------------------------------------

@given(gis)
def test_norm_and_conjugation(z):
    assert z.norm() >= 0 and (z.norm() == 0) == (not z)
    assert z.conj().conj() == z
    assert z * z.conj() == GaussianInt(z.norm())


@given(gis, gis)
def test_divmod_remainder_small(a, b):
    if not b:
        return
    q, r = gi_divmod(a, b)
    assert q * b + r == a
    assert 2 * r.norm() <= b.norm()


def test_divmod_examples():
    assert gi_divmod(5, GaussianInt(2, 1)) == (GaussianInt(2, -1), GaussianInt(0))
    assert gi_divmod(GaussianInt(3, 2), GaussianInt(1, 1)) == (GaussianInt(2), GaussianInt(1))
    assert gi_divmod(0, GaussianInt(0, 7)) == (GaussianInt(0), GaussianInt(0))
    with pytest.raises(ZeroDivisionError):
        gi_divmod(1, 0)


def test_divmod_tie_break_is_a_nearest_quotient():
    # among the nearest quotients, the returned one minimises norm(r)
    a, b = GaussianInt(3, 2), GaussianInt(1, 1)
    best = min((a - GaussianInt(x, y) * b).norm() for x in range(-5, 6) for y in range(-5, 6))
    assert gi_divmod(a, b)[1].norm() == best


@given(gis, gis)
def test_gcd_divides_both(a, b):
    g = gi_gcd(a, b)
    if g:
        assert g.divides(a) and g.divides(b)


def test_units_cycle():
    assert I ** 4 == GaussianInt(1)
    assert QuarticUnit(1) * QuarticUnit(3) == QuarticUnit(0)
    assert QuarticUnit(3).inverse() == QuarticUnit(1)


# --- primary primes ------------------------------------------------------

@pytest.mark.parametrize("ell,expected", [(5, GaussianInt(-1, 2)), (13, GaussianInt(3, 2)),
                                          (17, GaussianInt(1, 4))])
def test_primary_examples(ell, expected):
    assert primary_decompose(ell).lam == expected


@pytest.mark.parametrize("ell", primes_1mod4(5, 400))
def test_primary_against_search(ell):
    lp = primary_decompose(ell)
    assert lp.lam == primary_by_search(ell)
    assert is_primary(lp.lam) and lp.lam.im > 0 and lp.lam.norm() == ell
    for M in (1, 2, 3):
        w = lp.omega(M)
        m = ell ** M
        assert (w * w + 1) % m == 0
        assert (lp.lam.re + lp.lam.im * w) % ell == 0


def test_omega_examples():
    assert primary_decompose(5).omega() == 3
    assert primary_decompose(13).omega() == 5


def test_rejects_bad_primes():
    for n in (7, 9, 15, 3):
        with pytest.raises(ValueError):
            primary_decompose(n)


# --- quartic symbol ------------------------------------------------------

def test_symbol_examples():
    assert quartic_symbol(1, primary_decompose(29)) == QuarticUnit(0)
    assert quartic_symbol(I, primary_decompose(13)) == QuarticUnit(3)      # i^3 = -i
    assert quartic_symbol(2, primary_decompose(5)) == QuarticUnit(3)


@pytest.mark.parametrize("ell", primes_1mod4(5, 120))
def test_symbol_against_gaussian_power(ell):
    lp = primary_decompose(ell)
    for nu in (I, GaussianInt(1, 1), GaussianInt(2), GaussianInt(3, -1), GaussianInt(7, 4)):
        if lp.lam.divides(nu):
            continue
        assert quartic_symbol(nu, lp).k == symbol_by_gaussian_power(nu, lp.lam, ell)


@pytest.mark.parametrize("ell", primes_1mod4(5, 200))
def test_symbol_of_i(ell):
    assert quartic_symbol(I, primary_decompose(ell)) == QuarticUnit((ell - 1) // 4)


def test_symbol_multiplicative():
    lp = primary_decompose(97)
    a, b = GaussianInt(3, 1), GaussianInt(5, -2)
    assert quartic_symbol(a * b, lp) == quartic_symbol(a, lp) * quartic_symbol(b, lp)


def test_chi_zero():
    assert chi_zero(1, 3) == QuarticUnit(0)
    assert chi_zero(I, 2) == QuarticUnit(2)
    assert chi_zero(GaussianInt(3, 2), 3) == QuarticUnit(0)
    with pytest.raises(ValueError):
        chi_zero(GaussianInt(1, 1), 3)


# --- Hasse invariant, quarter sets --------------------------------------

@pytest.mark.parametrize("ell,H", [(5, -2), (13, 6), (17, 2)])
def test_hasse_examples(ell, H):
    lp = primary_decompose(ell)
    assert lp.hasse == H and hasse_check(lp)


@pytest.mark.parametrize("ell", primes_1mod4(5, 600))
def test_hasse_all(ell):
    lp = primary_decompose(ell)
    q = (ell - 1) // 4
    assert (lp.hasse - (-1) ** q * comb(2 * q, q)) % ell == 0


def test_quarter_set_five():
    qs = quarter_set(primary_decompose(5))
    assert qs.reps == (1,) and qs.gamma_exp8 == 0


@pytest.mark.parametrize("ell", primes_1mod4(5, 300))
def test_quarter_set_cover(ell):
    lp = primary_decompose(ell)
    qs = quarter_set(lp)
    w = lp.omega()
    assert len(qs.reps) == (ell - 1) // 4
    orbit = {m % ell for s in qs.reps for m in (s, -s, w * s, -w * s)}
    assert orbit == set(range(1, ell))
    roots = (1, w, ell - 1, ell - w)
    if ell % 8 == 5:
        assert roots[qs.gamma_exp8 // 2] == qs.product
    else:
        assert qs.gamma_exp8 in (1, 3)
        # gamma^2 = i^m = prod^2
        assert roots[qs.gamma_exp8] == qs.product ** 2 % ell


# --- square roots --------------------------------------------------------

@pytest.mark.parametrize("p", [13, 17, 97, 257, 593])
def test_sqrt_mod_prime(p):
    for a in range(1, 30):
        if pow(a, (p - 1) // 2, p) == 1:
            r = sqrt_mod_prime(a, p)
            assert r * r % p == a % p and r <= p - r
            R = hensel_sqrt(a, r, p, 4)
            assert (R * R - a) % p ** 4 == 0


@pytest.mark.parametrize("ell", [17, 41, 73, 89, 97, 113])
def test_zeta8(ell):
    lp = primary_decompose(ell)
    for M in (1, 2):
        z = zeta8_residue(lp, M)
        assert (z * z - lp.omega(M)) % ell ** M == 0


@given(gis)
def test_gaussian_sqrt_roundtrip(z):
    r = gaussian_sqrt(z * z)
    assert r is not None and (r == z or r == -z)


def test_gaussian_sqrt_nonsquare():
    assert gaussian_sqrt(GaussianInt(0, 1)) is None
    assert gaussian_sqrt(GaussianInt(3)) is None

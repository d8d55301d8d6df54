from __future__ import annotations

import math
from dataclasses import replace

import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpc, mpf

from lemnisc import analytic as an
from lemnisc.gauss import GaussianInt, primary_decompose
from lemnisc.ladic import UncoveredFamily


# --- the constant --------------------------------------------------------

def test_varpi_printed_digits():
    assert mp.nstr(an.lemniscate_constant(64), 6, strip_zeros=False).startswith("2.6220")
    assert str(an.lemniscate_constant(64))[:7] == "2.62205"


def test_varpi_two_routes():
    with mp.workprec(160):
        assert abs(an.lemniscate_constant(128) - an.lemniscate_quadrature(128)) < mpf(10) ** -30


def test_varpi_against_gamma_closed_form():
    # Gamma(1/4)^2 / (2 sqrt(2 pi))
    with mp.workprec(300):
        ref = mp.gamma(mpf(1) / 4) ** 2 / (2 * mp.sqrt(2 * mp.pi))
        assert abs(an.lemniscate_constant(256) - ref) < mpf(2) ** -250


def test_quadrature_precision_scales():
    with mp.workprec(400):
        ref = an.lemniscate_constant(320)
        e64 = abs(an.lemniscate_quadrature(64) - ref)
        e128 = abs(an.lemniscate_quadrature(128) - ref)
        assert e128 < e64 ** 1.5 or e128 < mpf(2) ** -120


# --- sl, cl --------------------------------------------------------------

def test_normalisation():
    s, sp = an.sl_pair(0, 128)
    assert abs(s) < mpf(2) ** -120 and abs(sp - 1) < mpf(2) ** -120
    with mp.workprec(140):
        assert abs(an.sl_complex(an.lemniscate_constant(128) / 2, 128) - 1) < mpf(10) ** -30


cplx = st.tuples(st.floats(-3, 3), st.floats(-3, 3))


@settings(max_examples=40, deadline=None)
@given(cplx)
def test_sl_against_jacobi_oracle(z):
    u = mpc(*z)
    with mp.workprec(150):
        try:
            got = an.sl_complex(u, 128)
        except an.PoleError:
            return
        ref = an.sl_oracle(u, 128)
        assert abs(got - ref) < mpf(10) ** -25 * max(1, abs(ref))


def test_sl_against_mpmath_sn():
    # sl(u) = sn(u | -1) on the real line
    with mp.workprec(150):
        for x in ("0.1", "0.7", "1.2"):
            u = mpf(x)
            assert abs(an.sl_complex(u, 128) - mpmath.ellipfun("sn", u, m=-1)) < mpf(10) ** -30


@settings(max_examples=20, deadline=None)
@given(cplx, st.integers(-3, 3), st.integers(-3, 3))
def test_periodicity(z, m, n):
    with mp.workprec(150):
        u = mpc(*z)
        w = (1 - 1j) * an.lemniscate_constant(128) * mpc(m, n)
        try:
            a, b = an.sl_complex(u, 128), an.sl_complex(u + w, 128)
        except an.PoleError:
            return
        assert abs(a - b) < mpf(10) ** -25 * max(1, abs(a))


def test_pole_rejected():
    with mp.workprec(150):
        pole = (1 - 1j) * an.lemniscate_constant(128) / 2
        with pytest.raises(an.PoleError):
            an.sl_complex(pole, 128)


def test_derivative_pair_consistent():
    with mp.workprec(150):
        u = mpc("0.4", "0.9")
        s, sp = an.sl_pair(u, 128)
        assert abs(sp * sp - (1 - s ** 4)) < mpf(10) ** -30


# --- division values ----------------------------------------------------

@pytest.mark.parametrize("ell", [13, 17])
def test_phi_psi_identity(ell):
    lp = primary_decompose(ell)
    with mp.workprec(150):
        for r in (1, 2, GaussianInt(1, 1), 5):
            s, c = an.phi_psi_eval(r, lp, 128)
            assert abs(c ** 4 - ((1 - s * s) / (1 + s * s)) ** 2) < mpf(10) ** -30


def test_phi_psi_guard():
    lp = primary_decompose(13)
    with pytest.raises(ValueError):
        an.phi_psi_eval(lp.lam, lp)


@pytest.mark.parametrize("ell", [5, 13, 17, 29])
def test_division_values_multiply_to_lambda(ell):
    # the ideal (Lambda)^(l-1) = (lambda) made concrete: prod over r of phi(r/lambda) = lambda
    lp = primary_decompose(ell)
    with mp.workprec(150):
        p = mpc(1)
        for r in range(1, ell):
            p *= an.phi_psi_eval(r, lp, 128)[0]
        assert abs(p - mpc(lp.lam.re, lp.lam.im)) < mpf(10) ** -25
        assert abs(abs(p) - mp.sqrt(ell)) < mpf(10) ** -25


@pytest.mark.parametrize("ell", [5, 13, 17, 29, 41, 89])
def test_lambda_tilde_fourth_power(ell):
    lp = primary_decompose(ell)
    with mp.workprec(150):
        lt = an.lambda_tilde_numeric(lp, 128)
        assert abs(lt ** 4 + mpc(lp.lam.re, lp.lam.im)) < mpf(10) ** -25
        assert abs(abs(lt) - mpf(ell) ** (mpf(1) / 8)) < mpf(10) ** -25


# --- A_lambda ------------------------------------------------------------

def test_a_thirteen():
    r = an.a_lambda_numeric(primary_decompose(13), 256)
    assert r.a == 1 and r.residual < 1e-20 and r.unit == "1"


def test_a_seventeen_on_unit_ray():
    r = an.a_lambda_numeric(primary_decompose(17), 256)
    assert r.a == 2 and r.residual < 1e-20 and r.unit == "i*zeta8"


@pytest.mark.parametrize("ell", [89, 113])
def test_vanishing_numeric(ell):
    r = an.a_lambda_numeric(primary_decompose(ell), 256)
    assert r.a == 0 and r.vanished and r.egs_abs < an.VANISH_THRESHOLD


@pytest.mark.parametrize("ell", [5, 37])
def test_five_mod_sixteen_not_integral(ell):
    r = an.a_lambda_numeric(primary_decompose(ell), 256)
    assert r.a is None and r.residual > 0.1


def test_precision_floor():
    with pytest.raises(ValueError):
        an.a_lambda_numeric(primary_decompose(13), 64)


# --- Hecke character and L(1) -------------------------------------------

@pytest.mark.parametrize("ell", [13, 17, 29, 41])
def test_b_coefficients(ell):
    lp = primary_decompose(ell)
    b = an.hecke_b_coeffs(lp, 400)
    assert b[0] == GaussianInt(1)
    assert an.b_bound_check(b)
    for m in (3, 7, 11, 2):
        # no nu of norm m prime to 2 l
        assert b[m - 1] == GaussianInt(0)


def test_sigma0():
    assert [an.sigma0(m) for m in (1, 2, 6, 12, 49)] == [1, 2, 4, 6, 3]


@pytest.mark.parametrize("ell", [13, 17, 29, 41, 61, 73])
def test_root_number_unitary(ell):
    C = an.root_number(primary_decompose(ell), 128)
    assert abs(abs(C) - 1) < mpf(10) ** -20


@pytest.mark.parametrize("ell", [13, 17, 29])
def test_root_number_conjugation(ell):
    lp = primary_decompose(ell)
    lq = replace(lp, lam=lp.lam.conj(), omega_cache=())
    with mp.workprec(150):
        assert abs(an.root_number(lq, 128) - mp.conj(an.root_number(lp, 128))) < mpf(10) ** -30


@pytest.mark.parametrize("ell", [13, 17, 29, 41, 61, 89, 97])
def test_l_value_two_routes(ell):
    lp = primary_decompose(ell)
    with mp.workprec(150):
        Ls = an.l_value_smoothed(lp, 128)
        Le = an.l_value_from_egs(lp, 128)
        assert abs(Ls - Le) < mpf(10) ** -30
        assert abs(Le) < an.l_value_bound(lp)


def test_l_value_truncation_guard():
    with pytest.raises(ValueError):
        an.l_value_smoothed(primary_decompose(13), 128, X=5)


@pytest.mark.parametrize("ell", [5, 37])
def test_hecke_uncovered(ell):
    with pytest.raises(UncoveredFamily):
        an.conductor(primary_decompose(ell))
    with pytest.raises(UncoveredFamily):
        an.l_value_from_egs(primary_decompose(ell), 128)

"""Acceptance criteria 1-10.  Each test records one PASS/FAIL line, shown in the pytest
summary; `python tests/test_acceptance.py` runs them standalone.
"""
from __future__ import annotations

import gc
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest
from mpmath import mp, mpf

sys.path.insert(0, str(Path(__file__).parent))
from conftest import record  # noqa: E402

from lemnisc import analytic as an
from lemnisc import congruence as co
from lemnisc import curves as cv
from lemnisc import ladic as la
from lemnisc import report as rp
from lemnisc import series as se
from lemnisc.gauss import is_prime, primary_decompose

# tolerances
NUMERIC_RESIDUAL = 1e-10      # criterion 3, at P = 256
VANISH = mpf("1e-20")         # criterion 4
L_ROUTES = mpf("1e-10")       # criterion 8
C_UNIT = mpf("1e-20")         # criterion 8
VARPI_ROUTES = mpf("1e-30")   # criterion 2, at P = 128
SCAN_PREC = 256
LMAX = 600
TWO_TERM_BUDGET = 200_000


def line(n, ok: bool, detail: str) -> None:
    record(f"[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")


@pytest.fixture(scope="module")
def scan_rows():
    return rp.scan(5, LMAX - 1, "all", SCAN_PREC)


@pytest.fixture(scope="module")
def vanishing_primes(scan_rows):
    return [r.ell for r in scan_rows if r.ell % 8 == 1 and r.Gd_mod_ell == 0]


# 1 -----------------------------------------------------------------------

def test_criterion_1_series_fidelity():
    gc.collect()   # time the computation, not garbage left by earlier tests
    t0 = time.perf_counter()
    G = se.cl_factorial_series(12)
    cl_ok = [G[n] for n in range(0, 12, 2)] == [1, -2, 12, -216, 7056, -368928]
    C = se.sl_factorial_series(14).to_rational()
    sl_ok = (C[5], C[9], C[13]) == (Fraction(-1, 10), Fraction(1, 120), Fraction(-11, 15600))
    ode = se.ode_residuals(2000)
    dt = time.perf_counter() - t0
    ok = cl_ok and sl_ok and all(ode.values()) and dt < 5
    line(1, ok, f"cl {cl_ok}, sl {sl_ok}, ODE residuals to 2000 {all(ode.values())}, {dt:.2f}s (< 5s)")
    assert ok


# 2 -----------------------------------------------------------------------

def test_criterion_2_constant():
    an.lemniscate_constant.cache_clear()
    t0 = time.perf_counter()
    with mp.workprec(160):
        agm = an.lemniscate_constant(128)
        quad = an.lemniscate_quadrature(128)
        diff = abs(agm - quad)
        digits = mp.nstr(agm, 12).startswith("2.62205")
    dt = time.perf_counter() - t0
    ok = digits and diff < VARPI_ROUTES and dt < 1
    line(2, ok, f"varpi = {mp.nstr(agm, 8)}..., |AGM - quadrature| = {mp.nstr(diff, 3)} (< 1e-30), {dt:.2f}s (< 1s)")
    assert ok


# 3 -----------------------------------------------------------------------

def test_criterion_3_triple_route(scan_rows):
    covered = [r for r in scan_rows if r.ell % 16 != 5]
    agree = all(r.checks["routes_agree"] for r in covered)
    resid = all(r.checks["numeric_residual"] for r in covered)
    bound = all(r.checks["half_ell_bound"] for r in scan_rows)
    odd = all(r.a_lambda % 2 == 1 for r in scan_rows if r.ell % 16 == 13)
    n13 = sum(r.ell % 16 == 13 for r in scan_rows)
    ok = agree and resid and bound and odd
    line(3, ok, f"{len(covered)} primes l = 1 mod 8 or 13 mod 16 below {LMAX}: numeric = l-adic = congruence {agree}, "
                f"residual < 1e-10 {resid}; |A| < l/2 on all {len(scan_rows)} {bound}; odd on {n13} primes 13 mod 16 {odd}")
    assert ok


def test_criterion_3_five_mod_sixteen(scan_rows):
    """The class l = 5 mod 16 carries no integral A_lambda: recorded, not asserted away."""
    fam = [r.ell for r in scan_rows if r.ell % 16 == 5]
    integral = []
    for ell in fam:
        res = an.a_lambda_numeric(primary_decompose(ell), SCAN_PREC).residual
        integral.append(res < NUMERIC_RESIDUAL)
    ok = all(integral)
    line("3 (l = 5 mod 16)", ok,
         f"{len(fam)} primes {fam}: egs / lambda~^3 near an integer on {sum(integral)} of them "
         f"(no integral A_lambda exists on this class; routes cannot agree)")
    if not ok:
        pytest.xfail("l = 5 mod 16: egs / lambda~^3 is not an integer multiple of a unit")


# 4 -----------------------------------------------------------------------

def test_criterion_4_vanishing_equivalence(scan_rows):
    rows = [r for r in scan_rows if r.ell % 8 == 1]
    bad = []
    for r in rows:
        lp = primary_decompose(r.ell)
        by_cong = co.Gd_mod_ell(lp) == 0
        by_num = an.a_lambda_numeric(lp, SCAN_PREC).egs_abs < VANISH
        by_eta = la.egs_eta_valuation(lp) > lp.d
        if not (by_cong == by_num == by_eta):
            bad.append(r.ell)
    van = [r.ell for r in rows if r.vanishing]
    frac = len(van) / len(rows)
    ok = not bad
    line(4, ok, f"{len(rows)} primes l = 1 mod 8 below {LMAX}, exceptions {bad}; vanishing {van} = "
                f"{len(van)}/{len(rows)} = {100 * frac:.1f}% (reference: about 18%, soft)")
    assert ok


# 5 -----------------------------------------------------------------------

def test_criterion_5_kummer(scan_rows, vanishing_primes):
    fails = []
    for ell in vanishing_primes:
        reps = co.kummer_table(primary_decompose(ell), amax=10, offsets=(0, 1))
        fails += [(ell, r.e, r.a) for r in reps if not r.passed]
    off = [r.ell for r in scan_rows if r.ell % 8 == 1 and r.ell not in vanishing_primes]
    a0_passes = []
    for ell in off:
        lp = primary_decompose(ell)
        for e in (lp.d, lp.d + ell - 1):
            if co.kummer_sum(lp, e, 0).passed:
                a0_passes.append((ell, e))
    ok = bool(vanishing_primes) and not fails and not a0_passes
    line(5, ok, f"vanishing {vanishing_primes}: 22 sums each (e in {{d, d+l-1}}, a <= 10), failures {fails}; "
                f"a = 0 fails on all {len(off)} non-vanishing primes: {not a0_passes}")
    assert ok


# 6 -----------------------------------------------------------------------

def test_criterion_6_two_term(vanishing_primes):
    fails, done, skipped = [], [], []
    for ell in vanishing_primes:
        lp = primary_decompose(ell)
        for k in (1, 2, 3, 5):
            if not co.two_term_check(lp, lp.d, k, 0):
                fails.append((ell, k, 0))
        if lp.d + ell * (ell - 1) <= TWO_TERM_BUDGET:
            if not co.two_term_check(lp, lp.d, ell, 1):
                fails.append((ell, ell, 1))
            done.append(ell)
        else:
            skipped.append(ell)
    ok = not fails
    line(6, ok, f"b = 0, k in {{1,2,3,5}} mod l^2 on {vanishing_primes}; b = 1, k = l mod l^3 on {done}; "
                f"skipped (e + l(l-1) > 2e5) {skipped}; failures {fails}")
    assert ok


# 7 -----------------------------------------------------------------------

def test_criterion_7_hurwitz():
    t0 = time.perf_counter()
    reps = [co.hurwitz_check(p) for p in range(5, 300) if is_prime(p)]
    dt = time.perf_counter() - t0
    bad = [r.p for r in reps if not r.equality_pass]
    classes = {r.p % 4 for r in reps}
    ok = not bad and classes == {1, 3} and dt < 60
    line(7, ok, f"{len(reps)} primes 3 < p < 300 (both classes mod 4), minimal residue = h(-p) everywhere "
                f"{not bad}, {dt:.2f}s (< 60s)")
    assert ok


# 8 -----------------------------------------------------------------------

def test_criterion_8_analytic(scan_rows):
    covered = [r for r in scan_rows if r.ell % 16 != 5]
    lv = all(r.checks["l_value_routes"] for r in covered)
    cu = all(r.checks["root_number_unit"] for r in covered)
    bd = all(r.checks["l_value_bound"] for r in covered)
    ok = lv and cu and bd
    line(8, ok, f"{len(covered)} primes with a Hecke character below {LMAX}: smoothed = egs-formula L(1) to 1e-10 {lv}, "
                f"|C| = 1 to 1e-20 {cu}, L(1) bound {bd}")
    assert ok


# 9 -----------------------------------------------------------------------

def test_criterion_9_formal_group():
    out = {}
    for ell in (5, 13, 17, 29, 41):
        lp = primary_decompose(ell)
        N = ell * ell + ell + 1
        f0 = la.lubin_tate_log(lp, N, 4)
        t = la.lt_type_check(lp, f0, N)
        d = la.f0_derivative_relation(lp, f0, N)
        om = []
        for a in (1, 2, 3):
            Nphi = (a + 2) * ell + 4
            phi = la.cl_compose_f0(lp, Nphi, a + 3) if ell % 8 == 1 else la.sl_compose_f0(lp, Nphi, a + 3)
            om.append(la.omega_integrality(lp, phi, a))
        out[ell] = t and d and all(om)
    ok = all(out.values())
    line(9, ok, f"type check to deg l^2+l, derivative relation mod l, Omega^a integrality a <= 3: {out}")
    assert ok


# 10 ----------------------------------------------------------------------

def test_criterion_10_curves():
    res = cv.verify_fixture()
    rng = random.Random(4817)
    trips = 0
    while trips < 100:
        u = cv.QiNumber(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        v = cv.QiNumber(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        lam = u ** 4 - v * v
        if not (u and v and lam):
            continue
        P = cv.point_from_representation(u, v, lam)
        u2, v2 = cv.representation_from_point(P)
        R = cv.point_from_representation(u2, v2, lam)
        if not (R.on_curve() and u2 ** 4 - v2 * v2 == lam):
            break
        trips += 1
    ok = all(res.values()) and trips == 100
    failed = [k for k, v in res.items() if not v]
    line(10, ok, f"4817 relations exact ({len(res)} checks, failures {failed}; [1+i]Q = -P, i.e. P = [1+i](-Q)); "
                 f"{trips}/100 round-trips")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))

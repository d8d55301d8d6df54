"""Command-line front end: scans, single-prime reports, congruence suites, curve fixtures."""
from __future__ import annotations

import argparse
import datetime
import json
import sys
import time
from fractions import Fraction

from mpmath import mp

from . import __version__
from . import analytic as an
from . import congruence as co
from . import curves as cv
from . import ladic as la
from . import report as rp
from . import series as se
from .gauss import GaussianInt, is_prime, primary_decompose, quarter_set

EXIT_OK = 0
EXIT_RESOURCE = 1
EXIT_DISAGREE = 2


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _check_ell(ell: int) -> None:
    if ell < 5 or not is_prime(ell) or ell % 4 != 1:
        raise argparse.ArgumentTypeError(f"{ell} is not a prime = 1 mod 4")


# ---------------------------------------------------------------------------
# scan

def cmd_scan(args) -> int:
    if args.lmax > co.SERIES_BUDGET and not args.force:
        print(f"lmax {args.lmax} exceeds the series budget {co.SERIES_BUDGET}; pass --force",
              file=sys.stderr)
        return EXIT_RESOURCE
    try:
        rows = rp.scan(args.lmin, args.lmax, args.cls, args.prec, args.jobs)
    except (MemoryError, co.BudgetExceeded) as exc:
        print(f"resource exhaustion: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    meta = None
    if not args.no_meta:
        meta = {"schema_version": rp.SCHEMA_VERSION, "version": __version__,
                "generated": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
                "prec": args.prec, "lmin": args.lmin, "lmax": args.lmax, "class": args.cls}
    timing = not args.no_meta
    if args.format == "csv":
        _emit(rp.to_csv(rows, meta, timing), args.out)
    else:
        _emit(rp.to_json(rows, meta, timing), args.out)
    s = rp.summary(rows)
    print(json.dumps(s), file=sys.stderr)
    return EXIT_OK if s["passed"] else EXIT_DISAGREE


# ---------------------------------------------------------------------------
# one prime in depth

def cmd_egs(args) -> int:
    ell, P = args.ell, args.prec
    lp = primary_decompose(ell)
    qs = quarter_set(lp)
    lines = [f"ell = {ell}", f"lambda = {lp.lam}", f"class mod 16 = {lp.class16}", f"d = {lp.d}",
             f"|S| = {len(qs.reps)}, prod S mod ell = {qs.product}",
             f"gamma(S) = zeta8^{qs.gamma_exp8}"]
    ok = True
    with mp.workprec(P + 24):
        egs = an.egs_numeric(lp, P)
        lt = an.lambda_tilde_numeric(lp, P)
        num = an.a_lambda_numeric(lp, P, egs, lt)
        lines += [f"egs (numeric) = {mp.nstr(egs, 30)}", f"lambda~ = {mp.nstr(lt, 30)}",
                  f"egs / lambda~^3 = {mp.nstr(num.A, 30)}", f"table unit = {num.unit}"]
        if ell % 16 == 5:
            lines.append("a_lambda: not covered for l = 5 mod 16 (egs / lambda~^3 is not a unit multiple of an integer)")
        else:
            E = la.egs_ladic(lp, args.ladic_prec)
            a_l = la.a_lambda_ladic(lp, max(2, args.ladic_prec))
            a_c = co.a_lambda_congruence_signed(lp)
            a_l = 0 if a_l is la.VANISHED else a_l
            agree = num.a == a_l == a_c
            ok &= agree
            C = an.root_number(lp, P)
            Ls = an.l_value_smoothed(lp, P, C=C)
            Le = an.l_value_from_egs(lp, P, egs)
            l_ok = abs(Ls - Le) < rp.L_TOL
            ok &= l_ok
            lines += [f"egs (l-adic, eta-valuation) = {E.eta_valuation()}",
                      f"a_lambda: numeric {num.a}, l-adic {a_l}, congruence {a_c} -> {'agree' if agree else 'DISAGREE'}",
                      f"numeric residual = {num.residual:.3e}",
                      f"C = {mp.nstr(C, 20)}  |C| - 1 = {mp.nstr(abs(C) - 1, 3)}",
                      f"L(1) smoothed = {mp.nstr(Ls, 25)}", f"L(1) from egs = {mp.nstr(Le, 25)}",
                      f"L(1) routes {'agree' if l_ok else 'DISAGREE'}; bound {mp.nstr(an.l_value_bound(lp), 10)}"]
        lines += [f"|A| < l/2: {bool(num.bound_half_ell)}",
                  f"|A| < c |lambda|^(5/4): {bool(num.bound_five_quarter)}"]
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_DISAGREE


# ---------------------------------------------------------------------------
# congruence suites

def cmd_kummer(args) -> int:
    lp = primary_decompose(args.ell)
    if args.ell % 8 != 1:
        print(f"l={args.ell} is not 1 mod 8", file=sys.stderr)
        return EXIT_DISAGREE
    offsets = tuple(int(x) for x in args.e_offsets.split(","))
    vanishing = co.vanishing_by_congruence(lp)
    print(f"l={args.ell} lambda={lp.lam} vanishing={vanishing}")
    ok = True
    try:
        reps = co.kummer_table(lp, args.amax, offsets, force=args.force)
    except co.BudgetExceeded as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    for r in reps:
        print(f"e={r.e} a={r.a} ord={r.sum_valuation}{'+' if r.capped else ''} "
              f"need={r.required_valuation} {'pass' if r.passed else 'FAIL'}")
        if vanishing:
            ok &= r.passed
    if not vanishing:
        # the a = 0 case must fail off the vanishing locus
        ok &= not any(r.passed for r in reps if r.a == 0)
    if args.b is not None and vanishing:
        ks = [int(k) for k in args.k.split(",")] if args.k else [j * args.ell ** args.b for j in (1, 2, 3, 5)]
        for k in ks:
            try:
                passed = co.two_term_check(lp, lp.d, k, args.b, force=args.force)
            except co.BudgetExceeded as exc:
                print(f"two-term k={k} b={args.b}: skipped ({exc})")
                continue
            ok &= passed
            print(f"two-term k={k} b={args.b} mod l^{args.b + 2}: {'pass' if passed else 'FAIL'}")
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_hurwitz(args) -> int:
    ok = True
    for p in range(5, args.pmax):
        if not is_prime(p):
            continue
        r = co.hurwitz_check(p)
        ok &= r.equality_pass
        print(f"p={p} mod4={p % 4} h={r.h} residue={r.rhs_minimal_residue} "
              f"{'pass' if r.equality_pass else 'FAIL'}")
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_curve(args) -> int:
    fx = cv.load_fixture(args.fixture)
    res = cv.verify_fixture(fx)
    for k, v in res.items():
        print(f"{k}: {'pass' if v else 'FAIL'}")
    ok = all(res.values())
    for ex in cv.exceptional_curves():
        A = cv.QiNumber(*ex["A"])
        if ex["generator"] is None:
            print(f"A={A}: rank {ex['rank']}, torsion order {ex['torsion_order']} (metadata only)")
            continue
        G = cv.CurvePoint(A, cv.QiNumber(*ex["generator"][0]), cv.QiNumber(*ex["generator"][1]))
        order = cv.point_order(G, 20)
        good = order == ex["torsion_order"]
        ok &= good
        print(f"A={A}: generator {G} has order {order}: {'pass' if good else 'FAIL'}")
    return EXIT_OK if ok else EXIT_DISAGREE


# ---------------------------------------------------------------------------
# selftest

def _selftests():
    def gauss_():
        z = GaussianInt(3, 2)
        return z * z.conj() == GaussianInt(13) and primary_decompose(13).lam == z
    def series_():
        G = se.cl_factorial_series(12)
        return [G[n] for n in range(0, 12, 2)] == [1, -2, 12, -216, 7056, -368928] \
            and all(se.ode_residuals(60).values())
    def ladic_():
        x = la.LAdicNumber.from_fraction(5, Fraction(1, 5), 4)
        return x.val == -1 and not la.VANISHED
    def analytic_():
        return mp.nstr(an.lemniscate_constant(128), 6) == "2.62206"
    def congruence_():
        return co.reindex_identity(3, 2) and co.hurwitz_check(7).equality_pass
    def curves_():
        T = cv.CurvePoint(cv.QiNumber(3, 2), 0, 0)
        P = cv.CurvePoint(cv.QiNumber(0, 1), 0, 0)
        return (T + T).is_infinity and cv.mul_i(cv.mul_i(T)) == -T and (P * 2).is_infinity
    def report_():
        return rp.scan(10, 12) == []
    return {"gauss": gauss_, "series": series_, "ladic": ladic_, "analytic": analytic_,
            "congruence": congruence_, "curves": curves_, "report": report_}


def cmd_selftest(args) -> int:
    ok = True
    for name, fn in _selftests().items():
        t0 = time.perf_counter()
        try:
            passed = bool(fn())
        except Exception as exc:      # report, do not abort the remaining modules
            passed = False
            print(f"{name}: error {exc!r}")
        ok &= passed
        print(f"{name}: {'pass' if passed else 'FAIL'} ({time.perf_counter() - t0:.2f}s)")
    return EXIT_OK if ok else EXIT_DISAGREE


# ---------------------------------------------------------------------------

def _ell_arg(s: str) -> int:
    ell = int(s)
    _check_ell(ell)
    return ell


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lemnisc", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("scan", help="one row per prime l = 1 mod 4 in a range")
    s.add_argument("--lmin", type=int, default=5)
    s.add_argument("--lmax", type=int, default=600)
    s.add_argument("--class", dest="cls", choices=rp.CLASSES, default="all")
    s.add_argument("--prec", type=int, default=rp.default_prec())
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", default=None)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--no-meta", action="store_true", help="omit the timestamp header and timings")
    s.add_argument("--force", action="store_true", help="allow ranges above the series budget")
    s.set_defaults(func=cmd_scan)

    e = sub.add_parser("egs", help="all routes for one prime")
    e.add_argument("--ell", type=_ell_arg, required=True)
    e.add_argument("--prec", type=int, default=rp.default_prec())
    e.add_argument("--ladic-prec", type=int, default=2)
    e.set_defaults(func=cmd_egs)

    k = sub.add_parser("kummer", help="Kummer-type and two-term congruences")
    k.add_argument("--ell", type=_ell_arg, required=True)
    k.add_argument("--amax", type=int, default=10)
    k.add_argument("--e-offsets", default="0,1")
    k.add_argument("--b", type=int, default=None)
    k.add_argument("--k", default=None, help="comma-separated k values for the two-term check")
    k.add_argument("--force", action="store_true")
    k.set_defaults(func=cmd_kummer)

    h = sub.add_parser("hurwitz", help="class numbers against Bernoulli/Euler residues")
    h.add_argument("--pmax", type=int, default=300)
    h.set_defaults(func=cmd_hurwitz)

    c = sub.add_parser("curve", help="verify the 4817 fixture")
    c.add_argument("--fixture", default=None)
    c.set_defaults(func=cmd_curve)

    t = sub.add_parser("selftest", help="quick checks of every module")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())

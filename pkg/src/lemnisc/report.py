"""Per-prime scan rows, cross-route consistency, and CSV/JSON emission."""
from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from mpmath import mp, mpf

from . import analytic as an
from . import congruence as co
from . import ladic as la
from .gauss import ONE_PLUS_I, PrimaryPrime, is_prime, primary_decompose, quartic_symbol

SCHEMA_VERSION = 1
COLUMNS = ("ell", "lambda", "class16", "chi_one_plus_i", "d", "Gd_mod_ell", "vanishing",
           "a_lambda", "a_even", "egs_abs", "checks", "timing")
CLASSES = ("1mod8", "5mod8", "all")
L_TOL = mpf("1e-10")
INFO_KEYS = ("family_covered",)     # status flags, not pass/fail checks
C_TOL = mpf("1e-20")


class ScanConsistencyError(RuntimeError):
    pass


def default_prec() -> int:
    return int(os.environ.get("LEMNISC_PREC_DEFAULT", an.DEFAULT_PREC))


def _unit_str(k: int) -> str:
    return ("1", "i", "-1", "-i")[k % 4]


def gaussian_str(re: int, im: int) -> str:
    return f"{re}{'+' if im >= 0 else '-'}{abs(im)}i"


def _sci(x, P: int) -> str:
    digits = max(6, int(P * 0.30103) - 4)
    with mp.workprec(P + 24):
        return mp.nstr(x, digits, min_fixed=1, max_fixed=0, strip_zeros=False)


@dataclass
class ScanRow:
    ell: int
    lam: tuple
    class16: int
    chi_one_plus_i: str
    d: int
    Gd_mod_ell: int
    vanishing: bool
    a_lambda: int | None
    a_even: bool | None
    egs_abs: str
    checks: dict = field(default_factory=dict)
    timing: float = 0.0

    @property
    def passed(self) -> bool:
        return all(v for k, v in self.checks.items() if v is not None and k not in INFO_KEYS)

    def as_dict(self, timing: bool = True) -> dict:
        return {
            "ell": self.ell,
            "lambda": gaussian_str(*self.lam),
            "class16": self.class16,
            "chi_one_plus_i": self.chi_one_plus_i,
            "d": self.d,
            "Gd_mod_ell": self.Gd_mod_ell,
            "vanishing": self.vanishing,
            "a_lambda": self.a_lambda,
            "a_even": self.a_even,
            "egs_abs": self.egs_abs,
            "checks": dict(self.checks),
            "timing": round(self.timing, 3) if timing else None,
        }


def scan_prime(ell: int, P: int | None = None) -> ScanRow:
    """All routes for one prime l = 1 mod 4, with pass/fail checks.

    Checks are None where a statement does not apply to the prime's class.
    """
    P = default_prec() if P is None else P
    t0 = time.perf_counter()
    lp = primary_decompose(ell)
    covered = ell % 16 != 5
    checks: dict[str, bool | None] = {"family_covered": covered}
    Gd = co.Gd_mod_ell(lp)
    num = an.a_lambda_numeric(lp, P)
    checks["numeric_residual"] = num.residual < 1e-10 if covered else None
    checks["half_ell_bound"] = bool(num.bound_half_ell)

    if covered:
        lad = la.a_lambda_ladic(lp)
        a_lad = 0 if lad is la.VANISHED else lad
        a_con = co.a_lambda_congruence_signed(lp)
        checks["routes_agree"] = num.a == a_lad == a_con
        a = num.a
    else:
        a = None
        checks["routes_agree"] = None

    checks["odd_13mod16"] = (a % 2 == 1) if ell % 16 == 13 else None

    vanishing = bool(num.vanished)
    if ell % 8 == 1:
        eta_v = la.egs_eta_valuation(lp)
        checks["vanishing_equivalence"] = (Gd == 0) == vanishing == (eta_v > lp.d)
    else:
        checks["vanishing_equivalence"] = None

    if covered:
        with mp.workprec(P + 24):
            C = an.root_number(lp, P)
            Ls = an.l_value_smoothed(lp, P, C=C)
            Le = an.l_value_from_egs(lp, P)
            checks["root_number_unit"] = abs(abs(C) - 1) < C_TOL
            checks["l_value_routes"] = abs(Ls - Le) < L_TOL
            checks["l_value_bound"] = abs(Le) < an.l_value_bound(lp)
        checks["consistency"] = vanishing == (a == 0) == (Gd == 0)
    else:
        for k in ("root_number_unit", "l_value_routes", "l_value_bound", "consistency"):
            checks[k] = None

    chi = quartic_symbol(ONE_PLUS_I, lp)
    return ScanRow(ell, (lp.lam.re, lp.lam.im), lp.class16, _unit_str(chi.k), lp.d, Gd,
                   vanishing, a, None if a is None else a % 2 == 0, _sci(num.egs_abs, P),
                   checks, time.perf_counter() - t0)


def _in_class(ell: int, cls: str) -> bool:
    return cls == "all" or (cls == "1mod8" and ell % 8 == 1) or (cls == "5mod8" and ell % 8 == 5)


def scan_primes(lmin: int, lmax: int, cls: str = "all") -> list[int]:
    if cls not in CLASSES:
        raise ValueError(f"class must be one of {CLASSES}")
    return [p for p in range(max(lmin, 5), lmax + 1) if p % 4 == 1 and is_prime(p) and _in_class(p, cls)]


def scan(lmin: int, lmax: int, cls: str = "all", P: int | None = None, jobs: int = 1) -> list[ScanRow]:
    """Rows in prime order; workers fan out, results are reordered before return."""
    P = default_prec() if P is None else P
    primes = scan_primes(lmin, lmax, cls)
    if jobs <= 1 or len(primes) <= 1:
        return [scan_prime(p, P) for p in primes]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        # largest primes first for load balance; map back by prime
        order = sorted(primes, reverse=True)
        rows = dict(zip(order, ex.map(scan_prime, order, [P] * len(order))))
    return [rows[p] for p in primes]


def summary(rows: list[ScanRow]) -> dict:
    one8 = [r for r in rows if r.ell % 8 == 1]
    van = [r.ell for r in one8 if r.vanishing]
    return {
        "schema_version": SCHEMA_VERSION,
        "rows": len(rows),
        "passed": all(r.passed for r in rows),
        "failed_primes": [r.ell for r in rows if not r.passed],
        "a_lambda_odd_13mod16": all(r.a_lambda % 2 == 1 for r in rows if r.ell % 16 == 13),
        "uncovered_primes": [r.ell for r in rows if r.checks.get("family_covered") is False],
        "count_1mod8": len(one8),
        "vanishing_1mod8": van,
        "vanishing_fraction_1mod8": (len(van) / len(one8)) if one8 else None,
    }


def to_csv(rows: list[ScanRow], meta: dict | None = None, timing: bool = True) -> str:
    buf = io.StringIO()
    if meta is not None:
        buf.write("# " + json.dumps(meta, sort_keys=True) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        d = r.as_dict(timing)
        d["checks"] = ";".join(f"{k}={'na' if v is None else int(v)}" for k, v in d["checks"].items())
        d["a_lambda"] = "" if d["a_lambda"] is None else d["a_lambda"]
        d["a_even"] = "" if d["a_even"] is None else int(d["a_even"])
        d["vanishing"] = int(d["vanishing"])
        d["timing"] = "" if d["timing"] is None else d["timing"]
        w.writerow([d[c] for c in COLUMNS])
    return buf.getvalue()


def to_json(rows: list[ScanRow], meta: dict | None = None, timing: bool = True) -> str:
    out = {"schema_version": SCHEMA_VERSION, "summary": summary(rows),
           "rows": [r.as_dict(timing) for r in rows]}
    if meta is not None:
        out["meta"] = meta
    return json.dumps(out, indent=2, sort_keys=False) + "\n"

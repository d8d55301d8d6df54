"""Follow one prime through every route: series, l-adic, congruence, numeric, L(1).

    python demos/single_prime.py 17
"""
from __future__ import annotations

import sys

from mpmath import mp

from lemnisc import analytic as an
from lemnisc import congruence as co
from lemnisc import ladic as la
from lemnisc.gauss import primary_decompose


def main(ell: int = 17, prec: int = 160) -> None:
    lp = primary_decompose(ell)
    print(f"l = {ell}, primary lambda = {lp.lam}, d = {lp.d}")
    print(f"G_d mod l = {co.Gd_mod_ell(lp)}")

    num = an.a_lambda_numeric(lp, prec)
    print(f"numeric: |egs| = {mp.nstr(num.egs_abs, 15)}, A = {num.a}, residual = {float(num.residual):.2e}")
    try:
        print(f"l-adic: A = {la.a_lambda_ladic(lp)}")
    except la.UncoveredFamily as exc:
        print(f"l-adic: {exc}")
    c = co.a_lambda_congruence(lp)
    print(f"congruence: candidates {c.candidates}, provisional {c.provisional}")

    if ell % 16 != 5:
        with mp.workprec(prec):
            Ls, Le = an.l_value_smoothed(lp, prec), an.l_value_from_egs(lp, prec)
            print(f"L(1) smoothed  = {mp.nstr(Ls, 20)}")
            print(f"L(1) from egs  = {mp.nstr(Le, 20)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 17)

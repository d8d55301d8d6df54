"""Scan l = 1 mod 8 below a bound, list the vanishing primes, and show the Kummer
sums that hold only for them.

    python demos/vanishing.py 300
"""
from __future__ import annotations

import sys

from lemnisc import congruence as co
from lemnisc import report as rp
from lemnisc.gauss import primary_decompose


def main(lmax: int = 300) -> None:
    rows = rp.scan(5, lmax, "1mod8", 192)
    van = [r.ell for r in rows if r.vanishing]
    print(f"{len(rows)} primes l = 1 mod 8 up to {lmax}; vanishing: {van}")
    for r in rows:
        print(f"  l = {r.ell:4d}  A = {r.a_lambda:3d}  G_d mod l = {r.Gd_mod_ell}")

    for ell in van[:2]:
        lp = primary_decompose(ell)
        reps = co.kummer_table(lp, amax=4)
        print(f"l = {ell}: " + ", ".join(f"(e={x.e}, a={x.a}) {'ok' if x.passed else 'FAIL'}" for x in reps))
    other = next(r.ell for r in rows if not r.vanishing)
    lp = primary_decompose(other)
    print(f"l = {other} (non-vanishing): a = 0 sum passes? {co.kummer_sum(lp, lp.d, 0).passed}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 300)

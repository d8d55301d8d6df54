"""Exact arithmetic on y^2 = x^3 - lambda x over Q(i) for lambda = 41 + 56i.

    python demos/curve_4817.py
"""
from __future__ import annotations

from lemnisc import curves as cv


def main() -> None:
    fx = cv.load_fixture()
    P = cv.CurvePoint(fx.lam, fx.alpha ** 2, fx.alpha * fx.beta)
    Q = cv.point_from_alpha_beta(fx.alpha_prime, fx.beta_prime, fx.lam)
    print(f"lambda = {fx.lam}")
    print(f"P = ({P.x}, {P.y})")
    print(f"Q = ({Q.x}, {Q.y})")
    R = cv.mul_one_plus_i(Q)
    print(f"[1+i]Q == -P: {R == -P}")
    print(f"descent class of Q: {cv.descent_class(Q)}, of [1+i]Q: {cv.descent_class(R)}")
    print(f"order of P up to 12: {cv.point_order(P, 12)}")
    for k, ok in cv.verify_fixture(fx).items():
        print(f"  {k}: {'pass' if ok else 'FAIL'}")


if __name__ == "__main__":
    main()

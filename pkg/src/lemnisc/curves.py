"""Exact arithmetic on y^2 = x^3 - A x over Q(i), Gaussian congruent-number
representations, the descent map to {1, i, lambda, i lambda} mod squares, and
the 4817 fixture.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable

from .gauss import GaussianInt, gaussian_sqrt


@dataclass(frozen=True)
class QiNumber:
    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def of(cls, z) -> "QiNumber":
        if isinstance(z, QiNumber):
            return z
        if isinstance(z, GaussianInt):
            return cls(z.re, z.im)
        if isinstance(z, complex):
            return cls(Fraction(z.real), Fraction(z.imag))
        if isinstance(z, tuple):
            return cls(*z)
        return cls(z)

    def __add__(self, o):
        o = QiNumber.of(o)
        return QiNumber(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return QiNumber(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-QiNumber.of(o))

    def __rsub__(self, o):
        return QiNumber.of(o) - self

    def __mul__(self, o):
        o = QiNumber.of(o)
        return QiNumber(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conj(self) -> "QiNumber":
        return QiNumber(self.re, -self.im)

    def inverse(self) -> "QiNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return QiNumber(self.re / n, -self.im / n)

    def __truediv__(self, o):
        return self * QiNumber.of(o).inverse()

    def __rtruediv__(self, o):
        return QiNumber.of(o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = QiNumber(1), self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __bool__(self):
        return bool(self.re or self.im)

    def __eq__(self, o):
        try:
            o = QiNumber.of(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def sqrt(self) -> "QiNumber | None":
        """Exact square root in Q(i), or None."""
        den = math.lcm(self.re.denominator, self.im.denominator)
        z = GaussianInt(int(self.re * den * den), int(self.im * den * den))
        r = gaussian_sqrt(z) if z else GaussianInt(0)
        if r is None:
            return None
        return QiNumber(Fraction(r.re, den), Fraction(r.im, den))

    def is_square(self) -> bool:
        return self.sqrt() is not None

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"QiNumber({self})"


I = QiNumber(0, 1)


# ---------------------------------------------------------------------------
# points

class CurveMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y) on y^2 = x^3 - A x, or the point at infinity (x = y = None)."""
    A: QiNumber
    x: QiNumber | None = None
    y: QiNumber | None = None

    def __post_init__(self):
        object.__setattr__(self, "A", QiNumber.of(self.A))
        if self.x is not None:
            object.__setattr__(self, "x", QiNumber.of(self.x))
            object.__setattr__(self, "y", QiNumber.of(self.y))
            if not self.on_curve():
                raise ValueError(f"({self.x}, {self.y}) is not on y^2 = x^3 - ({self.A})x")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def on_curve(self) -> bool:
        if self.x is None:
            return True
        return self.y * self.y == self.x ** 3 - self.A * self.x

    def __neg__(self):
        return self if self.is_infinity else CurvePoint(self.A, self.x, -self.y)

    def __add__(self, other):
        return point_add(self, other)

    def __sub__(self, other):
        return point_add(self, -other)

    def __mul__(self, n: int):
        return point_mul(self, n)

    __rmul__ = __mul__

    def __str__(self):
        return "INFINITY" if self.is_infinity else f"({self.x}, {self.y})"


def infinity(A) -> CurvePoint:
    return CurvePoint(QiNumber.of(A))


def _same_curve(P: CurvePoint, Q: CurvePoint) -> None:
    if P.A != Q.A:
        raise CurveMismatch("points lie on different curves")


def point_add(P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    _same_curve(P, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 == -y2:
            return infinity(P.A)
        m = (3 * x1 * x1 - P.A) / (2 * y1)
    else:
        m = (y1 - y2) / (x1 - x2)
    x3 = m * m - x1 - x2
    y3 = -(y1 + m * (x3 - x1))
    R = CurvePoint(P.A, x3, y3)
    assert m * m == x1 + x2 + x3
    return R


def point_double(P: CurvePoint) -> CurvePoint:
    if not P.is_infinity and not P.y:
        return infinity(P.A)
    return point_add(P, P)


def point_mul(P: CurvePoint, n: int) -> CurvePoint:
    if n < 0:
        return point_mul(-P, -n)
    out, base = infinity(P.A), P
    while n:
        if n & 1:
            out = point_add(out, base)
        n >>= 1
        if n:
            base = point_add(base, base)
    return out


def mul_i(P: CurvePoint) -> CurvePoint:
    """[i](x, y) = (-x, i y)."""
    if P.is_infinity:
        return P
    return CurvePoint(P.A, -P.x, I * P.y)


def mul_one_plus_i(P: CurvePoint) -> CurvePoint:
    return point_add(P, mul_i(P))


def x_one_plus_i(P: CurvePoint) -> QiNumber:
    """x([1+i]P) = (y / ((1+i) x))^2, for x != 0."""
    if P.is_infinity or not P.x:
        raise ValueError("needs an affine point with x != 0")
    return (P.y / ((1 + I) * P.x)) ** 2


def x_double(P: CurvePoint) -> QiNumber:
    """x([2]P) = ((x^2 + A) / (2y))^2."""
    return ((P.x * P.x + P.A) / (2 * P.y)) ** 2


# ---------------------------------------------------------------------------
# representations lambda = u^4 - v^2 = -alpha^4 + beta^2 i

def representation_from_point(P: CurvePoint) -> tuple[QiNumber, QiNumber]:
    """u = (a^2 + lambda)/(2b), v = (a^4 - 6 lambda a^2 + lambda^2)/(4b^2) for P = (a, b)."""
    if P.is_infinity or not P.y:
        raise ValueError("torsion point: no representation")
    lam, a, b = P.A, P.x, P.y
    u = (a * a + lam) / (2 * b)
    v = (a ** 4 - 6 * lam * a * a + lam * lam) / (4 * b * b)
    if u ** 4 - v * v != lam:
        raise ArithmeticError("representation identity failed")
    return u, v


def point_from_representation(u, v, lam) -> CurvePoint:
    """(u^2, u v) on y^2 = x^3 - lambda x, given lambda = u^4 - v^2."""
    u, v, lam = QiNumber.of(u), QiNumber.of(v), QiNumber.of(lam)
    if u ** 4 - v * v != lam:
        raise ValueError("lambda != u^4 - v^2")
    return CurvePoint(lam, u * u, u * v)


def point_from_alpha_beta(alpha, beta, lam) -> CurvePoint:
    """(alpha^2 i, alpha beta), given lambda = -alpha^4 + beta^2 i."""
    alpha, beta, lam = QiNumber.of(alpha), QiNumber.of(beta), QiNumber.of(lam)
    if -alpha ** 4 + beta * beta * I != lam:
        raise ValueError("lambda != -alpha^4 + beta^2 i")
    return CurvePoint(lam, alpha * alpha * I, alpha * beta)


# ---------------------------------------------------------------------------
# descent

@dataclass(frozen=True)
class DescentClass:
    """i^e_i lambda^e_lam in Q(i)^x / squares."""
    e_i: int
    e_lam: int

    def __post_init__(self):
        object.__setattr__(self, "e_i", self.e_i % 2)
        object.__setattr__(self, "e_lam", self.e_lam % 2)

    def __mul__(self, o: "DescentClass") -> "DescentClass":
        return DescentClass(self.e_i + o.e_i, self.e_lam + o.e_lam)

    def __str__(self):
        return {(0, 0): "1", (1, 0): "i", (0, 1): "lambda", (1, 1): "i*lambda"}[(self.e_i, self.e_lam)]


def square_class(x: QiNumber, lam: QiNumber) -> DescentClass:
    for e_i in (0, 1):
        for e_lam in (0, 1):
            t = I ** e_i * lam ** e_lam
            if (x / t).is_square():
                return DescentClass(e_i, e_lam)
    raise ValueError(f"{x} is not in the group generated by i and lambda mod squares")


def descent_class(P: CurvePoint, lam=None) -> DescentClass:
    """x if x != 0, lambda if x = 0, 1 at infinity."""
    lam = P.A if lam is None else QiNumber.of(lam)
    if P.is_infinity:
        return DescentClass(0, 0)
    if not P.x:
        return DescentClass(0, 1)
    return square_class(P.x, lam)


def point_order(P: CurvePoint, bound: int) -> int | None:
    Q = P
    for n in range(1, bound + 1):
        if Q.is_infinity:
            return n
        Q = point_add(Q, P)
    return None


def torsion_expectation_check(A, points: Iterable[CurvePoint], bound: int = 12) -> bool:
    """(0, 0) has order 2 and no sampled point has finite order <= bound."""
    A = QiNumber.of(A)
    if point_order(CurvePoint(A, 0, 0), 2) != 2:
        return False
    for P in points:
        if P.A != A:
            raise CurveMismatch("sample point on a different curve")
        if P.is_infinity or not P.y:
            continue
        if point_order(P, bound) is not None:
            return False
    return True


def search_representation(lam, B: int) -> tuple[GaussianInt, GaussianInt] | None:
    """First alpha (ordered by |alpha|^2, re, im) in the box with (lambda + alpha^4)/i a square in Z[i]."""
    lam = GaussianInt.of(lam)
    cands = [GaussianInt(a, b) for a in range(-B, B + 1) for b in range(-B, B + 1) if a or b]
    cands.sort(key=lambda z: (z.norm(), z.re, z.im))
    for alpha in cands:
        t = lam + alpha ** 4
        # t / i = -i t
        s = GaussianInt(t.im, -t.re)
        beta = gaussian_sqrt(s)
        if beta is not None:
            return alpha, beta
    return None


# ---------------------------------------------------------------------------
# fixtures

def _qi_from_factors(entry: dict) -> QiNumber:
    def prod(items):
        out = QiNumber(1)
        for (re, im), e in items:
            out = out * QiNumber(re, im) ** e
        return out
    return prod(entry.get("num", [])) / prod(entry.get("den", []))


@dataclass(frozen=True)
class Fixture4817:
    lam: QiNumber
    alpha: QiNumber
    beta: QiNumber
    alpha_prime: QiNumber
    beta_prime: QiNumber
    meta: dict


def load_fixture(path=None) -> Fixture4817:
    if path is None:
        text = resources.files("lemnisc").joinpath("data/example_4817.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    raw = json.loads(text)
    lam = QiNumber(*raw["lambda"])
    return Fixture4817(lam, _qi_from_factors(raw["alpha"]), _qi_from_factors(raw["beta"]),
                       _qi_from_factors(raw["alpha_prime"]), _qi_from_factors(raw["beta_prime"]),
                       {k: v for k, v in raw.items() if k not in ("alpha", "beta", "alpha_prime", "beta_prime")})


def verify_fixture(fx: Fixture4817 | None = None) -> dict[str, bool]:
    fx = load_fixture() if fx is None else fx
    lam = fx.lam
    out = {}
    out["lambda = alpha^4 - beta^2"] = fx.alpha ** 4 - fx.beta ** 2 == lam
    out["lambda = -alpha'^4 + beta'^2 i"] = -fx.alpha_prime ** 4 + fx.beta_prime ** 2 * I == lam
    x, y = fx.alpha ** 2, fx.alpha * fx.beta
    out["P on E_lambda"] = y * y == x ** 3 - lam * x
    xq, yq = fx.alpha_prime ** 2 * I, fx.alpha_prime * fx.beta_prime
    out["Q on E_lambda"] = yq * yq == xq ** 3 - lam * xq
    if out["P on E_lambda"] and out["Q on E_lambda"]:
        P, Q = CurvePoint(lam, x, y), CurvePoint(lam, xq, yq)
        # beta enters the relations only through beta^2, so P is fixed up to sign
        out["P = [1+i]Q up to sign"] = mul_one_plus_i(Q) in (P, -P)
        out["[1+i]Q = (alpha^2, -alpha beta)"] = mul_one_plus_i(Q) == -P
        out["class([1+i]Q) = 1"] = descent_class(mul_one_plus_i(Q)) == DescentClass(0, 0)
        out["P has no small order"] = point_order(P, 12) is None
    return out


def exceptional_curves() -> list[dict]:
    """The A = +-(-1 +- 2i) cases: fixture metadata plus on-curve checks of the listed generators."""
    raw = json.loads(resources.files("lemnisc").joinpath("data/example_4817.json").read_text())
    return raw["exceptional_A"]

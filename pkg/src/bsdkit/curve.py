"""Curve models y^2 = x^3 - A x - B over Q and over F_p, with their group laws.

Points over F_p are ``(x, y)`` tuples of residues; the point at infinity is
``INFINITY`` (``None``).  Points over Q are :class:`RationalPoint` values or
``INFINITY``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, Optional, Tuple

from .arith import is_prime, sqrt_mod
from .errors import NotOnCurve

INFINITY = None

PointFp = Optional[Tuple[int, int]]

_CURVE_RE = re.compile(r"^\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*$")


def discriminant(c: "CurveQ") -> int:
    return 16 * (4 * c.A**3 - 27 * c.B**2)


@dataclass(frozen=True)
class CurveQ:
    """y^2 = x^3 - A x - B with integer A, B."""

    A: int
    B: int

    def __post_init__(self):
        if not isinstance(self.A, int) or not isinstance(self.B, int):
            raise TypeError("curve coefficients must be integers")
        if discriminant(self) == 0:
            raise ValueError(f"singular curve A={self.A}, B={self.B} (discriminant 0)")

    @property
    def discriminant(self) -> int:
        return discriminant(self)

    def __str__(self):
        return f"{self.A},{self.B}"

    def equation(self) -> str:
        def term(coef, var):
            if coef == 0:
                return ""
            sign = "-" if coef > 0 else "+"
            mag = abs(coef)
            body = var if (mag == 1 and var) else f"{mag}{var}"
            return f" {sign} {body}"

        return f"y^2 = x^3{term(self.A, 'x')}{term(self.B, '')}"

    # -- arithmetic over Q ----------------------------------------------

    def contains(self, P: "RationalPoint | None") -> bool:
        if P is INFINITY:
            return True
        # v^2 = u^3 - A u d^4 - B d^6, the cleared form of the equation
        u, v, d = P.u, P.v, P.d
        return v * v == u**3 - self.A * u * d**4 - self.B * d**6

    def _check(self, P):
        if not self.contains(P):
            raise NotOnCurve(f"{P} is not on {self.equation()}")

    def neg(self, P: "RationalPoint | None") -> "RationalPoint | None":
        if P is INFINITY:
            return P
        return RationalPoint(P.u, -P.v, P.d)

    def add(self, P: "RationalPoint | None", Q: "RationalPoint | None") -> "RationalPoint | None":
        self._check(P)
        self._check(Q)
        return _from_affine(self._add_affine(_affine(P), _affine(Q)))

    def mul(self, n: int, P: "RationalPoint | None") -> "RationalPoint | None":
        self._check(P)
        return _from_affine(self._mul_affine(n, _affine(P)))

    def _add_affine(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 != y2 or y1 == 0:
                return None
            lam = (3 * x1 * x1 - self.A) / (2 * y1)
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam - x1 - x2
        return (x3, lam * (x1 - x3) - y1)

    def _mul_affine(self, n, P):
        if n < 0:
            n = -n
            P = None if P is None else (P[0], -P[1])
        R = None
        while n:
            if n & 1:
                R = self._add_affine(R, P)
            P = self._add_affine(P, P)
            n >>= 1
        return R


@dataclass(frozen=True, order=True)
class RationalPoint:
    """Affine point (u/d^2, v/d^3) with d >= 1 and gcd(u, d) = 1."""

    u: int
    v: int
    d: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("denominator d must be positive")
        if self.d > 1 and gcd(self.u, self.d) != 1:
            raise ValueError("u/d^2 is not in lowest terms")

    @property
    def x(self) -> Fraction:
        return Fraction(self.u, self.d**2)

    @property
    def y(self) -> Fraction:
        return Fraction(self.v, self.d**3)

    @classmethod
    def from_xy(cls, x, y) -> "RationalPoint":
        x, y = Fraction(x), Fraction(y)
        d = isqrt(x.denominator)
        if d * d != x.denominator or y.denominator != d**3:
            raise ValueError(f"({x}, {y}) is not of the form (u/d^2, v/d^3)")
        return cls(x.numerator, y.numerator, d)

    def naive_height(self) -> int:
        return max(abs(self.u), self.d**2)

    def to_json(self) -> list[str]:
        return [str(self.x), str(self.y)]

    def __str__(self):
        return f"({self.x}, {self.y})"


def _affine(P):
    return None if P is None else (P.x, P.y)


def _from_affine(P):
    return None if P is None else RationalPoint.from_xy(*P)


def scale_curve(c: CurveQ, k: int) -> CurveQ:
    """Model with coefficients (k^4 A, k^6 B); points map by (x, y) -> (k^2 x, k^3 y)."""
    if k == 0:
        raise ValueError("scale factor must be nonzero")
    return CurveQ(k**4 * c.A, k**6 * c.B)


def scale_point(P, k: int, p: int | None = None):
    """Image of P under (x, y) -> (k^2 x, k^3 y), over F_p when p is given."""
    if P is None:
        return None
    if p is None:
        return RationalPoint.from_xy(k * k * P.x, k**3 * P.y)
    return (k * k * P[0] % p, pow(k, 3, p) * P[1] % p)


def parse_curve(text: str) -> CurveQ:
    """Parse the ``"A,B"`` text form."""
    m = _CURVE_RE.match(text)
    if not m:
        raise ValueError(f"curve must look like 'A,B', got {text!r}")
    return CurveQ(int(m.group(1)), int(m.group(2)))


# -- finite fields -------------------------------------------------------


@dataclass(frozen=True)
class BadPrime:
    p: int


@dataclass(frozen=True)
class CurveFp:
    """y^2 = x^3 - a x - b over F_p, p an odd prime."""

    p: int
    a: int
    b: int

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        if not (0 <= self.a < self.p and 0 <= self.b < self.p):
            raise ValueError("coefficients must be least nonnegative residues")
        if (4 * self.a**3 - 27 * self.b**2) % self.p == 0:
            raise ValueError(f"curve is singular mod {self.p}")

    def rhs(self, x: int) -> int:
        return (x * x * x - self.a * x - self.b) % self.p

    def contains(self, P: PointFp) -> bool:
        if P is None:
            return True
        x, y = P
        return 0 <= x < self.p and 0 <= y < self.p and (y * y - self.rhs(x)) % self.p == 0

    def _check(self, P):
        if not self.contains(P):
            raise NotOnCurve(f"{P} is not on the curve mod {self.p}")

    def neg(self, P: PointFp) -> PointFp:
        if P is None:
            return None
        return (P[0], -P[1] % self.p)

    def add(self, P: PointFp, Q: PointFp) -> PointFp:
        self._check(P)
        self._check(Q)
        return self._add(P, Q)

    def mul(self, n: int, P: PointFp) -> PointFp:
        self._check(P)
        return self._mul(n, P)

    def _add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        p = self.p
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return None
            lam = (3 * x1 * x1 - self.a) * pow(2 * y1, -1, p) % p
        else:
            lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (lam * lam - x1 - x2) % p
        return (x3, (lam * (x1 - x3) - y1) % p)

    def _mul(self, n, P):
        if n < 0:
            n, P = -n, self.neg(P)
        R = None
        while n:
            if n & 1:
                R = self._add(R, P)
            P = self._add(P, P)
            n >>= 1
        return R

    def points(self) -> Iterator[PointFp]:
        """Every point, O first; O(p) time."""
        yield None
        for x in range(self.p):
            r = self.rhs(x)
            y = sqrt_mod(r, self.p)
            if y is None:
                continue
            yield (x, y)
            if y:
                yield (x, self.p - y)

    def random_point(self, rng: random.Random) -> Tuple[int, int]:
        """Uniform-ish random affine point (x uniform among x with a root)."""
        while True:
            x = rng.randrange(self.p)
            y = sqrt_mod(self.rhs(x), self.p)
            if y is not None:
                return (x, y if rng.random() < 0.5 else -y % self.p)

    def twist(self, d: int) -> "CurveFp":
        """Quadratic twist by d: y^2 = x^3 - a d^2 x - b d^3."""
        p = self.p
        return CurveFp(p, self.a * d * d % p, self.b * pow(d, 3, p) % p)


def reduce_mod_p(c: CurveQ, p: int) -> CurveFp | BadPrime:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if discriminant(c) % p == 0:
        return BadPrime(p)
    return CurveFp(p, c.A % p, c.B % p)


def reduce_point(E: CurveFp, P: RationalPoint | None) -> PointFp:
    """Image of a rational point in E(F_p); points with p | d land on O."""
    if P is None or P.d % E.p == 0:
        return None
    p = E.p
    dinv = pow(P.d, -1, p)
    return (P.u * dinv * dinv % p, P.v * pow(dinv, 3, p) % p)


def point_add(c: CurveFp, P: PointFp, Q: PointFp) -> PointFp:
    return c.add(P, Q)


def point_mul(c: CurveFp, n: int, P: PointFp) -> PointFp:
    return c.mul(n, P)

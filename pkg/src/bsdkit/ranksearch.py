"""Torsion subgroups, bounded-height point search and a rank lower bound."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional, Sequence

import numpy as np

from .arith import factorize, primes_up_to
from .curve import CurveFp, CurveQ, RationalPoint, reduce_mod_p, reduce_point
from .errors import BudgetExceeded, InvariantViolation, NotOnCurve

TORSION_ORDER_CAP = 12
MAX_HEIGHT = 10**6
SEARCH_BUDGET = 50_000_000
RELATION_BUDGET = 2_000_000

# Mazur's list: Z/mZ for m <= 10 or m = 12, Z/2Z x Z/2mZ for m <= 4.
MAZUR_CYCLIC = frozenset(list(range(1, 11)) + [12])
MAZUR_PRODUCT = frozenset(range(1, 5))

_SIEVE_MODULI = (64, 63, 65, 11, 17, 19, 23, 29, 31, 37, 41, 43)
_QR = {m: np.isin(np.arange(m), (np.arange(m) ** 2) % m) for m in _SIEVE_MODULI}


@dataclass(frozen=True)
class TorsionGroup:
    structure: str
    points: tuple  # RationalPoint or None (the identity), identity first

    @property
    def order(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class PointSearch:
    points: list[RationalPoint]
    height: int
    truncated: bool


@dataclass(frozen=True)
class LowerBound:
    bound: int
    basis: tuple[RationalPoint, ...]
    truncated: bool


@dataclass(frozen=True)
class RankReport:
    curve: CurveQ
    torsion: TorsionGroup
    generators_found: list[RationalPoint]
    rank_lower_bound: int
    search_height: int
    truncated: bool
    independent: tuple[RationalPoint, ...] = ()


def is_torsion(curve: CurveQ, P: Optional[RationalPoint]) -> bool:
    """True iff n P = O for some 1 <= n <= 12."""
    if P is None:
        return True
    if not curve.contains(P):
        raise NotOnCurve(f"{P} is not on {curve.equation()}")
    base = (P.x, P.y)
    R = base
    for _ in range(2, TORSION_ORDER_CAP + 1):
        R = curve._add_affine(R, base)
        if R is None:
            return True
    return False


def point_order(curve: CurveQ, P: Optional[RationalPoint]) -> Optional[int]:
    if P is None:
        return 1
    base = (P.x, P.y)
    R = base
    for n in range(2, TORSION_ORDER_CAP + 1):
        R = curve._add_affine(R, base)
        if R is None:
            return n
    return None


def _integer_roots(A: int, C: int) -> list[int]:
    """Integer roots of x^3 - A x - C."""
    found = set()
    for r in np.roots([1.0, 0.0, float(-A), float(-C)]):
        if abs(r.imag) > 1e-6 * max(1.0, abs(r.real)):
            continue
        base = int(np.floor(r.real))
        for x in range(base - 2, base + 4):
            if x**3 - A * x - C == 0:
                found.add(x)
    return sorted(found)


def _square_divisors(n: int) -> list[int]:
    """All y >= 1 with y^2 | n."""
    ys = [1]
    for q, e in factorize(n).items():
        ys = [y * q**k for y in ys for k in range(e // 2 + 1)]
    return sorted(ys)


def classify_torsion(curve: CurveQ, points: Sequence) -> str:
    n = len(points)
    two_torsion = sum(1 for P in points if P is not None and P.v == 0)
    if two_torsion == 3:
        m = n // 4
        if n % 4 or m not in MAZUR_PRODUCT:
            raise InvariantViolation(f"torsion of order {n} with full 2-torsion is not in Mazur's list")
        return f"Z/2Z x Z/{2 * m}Z"
    if n not in MAZUR_CYCLIC:
        raise InvariantViolation(f"cyclic torsion of order {n} is not in Mazur's list")
    return f"Z/{n}Z"


def torsion_subgroup(curve: CurveQ) -> TorsionGroup:
    """Integral points with y = 0 or y^2 | disc that have order <= 12."""
    D = abs(curve.discriminant)
    points = []
    for y in [0] + _square_divisors(D):
        for x in _integer_roots(curve.A, curve.B + y * y):
            for v in {y, -y}:
                P = RationalPoint(x, v)
                if is_torsion(curve, P):
                    points.append(P)
    points.sort(key=lambda P: (P.u, P.v))
    tors = [None] + points
    structure = classify_torsion(curve, tors)
    exponent = int(structure.split("Z/")[-1].rstrip("Z"))
    for P in points:
        if curve._mul_affine(exponent, (P.x, P.y)) is not None:
            raise InvariantViolation(f"torsion point {P} has order not dividing {exponent}")
    return TorsionGroup(structure, tuple(tors))


def search_depth(H: int) -> int:
    """Largest denominator d searched at height bound H."""
    return max(1, isqrt(isqrt(H)))


def search_points(curve: CurveQ, H: int, budget: int = SEARCH_BUDGET) -> PointSearch:
    """Affine points x = u/d^2 with d <= search_depth(H), |u| <= H d^2, y >= 0.

    Candidates are screened by quadratic-residue tables modulo a handful of
    small moduli before an exact square test.  Order: d, then |u|, then u.
    """
    if H > MAX_HEIGHT:
        raise BudgetExceeded(f"height {H} is above {MAX_HEIGHT}")
    if H <= 0:
        return PointSearch([], H, False)
    found = []
    spent, truncated = 0, False
    for d in range(1, search_depth(H) + 1):
        U = H * d * d
        if spent + 2 * U + 1 > budget:
            truncated = True
            break
        spent += 2 * U + 1
        d4, d6 = d**4, d**6
        for lo in range(-U, U + 1, 1 << 21):
            u = np.arange(lo, min(lo + (1 << 21), U + 1), dtype=np.int64)
            if d > 1:
                u = u[np.gcd(u, d) == 1]
            keep = np.ones(len(u), dtype=bool)
            for m in _SIEVE_MODULI:
                um = u % m
                val = (um * um % m * um - (curve.A * d4 % m) * um - (curve.B * d6 % m)) % m
                keep &= _QR[m][val]
            for uu in u[keep].tolist():
                R = uu**3 - curve.A * uu * d4 - curve.B * d6
                if R < 0:
                    continue
                v = isqrt(R)
                if v * v == R:
                    found.append(RationalPoint(uu, v, d))
    found.sort(key=lambda P: (P.d, abs(P.u), P.u))
    return PointSearch(found, H, truncated)


def _filter_primes(curve: CurveQ, pts: Sequence[RationalPoint], count: int = 4) -> list[CurveFp]:
    out = []
    for p in primes_up_to(10_000):
        if p < 5 or any(P.d % p == 0 for P in pts):
            continue
        E = reduce_mod_p(curve, p)
        if isinstance(E, CurveFp):
            out.append(E)
            if len(out) == count:
                break
    return out


def independence_lower_bound(
    curve: CurveQ,
    pts: Sequence[RationalPoint],
    M: int = 8,
    torsion: TorsionGroup | None = None,
    budget: int = RELATION_BUDGET,
) -> LowerBound:
    """Largest subset of ``pts`` with no relation sum m_i P_i in torsion, 0 < max|m_i| <= M.

    Subsets are grown level by level from independent subsets.  A relation
    must hold modulo every filter prime before it is checked over Q.
    """
    pts = list(pts)
    if not pts:
        return LowerBound(0, (), False)
    if torsion is None:
        torsion = torsion_subgroup(curve)
    for P in pts:
        if is_torsion(curve, P):
            raise ValueError(f"{P} is a torsion point")
    tors_exact = {None if T is None else (T.x, T.y) for T in torsion.points}
    fields = _filter_primes(curve, pts)
    tors_mod = [{reduce_point(E, T) for T in torsion.points} for E in fields]
    red = [[reduce_point(E, P) for P in pts] for E in fields]
    mults = [
        [{m: E._mul(m, Pbar) for m in range(-M, M + 1)} for Pbar in row] for E, row in zip(fields, red)
    ]
    coeff_range = [m for m in range(-M, M + 1) if m]

    def has_relation(subset) -> bool:
        for vec in itertools.product(coeff_range, repeat=len(subset)):
            if vec[0] < 0:
                continue  # relations are sign-symmetric
            hit = True
            for E, tm, mt in zip(fields, tors_mod, mults):
                acc = None
                for i, m in zip(subset, vec):
                    acc = E._add(acc, mt[i][m])
                if acc not in tm:
                    hit = False
                    break
            if hit:
                acc = None
                for i, m in zip(subset, vec):
                    acc = curve._add_affine(acc, curve._mul_affine(m, (pts[i].x, pts[i].y)))
                if acc in tors_exact:
                    return True
        return False

    spent = 0
    truncated = False
    level = [(i,) for i in range(len(pts))]
    best = level[0]
    while level:
        nxt = []
        indep = set(level)
        k = len(level[0]) + 1
        cost = (2 * M) ** k // 2
        for S in level:
            for j in range(S[-1] + 1, len(pts)):
                T = S + (j,)
                if any(T[:i] + T[i + 1 :] not in indep for i in range(k)):
                    continue
                if spent + cost > budget:
                    truncated = True
                    break
                spent += cost
                if not has_relation(T):
                    nxt.append(T)
            if truncated:
                break
        if nxt:
            best = nxt[0]
        if truncated:
            break
        level = nxt
    return LowerBound(len(best), tuple(pts[i] for i in best), truncated)


def rank_report(curve: CurveQ, H: int, M: int = 8, max_generators: int = 8) -> RankReport:
    """Torsion, non-torsion points up to height H, and an independence lower bound.

    Only the ``max_generators`` smallest-height non-torsion points enter the
    relation search.
    """
    torsion = torsion_subgroup(curve)
    search = search_points(curve, H)
    gens = [P for P in search.points if not is_torsion(curve, P)]
    pool = sorted(gens, key=lambda P: (P.naive_height(), P.d, abs(P.u), P.u))[:max_generators]
    lb = independence_lower_bound(curve, pool, M, torsion)
    return RankReport(
        curve,
        torsion,
        gens,
        lb.bound,
        H,
        search.truncated or lb.truncated,
        lb.basis,
    )

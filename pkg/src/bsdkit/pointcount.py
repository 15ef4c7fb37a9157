"""Point counts N_p, traces a_p, and N_{p^m} over extension fields."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import isqrt, lcm
from pathlib import Path

import numpy as np

from .arith import chi_table, factorize, is_prime, non_residue, primes_up_to
from .curve import BadPrime, CurveFp, CurveQ, reduce_mod_p
from .errors import AmbiguousOrder, BudgetExceeded, InvariantViolation

NAIVE_MAX_P = 10**6
BSGS_MIN_P = 230
BSGS_THRESHOLD = 2**16
EXT_MAX_Q = 10**6
BSGS_ATTEMPTS = 64


@dataclass(frozen=True)
class LocalData:
    """Per-prime record. ``traces[m-1]`` is pi^m + conj(pi)^m."""

    p: int
    good: bool
    n_p: int
    a_p: int
    traces: tuple[int, ...] = ()


def frobenius_traces(a_p: int, p: int, M: int) -> list[int]:
    """t_1..t_M from t_0 = 2, t_1 = a_p, t_m = a_p t_{m-1} - p t_{m-2}."""
    out = []
    prev, cur = 2, a_p
    for _ in range(M):
        out.append(cur)
        prev, cur = cur, a_p * cur - p * prev
    return out


def count_points_naive(c: CurveFp) -> int:
    """N_p = 1 + sum_x (1 + chi(x^3 - a x - b)), by a residue table."""
    p = c.p
    if p > NAIVE_MAX_P:
        raise BudgetExceeded(f"p={p} is above the naive budget {NAIVE_MAX_P}; use count_points_bsgs")
    x = np.arange(p, dtype=np.int64)
    r = ((x * x % p) * x - c.a * x - c.b) % p
    return p + 1 + int(chi_table(p)[r].sum(dtype=np.int64))


def _point_order(E: CurveFp, P, lo: int, hi: int) -> int:
    """Exact order of P, given that #E lies in [lo, hi]."""
    w = isqrt(hi - lo) + 1
    baby = {}
    R = None
    for j in range(w):
        if R is None and j > 0:
            m = j
            break
        baby.setdefault(R, j)
        R = E._add(R, P)
    else:
        m = None
        step = E._mul(w, P)
        G = E.neg(E._mul(lo, P))  # -(lo P + i w P) for i = 0, 1, ...
        nstep = E.neg(step)
        for i in range(w + 2):
            j = baby.get(G, -1)
            if j >= 0:
                m = lo + i * w + j
                break
            G = E._add(G, nstep)
        if m is None:
            raise InvariantViolation(f"no multiple of the point order in the Hasse interval (p={E.p})")
    for q in factorize(m):
        while m % q == 0 and E._mul(m // q, P) is None:
            m //= q
    return m


def hasse_interval(p: int) -> tuple[int, int]:
    r = isqrt(4 * p)
    return p + 1 - r, p + 1 + r


def count_points_bsgs(c: CurveFp, seed: int | None = None, attempts: int = BSGS_ATTEMPTS) -> int:
    """Group order from point orders on E and on its quadratic twist.

    #E + #E' = 2p + 2, and for p > 229 some point on E or E' has an order
    with a unique admissible multiple in the Hasse interval.
    """
    p = c.p
    if p < BSGS_MIN_P:
        raise ValueError(f"count_points_bsgs needs p > 229 (got {p}); use count_points_naive")
    lo, hi = hasse_interval(p)
    tw = c.twist(non_residue(p))
    rng = random.Random(seed if seed is not None else (p * 1_000_003 + c.a) * 1_000_003 + c.b)
    L1 = L2 = 1
    for k in range(attempts):
        if k % 2 == 0:
            L1 = lcm(L1, _point_order(c, c.random_point(rng), lo, hi))
        else:
            L2 = lcm(L2, _point_order(tw, tw.random_point(rng), lo, hi))
        start = -(-lo // L1) * L1
        cands = [n for n in range(start, hi + 1, L1) if (2 * p + 2 - n) % L2 == 0]
        if len(cands) == 1:
            return cands[0]
        if not cands:
            raise InvariantViolation(f"no admissible group order for p={p}")
    raise AmbiguousOrder(f"group order mod {p} not pinned after {attempts} points")


def count_points(c: CurveFp) -> int:
    """Naive below 2^16, BSGS above (falling back to naive if ambiguous)."""
    if c.p < BSGS_THRESHOLD:
        return count_points_naive(c)
    try:
        return count_points_bsgs(c)
    except AmbiguousOrder:
        return count_points_naive(c)


def trace_ap(c: CurveFp, n_p: int | None = None) -> int:
    if n_p is None:
        n_p = count_points(c)
    a = c.p + 1 - n_p
    if a * a > 4 * c.p:
        raise InvariantViolation(f"Hasse bound violated: a_{c.p} = {a}")
    return a


def npm_from_ap(d: LocalData, m: int) -> int:
    """N_{p^m} = p^m + 1 - t_m."""
    if not d.good:
        raise ValueError(f"p={d.p} has bad reduction")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    return d.p**m + 1 - frobenius_traces(d.a_p, d.p, m)[-1]


def local_data(curve: CurveQ, p: int, M: int = 3) -> LocalData:
    E = reduce_mod_p(curve, p)
    if isinstance(E, BadPrime):
        return LocalData(p, False, 0, 0, ())
    n_p = count_points(E)
    a = trace_ap(E, n_p)
    return LocalData(p, True, n_p, a, tuple(frobenius_traces(a, p, M)))


# -- extension fields ------------------------------------------------------


def _has_root(coeffs: tuple[int, ...], p: int) -> bool:
    x = np.arange(p, dtype=np.int64)
    val = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        val = (val * x + c) % p
    return bool((val == 0).any())


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m <= 3, coefficients (c_0, ..., c_{m-1}, 1).

    Candidates are ordered lexicographically by (c_{m-1}, ..., c_0).
    """
    if not 1 <= m <= 3:
        raise ValueError("degree must be 1, 2 or 3")
    if m == 1:
        return (0, 1)
    for high_first in itertools.product(range(p), repeat=m):
        coeffs = tuple(reversed(high_first)) + (1,)
        if not _has_root(coeffs, p):
            return coeffs
    raise InvariantViolation("no irreducible polynomial found")  # unreachable for prime p


@dataclass(frozen=True)
class ExtField:
    """F_{p^m} = F_p[x]/(modulus); elements are integers sum c_k p^k."""

    p: int
    m: int
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if not self.modulus:
            object.__setattr__(self, "modulus", smallest_irreducible(self.p, self.m))
        mod = self.modulus
        if len(mod) != self.m + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if self.m > 1 and _has_root(mod, self.p):
            raise ValueError(f"modulus {mod} is reducible over F_{self.p}")

    @property
    def order(self) -> int:
        return self.p**self.m

    def digits(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        return np.stack([(codes // self.p**k) % self.p for k in range(self.m)], axis=-1)

    def encode(self, digits: np.ndarray) -> np.ndarray:
        weights = self.p ** np.arange(self.m, dtype=np.int64)
        return digits @ weights

    def mul_digits(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        p, m = self.p, self.m
        prod = np.zeros(X.shape[:-1] + (2 * m - 1,), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                prod[..., i + j] += X[..., i] * Y[..., j]
        prod %= p
        low = np.array(self.modulus[:-1], dtype=np.int64)
        for k in range(2 * m - 2, m - 1, -1):
            top = prod[..., k].copy()
            prod[..., k] = 0
            prod[..., k - m : k] = (prod[..., k - m : k] - top[..., None] * low) % p
        return prod[..., :m]

    def mul(self, a: int, b: int) -> int:
        X, Y = self.digits(np.array([a])), self.digits(np.array([b]))
        return int(self.encode(self.mul_digits(X, Y))[0])


def count_points_ext(c: CurveFp, m: int) -> int:
    """Exhaustive N_{p^m} over F_{p^m}, including O."""
    if c.p**m > EXT_MAX_Q:
        raise BudgetExceeded(f"p^m = {c.p**m} exceeds {EXT_MAX_Q}")
    F = ExtField(c.p, m)
    p, q = c.p, F.order
    X = F.digits(np.arange(q))
    X2 = F.mul_digits(X, X)
    X3 = F.mul_digits(X2, X)
    rhs = (X3 - c.a * X) % p
    rhs[:, 0] = (rhs[:, 0] - c.b) % p
    is_square = np.zeros(q, dtype=bool)
    is_square[F.encode(X2)] = True
    codes = F.encode(rhs)
    zero = codes == 0
    return 1 + int(zero.sum()) + 2 * int((is_square[codes] & ~zero).sum())


# -- a_p tables ------------------------------------------------------------


@dataclass
class ApTable:
    """Rows (p, a_p, good) for all primes p <= pmax; bad primes carry a_p = 0."""

    curve: CurveQ
    pmax: int
    rows: list[tuple[int, int, bool]]

    @classmethod
    def compute(cls, curve: CurveQ, pmax: int) -> "ApTable":
        if pmax > 10**7:
            raise BudgetExceeded("a_p tables are limited to p <= 10^7")
        rows = []
        for p in primes_up_to(pmax):
            d = local_data(curve, p, M=1)
            rows.append((p, d.a_p, d.good))
        return cls(curve, pmax, rows)

    def ap_dict(self) -> dict[int, int]:
        return {p: a for p, a, _ in self.rows}

    def good_set(self) -> set[int]:
        return {p for p, _, g in self.rows if g}

    def to_tsv(self) -> str:
        lines = [f"# curve={self.curve} version=1"]
        lines += [f"{p}\t{a}\t{int(g)}" for p, a, g in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_tsv(cls, text: str, pmax: int | None = None) -> "ApTable":
        lines = text.splitlines()
        head = lines[0].split()
        if len(head) != 3 or head[0] != "#" or not head[1].startswith("curve=") or head[2] != "version=1":
            raise ValueError(f"bad a_p table header: {lines[0]!r}")
        A, B = head[1][len("curve=") :].split(",")
        rows = []
        for ln in lines[1:]:
            if not ln.strip():
                continue
            p, a, g = ln.split("\t")
            rows.append((int(p), int(a), g == "1"))
        if pmax is None:
            pmax = rows[-1][0] if rows else 1
        return cls(CurveQ(int(A), int(B)), pmax, [r for r in rows if r[0] <= pmax])

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_tsv())

    @classmethod
    def read(cls, path: str | Path, pmax: int | None = None) -> "ApTable":
        return cls.from_tsv(Path(path).read_text(), pmax)

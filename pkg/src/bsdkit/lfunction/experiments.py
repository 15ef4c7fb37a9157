"""Euler-product forms of L(E, s) near s = 1, the k_1 series, and zeta(s) checks.

Everything here is a measurement.  Nothing compares an output against a
claimed limit with pass/fail meaning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..arith import primes_up_to
from ..curve import CurveQ
from ..errors import BudgetExceeded
from ..localzeta import zeta_local_eval
from ..pointcount import ApTable, LocalData

MAX_P = 10**5
MAX_MERTENS = 10**7


def _good_rows(curve: CurveQ, P: int, table: ApTable | None):
    if P > MAX_P:
        raise BudgetExceeded(f"prime bound {P} is above {MAX_P}")
    if P < 2:
        return []
    if table is None or table.pmax < P:
        table = ApTable.compute(curve, P)
    return [(p, a) for p, a, good in table.rows if good and p <= P]


def l_paper_form(curve: CurveQ, s: float, P: int, k1: float, table: ApTable | None = None) -> float:
    """-0.5 k1 prod_{good p <= P} (1 - p^-s)(1 - p^(1-s)) / (1 - a_p p^-s + p^(1-2s))."""
    value = -0.5 * k1
    for p, a in _good_rows(curve, P, table):
        value /= zeta_local_eval(LocalData(p, True, p + 1 - a, a), s)
    return value


def _thm1_factor(p: int, a: int, eps: float) -> float:
    pe = math.exp(eps * math.log(p))
    return (p * pe - 1) * math.expm1(eps * math.log(p)) / (p * pe - a * pe + 1)


def thm1_running(curve: CurveQ, eps: float, P: int, table: ApTable | None = None) -> list[tuple[int, float]]:
    """(p, partial product up to p) for every good p <= P."""
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    out = []
    value = -0.5
    for p, a in _good_rows(curve, P, table):
        value *= _thm1_factor(p, a, eps)
        out.append((p, value))
    return out


def thm1_partial_product(curve: CurveQ, eps: float, P: int, table: ApTable | None = None) -> float:
    """-0.5 prod_{good p <= P} (p p^eps - 1)(p^eps - 1) / (p p^eps - a_p p^eps + 1)."""
    rows = thm1_running(curve, eps, P, table)
    return rows[-1][1] if rows else -0.5


@dataclass(frozen=True, eq=False)
class MertensTable:
    """``values[n]`` = M(n) for 0 <= n <= N, with M(0) = 0."""

    values: np.ndarray

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return int(self.values[n])


def mobius(N: int) -> np.ndarray:
    mu = np.ones(N + 1, dtype=np.int8)
    mu[0] = 0
    for p in primes_up_to(N):
        mu[p::p] *= -1
        pp = p * p
        if pp <= N:
            mu[pp::pp] = 0
    return mu


def mertens(N: int) -> MertensTable:
    if N > MAX_MERTENS:
        raise BudgetExceeded(f"N={N} is above {MAX_MERTENS}")
    if N < 1:
        raise ValueError("N must be >= 1")
    vals = np.cumsum(mobius(N), dtype=np.int64)
    vals.setflags(write=False)
    return MertensTable(vals)


@dataclass(frozen=True)
class K1Config:
    c: float
    N: int

    def __post_init__(self):
        if not self.c > 1:
            raise ValueError("c must be > 1")
        if self.N < 1:
            raise ValueError("N must be >= 1")


@dataclass(frozen=True)
class K1Result:
    mode: str
    c: float
    N: int
    value: float
    claimed_closed_form: float


def k1_claimed(c: float) -> float:
    return -2 * c / (c - 1)


def k1_partial(cfg: K1Config, mode: str = "exact-mertens", table: MertensTable | None = None) -> K1Result:
    """sum_{n <= N} w(n) (1/(n+1) - 1/n).

    ``exact-mertens``: w(n) = M(n).  ``paper-substitution``:
    w(n) = c/(c-1) (0.5 sqrt(n) + 1).
    """
    n = np.arange(1, cfg.N + 1, dtype=float)
    kernel = 1.0 / (n + 1) - 1.0 / n
    if mode == "exact-mertens":
        if table is None or table.N < cfg.N:
            table = mertens(cfg.N)
        w = table.values[1 : cfg.N + 1].astype(float)
    elif mode == "paper-substitution":
        w = cfg.c / (cfg.c - 1) * (0.5 * np.sqrt(n) + 1.0)
    else:
        raise ValueError(f"unknown k1 mode {mode!r}")
    value = math.fsum((w * kernel).tolist())
    return K1Result(mode, cfg.c, cfg.N, value, k1_claimed(cfg.c))


def zeta_riemann_approx(s: float, N: int) -> float:
    """sum_{n<=N} n^-s + N^(1-s)/(s-1) - N^-s / 2 (first-order Euler-Maclaurin)."""
    if s == 1:
        raise ValueError("zeta has a pole at s = 1")
    if s <= -1:
        raise ValueError("first-order Euler-Maclaurin needs s > -1")
    if N < 10:
        raise ValueError("N must be >= 10")
    n = np.arange(1, N + 1, dtype=float)
    head = math.fsum(np.exp(-s * np.log(n)).tolist())
    return head + N ** (1 - s) / (s - 1) - 0.5 * N ** (-s)

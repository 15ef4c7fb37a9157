"""Dirichlet coefficients a_n of L(E, s) and truncated evaluations."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..curve import CurveQ
from ..errors import BudgetExceeded
from ..pointcount import ApTable

MAX_T = 10**6


@dataclass(frozen=True, eq=False)
class DirichletCoeffs:
    """a_1..a_T stored at their own index (``a[0]`` is unused and 0)."""

    T: int
    a: np.ndarray

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.T:
            raise IndexError(n)
        return int(self.a[n])

    def __len__(self):
        return self.T

    @classmethod
    def from_list(cls, values) -> "DirichletCoeffs":
        """Build from a_1..a_T (any real values; used for synthetic series)."""
        arr = np.concatenate([[0], np.asarray(values)])
        arr.setflags(write=False)
        return cls(len(values), arr)


def prime_power_coeffs(a_p: int, p: int, good: bool, kmax: int) -> list[int]:
    """[a_1, a_p, a_{p^2}, ..., a_{p^kmax}]; at bad p the p-part vanishes."""
    out = [1, a_p]
    q = p if good else 0
    while len(out) <= kmax:
        out.append(a_p * out[-1] - q * out[-2])
    return out[: kmax + 1]


def dirichlet_coeffs(curve: CurveQ, T: int, table: ApTable | None = None) -> DirichletCoeffs:
    """Multiplicative extension of a_p (a_p = 0 at primes dividing the discriminant)."""
    if T > MAX_T:
        raise BudgetExceeded(f"T={T} is above the coefficient budget {MAX_T}")
    if T < 1:
        raise ValueError("T must be >= 1")
    if table is None:
        table = ApTable.compute(curve, T)
    elif table.pmax < T:
        raise ValueError(f"a_p table stops at {table.pmax} < T={T}")
    a = np.ones(T + 1, dtype=np.int64)
    a[0] = 0
    for p, ap, good in table.rows:
        if p > T:
            break
        kmax = int(math.log(T, p)) + 1
        apk = prime_power_coeffs(ap, p, good, kmax)
        vals = np.full(T // p, ap, dtype=np.int64)
        pk, k = p, 2
        while pk * p <= T:
            vals[pk - 1 :: pk] = apk[k]
            pk *= p
            k += 1
        a[p::p] *= vals
    a.setflags(write=False)
    return DirichletCoeffs(T, a)


def riesz_weights(T: int, order: int) -> np.ndarray:
    n = np.arange(1, T + 1, dtype=float)
    return (1.0 - n / (T + 1)) ** order


def l_truncated(coeffs: DirichletCoeffs, s: float, riesz: int = 0) -> float:
    """sum_{n <= T} a_n n^-s, optionally with Riesz weights (1 - n/(T+1))^riesz.

    ``riesz=0`` is the plain truncation.  Positive orders damp the cutoff
    oscillation, which dominates near s = 1 for the plain sum.
    """
    if s <= 0.5:
        raise ValueError("truncated series is only used for s > 1/2")
    if coeffs.T < 1:
        raise ValueError("empty coefficient list")
    n = np.arange(1, coeffs.T + 1, dtype=float)
    terms = coeffs.a[1:] * np.exp(-s * np.log(n))
    if riesz:
        terms = terms * riesz_weights(coeffs.T, riesz)
    return float(terms.sum())


def divisor_count(n: int) -> int:
    c, f = 1, 2
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        c *= e + 1
        f += 1
    return c * (2 if n > 1 else 1)


def tail_bound(T: int) -> float:
    """Upper bound on sum_{n > T} d(n) sqrt(n) n^-2.

    Partial summation with D(x) = sum_{n <= x} d(n) <= x (1 + log x) gives
    int_T^inf x (1 + log x) (3/2) x^(-5/2) dx = 3 T^(-1/2) (log T + 3).
    """
    return 3.0 * (math.log(T) + 3.0) / math.sqrt(T)

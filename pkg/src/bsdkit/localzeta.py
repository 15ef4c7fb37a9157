"""Local zeta functions Z(E_p, u) = (1 - a_p u + p u^2) / ((1 - u)(1 - p u))."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PoleError
from .pointcount import LocalData, npm_from_ap

POLE_TOL = 1e-12


@dataclass(frozen=True)
class LocalZeta:
    p: int
    numerator: tuple[int, ...]
    good: bool

    def eval_u(self, u):
        """Rational-function value at u (exact for Fraction input)."""
        num = sum(c * u**k for k, c in enumerate(self.numerator))
        return num / ((1 - u) * (1 - self.p * u))


def local_zeta(d: LocalData) -> LocalZeta:
    if d.good:
        return LocalZeta(d.p, (1, -d.a_p, d.p), True)
    return LocalZeta(d.p, (1,), False)


def zeta_series_coeffs(d: LocalData, M: int) -> list[int]:
    """[N_p, N_{p^2}, ..., N_{p^M}] from the trace recurrence."""
    return [npm_from_ap(d, m) for m in range(1, M + 1)]


def _series_div(num: Sequence[Fraction], den: Sequence[Fraction], M: int) -> list[Fraction]:
    out = []
    for k in range(M + 1):
        acc = Fraction(num[k]) if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / den[0])
    return out


def series_log(f: Sequence[Fraction], M: int) -> list[Fraction]:
    """Coefficients g_0..g_M of log f for a power series with f_0 = 1."""
    f = [Fraction(c) for c in f] + [Fraction(0)] * (M + 1 - len(f))
    if f[0] != 1:
        raise ValueError("log needs constant term 1")
    df = [(k + 1) * f[k + 1] for k in range(M)]
    q = _series_div(df, f, M - 1) if M else []
    return [Fraction(0)] + [q[k - 1] / k for k in range(1, M + 1)]


def verify_rationality(d: LocalData, M: int, counts: Sequence[int] | None = None) -> bool:
    """Check log Z(E_p, u) = sum N_{p^m} u^m / m through order M, exactly.

    ``counts`` are N_{p^1..p^M}; by default they come from the record itself
    (n_p and the stored Frobenius traces) rather than from ``d.a_p``.
    """
    if not d.good:
        raise ValueError(f"p={d.p} has bad reduction")
    if M > 6:
        raise ValueError("rationality checks are limited to M <= 6")
    if M <= 0:
        return True
    if counts is None:
        counts = [d.n_p]
        for m in range(2, M + 1):
            if m <= len(d.traces):
                counts.append(d.p**m + 1 - d.traces[m - 1])
            else:
                counts.append(npm_from_ap(d, m))
    p = d.p
    denom = [Fraction(1), Fraction(-1 - p), Fraction(p)]  # (1 - u)(1 - p u)
    Z = _series_div([1, -d.a_p, p], denom, M)
    logZ = series_log(Z, M)
    return all(logZ[m] == Fraction(counts[m - 1], m) for m in range(1, M + 1))


def zeta_local_eval(d: LocalData, s: float) -> float:
    """zeta(E_p, s) = (1 - a_p p^-s + p^(1-2s)) / ((1 - p^-s)(1 - p^(1-s)))."""
    p = d.p
    ps = p ** (-s)
    f0, f1 = 1 - ps, 1 - p ** (1 - s)
    if abs(f0) < POLE_TOL or abs(f1) < POLE_TOL:
        raise PoleError(f"s={s} is at a pole of the local factor at p={p}")
    num = 1 - d.a_p * ps + p ** (1 - 2 * s) if d.good else 1.0
    return num / (f0 * f1)

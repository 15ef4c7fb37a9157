"""Taylor coefficients of L(E, s) at s = 1 from values on s = 1 + j h.

Coefficients come from the interpolating polynomial through K + 1 grid
points (Newton divided differences), computed at steps h and h/2 and
combined by Richardson extrapolation.  The analytic rank is the index of the
first coefficient whose magnitude exceeds tau.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..curve import CurveQ
from ..errors import IllConditioned
from ..pointcount import ApTable
from .series import DirichletCoeffs, dirichlet_coeffs, l_truncated


@dataclass(frozen=True)
class TaylorConfig:
    h: float = 0.05
    K: int = 3
    tau: float = 1e-2
    T: int = 100_000
    riesz: int = 3
    cond_cap: float = 1e10

    def __post_init__(self):
        if self.h <= 0 or self.K < 0 or self.tau <= 0 or self.T < 1 or self.riesz < 0:
            raise ValueError(f"invalid Taylor configuration {self}")


@dataclass(frozen=True)
class TaylorEstimate:
    h: float
    coeffs: tuple[float, ...]
    errors: tuple[float, ...]
    analytic_rank: Optional[int]
    leading: Optional[float]
    config: TaylorConfig = field(default_factory=TaylorConfig)


def newton_to_monomial(xs, ys) -> np.ndarray:
    """Monomial coefficients (ascending) of the polynomial through (xs, ys)."""
    xs = np.asarray(xs, dtype=float)
    dd = np.array(ys, dtype=float)
    n = len(xs)
    for j in range(1, n):
        dd[j:] = (dd[j:] - dd[j - 1 : -1]) / (xs[j:] - xs[: n - j])
    # Horner on the Newton form: p = dd[n-1]; p = p * (x - xs[k]) + dd[k]
    poly = np.array([dd[-1]])
    for k in range(n - 2, -1, -1):
        shifted = np.concatenate([[0.0], poly])
        shifted[:-1] -= xs[k] * poly
        shifted[0] += dd[k]
        poly = shifted
    return poly


def _fit(f: Callable[[float], float], h: float, K: int, cond_cap: float) -> np.ndarray:
    xs = h * np.arange(1, K + 2)
    # columns scaled to unit max so the estimate reflects node geometry, not h^k
    V = np.vander(xs, K + 1, increasing=True)
    V = V / np.abs(V).max(axis=0)
    cond = np.linalg.cond(V)
    if not cond < cond_cap:
        raise IllConditioned(
            f"grid condition number {cond:.3g} exceeds {cond_cap:.3g}; shrink K or grow T"
        )
    return newton_to_monomial(xs, [f(1.0 + x) for x in xs])


def rank_from_coeffs(coeffs, tau: float) -> Optional[int]:
    for n, c in enumerate(coeffs):
        if abs(c) > tau:
            return n
    return None


def taylor_from_function(f: Callable[[float], float], cfg: TaylorConfig = TaylorConfig()) -> TaylorEstimate:
    """Estimate c_0..c_K of f(s) = sum c_k (s - 1)^k from f on the grid."""
    K = cfg.K
    coarse = _fit(f, cfg.h, K, cfg.cond_cap)
    fine = _fit(f, cfg.h / 2, K, cfg.cond_cap)
    est, err = [], []
    for k in range(K + 1):
        w = 2.0 ** (K + 1 - k)
        c = (w * fine[k] - coarse[k]) / (w - 1)
        est.append(float(c))
        err.append(float(abs(c - fine[k])))
    rank = rank_from_coeffs(est, cfg.tau)
    leading = None if rank is None else est[rank]
    return TaylorEstimate(cfg.h, tuple(est), tuple(err), rank, leading, cfg)


def taylor_estimate(
    curve: CurveQ,
    cfg: TaylorConfig = TaylorConfig(),
    coeffs: DirichletCoeffs | None = None,
    table: ApTable | None = None,
) -> TaylorEstimate:
    if coeffs is None:
        coeffs = dirichlet_coeffs(curve, cfg.T, table)
    elif coeffs.T < cfg.T:
        raise ValueError(f"coefficients stop at {coeffs.T} < T={cfg.T}")
    elif coeffs.T > cfg.T:
        coeffs = DirichletCoeffs.from_list(coeffs.a[1 : cfg.T + 1])
    return taylor_from_function(lambda s: l_truncated(coeffs, s, cfg.riesz), cfg)

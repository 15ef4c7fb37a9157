"""JSON/TSV/plot-data serialization with fixed float formatting."""

from __future__ import annotations

import json
import math
from typing import Any, Iterable

from .curve import CurveQ, RationalPoint
from .lfunction import K1Result, TaylorEstimate
from .ranksearch import RankReport

BAD_PRIME_NOTE = "a_p = 0 at primes dividing the discriminant (local factor 1)"


def fmt(x: float) -> str:
    """Float text with 15 significant digits."""
    return f"{x:.15g}"


def _clean(obj: Any) -> Any:
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite value {obj} in report")
        return float(fmt(obj))
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def dumps(obj: dict) -> str:
    return json.dumps(_clean(obj), indent=2, ensure_ascii=True) + "\n"


def point_json(P: RationalPoint | None):
    return "O" if P is None else P.to_json()


def taylor_json(curve: CurveQ, est: TaylorEstimate, experiments: dict | None = None) -> dict:
    cfg = est.config
    out = {
        "curve": str(curve),
        "T": cfg.T,
        "h": cfg.h,
        "tau": cfg.tau,
        "c": list(est.coeffs),
        "analytic_rank": est.analytic_rank,
        "leading": est.leading,
        "experiments": experiments if experiments is not None else {"thm1": [], "k1": {}},
        "c_err": list(est.errors),
        "K": cfg.K,
        "riesz": cfg.riesz,
        "conventions": [BAD_PRIME_NOTE],
    }
    return out


def thm1_rows_json(rows: Iterable[tuple[float, int, float]]) -> list[dict]:
    return [{"eps": eps, "P": P, "value": v} for eps, P, v in rows]


def k1_json(results: Iterable[K1Result]) -> dict:
    by_c: dict[str, dict] = {}
    N = None
    for r in results:
        N = r.N
        entry = by_c.setdefault(fmt(r.c), {"c": r.c, "claimed_closed_form": r.claimed_closed_form})
        entry[r.mode] = r.value
    return {"N": N, "runs": list(by_c.values())}


def rank_json(r: RankReport) -> dict:
    return {
        "curve": str(r.curve),
        "torsion": {
            "structure": r.torsion.structure,
            "points": [point_json(P) for P in r.torsion.points],
        },
        "generators": [point_json(P) for P in r.generators_found],
        "rank_lower_bound": r.rank_lower_bound,
        "search_height": r.search_height,
        "truncated": r.truncated,
        "independent_points": [point_json(P) for P in r.independent],
    }


def bsd_json(curve: CurveQ, lfun: dict, rank: dict) -> dict:
    ar, lb = lfun["analytic_rank"], rank["rank_lower_bound"]
    return {
        "curve": str(curve),
        "analytic": lfun,
        "algebraic": rank,
        "verdict": {
            "analytic_rank": ar,
            "rank_lower_bound": lb,
            "analytic_at_least_lower_bound": None if ar is None else ar >= lb,
            "note": "recorded comparison of a numerical order-of-vanishing estimate with an "
            "algebraic lower bound; equality is not claimed",
        },
    }


def plot_data(rows: Iterable[tuple[int, float]], header: str) -> str:
    lines = [f"# {header}"] + [f"{x} {fmt(y)}" for x, y in rows]
    return "\n".join(lines) + "\n"

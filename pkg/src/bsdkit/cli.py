"""Command-line entry point: ``bsdkit <subcommand> --curve A,B ...``.

Exit codes: 0 success, 2 usage error, 3 budget refusal, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from . import __version__
from .arith import is_prime, primes_up_to
from .curve import CurveQ, parse_curve
from .errors import BudgetExceeded, IllConditioned, InvariantViolation
from .lfunction import (
    K1Config,
    TaylorConfig,
    dirichlet_coeffs,
    k1_partial,
    mertens,
    taylor_estimate,
    thm1_running,
)
from .localzeta import local_zeta, verify_rationality, zeta_local_eval, zeta_series_coeffs
from .pointcount import ApTable, local_data
from .ranksearch import rank_report, torsion_subgroup
from .report import bsd_json, dumps, k1_json, plot_data, rank_json, taylor_json, thm1_rows_json

log = logging.getLogger("bsdkit")

EXIT_USAGE, EXIT_BUDGET, EXIT_INVARIANT = 2, 3, 4


class UsageError(Exception):
    pass


def _floats(text: str) -> list[float]:
    vals = [float(t) for t in text.replace(" ", "").split(",") if t]
    if not vals:
        raise UsageError("list must not be empty")
    return vals


@dataclass
class RunConfig:
    curve: CurveQ | None = None
    pmax: int = 100
    T: int = 100_000
    h: float = 0.05
    tau: float = 1e-2
    K: int = 3
    riesz: int = 3
    H: int = 10_000
    M: int = 8
    P: int = 50
    N: int = 100_000
    eps: list[float] = field(default_factory=lambda: [0.1, 0.01, 0.001])
    c: list[float] = field(default_factory=lambda: [1.1, 1.2, 1.3])
    p: int | None = None
    s: float = 2.0
    order: int = 3
    out: Path = Path("out")
    cache: Path | None = None

    def validate(self) -> "RunConfig":
        if not self.eps or any(not 0 < e <= 1 for e in self.eps):
            raise UsageError("eps values must be in (0, 1]")
        if not self.c or any(c <= 1 for c in self.c):
            raise UsageError("c values must be > 1")
        for name in ("pmax", "T", "H", "M", "P", "N"):
            if getattr(self, name) < 0:
                raise UsageError(f"{name} must be nonnegative")
        if self.T > 10**6 or self.pmax > 10**7 or self.H > 10**6 or self.P > 10**5 or self.N > 10**7:
            raise BudgetExceeded("a bound is above its budget (T<=1e6, pmax<=1e7, H<=1e6, P<=1e5, N<=1e7)")
        return self

    @property
    def cache_dir(self) -> Path:
        return self.cache if self.cache is not None else self.out / "cache"

    def taylor(self) -> TaylorConfig:
        return TaylorConfig(h=self.h, K=self.K, tau=self.tau, T=self.T, riesz=self.riesz)


_CONVERTERS = {
    "curve": parse_curve,
    "pmax": int,
    "T": int,
    "h": float,
    "tau": float,
    "K": int,
    "riesz": int,
    "H": int,
    "M": int,
    "P": int,
    "N": int,
    "eps": _floats,
    "c": _floats,
    "p": int,
    "s": float,
    "order": int,
    "out": Path,
    "cache": Path,
}


def read_config_file(path: str | Path) -> dict:
    """Plain ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (t.strip() for t in line.split("=", 1))
        if key not in _CONVERTERS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


def build_config(args: argparse.Namespace) -> RunConfig:
    raw = read_config_file(args.config) if args.config else {}
    for f in fields(RunConfig):
        v = getattr(args, f.name, None)
        if v is not None:
            raw[f.name] = v
    values = {}
    for k, v in raw.items():
        try:
            values[k] = _CONVERTERS[k](v) if isinstance(v, str) else v
        except ValueError as exc:
            raise UsageError(f"{k}: {exc}") from None
    return replace(RunConfig(), **values).validate()


def _need_curve(cfg: RunConfig) -> CurveQ:
    if cfg.curve is None:
        raise UsageError("--curve A,B is required")
    return cfg.curve


def _label(curve: CurveQ) -> str:
    return f"{curve.A}_{curve.B}"


def _write(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    log.info("wrote %s", path)
    return path


def cached_ap_table(curve: CurveQ, pmax: int, cache_dir: Path) -> ApTable:
    """a_p table for p <= pmax, read from or written to the TSV cache."""
    best = None
    for f in sorted(cache_dir.glob(f"ap_{_label(curve)}_*.tsv")):
        try:
            n = int(f.stem.rsplit("_", 1)[1])
        except ValueError:
            continue
        if n >= pmax and (best is None or n < best[0]):
            best = (n, f)
    if best is not None:
        table = ApTable.read(best[1], pmax)
        if table.curve == curve:
            return table
    table = ApTable.compute(curve, pmax)
    _write(cache_dir / f"ap_{_label(curve)}_{pmax}.tsv", table.to_tsv())
    return table


# -- subcommands -----------------------------------------------------------


def cmd_info(cfg: RunConfig) -> dict:
    curve = _need_curve(cfg)
    D = curve.discriminant
    return {
        "curve": str(curve),
        "equation": curve.equation(),
        "discriminant": D,
        "bad_primes": [p for p in primes_up_to(cfg.pmax) if D % p == 0],
        "torsion": torsion_subgroup(curve).structure,
    }


def cmd_ap_table(cfg: RunConfig) -> Path:
    curve = _need_curve(cfg)
    table = ApTable.compute(curve, cfg.pmax)
    return _write(cfg.out / f"ap_{_label(curve)}.tsv", table.to_tsv())


def cmd_zeta_local(cfg: RunConfig) -> Path:
    curve = _need_curve(cfg)
    if cfg.p is None or not is_prime(cfg.p):
        raise UsageError("--p must be a prime")
    d = local_data(curve, cfg.p, M=max(cfg.order, 1))
    z = local_zeta(d)
    out = {
        "curve": str(curve),
        "p": d.p,
        "good": d.good,
        "n_p": d.n_p if d.good else None,
        "a_p": d.a_p,
        "numerator": list(z.numerator),
        "N_pm": zeta_series_coeffs(d, cfg.order) if d.good else [],
        "rational": verify_rationality(d, min(cfg.order, 6)) if d.good else None,
        "s": cfg.s,
        "value": zeta_local_eval(d, cfg.s),
    }
    return _write(cfg.out / f"zeta_local_{_label(curve)}_{d.p}.json", dumps(out))


def _thm1_rows(curve: CurveQ, cfg: RunConfig, table: ApTable | None = None):
    runs = {}
    for eps in cfg.eps:
        runs[eps] = thm1_running(curve, eps, cfg.P, table)
    summary = [(eps, cfg.P, rows[-1][1] if rows else -0.5) for eps, rows in runs.items()]
    return runs, summary


def _k1_results(cfg: RunConfig):
    table = mertens(max(cfg.N, 1))
    results = []
    for c in cfg.c:
        k = K1Config(c, max(cfg.N, 1))
        results.append(k1_partial(k, "exact-mertens", table))
        results.append(k1_partial(k, "paper-substitution"))
    return results


def _lfun_dict(curve: CurveQ, cfg: RunConfig) -> dict:
    tcfg = cfg.taylor()
    table = cached_ap_table(curve, max(tcfg.T, cfg.P), cfg.cache_dir)
    est = taylor_estimate(curve, tcfg, dirichlet_coeffs(curve, tcfg.T, table))
    _, summary = _thm1_rows(curve, cfg, table)
    experiments = {"thm1": thm1_rows_json(summary), "k1": k1_json(_k1_results(cfg))}
    return taylor_json(curve, est, experiments)


def cmd_lfun(cfg: RunConfig) -> Path:
    curve = _need_curve(cfg)
    return _write(cfg.out / f"lfun_{_label(curve)}.json", dumps(_lfun_dict(curve, cfg)))


def cmd_rank(cfg: RunConfig) -> Path:
    curve = _need_curve(cfg)
    return _write(cfg.out / f"rank_{_label(curve)}.json", dumps(rank_json(rank_report(curve, cfg.H, cfg.M))))


def cmd_bsd_report(cfg: RunConfig) -> Path:
    curve = _need_curve(cfg)
    try:
        lfun = _lfun_dict(curve, cfg)
    except (BudgetExceeded, IllConditioned) as exc:
        raise type(exc)(f"analytic stage: {exc}") from exc
    try:
        rank = rank_json(rank_report(curve, cfg.H, cfg.M))
    except BudgetExceeded as exc:
        raise BudgetExceeded(f"algebraic stage: {exc}") from exc
    return _write(cfg.out / f"bsd_{_label(curve)}.json", dumps(bsd_json(curve, lfun, rank)))


def cmd_thm1(cfg: RunConfig) -> Path:
    curve = _need_curve(cfg)
    runs, summary = _thm1_rows(curve, cfg)
    for eps, rows in runs.items():
        _write(
            cfg.out / f"thm1_{_label(curve)}_eps{eps:g}.dat",
            plot_data(rows, f"curve={curve} eps={eps:g} columns: p partial_product"),
        )
    out = {
        "curve": str(curve),
        "P": cfg.P,
        "rows": thm1_rows_json(summary),
        "k1": k1_json(_k1_results(cfg)),
    }
    return _write(cfg.out / f"thm1_{_label(curve)}.json", dumps(out))


def cmd_k1(cfg: RunConfig) -> Path:
    return _write(cfg.out / "k1.json", dumps(k1_json(_k1_results(cfg))))


COMMANDS = {
    "ap-table": cmd_ap_table,
    "zeta-local": cmd_zeta_local,
    "lfun": cmd_lfun,
    "rank": cmd_rank,
    "bsd-report": cmd_bsd_report,
    "thm1": cmd_thm1,
    "k1": cmd_k1,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--curve", help="curve coefficients 'A,B' for y^2 = x^3 - A x - B")
    common.add_argument("--pmax", type=int, help="largest prime for a_p tables")
    common.add_argument("--T", type=int, help="Dirichlet series truncation")
    common.add_argument("--out", type=Path, help="output directory (default ./out)")
    common.add_argument("--config", help="key=value config file; flags override it")
    common.add_argument("--cache", type=Path, help="a_p cache directory (default OUT/cache)")
    common.add_argument("--h", type=float, help="Taylor grid step")
    common.add_argument("--tau", type=float, help="rank threshold on |c_n|")
    common.add_argument("--K", type=int, help="highest Taylor coefficient")
    common.add_argument("--riesz", type=int, help="Riesz weight order for the truncated series")
    common.add_argument("--H", type=int, help="point search height bound")
    common.add_argument("--M", type=int, help="relation coefficient bound")
    common.add_argument("--P", type=int, help="prime bound for Euler products")
    common.add_argument("--N", type=int, help="partial-sum bound for k1")
    common.add_argument("--eps", help="comma-separated eps values in (0, 1]")
    common.add_argument("--c", help="comma-separated c values > 1")
    common.add_argument("--p", type=int, help="prime for zeta-local")
    common.add_argument("--s", type=float, help="evaluation point for zeta-local")
    common.add_argument("--order", type=int, help="number of N_{p^m} terms for zeta-local")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="bsdkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"bsdkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="curve summary on stdout")
    sub.add_parser("ap-table", parents=[common], help="TSV table of a_p for p <= pmax")
    sub.add_parser("zeta-local", parents=[common], help="local zeta data at one prime")
    sub.add_parser("lfun", parents=[common], help="Taylor coefficients and analytic rank at s = 1")
    sub.add_parser("rank", parents=[common], help="torsion, point search, rank lower bound")
    sub.add_parser("bsd-report", parents=[common], help="analytic and algebraic summaries side by side")
    sub.add_parser("thm1", parents=[common], help="eps-product and k1 experiments with plot data")
    sub.add_parser("k1", parents=[common], help="k1 partial sums")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        cfg = build_config(args)
        if args.command == "info":
            sys.stdout.write(json.dumps(cmd_info(cfg), indent=2) + "\n")
        else:
            path = COMMANDS[args.command](cfg)
            print(path)
    except (UsageError, ValueError) as exc:
        print(f"bsdkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, IllConditioned) as exc:
        print(f"bsdkit: refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"bsdkit: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return 0


if __name__ == "__main__":
    sys.exit(main())

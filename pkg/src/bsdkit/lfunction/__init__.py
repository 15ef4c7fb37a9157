from .experiments import (
    K1Config,
    K1Result,
    MertensTable,
    k1_claimed,
    k1_partial,
    l_paper_form,
    mertens,
    mobius,
    thm1_partial_product,
    thm1_running,
    zeta_riemann_approx,
)
from .series import DirichletCoeffs, dirichlet_coeffs, l_truncated, tail_bound
from .taylor import TaylorConfig, TaylorEstimate, taylor_estimate, taylor_from_function

__all__ = [
    "DirichletCoeffs",
    "K1Config",
    "K1Result",
    "MertensTable",
    "TaylorConfig",
    "TaylorEstimate",
    "dirichlet_coeffs",
    "k1_claimed",
    "k1_partial",
    "l_paper_form",
    "l_truncated",
    "mertens",
    "mobius",
    "tail_bound",
    "taylor_estimate",
    "taylor_from_function",
    "thm1_partial_product",
    "thm1_running",
    "zeta_riemann_approx",
]

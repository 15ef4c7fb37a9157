import numpy as np
import pytest

from bsdkit.curve import CurveQ
from bsdkit.errors import IllConditioned
from bsdkit.lfunction.series import DirichletCoeffs, dirichlet_coeffs
from bsdkit.lfunction.taylor import (
    TaylorConfig,
    newton_to_monomial,
    rank_from_coeffs,
    taylor_estimate,
    taylor_from_function,
)

from oracles import L1_CONDUCTOR_32


def test_newton_to_monomial_recovers_polynomial():
    xs = [0.1, 0.2, 0.3, 0.4]
    coeffs = [1.5, -2.0, 0.25, 3.0]
    ys = [np.polynomial.polynomial.polyval(x, coeffs) for x in xs]
    assert np.allclose(newton_to_monomial(xs, ys), coeffs, atol=1e-9)


def test_square_is_rank_two():
    est = taylor_from_function(lambda s: (s - 1) ** 2)
    assert est.analytic_rank == 2
    assert est.leading == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
@pytest.mark.parametrize("c", [1.0, -1.0, 2.0, -2.0])
def test_monomials(k, c):
    est = taylor_from_function(lambda s: c * (s - 1) ** k)
    assert est.analytic_rank == k
    assert est.leading == pytest.approx(c, abs=1e-4)


def test_smooth_nonpolynomial():
    # exp(s - 1) has all Taylor coefficients 1/k!; bias is removed by extrapolation
    est = taylor_from_function(lambda s: np.exp(s - 1))
    assert est.analytic_rank == 0
    assert est.coeffs[0] == pytest.approx(1.0, abs=1e-5)
    assert est.coeffs[1] == pytest.approx(1.0, abs=1e-3)


def test_no_coefficient_above_tau():
    est = taylor_from_function(lambda s: 1e-4 * (s - 1))
    assert est.analytic_rank is None and est.leading is None
    assert rank_from_coeffs([0.0, 0.005, -0.3], 0.01) == 2


def test_ill_conditioned_refused():
    with pytest.raises(IllConditioned, match="shrink K or grow T"):
        taylor_from_function(lambda s: s, TaylorConfig(K=12, cond_cap=1e6))


def test_bad_config():
    with pytest.raises(ValueError):
        TaylorConfig(h=0)
    with pytest.raises(ValueError):
        TaylorConfig(tau=-1)


def test_synthetic_dirichlet_input():
    # a_1 = 1, a_2 = -2: f(s) = 1 - 2^(1-s) vanishes at s = 1 with slope log 2
    cfg = TaylorConfig(T=2, riesz=0)
    est = taylor_estimate(CurveQ(1, 0), cfg, coeffs=DirichletCoeffs.from_list([1, -2]))
    assert est.analytic_rank == 1
    assert est.leading == pytest.approx(np.log(2), abs=1e-4)


def test_coefficients_too_short():
    with pytest.raises(ValueError):
        taylor_estimate(CurveQ(1, 0), TaylorConfig(T=10), coeffs=DirichletCoeffs.from_list([1, 0]))


@pytest.mark.slow
def test_x3_minus_x_at_1e4():
    cfg = TaylorConfig(T=10_000)
    est = taylor_estimate(CurveQ(1, 0), cfg)
    assert est.analytic_rank == 0
    assert est.leading == pytest.approx(L1_CONDUCTOR_32, rel=0.01)


def test_truncation_is_reused():
    c = dirichlet_coeffs(CurveQ(0, 2), 4000)
    cfg = TaylorConfig(T=2000)
    a = taylor_estimate(CurveQ(0, 2), cfg, coeffs=c)
    b = taylor_estimate(CurveQ(0, 2), cfg, coeffs=DirichletCoeffs.from_list(c.a[1:2001]))
    assert a.coeffs == b.coeffs

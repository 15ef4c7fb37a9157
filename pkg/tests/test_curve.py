import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsdkit import (
    INFINITY,
    BadPrime,
    CurveFp,
    CurveQ,
    NotOnCurve,
    RationalPoint,
    discriminant,
    parse_curve,
    point_add,
    point_mul,
    reduce_mod_p,
    scale_curve,
)
from bsdkit.arith import is_prime, primes_up_to, sqrt_mod
from bsdkit.curve import reduce_point, scale_point
from bsdkit.pointcount import count_points_naive

from oracles import disc, is_prime_slow


@pytest.mark.parametrize("A,B,expected", [(1, 0, 64), (0, 2, -1728)])
def test_discriminant_examples(A, B, expected):
    assert discriminant(CurveQ(A, B)) == expected == disc(A, B)


def test_singular_curve_rejected():
    with pytest.raises(ValueError):
        CurveQ(0, 0)
    # y^2 = x^3 - 3x - 2 = (x + 1)^2 (x - 2)
    with pytest.raises(ValueError):
        CurveQ(3, 2)


@pytest.mark.parametrize(
    "A,B,k,expected",
    [(1, 0, 1, (1, 0)), (1, 0, 2, (16, 0)), (1, 1, 3, (81, 729)), (1, 1, -1, (1, 1))],
)
def test_scale_curve_examples(A, B, k, expected):
    c = scale_curve(CurveQ(A, B), k)
    assert (c.A, c.B) == expected


def test_scale_zero_rejected():
    with pytest.raises(ValueError):
        scale_curve(CurveQ(1, 0), 0)


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-6, 6).filter(bool))
def test_scaled_discriminant(A, B, k):
    if disc(A, B) == 0:
        return
    c = CurveQ(A, B)
    assert discriminant(scale_curve(c, k)) == k**12 * discriminant(c)


def test_reduce_examples():
    assert reduce_mod_p(CurveQ(1, 0), 2) == BadPrime(2)
    assert reduce_mod_p(CurveQ(0, 2), 3) == BadPrime(3)
    E = reduce_mod_p(CurveQ(1, 0), 5)
    assert (E.p, E.a, E.b) == (5, 1, 0)
    # least nonnegative residues
    E = reduce_mod_p(CurveQ(-7, -4), 5)
    assert (E.a, E.b) == (3, 1)
    with pytest.raises(ValueError):
        reduce_mod_p(CurveQ(1, 0), 9)


def test_parse_curve():
    assert parse_curve("1,0") == CurveQ(1, 0)
    assert parse_curve(" -43 , +166 ") == CurveQ(-43, 166)
    for bad in ["1", "1,2,3", "a,b", "1.5,2", "0,0"]:
        with pytest.raises(ValueError):
            parse_curve(bad)


def test_primality_helpers():
    for n in range(2000):
        assert is_prime(n) == is_prime_slow(n)
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)


@pytest.mark.parametrize("p", [3, 5, 13, 17, 97, 257, 65537])
def test_sqrt_mod(p):
    for a in range(min(p, 400)):
        r = sqrt_mod(a, p)
        if r is None:
            assert pow(a, (p - 1) // 2, p) == p - 1
        else:
            assert r * r % p == a % p


# -- F_p group law -----------------------------------------------------------

E5 = CurveFp(5, 1, 0)  # y^2 = x^3 - x


def test_group_law_examples():
    P = (2, 1)
    assert point_add(E5, P, INFINITY) == P
    assert point_add(E5, (0, 0), (0, 0)) is INFINITY
    assert point_add(E5, (2, 1), (2, 4)) is INFINITY
    assert point_mul(E5, 0, P) is INFINITY
    assert point_mul(E5, 1, P) == P
    for Q in E5.points():
        assert point_mul(E5, 8, Q) is INFINITY


def test_off_curve_rejected():
    with pytest.raises(NotOnCurve):
        point_add(E5, (1, 1), INFINITY)
    with pytest.raises(NotOnCurve):
        point_mul(E5, 3, (2, 2))


def test_negative_multiples():
    P = (2, 1)
    for n in range(-10, 11):
        assert point_mul(E5, -n, P) == E5.neg(point_mul(E5, n, P))


def _curves_mod_small_primes():
    out = []
    for p in primes_up_to(100)[1:]:
        for a in range(0, p, max(1, p // 4)):
            for b in range(0, p, max(1, p // 3)):
                try:
                    out.append(CurveFp(p, a, b))
                except ValueError:
                    pass
    return out


SMALL_CURVES = _curves_mod_small_primes()


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(SMALL_CURVES), st.integers(0, 10**6))
def test_group_axioms(E, seed):
    rng = random.Random(seed)
    pts = list(E.points())
    P, Q, R = (rng.choice(pts) for _ in range(3))
    assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
    assert E.add(P, Q) == E.add(Q, P)
    assert E.add(P, INFINITY) == P
    assert E.add(P, E.neg(P)) is INFINITY
    assert E.contains(E.add(P, Q))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_CURVES))
def test_lagrange(E):
    N = count_points_naive(E)
    for P in E.points():
        assert E.mul(N, P) is INFINITY


@pytest.mark.parametrize("A,B", [(1, 0), (0, 2), (43, -166), (4, -1)])
@pytest.mark.parametrize("k", [2, 3, -5])
def test_scaling_bijection(A, B, k):
    c = CurveQ(A, B)
    ck = scale_curve(c, k)
    for p in [5, 7, 11, 13, 17, 19, 23]:
        if k % p == 0:
            continue
        E, Ek = reduce_mod_p(c, p), reduce_mod_p(ck, p)
        if isinstance(E, BadPrime):
            assert isinstance(Ek, BadPrime)
            continue
        image = {scale_point(P, k, p) for P in E.points()}
        assert image == set(Ek.points())
        assert count_points_naive(E) == count_points_naive(Ek)


# -- Q arithmetic ------------------------------------------------------------


def test_rational_point_forms():
    P = RationalPoint.from_xy("129/100", "383/1000")
    assert (P.u, P.v, P.d) == (129, 383, 10)
    with pytest.raises(ValueError):
        RationalPoint.from_xy("1/2", "1/3")
    with pytest.raises(ValueError):
        RationalPoint(2, 1, 2)


def test_rational_doubling():
    c = CurveQ(0, 2)
    P = RationalPoint(3, 5)
    assert c.contains(P)
    P2 = c.add(P, P)
    assert P2 == RationalPoint.from_xy("129/100", "-383/1000")
    assert c.add(P, c.neg(P)) is None
    assert c.mul(3, P) == c.add(P2, P)
    with pytest.raises(NotOnCurve):
        c.add(RationalPoint(3, 4), P)


def test_reduction_homomorphism():
    c = CurveQ(0, 2)
    P = RationalPoint(3, 5)
    multiples = [c.mul(n, P) for n in range(1, 5)]
    for p in primes_up_to(50):
        E = reduce_mod_p(c, p)
        if isinstance(E, BadPrime):
            continue
        for X in multiples:
            for Y in multiples:
                assert reduce_point(E, c.add(X, Y)) == E.add(reduce_point(E, X), reduce_point(E, Y))

"""Small integer helpers: primality, sieves, square roots mod p."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

import numpy as np

# Deterministic Miller-Rabin witnesses for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_sieve(n: int) -> np.ndarray:
    """Boolean array ``s`` of length n+1 with ``s[k]`` true iff k is prime."""
    s = np.ones(max(n + 1, 2), dtype=bool)
    s[:2] = False
    for i in range(2, isqrt(n) + 1):
        if s[i]:
            s[i * i :: i] = False
    return s[: n + 1]


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    return np.flatnonzero(prime_sieve(n)).tolist()


def smallest_prime_factors(n: int) -> np.ndarray:
    spf = np.zeros(n + 1, dtype=np.int64)
    small = primes_up_to(isqrt(n))
    # descending, so the smallest prime is written last
    for p in reversed(small):
        spf[p * p :: p] = p
    idx = np.arange(n + 1)
    unset = spf == 0
    spf[unset] = idx[unset]
    return spf


def factorize(n: int) -> dict[int, int]:
    """Trial division; fine for the integers that show up at desk scale."""
    n = abs(n)
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a: int, p: int) -> int | None:
    """Tonelli-Shanks. Returns a root of x^2 = a mod p, or None."""
    a %= p
    if a == 0 or p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def non_residue(p: int) -> int:
    z = 2
    while legendre(z, p) != -1:
        z += 1
    return z


@lru_cache(maxsize=64)
def _chi_table(p: int) -> np.ndarray:
    x = np.arange(p, dtype=np.int64)
    chi = np.full(p, -1, dtype=np.int8)
    chi[(x * x) % p] = 1
    chi[0] = 0
    chi.setflags(write=False)
    return chi


def chi_table(p: int) -> np.ndarray:
    """Quadratic character of F_p as a read-only int8 lookup table."""
    return _chi_table(p)

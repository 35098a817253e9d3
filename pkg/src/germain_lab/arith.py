"""Multiplicative arithmetic functions and their summatory forms.

Point evaluations (mobius, von_mangoldt, totient) factor their argument
through a FactorSieve when one is supplied and fall back to trial division
otherwise. The summatory forms (mertens, mobius_log_sum) run over vectorized
tables instead, so tests can cross-check the two independent routes.
"""

from __future__ import annotations

import math
from math import fsum
from typing import NamedTuple

import numpy as np

from .sieve import FactorSieve, primes_upto


def factorize(n: int, sieve: FactorSieve | None = None) -> list[tuple[int, int]]:
    """(prime, exponent) pairs of n, ascending; n >= 1."""
    if n < 1:
        raise ValueError(f"cannot factor n={n}")
    if sieve is not None and n <= sieve.limit:
        return sieve.factorize(n)
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int, sieve: FactorSieve | None = None) -> list[int]:
    """All divisors of n, unordered (recursive expansion of the factorization)."""
    ds = [1]
    for p, e in factorize(n, sieve):
        ds = [d * p ** k for d in ds for k in range(e + 1)]
    return ds


def squarefree_divisors_with_mobius(n: int, sieve: FactorSieve | None = None
                                    ) -> list[tuple[int, int]]:
    """(d, mu(d)) for the squarefree divisors d of n; the others have mu = 0."""
    out = [(1, 1)]
    for p, _ in factorize(n, sieve):
        out = out + [(d * p, -m) for d, m in out]
    return out


def mobius(n: int, sieve: FactorSieve | None = None) -> int:
    if n < 1:
        raise ValueError(f"mobius undefined for n={n}")
    fac = factorize(n, sieve)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def von_mangoldt(n: int, sieve: FactorSieve | None = None) -> float:
    """log p when n = p^k (the standard convention), else 0."""
    if n < 1:
        raise ValueError(f"von Mangoldt undefined for n={n}")
    if n == 1:
        return 0.0
    fac = factorize(n, sieve)
    if len(fac) == 1:
        return math.log(fac[0][0])
    return 0.0


def totient(n: int, sieve: FactorSieve | None = None) -> int:
    """phi(n) = n * prod_{p|n} (1 - 1/p), in exact integer arithmetic."""
    if n < 1:
        raise ValueError(f"totient undefined for n={n}")
    t = n
    for p, _ in factorize(n, sieve):
        t -= t // p
    return t


def mobius_sieve(limit: int) -> np.ndarray:
    """mu(n) for 0 <= n <= limit as an int8 array (mu(0) stored as 0)."""
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    for p in primes_upto(limit):
        p = int(p)
        mu[p::p] *= -1
        if p * p <= limit:
            mu[p * p::p * p] = 0
    return mu


def totient_sieve(limit: int) -> np.ndarray:
    """phi(n) for 0 <= n <= limit as an int64 array."""
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in primes_upto(limit):
        p = int(p)
        phi[p::p] -= phi[p::p] // p
    return phi


def mertens(x: int) -> int:
    """M(x) = sum_{n<=x} mu(n), exact."""
    if x < 1:
        raise ValueError(f"mertens needs x >= 1, got {x}")
    mu = mobius_sieve(x)
    return int(mu[1:].astype(np.int64).sum())


class MobiusLogSum(NamedTuple):
    value: float
    ratio: float  # |value| / x, the normalized size used in trend reports


def mobius_log_sum(x: int) -> MobiusLogSum:
    """sum_{n<=x} mu(n) log n, compensated summation, plus |sum|/x."""
    if x < 1:
        raise ValueError(f"mobius_log_sum needs x >= 1, got {x}")
    mu = mobius_sieve(x)
    logs = np.log(np.arange(1, x + 1, dtype=np.float64))
    value = fsum((mu[1:] * logs).tolist())
    return MobiusLogSum(value=value, ratio=abs(value) / x)


def lambda_divisor_identity_residual(n: int, sieve: FactorSieve | None = None) -> float:
    """|Lambda(n) + sum_{d|n} mu(d) log d|; zero up to rounding for every n."""
    if n < 1:
        raise ValueError(f"identity residual undefined for n={n}")
    terms = [m * math.log(d) for d, m in squarefree_divisors_with_mobius(n, sieve) if d > 1]
    return abs(von_mangoldt(n, sieve) + fsum(terms))

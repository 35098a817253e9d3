"""Censuses of integers and prime-power weights in arithmetic progressions,
plus a numerical validator for the mean-square large-sieve inequality

    sum_{q<=Q} q sum_{a mod q} | sum_{n<=x, n=a(q)} a_n - (1/q) sum_{n<=x} a_n |^2
        <= Q (10Q + 2 pi x) sum_{n<=x} |a_n|^2 .

Counting in a progression is done exactly in closed form (the error against
x/q never exceeds 1 in absolute value), so no analytic error model is
needed anywhere downstream. Residues live in [0, q); a residue quoted as q
means 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import fsum

import numpy as np

from .arith import totient
from .sieve import prime_flags, primes_upto


@dataclass(frozen=True)
class ApCensus:
    x: int
    q: int
    a: int
    count: int
    expected: float  # x / q
    residual: float  # count - x/q, always in (-1, 1)


@dataclass(frozen=True)
class ChebyshevAp:
    """sum of Lambda(n) over n <= x, n = a (mod q), with the PNT-in-AP target."""

    x: int
    q: int
    a: int
    value: float
    expected: float | None  # x / phi(q) when gcd(a, q) = 1, else None
    residual: float | None


@dataclass(frozen=True)
class SieveInequalityReport:
    x: int
    Q: int
    lhs: float
    rhs: float
    slack: float  # rhs - lhs; nonnegative is the inequality's content


def count_ap(x: int, q: int, a: int) -> ApCensus:
    """Exact count of 1 <= n <= x with n = a (mod q), in closed form."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if not 0 <= a < q:
        raise ValueError(f"residue a={a} outside [0, {q})")
    if a == 0:
        count = x // q
    elif a <= x:
        count = (x - a) // q + 1
    else:
        count = 0
    expected = x / q
    return ApCensus(x=x, q=q, a=a, count=count, expected=expected,
                    residual=count - expected)


def chebyshev_ap(x: int, q: int, a: int) -> ChebyshevAp:
    """Lambda-weighted count over the class a mod q (raw sum, no gcd filter)."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if not 0 <= a < q:
        raise ValueError(f"residue a={a} outside [0, {q})")
    primes = primes_upto(x)
    in_class = primes[primes % q == a]
    terms = np.log(in_class.astype(np.float64)).tolist()
    for p in primes[primes * primes <= x]:
        p = int(p)
        pk = p * p
        w = math.log(p)
        while pk <= x:
            if pk % q == a:
                terms.append(w)
            pk *= p
    value = fsum(terms)
    if math.gcd(a, q) == 1:
        expected = x / totient(q)
        return ChebyshevAp(x, q, a, value, expected, value - expected)
    return ChebyshevAp(x, q, a, value, None, None)


def ones_sequence(x: int) -> np.ndarray:
    return np.ones(x, dtype=np.float64)


def prime_indicator_sequence(x: int) -> np.ndarray:
    return prime_flags(x)[1:].astype(np.float64)


def random_sign_sequence(x: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, 2, size=x).astype(np.float64) * 2.0 - 1.0


def large_sieve_check(x: int, Q: int, sequence: np.ndarray) -> SieveInequalityReport:
    """Evaluate both sides of the inequality for a_1..a_x (sequence[i] = a_{i+1}).

    The left side is O(x Q) via per-modulus class sums; desk scale only.
    """
    if Q < 1:
        raise ValueError(f"Q must be >= 1, got {Q}")
    if Q > x:
        raise ValueError(f"Q={Q} exceeds x={x}")
    seq = np.asarray(sequence, dtype=np.float64)
    if seq.shape != (x,):
        raise ValueError(f"sequence must have length x={x}")
    total = fsum(seq.tolist())
    sumsq = fsum((seq * seq).tolist())
    n = np.arange(1, x + 1, dtype=np.int64)
    lhs_terms = []
    for q in range(1, Q + 1):
        class_sums = np.bincount(n % q, weights=seq, minlength=q)
        dev = class_sums - total / q
        lhs_terms.append(q * fsum((dev * dev).tolist()))
    lhs = fsum(lhs_terms)
    rhs = Q * (10.0 * Q + 2.0 * math.pi * x) * sumsq
    return SieveInequalityReport(x=x, Q=Q, lhs=lhs, rhs=rhs, slack=rhs - lhs)

"""Prime sieves and deterministic 64-bit primality.

Every other module pulls its primes from here: a smallest-prime-factor
table for O(log n) factorization below a fixed limit, a plain boolean
sieve, a segmented enumerator for ranges far beyond the tables, and a
deterministic strong-pseudoprime test for anything below 2^64.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

# Witness set proven sufficient for all n < 3.3e24 (Sorenson-Webster),
# hence deterministic over the whole supported range n < 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_U64 = 1 << 64

DEFAULT_SEGMENT_SIZE = 1 << 18


@dataclass(frozen=True)
class FactorSieve:
    """Smallest-prime-factor table covering 2..limit.

    spf[n] is the least prime dividing n, so spf[p] == p exactly when p is
    prime, and repeated division by spf fully factors any n <= limit.
    Immutable after construction; safe to share across threads.
    """

    limit: int
    spf: np.ndarray

    def smallest_factor(self, n: int) -> int:
        if n < 2 or n > self.limit:
            raise ValueError(f"n={n} outside sieve range [2, {self.limit}]")
        return int(self.spf[n])

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Prime factorization of n as (prime, exponent) pairs, ascending."""
        if n < 1 or n > self.limit:
            raise ValueError(f"n={n} outside sieve range [1, {self.limit}]")
        out = []
        spf = self.spf
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out

    def is_prime(self, n: int) -> bool:
        if n < 2:
            return False
        if n > self.limit:
            raise ValueError(f"n={n} outside sieve range [2, {self.limit}]")
        return int(self.spf[n]) == n

    def primes(self) -> np.ndarray:
        """All primes <= limit, ascending (int64)."""
        chunks = []
        block = 1 << 22
        for lo in range(2, self.limit + 1, block):
            hi = min(lo + block - 1, self.limit)
            idx = np.arange(lo, hi + 1, dtype=self.spf.dtype)
            chunks.append((np.flatnonzero(self.spf[lo:hi + 1] == idx) + lo))
        return np.concatenate(chunks).astype(np.int64) if chunks else np.empty(0, np.int64)


@dataclass(frozen=True)
class PrimeSegment:
    """Ascending list of primes found in [lo, hi]."""

    lo: int
    hi: int
    primes: np.ndarray


def build_factor_sieve(limit: int) -> FactorSieve:
    """Sieve the smallest prime factor of every n in [2, limit].

    32-bit entries are used whenever limit < 2^32, which halves the memory
    footprint for the common case (a 10^8 table is ~400 MB).
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    dtype = np.uint32 if limit < (1 << 32) else np.uint64
    spf = np.zeros(limit + 1, dtype=dtype)
    spf[2::2] = 2
    for p in range(3, math.isqrt(limit) + 1, 2):
        if spf[p] == 0:
            window = spf[p * p::2 * p]
            window[window == 0] = p
    odd = spf[3::2]
    untouched = np.flatnonzero(odd == 0)
    odd[untouched] = (2 * untouched + 3).astype(dtype)
    return FactorSieve(limit=limit, spf=spf)


def prime_flags(limit: int) -> np.ndarray:
    """Boolean array where flags[n] is True iff n is prime, 0 <= n <= limit."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p::p] = False
    return flags


def primes_upto(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    return np.flatnonzero(prime_flags(limit)).astype(np.int64)


def _sieve_segment(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    flags = np.ones(hi - lo + 1, dtype=bool)
    if lo <= 1:
        flags[:min(2 - lo, hi - lo + 1)] = False
    for p in base:
        p = int(p)
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start <= hi:
            flags[start - lo::p] = False
    return np.flatnonzero(flags).astype(np.int64) + lo


def primes_in(lo: int, hi: int, *, segment_size: int = DEFAULT_SEGMENT_SIZE,
              threads: int = 1) -> PrimeSegment:
    """Enumerate exactly the primes in [lo, hi], ascending.

    Segmented: only primes up to sqrt(hi) are tabulated, so the range may
    lie far beyond any full table. Segments can be sieved in parallel;
    results are merged in ascending segment order, so the output does not
    depend on the thread count.
    """
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    if lo < 2:
        raise ValueError(f"lo must be >= 2, got {lo}")
    if hi >= _U64:
        raise ValueError("range end must be below 2^64")
    base = primes_upto(math.isqrt(hi))
    bounds = []
    start = lo
    while start <= hi:
        end = min(start + segment_size - 1, hi)
        bounds.append((start, end))
        start = end + 1
    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: _sieve_segment(b[0], b[1], base), bounds))
    else:
        parts = [_sieve_segment(a, b, base) for a, b in bounds]
    merged = np.concatenate(parts) if parts else np.empty(0, np.int64)
    return PrimeSegment(lo=lo, hi=hi, primes=merged)


def is_prime(n: int) -> bool:
    """Deterministic primality for 0 <= n < 2^64 (no probabilistic error)."""
    if n < 0 or n >= _U64:
        raise ValueError(f"n={n} outside supported range [0, 2^64)")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True

"""Germain-pair enumeration and the weighted counting functions built on it.

The weighted sums iterate over prime powers only (the support of the
von Mangoldt weight), so a census at x costs O(pi(x)) lookups against a
primality table rather than O(x) factorizations. The table covers
[2, a*x+b]; ranges beyond the dense-table guard fall back to per-candidate
deterministic primality.

psi0_partition splits the divisor-expanded form of psi0(x) at a cutoff:
expanding each Lambda(2n+1) factor through Lambda(m) = -sum_{d|m} mu(d) log d
turns psi0 into a double sum over (d1, d2) with inner progression-constrained
Chebyshev sums, and the box d1, d2 <= x1 (main term) plus its complement
(error term) reproduce psi0 exactly up to rounding.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from math import fsum
from typing import NamedTuple

import numpy as np

from .arith import divisors, mobius_sieve, von_mangoldt
from .constants import SingularValue
from .sieve import is_prime, prime_flags, primes_in

# Largest primality table kept in memory (bool entries); beyond this the
# slow per-candidate path takes over.
DENSE_LIMIT = 1 << 31

_cache_lock = threading.Lock()
_cached_flags: np.ndarray | None = None


@dataclass(frozen=True)
class GermainPair:
    """A prime p whose companion q = a*p + b is also prime."""

    p: int
    a: int
    b: int
    q: int


@dataclass(frozen=True)
class CountReport:
    x: int
    pi_g: int
    psi_g: float
    psi0: float
    hl_prediction: float
    ratio: float  # psi_g / (2 C2 x)


class PsiPartition(NamedTuple):
    main: float   # box d1, d2 <= x1
    error: float  # complement, summed as three disjoint blocks


class GermainLogpSum(NamedTuple):
    value: float
    fit_residual: float  # value - (a0 log log x + a0 / log x), a0 = 2 C2


def _flags(limit: int) -> np.ndarray:
    """Grow-only shared primality table (flags[n] iff n prime)."""
    global _cached_flags
    with _cache_lock:
        if _cached_flags is None or _cached_flags.size <= limit:
            _cached_flags = prime_flags(limit)
        return _cached_flags


def _check_pair_args(x: int, a: int, b: int) -> int:
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    top = a * x + b
    if top >= 1 << 64:
        raise ValueError(f"a*x+b = {top} overflows the supported 64-bit range")
    return top


def germain_pairs(x: int, a: int = 2, b: int = 1) -> list[GermainPair]:
    """All primes p <= x with a*p + b prime, ascending."""
    top = _check_pair_args(x, a, b)
    if max(x, top) <= DENSE_LIMIT:
        flags = _flags(max(x, top))
        primes = np.flatnonzero(flags[:x + 1]).astype(np.int64)
        q = a * primes + b
        keep = (q >= 2) & flags[np.clip(q, 0, None)]
        return [GermainPair(p=int(p), a=a, b=b, q=int(a * p + b))
                for p in primes[keep]]
    out = []
    for p in primes_in(2, x).primes.tolist():
        q = a * p + b
        if q >= 2 and is_prime(q):
            out.append(GermainPair(p=p, a=a, b=b, q=q))
    return out


def _prime_power_support(x: int, flags: np.ndarray) -> list[tuple[int, float]]:
    """(n, Lambda(n)) for prime powers n = p^k <= x with k >= 2, ascending."""
    out = []
    for p in np.flatnonzero(flags[:math.isqrt(x) + 1]).tolist():
        w = math.log(p)
        pk = p * p
        while pk <= x:
            out.append((pk, w))
            pk *= p
    return sorted(out)


def _weighted_pair_sum(x: int, a: int, b: int, power: int) -> float:
    """sum_{n<=x} Lambda(n) * Lambda(a n + b)^power over the Lambda support."""
    top = _check_pair_args(x, a, b)
    limit = max(x, top)
    if limit > DENSE_LIMIT:
        raise ValueError(f"a*x+b = {top} exceeds the dense table guard {DENSE_LIMIT}")
    flags = _flags(limit)
    primes = np.flatnonzero(flags[:x + 1]).astype(np.int64)
    m = a * primes + b
    keep = (m >= 2) & flags[np.clip(m, 0, None)]
    main = (np.log(primes[keep].astype(np.float64))
            * np.log(m[keep].astype(np.float64)) ** power)
    parts = [fsum(main.tolist())]
    # n = p^k with k >= 2 and a*n+b prime
    corr = []
    for n, w in _prime_power_support(x, flags):
        mm = a * n + b
        if mm >= 2 and flags[mm]:
            corr.append(w * math.log(mm) ** power)
    parts.append(fsum(corr))
    # a*n+b = q^k with k >= 2 and Lambda(n) > 0 (any prime-power n)
    corr = []
    for mm, w in _prime_power_support(top, flags):
        nn = mm - b
        if nn > 0 and nn % a == 0:
            nn //= a
            if 1 <= nn <= x:
                wn = von_mangoldt(nn)
                if wn > 0.0:
                    corr.append(wn * w ** power)
    parts.append(fsum(corr))
    return fsum(parts)


def psi_g(x: int, a: int = 2, b: int = 1) -> float:
    """sum_{n<=x} Lambda(n) Lambda(a n + b)."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if x == 1:
        return 0.0
    return _weighted_pair_sum(x, a, b, power=1)


def psi0(x: int, a: int = 2, b: int = 1) -> float:
    """sum_{n<=x} Lambda(n) Lambda(a n + b)^2, the extra-weighted census."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if x == 1:
        return 0.0
    return _weighted_pair_sum(x, a, b, power=2)


def psi0_partition(x: int, x1: float) -> PsiPartition:
    """Split the divisor-expanded psi0(x) at d <= x1 vs the complement.

    main + error reproduces psi0(x) up to floating rounding; the split is
    an algebraic rearrangement, not an approximation. x1 may be fractional
    (cutoffs like (log x)^2 are typical).
    """
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    top = 2 * x + 1
    if not 1 <= x1 <= top:
        raise ValueError(f"x1={x1} outside [1, 2x+1]")
    flags = _flags(top)
    # Chebyshev mass S[q] = sum of Lambda(n) over n <= x with q | 2n+1
    weighted = [(int(p), math.log(int(p)))
                for p in np.flatnonzero(flags[:x + 1]).tolist()]
    weighted = sorted(weighted + _prime_power_support(x, flags))
    S = np.zeros(top + 1)
    for n, w in weighted:
        for d in divisors(2 * n + 1):
            S[d] += w
    mu = mobius_sieve(top)
    d_all = np.arange(top + 1, dtype=np.int64)
    keep = (mu != 0) & (d_all % 2 == 1) & (d_all >= 3)
    dlist = d_all[keep]
    w = mu[keep].astype(np.float64) * np.log(dlist.astype(np.float64))
    in_box = dlist <= x1
    main_rows, err_rows = [], []
    block = 512
    for i0 in range(0, dlist.size, block):
        i1 = min(i0 + block, dlist.size)
        l = np.lcm.outer(dlist[i0:i1], dlist)
        vals = np.where(l <= top, S[np.minimum(l, top)], 0.0)
        vals *= w[i0:i1, None] * w[None, :]
        for i in range(i1 - i0):
            if in_box[i0 + i]:
                main_rows.append(fsum(vals[i, in_box].tolist()))
                err_rows.append(fsum(vals[i, ~in_box].tolist()))
            else:
                err_rows.append(fsum(vals[i].tolist()))
    return PsiPartition(main=fsum(main_rows), error=fsum(err_rows))


def _adaptive_simpson(f, a: float, b: float, rel_tol: float, max_depth: int) -> float:
    def estimate(lo, flo, mid, fmid, hi, fhi):
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def recurse(lo, flo, mid, fmid, hi, fhi, whole, eps, depth):
        lm = (lo + mid) / 2.0
        rm = (mid + hi) / 2.0
        flm, frm = f(lm), f(rm)
        left = estimate(lo, flo, lm, flm, mid, fmid)
        right = estimate(mid, fmid, rm, frm, hi, fhi)
        delta = left + right - whole
        if depth >= max_depth or abs(delta) <= 15.0 * eps:
            return left + right + delta / 15.0
        return (recurse(lo, flo, lm, flm, mid, fmid, left, eps / 2.0, depth + 1)
                + recurse(mid, fmid, rm, frm, hi, fhi, right, eps / 2.0, depth + 1))

    mid = (a + b) / 2.0
    fa, fm, fb = f(a), f(mid), f(b)
    whole = estimate(a, fa, mid, fm, b, fb)
    eps = abs(whole) * rel_tol if whole != 0.0 else rel_tol
    return recurse(a, fa, mid, fm, b, fb, whole, eps, 0)


def hl_prediction(x: float, a: int = 2, b: int = 1, c2: SingularValue | None = None,
                  *, rel_tol: float = 1e-8, max_depth: int = 60) -> float:
    """2 C2 * integral_2^x dt / (log t * log(a t + b)), adaptive Simpson."""
    if c2 is None:
        raise ValueError("a twin-prime-constant value is required")
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    if x == 2:
        return 0.0
    f = lambda t: 1.0 / (math.log(t) * math.log(a * t + b))
    return 2.0 * c2.value * _adaptive_simpson(f, 2.0, float(x), rel_tol, max_depth)


def germain_reciprocal_sum(x: int) -> float:
    """sum of 1/p over primes p <= x with 2p+1 prime."""
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    pairs = germain_pairs(x, 2, 1)
    return fsum(1.0 / gp.p for gp in pairs)


def germain_logp_sum(x: int, c2: SingularValue) -> GermainLogpSum:
    """sum of log p / p over Germain primes p <= x, with its log-log fit.

    The fit a0 log log x + a0/log x (a0 = 2 C2) is the shape the conjectured
    pair density implies; the residual is only meaningful once x is large
    enough for log log x to settle (x >= 16 or so).
    """
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    pairs = germain_pairs(x, 2, 1)
    value = fsum(math.log(gp.p) / gp.p for gp in pairs)
    a0 = 2.0 * c2.value
    fit = a0 * math.log(math.log(x)) + a0 / math.log(x)
    return GermainLogpSum(value=value, fit_residual=value - fit)


def census(x: int, a: int, b: int, c2: SingularValue) -> CountReport:
    """One checkpoint row: pair count, weighted sums, prediction, ratio."""
    pairs = germain_pairs(x, a, b)
    pg = psi_g(x, a, b)
    return CountReport(
        x=x,
        pi_g=len(pairs),
        psi_g=pg,
        psi0=psi0(x, a, b),
        hl_prediction=hl_prediction(x, a, b, c2),
        ratio=pg / (2.0 * c2.value * x),
    )

"""Independent naive reference implementations used as test oracles.

Everything here is written the slow, obvious way on purpose and shares no
code path with the library: bytearray sieving, trial division, brute-force
double loops, fixed-grid quadrature.
"""

import math
from math import fsum, gcd


def sieve_flags(limit):
    """bytearray primality table, flags[n] == 1 iff n prime."""
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p::p] = bytearray(len(range(p * p, limit + 1, p)))
    return flags


def primes_upto(limit):
    flags = sieve_flags(limit)
    return [n for n in range(2, limit + 1) if flags[n]]


def is_prime_trial(n):
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def factorize_trial(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def mobius_naive(n):
    fac = factorize_trial(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient_brute(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def von_mangoldt_naive(n):
    if n < 2:
        return 0.0
    fac = factorize_trial(n)
    return math.log(fac[0][0]) if len(fac) == 1 else 0.0


def divisors_naive(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def log_lcm_brute(x):
    return fsum(math.log(m) * math.log(n) / math.lcm(m, n)
                for m in range(1, x + 1) for n in range(1, x + 1))


def mobius_phi_lcm_brute(x):
    """Column-major on purpose (the library iterates row-major)."""
    total = []
    for n in range(1, x + 1):
        mn = mobius_naive(n)
        if mn == 0:
            continue
        col = []
        for m in range(1, x + 1):
            mm = mobius_naive(m)
            if mm == 0:
                continue
            col.append(mm * mn * math.log(m) * math.log(n)
                       / totient_brute(math.lcm(m, n)))
        total.append(fsum(col))
    return fsum(total)


def psi_pair_brute(x, a, b, power):
    return fsum(von_mangoldt_naive(n) * von_mangoldt_naive(a * n + b) ** power
                for n in range(1, x + 1))


def simpson_fixed(f, a, b, nodes):
    """Composite Simpson on an even number of panels."""
    n = nodes if nodes % 2 == 0 else nodes + 1
    h = (b - a) / n
    vals = [f(a + i * h) for i in range(n + 1)]
    return h / 3.0 * (vals[0] + vals[-1]
                      + 4.0 * fsum(vals[1:-1:2]) + 2.0 * fsum(vals[2:-1:2]))


def mult_order_brute(u, q):
    k = 1
    v = u % q
    while v != 1:
        v = v * u % q
        k += 1
    return k

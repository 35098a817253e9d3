import numpy as np
import pytest

import oracles
from germain_lab.sieve import (build_factor_sieve, is_prime, prime_flags,
                               primes_in, primes_upto)


def test_spf_table_smallest_cases():
    s = build_factor_sieve(10)
    assert s.spf[2:11].tolist() == [2, 3, 2, 5, 2, 7, 2, 3, 2]
    assert build_factor_sieve(2).spf[2] == 2


def test_spf_rejects_tiny_limit():
    with pytest.raises(ValueError):
        build_factor_sieve(1)


def test_spf_prime_count_at_1e6():
    s = build_factor_sieve(10 ** 6)
    n = np.arange(10 ** 6 + 1, dtype=s.spf.dtype)
    count = int(np.count_nonzero(s.spf[2:] == n[2:]))
    assert count == 78498
    assert count == sum(oracles.sieve_flags(10 ** 6))


def test_spf_entries_are_prime_divisors(spf_100k):
    flags = oracles.sieve_flags(10 ** 5)
    for n in range(2, 10 ** 5, 97):
        p = spf_100k.smallest_factor(n)
        assert n % p == 0 and flags[p]


def test_factorization_roundtrip(spf_100k):
    for n in range(1, 10 ** 5 + 1):
        prod = 1
        for p, e in spf_100k.factorize(n):
            prod *= p ** e
        assert prod == n


def test_is_prime_agrees_with_spf_classification(spf_100k):
    for n in range(2, 10 ** 5 + 1):
        assert is_prime(n) == spf_100k.is_prime(n)


def test_primes_method_matches_flags():
    s = build_factor_sieve(10 ** 4)
    assert s.primes().tolist() == oracles.primes_upto(10 ** 4)


def test_primes_in_textbook_ranges():
    assert primes_in(2, 30).primes.tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_in(90, 100).primes.tolist() == [97]


def test_primes_in_counts_match_trial_division():
    got = primes_in(2, 10 ** 4).primes.tolist()
    assert got == oracles.primes_upto(10 ** 4)


def test_primes_in_far_segment_agrees_with_is_prime():
    lo, hi = 10 ** 8, 10 ** 8 + 100
    got = primes_in(lo, hi).primes.tolist()
    assert got == [n for n in range(lo, hi + 1) if is_prime(n)]
    assert got  # the window is not empty of primes


def test_primes_in_thread_count_does_not_change_output():
    one = primes_in(2, 10 ** 6, segment_size=1 << 14, threads=1)
    par = primes_in(2, 10 ** 6, segment_size=1 << 14, threads=3)
    assert np.array_equal(one.primes, par.primes)


def test_primes_in_rejects_bad_ranges():
    with pytest.raises(ValueError):
        primes_in(30, 2)
    with pytest.raises(ValueError):
        primes_in(0, 10)


def test_is_prime_examples():
    assert is_prime(2309)
    assert not is_prime(2697)  # 3 * 29 * 31
    assert not is_prime(1)
    assert not is_prime(0)


def test_is_prime_matches_trial_division_on_a_range():
    for n in range(2, 5000):
        assert is_prime(n) == oracles.is_prime_trial(n)


def test_is_prime_strong_pseudoprimes_and_large_values():
    assert not is_prime(2047)            # 23 * 89, fools base 2 alone
    assert not is_prime(3215031751)      # classic 4-base pseudoprime
    assert is_prime((1 << 61) - 1)       # Mersenne prime
    assert not is_prime((1 << 64) - 1)


def test_is_prime_domain():
    with pytest.raises(ValueError):
        is_prime(-1)
    with pytest.raises(ValueError):
        is_prime(1 << 64)


def test_primes_upto_matches_oracle():
    assert primes_upto(1000).tolist() == oracles.primes_upto(1000)
    assert prime_flags(100)[97] and not prime_flags(100)[91]

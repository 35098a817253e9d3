import math
from math import fsum, log

import numpy as np
import pytest

import oracles
from germain_lab.progressions import (chebyshev_ap, count_ap, large_sieve_check,
                                      ones_sequence, prime_indicator_sequence,
                                      random_sign_sequence)


def test_count_ap_examples():
    assert count_ap(10, 3, 1).count == 4  # 1, 4, 7, 10
    assert count_ap(10, 1, 0).count == 10
    assert count_ap(5, 7, 6).count == 0


def test_count_ap_closed_form_matches_loop():
    for x in (1, 2, 3, 17, 100, 999, 2000):
        for q in range(1, 51):
            tallies = np.bincount(np.arange(1, x + 1) % q, minlength=q)
            for a in range(q):
                assert count_ap(x, q, a).count == tallies[a]


def test_count_ap_residual_bounded_and_classes_partition():
    for q in range(1, 51):
        for x in (1, 7, 360, 1999):
            counts = [count_ap(x, q, a) for a in range(q)]
            assert sum(c.count for c in counts) == x
            assert all(abs(c.residual) < 1 for c in counts)


def test_count_ap_guards():
    with pytest.raises(ValueError):
        count_ap(10, 3, 3)
    with pytest.raises(ValueError):
        count_ap(0, 3, 1)
    with pytest.raises(ValueError):
        count_ap(10, 0, 0)


def test_chebyshev_examples():
    odd = chebyshev_ap(10, 2, 1)
    assert odd.value == pytest.approx(2 * log(3) + log(5) + log(7), rel=1e-14)
    even = chebyshev_ap(10, 2, 0)
    assert even.value == pytest.approx(3 * log(2), rel=1e-14)
    assert even.expected is None  # gcd(0, 2) != 1


def test_chebyshev_matches_naive_sum():
    for q, a in ((3, 1), (4, 3), (5, 0), (7, 2)):
        naive = fsum(oracles.von_mangoldt_naive(n)
                     for n in range(1, 2001) if n % q == a)
        assert chebyshev_ap(2000, q, a).value == pytest.approx(naive, abs=1e-10)


def test_chebyshev_classes_recombine_to_full_sum():
    x = 10 ** 4
    psi = fsum(oracles.von_mangoldt_naive(n) for n in range(1, x + 1))
    for q in (3, 4, 6):
        coprime = fsum(chebyshev_ap(x, q, a).value
                       for a in range(q) if math.gcd(a, q) == 1)
        shared = fsum(oracles.von_mangoldt_naive(n)
                      for n in range(1, x + 1)
                      if math.gcd(n, q) > 1 and oracles.von_mangoldt_naive(n) > 0)
        assert coprime == pytest.approx(psi - shared, rel=1e-12)


def test_chebyshev_residual_is_small_at_1e6():
    r = chebyshev_ap(10 ** 6, 3, 1)
    assert r.expected == pytest.approx(5 * 10 ** 5, rel=1e-12)
    assert abs(r.residual) < 0.01 * 10 ** 6


def test_large_sieve_trivial_modulus_only():
    rep = large_sieve_check(10, 1, ones_sequence(10))
    assert rep.lhs == 0.0
    assert rep.slack > 0


def test_large_sieve_constant_sequence():
    rep = large_sieve_check(100, 10, ones_sequence(100))
    assert rep.slack >= 0


def test_large_sieve_standard_configurations():
    for x, Q in ((100, 10), (1000, 30)):
        for seq in (ones_sequence(x), prime_indicator_sequence(x)):
            assert large_sieve_check(x, Q, seq).slack >= 0
        for seed in range(20):
            seq = random_sign_sequence(x, seed)
            assert large_sieve_check(x, Q, seq).slack >= 0


def test_large_sieve_guards():
    with pytest.raises(ValueError):
        large_sieve_check(10, 11, ones_sequence(10))
    with pytest.raises(ValueError):
        large_sieve_check(10, 2, ones_sequence(9))


def test_random_sequence_is_seed_deterministic():
    a = random_sign_sequence(500, 7)
    b = random_sign_sequence(500, 7)
    c = random_sign_sequence(500, 8)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert set(np.unique(a)) == {-1.0, 1.0}

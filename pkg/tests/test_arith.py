import math

import pytest
from hypothesis import given, strategies as st

from primdec.arith import (Factored, divisor_count, divisors, factorize,
                           moebius, squarefree_divisor_count, totient,
                           totient_lower_bound)
from primdec.errors import DomainError

import oracles


def test_factorize_reconstructs():
    for n in (1, 2, 12, 360, 9973, 2**20):
        assert factorize(n).reconstruct() == n


def test_factorize_rejects_bad_input():
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        factorize((1 << 40) + 1)


def test_moebius_examples():
    assert moebius(1) == 1
    assert moebius(12) == 0
    assert moebius(30) == -1  # 2 * 3 * 5, three prime factors


def test_totient_examples():
    assert totient(1) == 1
    assert totient(12) == 4
    assert totient(18) == 6


def test_squarefree_divisor_count_examples():
    assert squarefree_divisor_count(1) == 1
    assert squarefree_divisor_count(12) == 4  # 1, 2, 3, 6
    assert squarefree_divisor_count(30) == 8


def test_divisor_count_examples():
    assert divisor_count(1) == 1
    assert divisor_count(12) == 6
    assert divisor_count(36) == 9


def test_divisors_examples():
    assert divisors(6) == [1, 2, 3, 6]
    assert divisors(12, squarefree_only=True) == [1, 2, 3, 6]
    assert divisors(1, squarefree_only=True) == [1]


def test_against_direct_enumeration_small():
    for n in range(1, 2001):
        ds = oracles.brute_divisors(n)
        assert divisors(n) == ds
        assert divisor_count(n) == len(ds)
        assert squarefree_divisor_count(n) == sum(
            1 for d in ds if oracles.brute_squarefree(d))
        assert totient(n) == oracles.brute_totient(n)
        assert moebius(n) == oracles.brute_moebius(n)


def test_against_spf_sieve_to_ten_thousand():
    # independent factorization path: smallest-prime-factor sieve
    limit = 10_000
    spf = oracles.spf_sieve(limit)
    for n in range(1, limit + 1):
        f = oracles.spf_factor(n, spf)
        assert dict(factorize(n).factors) == f
        assert moebius(n) == (0 if any(e > 1 for e in f.values())
                              else (-1) ** len(f))
        phi = 1
        for q, e in f.items():
            phi *= q ** (e - 1) * (q - 1)
        assert totient(n) == phi
        assert divisor_count(n) == math.prod(e + 1 for e in f.values())
        assert squarefree_divisor_count(n) == 2 ** len(f)


@given(st.integers(1, 3000), st.integers(1, 3000))
def test_multiplicative_on_coprime_pairs(m, n):
    if math.gcd(m, n) != 1:
        return
    assert totient(m * n) == totient(m) * totient(n)
    assert divisor_count(m * n) == divisor_count(m) * divisor_count(n)
    assert (squarefree_divisor_count(m * n)
            == squarefree_divisor_count(m) * squarefree_divisor_count(n))


def test_totient_lower_bound_examples():
    b3 = totient_lower_bound(3)
    assert b3 == pytest.approx((math.log(2) / 2) * 3 / math.log(3))
    assert b3 == pytest.approx(0.9464, abs=1e-4)
    assert totient(3) >= b3
    b12 = totient_lower_bound(12)
    assert b12 == pytest.approx(1.674, abs=1e-3)
    assert totient(12) >= b12
    with pytest.raises(DomainError):
        totient_lower_bound(2)


def test_totient_lower_bound_holds_to_hundred_thousand():
    for n in range(3, 100_001):
        assert totient(n) >= totient_lower_bound(n), n


def test_factored_is_sorted():
    f = factorize(360)
    assert f == Factored(360, ((2, 3), (3, 2), (5, 1)))

"""Arithmetic functions on ordinary integers: factorization, mu, phi, tau, W.

Everything routes through one cached trial-division factorization; the inputs
of interest are p - 1 for desk-scale primes, far below the 2**40 cap.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import DomainError

FACTOR_CAP = 1 << 40


@dataclass(frozen=True)
class Factored:
    """An integer together with its prime factorization, sorted by prime."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def reconstruct(self) -> int:
        out = 1
        for q, e in self.factors:
            out *= q**e
        return out


@functools.lru_cache(maxsize=None)
def factorize(n: int) -> Factored:
    """Factor n >= 1 by trial division (cached)."""
    if n < 1:
        raise DomainError(f"cannot factor {n}: need n >= 1")
    if n > FACTOR_CAP:
        raise DomainError(f"cannot factor {n}: exceeds the 2**40 cap")
    m = n
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factored(n, tuple(factors))


def moebius(n: int) -> int:
    """0 when a square divides n, otherwise (-1)**(number of prime factors)."""
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def totient(n: int) -> int:
    """Count of 1 <= k <= n coprime to n."""
    out = 1
    for q, e in factorize(n).factors:
        out *= q ** (e - 1) * (q - 1)
    return out


def distinct_prime_count(n: int) -> int:
    return len(factorize(n).factors)


def squarefree_divisor_count(n: int) -> int:
    """W(n) = 2**omega(n), the number of squarefree divisors."""
    return 1 << distinct_prime_count(n)


def divisor_count(n: int) -> int:
    out = 1
    for _, e in factorize(n).factors:
        out *= e + 1
    return out


def divisors(n: int, squarefree_only: bool = False) -> list[int]:
    """All divisors of n in increasing order, optionally only squarefree ones."""
    out = [1]
    for q, e in factorize(n).factors:
        powers = [q] if squarefree_only else [q**j for j in range(1, e + 1)]
        out += [d * qe for d in out for qe in powers]
    return sorted(out)


def totient_lower_bound(n: int) -> float:
    """(log 2 / 2) * n / log n, a floor for the totient when n >= 3.

    Natural logarithm; the bound is weaker than the truth under either log
    convention, and natural log matches the analytic literature it comes from.
    """
    if n < 3:
        raise DomainError(f"lower bound needs n >= 3, got {n}")
    return (math.log(2) / 2) * n / math.log(n)

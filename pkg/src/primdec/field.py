"""Prime-field context: least primitive root, index table, primitive elements.

The dense index (discrete-log) table is the workhorse: primitivity testing,
the quadratic character, and every multiplicative-character evaluation reduce
to table lookups.
"""

from __future__ import annotations

import functools
import math
import os
from array import array
from dataclasses import dataclass

import numpy as np

from .arith import divisors, factorize, moebius, squarefree_divisor_count, totient
from .errors import NotPrime, ToleranceExceeded, TooLarge

DEFAULT_TABLE_CAP = 1 << 22
TABLE_CAP_ENV = "PRIMDEC_TABLE_CAP"


@dataclass(frozen=True, eq=False)
class PrimeField:
    """Odd prime p, its least primitive root g, and the full index table.

    ``ind[x]`` is the exponent t in [0, p-2] with g**t = x; ``ind[0]`` holds
    the sentinel -1 and must never be read.  Instances are immutable after
    construction and hash by identity, so they are safe to share and to use
    as cache keys.
    """

    p: int
    g: int
    ind: array
    factors: tuple[tuple[int, int], ...]  # factorization of p - 1

    def index_of(self, x: int) -> int:
        if not 0 < x < self.p:
            raise ValueError(f"index is defined on 1..{self.p - 1}, got {x}")
        return self.ind[x]

    def __repr__(self) -> str:  # the table would swamp the default repr
        return f"PrimeField(p={self.p}, g={self.g})"


@dataclass(frozen=True, eq=False)
class PrimitiveSet:
    """Bitset of the primitive elements: bit x is set iff x generates F_p^x."""

    field: PrimeField
    bits: int

    @property
    def count(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.field.p and self.bits >> x & 1 == 1

    def elements(self) -> list[int]:
        return [x for x in range(self.field.p) if self.bits >> x & 1]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _least_primitive_root(p: int, prime_divisors: tuple[int, ...]) -> int:
    cofactors = [(p - 1) // q for q in prime_divisors]
    g = 2
    while True:
        if all(pow(g, c, p) != 1 for c in cofactors):
            return g
        g += 1


def build_field(p: int, *, table_cap: int | None = None) -> PrimeField:
    """Build the arithmetic context for an odd prime p.

    The index table costs O(p) memory, so builds are capped (default 2**22,
    overridable via the PRIMDEC_TABLE_CAP environment variable or the
    keyword).  Raises TooLarge beyond the cap and NotPrime for anything that
    is not an odd prime.
    """
    cap = table_cap
    if cap is None:
        cap = int(os.environ.get(TABLE_CAP_ENV, DEFAULT_TABLE_CAP))
    if p > cap:
        raise TooLarge(f"p={p} exceeds the index-table cap {cap}")
    if p < 3 or not _is_prime(p):
        raise NotPrime(f"p={p} is not an odd prime >= 3")
    factors = factorize(p - 1).factors
    g = _least_primitive_root(p, tuple(q for q, _ in factors))
    ind = array("q", [-1]) * p
    x = 1
    for t in range(p - 1):
        ind[x] = t
        x = x * g % p
    return PrimeField(p=p, g=g, ind=ind, factors=factors)


@functools.lru_cache(maxsize=None)
def primitive_set(field: PrimeField) -> PrimitiveSet:
    """All x with gcd(ind(x), p-1) = 1; the cardinality is phi(p-1)."""
    n = field.p - 1
    bits = 0
    for x in range(1, field.p):
        if math.gcd(field.ind[x], n) == 1:
            bits |= 1 << x
    return PrimitiveSet(field, bits)


def is_primitive(field: PrimeField, x: int) -> bool:
    """True iff x generates the multiplicative group."""
    _check_element(field, x)
    if x == 0:
        return False
    return math.gcd(field.ind[x], field.p - 1) == 1


def quadratic_character(field: PrimeField, x: int) -> int:
    """0 at 0, +1 on nonzero squares, -1 on non-squares (index parity)."""
    _check_element(field, x)
    if x == 0:
        return 0
    return 1 - 2 * (field.ind[x] & 1)


@functools.lru_cache(maxsize=None)
def chi2_table(field: PrimeField) -> tuple[int, ...]:
    """Dense quadratic-character values; exact integers for hot loops."""
    return tuple(quadratic_character(field, x) for x in range(field.p))


def characteristic_tolerance(field: PrimeField) -> float:
    """eps_num = 1e-6 * W(p-1), scaling with the surviving Moebius terms."""
    return 1e-6 * squarefree_divisor_count(field.p - 1)


@functools.lru_cache(maxsize=None)
def _order_sum_tables(field: PrimeField) -> tuple[tuple[int, float, np.ndarray], ...]:
    """Per squarefree divisor d of p-1: the weight mu(d)/phi(d) and the map
    u -> sum of all order-d character values at an element of index u.

    An order-d character sends g**t to exp(2*pi*i*r*t/d) for some r coprime
    to d, so the sum over the phi(d) characters of order d depends on t mod d
    only; one length-d table per divisor replaces per-element recomputation.
    Divisors with mu(d) = 0 contribute nothing and are skipped.
    """
    tables = []
    for d in divisors(field.p - 1, squarefree_only=True):
        rs = np.array([r for r in range(1, d + 1) if math.gcd(r, d) == 1])
        tab = np.exp((2j * np.pi / d) * np.outer(np.arange(d), rs)).sum(axis=1)
        tab.setflags(write=False)
        tables.append((d, moebius(d) / len(rs), tab))
    return tuple(tables)


def characteristic_via_characters(field: PrimeField, x: int) -> complex:
    """Primitivity indicator through the explicit character-sum formula.

    Returns (phi(p-1)/(p-1)) * sum over d | p-1 of mu(d)/phi(d) times the
    sum of all order-d character values at x, in floating complex
    arithmetic.  The result must land within characteristic_tolerance(field)
    of 0 or 1, else ToleranceExceeded signals numeric breakdown.  x = 0
    returns 0 by convention: characters are undefined there and the
    indicator value is 0.
    """
    _check_element(field, x)
    if x == 0:
        return 0j
    t = field.ind[x]
    acc = 0j
    for d, coef, tab in _order_sum_tables(field):
        acc += coef * tab[t % d]
    n = field.p - 1
    value = complex(acc * (totient(n) / n))
    eps = characteristic_tolerance(field)
    target = 1.0 if abs(value - 1.0) < abs(value) else 0.0
    if abs(value - target) > eps:
        raise ToleranceExceeded(
            f"character sum {value!r} at x={x} strays from {{0,1}} beyond {eps}")
    return value


def characteristic_profile(field: PrimeField) -> np.ndarray:
    """characteristic_via_characters for every x at once (vectorized)."""
    p = field.p
    t = np.frombuffer(field.ind, dtype=np.int64)[1:]
    acc = np.zeros(p - 1, dtype=np.complex128)
    for d, coef, tab in _order_sum_tables(field):
        acc += coef * tab[t % d]
    n = p - 1
    out = np.empty(p, dtype=np.complex128)
    out[0] = 0
    out[1:] = acc * (totient(n) / n)
    return out


def _check_element(field: PrimeField, x: int) -> None:
    if not 0 <= x < field.p:
        raise ValueError(f"element {x} outside F_{field.p}")

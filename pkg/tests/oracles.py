"""Brute-force reference implementations the library is tested against.

Everything here is deliberately naive and independent of the package code
paths: gcd counting, divisor enumeration, double loops over field elements,
generator-walk character tables, subset enumeration.
"""

from __future__ import annotations

import cmath
import math


def primes_up_to(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = b"\x00" * len(range(i * i, n + 1, i))
    return [i for i, v in enumerate(sieve) if v]


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


# ----------------------------------------------------- arithmetic functions

def brute_divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_squarefree(n: int) -> bool:
    return all(n % (d * d) for d in range(2, int(n**0.5) + 1))


def brute_moebius(n: int) -> int:
    if not brute_squarefree(n):
        return 0
    omega = sum(1 for d in range(2, n + 1) if n % d == 0 and is_prime(d))
    return -1 if omega % 2 else 1


def brute_totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def spf_sieve(n: int) -> list[int]:
    """Smallest-prime-factor table for 0..n (an independent factorization path)."""
    spf = list(range(n + 1))
    for i in range(2, int(n**0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def spf_factor(n: int, spf: list[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    while n > 1:
        q = spf[n]
        out[q] = out.get(q, 0) + 1
        n //= q
    return out


# ------------------------------------------------------------- field layer

def multiplicative_order(x: int, p: int) -> int:
    acc, k = x % p, 1
    while acc != 1:
        acc = acc * x % p
        k += 1
    return k


def brute_primitive_elements(p: int) -> set[int]:
    return {x for x in range(1, p) if multiplicative_order(x, p) == p - 1}


def euler_chi2(x: int, p: int) -> int:
    if x % p == 0:
        return 0
    e = pow(x, (p - 1) // 2, p)
    return -1 if e == p - 1 else e


def character_values(p: int, g: int, d: int, r: int) -> dict[int, complex]:
    """Character table built by walking the generator, no index table used."""
    values = {}
    x = 1
    for t in range(p - 1):
        values[x] = cmath.exp(2j * cmath.pi * r * t / d)
        x = x * g % p
    values[0] = 0j
    return values


# ------------------------------------------------------- function algebra

def naive_circ(fv, gv, p: int) -> list[complex]:
    return [sum(fv[y] * gv[(x + y) % p] for y in range(p)) for x in range(p)]


def naive_correlation(fv, point, p: int) -> complex:
    total = 0
    for x in range(p):
        term = fv[x]
        for s in point:
            term *= fv[(x + s) % p]
        total += term
    return total


def naive_inner(fv, gv, p: int) -> complex:
    return sum(fv[x] * gv[x].conjugate() for x in range(p))


# ------------------------------------------------------------ decomposition

def naive_sumset(xs, ys, p: int) -> set[int]:
    return {(a + b) % p for a in xs for b in ys}


def has_repeated_factor(coeffs: list[int], p: int) -> bool:
    """Monic g of degree >= 1 with g**2 | f, by exhausting small divisors."""
    deg_f = len(coeffs) - 1
    for deg_g in range(1, deg_f // 2 + 1):
        for code in range(p**deg_g):
            g = []
            c = code
            for _ in range(deg_g):
                g.append(c % p)
                c //= p
            g.append(1)
            if _poly_divides(_poly_mul(g, g, p), coeffs, p):
                return True
    return False


def _poly_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return out


def _poly_divides(g, f, p):
    rem = [c % p for c in f]
    while rem and rem[-1] == 0:
        rem.pop()
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    while len(rem) - 1 >= dg:
        coef = rem[-1] * inv % p
        shift = len(rem) - 1 - dg
        for i, c in enumerate(g):
            rem[shift + i] = (rem[shift + i] - coef * c) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return not rem


def naive_decomposition_hits(p: int, k: int, *, min_a_size: int = 2,
                             restrict_a_to_primitive: bool = False) -> set[tuple[int, ...]]:
    """Normalized B (min(B) = 0, |B| = k) admitting some A with
    |A| >= min_a_size and A + B equal to the primitive elements, found by
    enumerating (A, B) pairs and testing the sumset with a double loop.

    With restrict_a_to_primitive=False every subset of F_p is tried as A
    (feasible up to p = 13 or so).  The True variant only walks subsets of
    the primitive elements, which is sound because 0 in B forces
    A = A + 0 to be a subset of A + B; the small-p tests assert that both
    variants agree before the fast one is trusted at p = 19.
    """
    import itertools

    target = brute_primitive_elements(p)
    universe = sorted(target) if restrict_a_to_primitive else list(range(p))
    hits = set()
    b_candidates = [(0, *rest) for rest in itertools.combinations(range(1, p), k - 1)]
    a_candidates = []
    for size in range(min_a_size, len(universe) + 1):
        a_candidates.extend(itertools.combinations(universe, size))
    for b in b_candidates:
        for a in a_candidates:
            if naive_sumset(a, b, p) == target:
                hits.add(b)
                break
    return hits

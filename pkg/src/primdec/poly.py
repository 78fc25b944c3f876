"""Dense polynomial arithmetic over F_p.

Coefficient lists are constant-term first with no trailing zeros; [] is the
zero polynomial.  The squarefree machinery handles the characteristic-p
pitfall (vanishing derivatives of p-th powers) by Frobenius descent, so the
distinct-root count is correct even for wild multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotMonic
from .field import PrimeField

Coeffs = list[int]


def trim(c: Coeffs) -> Coeffs:
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(c) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(c) - 1


def is_monic(c) -> bool:
    return bool(c) and c[-1] == 1


def add(f, g, p: int) -> Coeffs:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(f, g, p: int) -> Coeffs:
    return add(f, [(-c) % p for c in g], p)


def mul(f, g, p: int) -> Coeffs:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def scale(f, k: int, p: int) -> Coeffs:
    k %= p
    return trim([c * k % p for c in f])


def div(f, g, p: int) -> tuple[Coeffs, Coeffs]:
    """Quotient and remainder; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [c % p for c in f]
    trim(rem)
    dg = degree(g)
    inv_lead = pow(g[-1], p - 2, p)
    quo = [0] * max(len(rem) - dg, 0)
    while degree(rem) >= dg:
        shift = degree(rem) - dg
        coef = rem[-1] * inv_lead % p
        quo[shift] = coef
        for i, c in enumerate(g):
            rem[shift + i] = (rem[shift + i] - coef * c) % p
        trim(rem)
    return trim(quo), rem


def monic(f, p: int) -> Coeffs:
    if not f:
        return []
    return scale(f, pow(f[-1], p - 2, p), p)


def gcd(f, g, p: int) -> Coeffs:
    """Monic greatest common divisor (monic f for gcd(f, 0))."""
    a, b = [c % p for c in f], [c % p for c in g]
    trim(a), trim(b)
    while b:
        a, b = b, div(a, b, p)[1]
    return monic(a, p)


def derivative(f, p: int) -> Coeffs:
    return trim([i * c % p for i, c in enumerate(f)][1:])


def power(f, e: int, p: int) -> Coeffs:
    out = [1]
    base = list(f)
    while e:
        if e & 1:
            out = mul(out, base, p)
        base = mul(base, base, p)
        e >>= 1
    return out


def evaluate(f, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def pth_root(f, p: int) -> Coeffs:
    # Valid when f' = 0: coefficients then sit at indices divisible by p,
    # and a**p = a on F_p, so the root just compresses the exponents.
    return trim(list(f[::p]))


def squarefree_decomposition(f, p: int) -> list[tuple[Coeffs, int]]:
    """Monic f as a product of pairwise-coprime squarefree monic factors.

    Returns (factor, multiplicity) pairs sorted by (multiplicity, degree,
    coefficients).  p-th powers are unwrapped via pth_root, so multiplicities
    divisible by the characteristic come out right.
    """
    if degree(f) < 1:
        return []
    if not is_monic(f):
        raise NotMonic("squarefree decomposition expects a monic polynomial")
    out: list[tuple[Coeffs, int]] = []
    stack: list[tuple[Coeffs, int]] = [(list(f), 1)]
    while stack:
        h, mult = stack.pop()
        hp = derivative(h, p)
        if not hp:
            stack.append((pth_root(h, p), mult * p))
            continue
        c = gcd(h, hp, p)
        w = div(h, c, p)[0]
        i = 1
        while degree(w) > 0:
            y = gcd(w, c, p)
            z = div(w, y, p)[0]
            if degree(z) > 0:
                out.append((z, i * mult))
            w = y
            c = div(c, y, p)[0]
            i += 1
        if degree(c) > 0:
            # leftover factors all have multiplicity divisible by p
            stack.append((c, mult))
    out.sort(key=lambda t: (t[1], len(t[0]), t[0]))
    return out


def squarefree_part(f, p: int) -> Coeffs:
    out = [1]
    for fac, _ in squarefree_decomposition(f, p):
        out = mul(out, fac, p)
    return out


def distinct_root_count(f, p: int) -> int:
    """Number of distinct roots of monic f in the algebraic closure."""
    return sum(degree(fac) for fac, _ in squarefree_decomposition(f, p))


def mth_power_root(f, m: int, p: int) -> Coeffs | None:
    """The monic g with g**m = f, or None when f is not an m-th power.

    Decided from the squarefree decomposition: f = g**m iff every
    multiplicity is divisible by m; the reconstructed root is verified by
    re-raising it to the m-th power.
    """
    if not is_monic(f):
        raise NotMonic("m-th power test expects a monic polynomial")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if degree(f) == 0:
        return [1]
    if degree(f) % m:
        return None
    dec = squarefree_decomposition(f, p)
    if any(e % m for _, e in dec):
        return None
    g = [1]
    for fac, e in dec:
        g = mul(g, power(fac, e // m, p), p)
    return g if power(g, m, p) == trim([c % p for c in f]) else None


@dataclass(frozen=True)
class PolynomialOverFp:
    """A polynomial over a prime field, constant term first, trailing zeros
    stripped so the leading coefficient is nonzero (or the tuple is empty)."""

    field: PrimeField
    coefficients: tuple[int, ...]

    def __post_init__(self):
        p = self.field.p
        reduced = [c % p for c in self.coefficients]
        trim(reduced)
        object.__setattr__(self, "coefficients", tuple(reduced))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def monic(self) -> bool:
        return is_monic(self.coefficients)

    def __call__(self, x: int) -> int:
        return evaluate(self.coefficients, x, self.field.p)

    def derivative(self) -> "PolynomialOverFp":
        return PolynomialOverFp(self.field, tuple(derivative(list(self.coefficients), self.field.p)))

"""Multiplicative characters of F_p and the character-sum families.

A character of order d | p-1 with exponent r coprime to d sends g**t to
exp(2*pi*i*r*t/d) and 0 to 0.  The three sum families (a character twisted by
quadratic characters of shifted arguments) are evaluated pointwise; the Weil
checker compares |sum psi(a f(x))| against (r-1)sqrt(p) with r the
distinct-root count of f in the algebraic closure.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import poly
from .errors import (DuplicateShift, FieldMismatch, IsPerfectPower,
                     NotADivisor, NotMonic)
from .field import PrimeField, chi2_table
from .rng import SplitMix64

BOUND_SLACK = 1e-6  # absolute slack for floating-point bound comparisons


@dataclass(frozen=True)
class CharacterSpec:
    """Multiplicative character of exact order d with exponent r, gcd(r, d) = 1.

    d = 1 is the principal character; d = 2 is the quadratic character.
    """

    field: PrimeField
    d: int
    r: int

    def __post_init__(self):
        if self.d < 1 or (self.field.p - 1) % self.d:
            raise NotADivisor(f"order {self.d} does not divide p-1={self.field.p - 1}")
        if not 1 <= self.r <= self.d or math.gcd(self.r, self.d) != 1:
            raise ValueError(f"exponent r={self.r} must lie in [1, {self.d}] and be coprime to d")

    @functools.cached_property
    def _roots(self) -> tuple[complex, ...]:
        return tuple(cmath.exp(2j * cmath.pi * u / self.d) for u in range(self.d))

    @property
    def is_principal(self) -> bool:
        return self.d == 1

    def evaluate(self, x: int) -> complex:
        """Value at x: 0 at 0, a d-th root of unity on F_p^x."""
        if not 0 <= x < self.field.p:
            raise ValueError(f"element {x} outside F_{self.field.p}")
        if x == 0:
            return 0j
        return self._roots[self.r * self.field.ind[x] % self.d]

    __call__ = evaluate


def principal_character(field: PrimeField) -> CharacterSpec:
    return CharacterSpec(field, 1, 1)


def quadratic_character_spec(field: PrimeField) -> CharacterSpec:
    return CharacterSpec(field, 2, 1)


def characters_of_order(field: PrimeField, d: int) -> list[CharacterSpec]:
    """All phi(d) characters of exact order d."""
    if d < 1 or (field.p - 1) % d:
        raise NotADivisor(f"order {d} does not divide p-1={field.p - 1}")
    return [CharacterSpec(field, d, r) for r in range(1, d + 1) if math.gcd(r, d) == 1]


def _same_field(field: PrimeField, chi: CharacterSpec) -> None:
    if chi.field is not field:
        raise FieldMismatch("character belongs to a different field")


def _check_residue(field: PrimeField, value: int, what: str) -> None:
    if not 0 <= value < field.p:
        raise ValueError(f"{what} must lie in [0, {field.p}), got {value}")


def _checked_shifts(field: PrimeField, shifts: Iterable[int]) -> list[int]:
    out = list(shifts)
    if not out:
        raise ValueError("need at least one shift")
    for b in out:
        _check_residue(field, b, "shift")
    if len(set(out)) != len(out):
        raise DuplicateShift(f"shifts must be pairwise distinct, got {out}")
    return out


def sum_a(field: PrimeField, chi: CharacterSpec, b1: int) -> complex:
    """sum over x in F_p of chi_2(x + b1) * chi(x), by direct evaluation."""
    _same_field(field, chi)
    _check_residue(field, b1, "b1")
    p = field.p
    chi2 = chi2_table(field)
    return complex(sum(chi2[(x + b1) % p] * chi(x) for x in range(1, p)))


def sum_b(field: PrimeField, chi: CharacterSpec, shifts: Iterable[int]) -> complex:
    """sum over x of chi(x) * prod_j chi_2(x - b_j) for distinct shifts b_j."""
    _same_field(field, chi)
    bs = _checked_shifts(field, shifts)
    p = field.p
    chi2 = chi2_table(field)
    total = 0j
    for x in range(1, p):
        w = 1
        for b in bs:
            w *= chi2[(x - b) % p]
            if w == 0:
                break
        if w:
            total += w * chi(x)
    return complex(total)


def sum_c(field: PrimeField, chi: CharacterSpec, b1: int, shifts: Iterable[int]) -> complex:
    """sum over x of chi(x) * chi_2(x + b1) * prod_j chi_2(x - b_j)."""
    _same_field(field, chi)
    _check_residue(field, b1, "b1")
    bs = _checked_shifts(field, shifts)
    p = field.p
    chi2 = chi2_table(field)
    total = 0j
    for x in range(1, p):
        w = chi2[(x + b1) % p]
        if w == 0:
            continue
        for b in bs:
            w *= chi2[(x - b) % p]
            if w == 0:
                break
        if w:
            total += w * chi(x)
    return complex(total)


class WeilResult(NamedTuple):
    sum: complex
    bound: float
    ok: bool


def weil_check(field: PrimeField, psi: CharacterSpec, f: poly.PolynomialOverFp,
               a: int) -> WeilResult:
    """Evaluate sum over x of psi(a * f(x)) against the (r-1)sqrt(p) bound.

    psi must have order m > 1 and monic f must not be an m-th power in
    F_p[x] (checked; IsPerfectPower otherwise, since the bound is void).
    r is the number of distinct roots of f in the algebraic closure, i.e.
    the degree of the squarefree part.
    """
    _same_field(field, psi)
    if f.field is not field:
        raise FieldMismatch("polynomial belongs to a different field")
    if psi.d <= 1:
        raise ValueError("need a character of order m > 1")
    coeffs = list(f.coefficients)
    if not poly.is_monic(coeffs):
        raise NotMonic("Weil check needs a monic polynomial")
    p = field.p
    if not 1 <= a < p:
        raise ValueError(f"a must be a nonzero residue, got {a}")
    if poly.mth_power_root(coeffs, psi.d, p) is not None:
        raise IsPerfectPower(f"f is a perfect {psi.d}-th power, hypothesis violated")
    r = poly.distinct_root_count(coeffs, p)
    bound = (r - 1) * math.sqrt(p)
    total = 0j
    for x in range(p):
        total += psi(a * poly.evaluate(coeffs, x, p) % p)
    total = complex(total)
    return WeilResult(total, bound, abs(total) <= bound + BOUND_SLACK)


def random_weil_instance(field: PrimeField, rng: SplitMix64,
                         max_degree: int = 4) -> tuple[CharacterSpec, poly.PolynomialOverFp, int]:
    """One admissible (psi, f, a) draw: order > 1, monic f of degree in
    [1, max_degree] that is not an m-th power, nonzero a.

    Draw order is fixed (order, exponent, degree, low coefficients, a) so a
    seed reproduces the same instance stream everywhere; inadmissible f are
    rejected and the whole instance redrawn.
    """
    from .arith import divisors  # local import keeps module deps one-way

    p = field.p
    orders = [d for d in divisors(p - 1) if d > 1]
    while True:
        d = rng.choice(orders)
        r = rng.randint(1, d)
        while math.gcd(r, d) != 1:
            r = rng.randint(1, d)
        deg = rng.randint(1, max_degree)
        coeffs = [rng.randbelow(p) for _ in range(deg)] + [1]
        a = rng.randint(1, p - 1)
        if poly.mth_power_root(coeffs, d, p) is not None:
            continue
        return CharacterSpec(field, d, r), poly.PolynomialOverFp(field, tuple(coeffs)), a

"""Additive-decomposition engine: bitset sumsets, exact verification, the
maximal-translate search, vanishing/residual certificates, and numeric bound
reports.

Subsets of F_p are Python-int bitmasks (bit x <-> element x).  Rotating a
mask adds a constant to every element mod p, so a sumset is an OR of
rotations and the maximal A for a fixed B is an AND of them.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .arith import squarefree_divisor_count, totient
from .errors import (BadEpsilon, BudgetExceeded, KTooLarge, MissingInput,
                     NotADecomposition, SizesUnequal, ZeroNotInB)
from .field import PrimeField, chi2_table, primitive_set

MAX_SEARCH_K = 4
_BUDGET_CHECK_STRIDE = 256


# ---------------------------------------------------------------- bitmasks

def mask_from_elements(elements: Iterable[int], p: int) -> int:
    mask = 0
    for e in elements:
        if not 0 <= e < p:
            raise ValueError(f"element {e} outside [0, {p})")
        mask |= 1 << e
    return mask


def mask_elements(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def rotate_mask(mask: int, shift: int, p: int) -> int:
    """Add shift (mod p) to every element of the mask."""
    shift %= p
    if shift == 0:
        return mask
    return ((mask << shift) | (mask >> (p - shift))) & ((1 << p) - 1)


def sumset(x_mask: int, y_mask: int, p: int) -> int:
    """{a + b mod p : a in X, b in Y} as a mask: OR of X rotated by each b."""
    acc = 0
    m = y_mask
    while m:
        low = m & -m
        acc |= rotate_mask(x_mask, low.bit_length() - 1, p)
        m ^= low
    return acc


# ------------------------------------------------------------ decomposition

@dataclass(frozen=True, eq=False)
class Decomposition:
    """Candidate pair (A, B) for A + B = primitive set, stored as bitmasks."""

    field: PrimeField
    a_mask: int
    b_mask: int

    def __post_init__(self):
        if self.a_mask <= 0 or self.b_mask <= 0:
            raise ValueError("A and B must be nonempty")
        if self.a_mask >> self.field.p or self.b_mask >> self.field.p:
            raise ValueError("mask has bits outside the field range")

    @classmethod
    def from_elements(cls, field: PrimeField, a: Iterable[int],
                      b: Iterable[int]) -> "Decomposition":
        return cls(field, mask_from_elements(a, field.p),
                   mask_from_elements(b, field.p))

    @property
    def a_size(self) -> int:
        return self.a_mask.bit_count()

    @property
    def b_size(self) -> int:
        return self.b_mask.bit_count()

    def a_elements(self) -> list[int]:
        return mask_elements(self.a_mask)

    def b_elements(self) -> list[int]:
        return mask_elements(self.b_mask)

    @property
    def normalized(self) -> bool:
        """True when min(B) = 0, the canonical translate."""
        return bool(self.b_mask & 1)

    @property
    def conjecture_relevant(self) -> bool:
        """|A| >= 2 and |B| >= 2; smaller pairs verify but trivially."""
        return self.a_size >= 2 and self.b_size >= 2


def verify(decomp: Decomposition) -> bool:
    """Exact set equality of A + B with the primitive elements."""
    target = primitive_set(decomp.field).bits
    return sumset(decomp.a_mask, decomp.b_mask, decomp.field.p) == target


def normalize(decomp: Decomposition) -> Decomposition:
    """Translate by y = min(B) to (A + y, B - y); the verdict is unchanged."""
    if decomp.normalized:
        return decomp
    y = (decomp.b_mask & -decomp.b_mask).bit_length() - 1
    p = decomp.field.p
    return Decomposition(decomp.field,
                         rotate_mask(decomp.a_mask, y, p),
                         rotate_mask(decomp.b_mask, -y, p))


def maximal_a(field: PrimeField, b_mask: int) -> int:
    """The largest A with A + B inside the primitive set P: AND of P - b.

    Requires 0 in B (which already forces A inside P).  Any valid A for this
    B is a subset of the result, and growing A toward it never adds a
    non-primitive sum, so coverage of P by (maximal A) + B decides whether a
    decomposition with this B exists at all.
    """
    if not b_mask & 1:
        raise ZeroNotInB("maximal-A construction requires 0 in B")
    pset = primitive_set(field).bits
    acc = pset  # the b = 0 translate
    m = b_mask ^ 1
    p = field.p
    while m:
        low = m & -m
        acc &= rotate_mask(pset, -(low.bit_length() - 1), p)
        m ^= low
    return acc


# ------------------------------------------------------------------ search

@dataclass(frozen=True)
class SearchEntry:
    """One enumerated candidate B with its maximal A and coverage verdict."""

    b: tuple[int, ...]
    a_max_mask: int
    covers: bool

    @property
    def a_max_size(self) -> int:
        return self.a_max_mask.bit_count()

    def a_max_elements(self) -> list[int]:
        return mask_elements(self.a_max_mask)


def search(field: PrimeField, k: int, span: int | None = None,
           budget_ms: int | None = None) -> list[SearchEntry]:
    """Enumerate every normalized B = {0, b2 < ... < bk} with bi <= span and
    report whether its maximal A covers the primitive set.

    Every decomposition is a translate of one with min(B) = 0, so the hit
    set is complete up to translation; reflections and dilations are not
    quotiented (the problem is not invariant under them) and show up as
    separate candidates.  A wall-clock budget overrun raises BudgetExceeded
    with the partial results attached; output is never silently truncated.
    """
    p = field.p
    if k < 2:
        raise ValueError(f"|B| = k must be >= 2, got {k}")
    if k > MAX_SEARCH_K:
        raise KTooLarge(f"k={k} beyond the desk-scale cap {MAX_SEARCH_K}")
    if span is None:
        span = p - 1
    if not 1 <= span <= p - 1:
        raise ValueError(f"span must lie in [1, {p - 1}], got {span}")
    if budget_ms is not None and budget_ms <= 0:
        raise ValueError("budget_ms must be positive")
    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
    target = primitive_set(field).bits
    total = math.comb(span, k - 1)
    out: list[SearchEntry] = []
    examined = 0
    for combo in itertools.combinations(range(1, span + 1), k - 1):
        if (deadline is not None and examined % _BUDGET_CHECK_STRIDE == 0
                and time.monotonic() > deadline):
            raise BudgetExceeded(
                f"search budget exhausted after {examined} of {total} candidates",
                partial=out, examined=examined, total=total)
        b_mask = mask_from_elements(combo, p) | 1
        a_max = maximal_a(field, b_mask)
        covers = sumset(a_max, b_mask, p) == target
        if covers:
            # re-verify through the public path before reporting a hit
            covers = verify(Decomposition(field, a_max, b_mask))
        out.append(SearchEntry(b=(0, *combo), a_max_mask=a_max, covers=covers))
        examined += 1
    return out


def greedy_cover_a(field: PrimeField, a_max_mask: int, b_mask: int) -> int:
    """A small A inside A_max with A + B = P, by greedy set cover.

    Best-effort: minimality is not guaranteed (set cover is hard), but the
    result always verifies.  Raises NotADecomposition when A_max itself does
    not cover.
    """
    p = field.p
    target = primitive_set(field).bits
    uncovered = target
    chosen = 0
    spans = {a: rotate_mask(b_mask, a, p) for a in mask_elements(a_max_mask)}
    remaining = sorted(spans)
    while uncovered:
        best, best_gain = -1, 0
        for a in remaining:
            gain = (spans[a] & uncovered).bit_count()
            if gain > best_gain:
                best, best_gain = a, gain
        if best_gain == 0:
            raise NotADecomposition("A_max does not cover the primitive set")
        chosen |= 1 << best
        uncovered &= ~spans[best]
        remaining.remove(best)
    return chosen


# ------------------------------------------------------------- certificates

class HCertificate(NamedTuple):
    max_abs: int
    all_zero: bool


def h_certificate(field: PrimeField, a_mask: int, b_mask: int, *,
                  diagnostic: bool = False, all_b1: bool = False) -> HCertificate:
    """Evaluate P(x) (chi2(x + b1) + 1) prod_j (chi2(x - b_j) + 1) over F_p.

    P is the primitive-set indicator and the b_j run over the nonzero
    elements of B; everything is exact integer arithmetic.  For a true
    normalized decomposition every value is 0.  b1 defaults to the least
    nonzero element of B; all_b1=True repeats the evaluation for every
    admissible b1 and aggregates the max.  diagnostic=True skips the
    decomposition gate so near-misses can be probed.
    """
    if not b_mask & 1:
        raise ZeroNotInB("certificate needs the normalized form with 0 in B")
    nonzero = mask_elements(b_mask ^ 1)
    if not nonzero:
        raise ValueError("certificate needs |B| >= 2")
    if not diagnostic and not verify(Decomposition(field, a_mask, b_mask)):
        raise NotADecomposition(
            "pair does not decompose the primitive set; pass diagnostic=True to probe")
    p = field.p
    chi2 = chi2_table(field)
    pbits = primitive_set(field).bits
    max_abs = 0
    for b1 in (nonzero if all_b1 else nonzero[:1]):
        for x in range(p):
            if not pbits >> x & 1:
                continue
            h = chi2[(x + b1) % p] + 1
            for bj in nonzero:
                if h == 0:
                    break
                h *= chi2[(x - bj) % p] + 1
            if abs(h) > max_abs:
                max_abs = abs(h)
    return HCertificate(max_abs, max_abs == 0)


class RCertificate(NamedTuple):
    r_values: tuple[int, ...]
    norm_sq: int
    predicted: int
    ok: bool


def r_certificate(field: PrimeField, a_mask: int, b_mask: int) -> RCertificate:
    """Residual r(x) = (A o chi2)(x) + |A| B(x) for an equal-size decomposition.

    r vanishes on B, and the squared 2-norm must equal p*a - a**2 - a**3
    exactly (integer arithmetic throughout), with a the common size.
    """
    a = a_mask.bit_count()
    if a != b_mask.bit_count():
        raise SizesUnequal(f"|A|={a} but |B|={b_mask.bit_count()}")
    if not verify(Decomposition(field, a_mask, b_mask)):
        raise NotADecomposition("pair does not decompose the primitive set")
    p = field.p
    chi2 = chi2_table(field)
    a_elems = mask_elements(a_mask)
    r_values = []
    for x in range(p):
        conv = sum(chi2[(x + y) % p] for y in a_elems)
        r_values.append(conv + (a if b_mask >> x & 1 else 0))
    assert all(r_values[x] == 0 for x in mask_elements(b_mask))
    norm_sq = sum(v * v for v in r_values)
    predicted = p * a - a * a - a**3
    return RCertificate(tuple(r_values), norm_sq, predicted, norm_sq == predicted)


# ------------------------------------------------------------ bound reports

VERDICT_CONDITION_HOLDS = "ConditionHolds"
VERDICT_CONDITION_FAILS = "ConditionFails"
VERDICT_BOUND_VIOLATED = "BoundViolated"
VERDICT_BOUND_SATISFIED = "BoundSatisfied"
VERDICT_REPORT_ONLY = "ReportOnly"  # ratio reports carry no pass/fail claim

THEOREMS = ("A", "B", "C", "shparlinski")


@dataclass(frozen=True)
class BoundReport:
    """Evaluated inequality quantities and the verdict for one report."""

    theorem: str
    p: int
    inputs: dict
    quantities: dict
    verdict: str

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "p": self.p,
                "inputs": dict(self.inputs),
                "quantities": dict(self.quantities),
                "verdict": self.verdict}


def bound_report(theorem: str, field: PrimeField, *, k: int | None = None,
                 epsilon: float | None = None, a: int | None = None) -> BoundReport:
    """Evaluate one of the four numeric reports at a concrete prime.

    A: the threshold phi(p-1) / (W(p-1) sqrt p) against k 2**(k-1);
       ConditionHolds means no decomposition with |B| = k can exist.
    B: the dichotomy discriminant Delta = phi(p-1)**2 - 12p(1 + 2 sqrt p)
       plus the interval endpoints (1/2 - eps) phi(p-1)/sqrt p and 3 sqrt p.
       Delta < 0 makes the dichotomy vacuous; that is reported honestly as
       ConditionFails, with no claim either way about decompositions.
    C: sqrt(phi(p-1)) <= a < sqrt(p) for an equal-size decomposition of
       common size a; BoundViolated would falsify the statement.
    shparlinski: the two scale ratios |A| sqrt(p) / phi(p-1) and
       |A| / sqrt(p); the underlying inequality hides constants, so this is
       numbers-only (ReportOnly).
    """
    p = field.p
    phi = totient(p - 1)
    sqrt_p = math.sqrt(p)
    if theorem == "A":
        if k is None:
            raise MissingInput("report A needs k = |B|")
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
        w = squarefree_divisor_count(p - 1)
        threshold = phi / (w * sqrt_p)
        rhs = float(k * 2 ** (k - 1))
        verdict = VERDICT_CONDITION_HOLDS if threshold > rhs else VERDICT_CONDITION_FAILS
        return BoundReport("A", p, {"k": k},
                           {"phi": phi, "W": w, "threshold": threshold,
                            "rhs": rhs}, verdict)
    if theorem == "B":
        if epsilon is None:
            raise MissingInput("report B needs epsilon")
        if not 0 < epsilon < 0.5:
            raise BadEpsilon(f"epsilon must lie in (0, 1/2), got {epsilon}")
        delta = phi * phi - 12 * p * (1 + 2 * sqrt_p)
        verdict = VERDICT_CONDITION_HOLDS if delta >= 0 else VERDICT_CONDITION_FAILS
        return BoundReport("B", p, {"epsilon": epsilon},
                           {"phi": phi, "delta": delta,
                            "lower": (0.5 - epsilon) * phi / sqrt_p,
                            "upper": 3 * sqrt_p}, verdict)
    if theorem == "C":
        if a is None:
            raise MissingInput("report C needs the common size a")
        lo = math.sqrt(phi)
        verdict = VERDICT_BOUND_SATISFIED if lo <= a < sqrt_p else VERDICT_BOUND_VIOLATED
        return BoundReport("C", p, {"a": a},
                           {"phi": phi, "lower": lo, "upper": sqrt_p}, verdict)
    if theorem == "shparlinski":
        if a is None:
            raise MissingInput("the ratio report needs |A|")
        return BoundReport("shparlinski", p, {"a": a},
                           {"phi": phi, "ratio_lower": a * sqrt_p / phi,
                            "ratio_upper": a / sqrt_p}, VERDICT_REPORT_ONLY)
    raise ValueError(f"unknown report {theorem!r}; expected one of {THEOREMS}")


# ------------------------------------------------------ certificate document

def certificate_document(field: PrimeField, a_elements: Iterable[int],
                         b_elements: Iterable[int]) -> dict:
    """Assemble the JSON-ready certificate for a candidate pair.

    The pair is first translated so min(B) = 0; the certificates need that
    normal form and the verify verdict is translation-invariant.  Keys are
    emitted in a fixed order so canonical serialization is byte-stable:
    p, generator, A, B, normalized, verified, h_certificate, r_certificate,
    bounds.
    """
    decomp = normalize(Decomposition.from_elements(field, a_elements, b_elements))
    verified = verify(decomp)
    h = None
    if decomp.b_size >= 2:
        h = h_certificate(field, decomp.a_mask, decomp.b_mask, diagnostic=True)
    r = None
    if verified and decomp.a_size == decomp.b_size:
        r = r_certificate(field, decomp.a_mask, decomp.b_mask)
    bounds = []
    if decomp.b_size >= 2:
        bounds.append(bound_report("A", field, k=decomp.b_size).to_dict())
    if decomp.a_size == decomp.b_size:
        bounds.append(bound_report("C", field, a=decomp.a_size).to_dict())
    bounds.append(bound_report("shparlinski", field, a=decomp.a_size).to_dict())
    return {
        "p": field.p,
        "generator": field.g,
        "A": decomp.a_elements(),
        "B": decomp.b_elements(),
        "normalized": decomp.normalized,
        "verified": verified,
        "h_certificate": {"all_zero": h.all_zero} if h is not None else None,
        "r_certificate": ({"norm_sq": r.norm_sq, "predicted": r.predicted}
                          if r is not None else None),
        "bounds": bounds,
    }

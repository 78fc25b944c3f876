"""The function algebra on F_p: correlation convolution, higher correlations,
inner products, and executable checkers for the two exact identities plus the
quadruple quadratic-character bound.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import FieldMismatch, KTooLarge, NotDistinct
from .field import PrimeField, chi2_table
from .rng import SplitMix64

MAX_CORRELATION_ORDER = 3
_TENSOR_ELEMENT_LIMIT = 32**3  # materialize full order-3 tensors up to p = 32
IDENTITY_RTOL = 1e-9
BOUND_SLACK = 1e-6


@dataclass(frozen=True, eq=False)
class FpFunction:
    """Dense complex-valued function on F_p; values are read-only once built."""

    field: PrimeField
    values: np.ndarray

    @classmethod
    def from_values(cls, field: PrimeField, values) -> "FpFunction":
        arr = np.array(values, dtype=np.complex128)
        if arr.shape != (field.p,):
            raise ValueError(f"need exactly {field.p} values, got shape {arr.shape}")
        arr.setflags(write=False)
        return cls(field, arr)

    @classmethod
    def indicator(cls, field: PrimeField, elements: Iterable[int]) -> "FpFunction":
        arr = np.zeros(field.p, dtype=np.complex128)
        for e in elements:
            if not 0 <= e < field.p:
                raise ValueError(f"element {e} outside F_{field.p}")
            arr[e] = 1.0
        arr.setflags(write=False)
        return cls(field, arr)

    @classmethod
    def quadratic(cls, field: PrimeField) -> "FpFunction":
        return cls.from_values(field, chi2_table(field))

    @classmethod
    def constant(cls, field: PrimeField, value: complex) -> "FpFunction":
        return cls.from_values(field, np.full(field.p, value))


def _same_field(f: FpFunction, g: FpFunction) -> None:
    if f.field is not g.field:
        raise FieldMismatch("functions live over different fields")


def _check_order(k: int, cap: int = MAX_CORRELATION_ORDER) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > cap:
        raise KTooLarge(f"k={k} beyond the k <= {cap} cap")


@functools.lru_cache(maxsize=8)
def _sum_index(p: int) -> np.ndarray:
    idx = (np.arange(p)[:, None] + np.arange(p)[None, :]) % p
    idx.setflags(write=False)
    return idx


def circ(f: FpFunction, g: FpFunction) -> FpFunction:
    """(f o g)(x) = sum over y of f(y) g(x + y).

    Note the x + y: this is the correlation orientation, not the x - y of
    classical convolution; a dedicated test pins the sign.
    """
    _same_field(f, g)
    table = g.values[_sum_index(f.field.p)]  # table[x, y] = g(x + y)
    return FpFunction.from_values(f.field, table @ f.values)


def correlation(f: FpFunction, k: int, point: Sequence[int]) -> complex:
    """Order-(k+1) correlation of f at one grid point:
    sum over x of f(x) f(x + x1) ... f(x + xk)."""
    _check_order(k)
    if len(point) != k:
        raise ValueError(f"point must have {k} coordinates, got {len(point)}")
    p = f.field.p
    for s in point:
        if not 0 <= s < p:
            raise ValueError(f"coordinate {s} outside F_{p}")
    acc = np.array(f.values)
    for s in point:
        acc *= np.roll(f.values, -s)
    return complex(acc.sum())


def _rolled(values: np.ndarray) -> np.ndarray:
    p = len(values)
    return np.stack([np.roll(values, -s) for s in range(p)])


def correlation_tensor(f: FpFunction, k: int) -> np.ndarray:
    """The full order-(k+1) correlation tensor on the p**k grid."""
    _check_order(k)
    v = f.values
    rolled = _rolled(v)
    if k == 1:
        return rolled @ v
    if k == 2:
        return np.einsum("x,ax,bx->ab", v, rolled, rolled)
    return np.einsum("x,ax,bx,cx->abc", v, rolled, rolled, rolled)


class IdentityCheck(NamedTuple):
    lhs: complex
    rhs: complex
    ok: bool


def check_shkredov_identity(f: FpFunction, g: FpFunction, k: int) -> IdentityCheck:
    """Power sum of f o g against the paired correlation contraction.

    lhs = sum over x of (f o g)(x)**(k+1); rhs = sum over the full k-grid of
    the order-(k+1) correlations of f and g multiplied pointwise.  This is an
    exact identity; both sides are computed independently and compared at
    relative tolerance.  Grids beyond the tensor limit are streamed over the
    leading coordinate instead of materialized.
    """
    _same_field(f, g)
    _check_order(k)
    p = f.field.p
    conv = circ(f, g).values
    lhs = complex((conv ** (k + 1)).sum())
    if k == 1 or p**k <= _TENSOR_ELEMENT_LIMIT:
        rhs = complex((correlation_tensor(f, k) * correlation_tensor(g, k)).sum())
    else:
        rhs = _streamed_grid_sum(f, g, k)
    ok = abs(lhs - rhs) <= IDENTITY_RTOL * (1 + abs(lhs))
    return IdentityCheck(lhs, rhs, ok)


def _streamed_grid_sum(f: FpFunction, g: FpFunction, k: int) -> complex:
    # Fix the leading grid coordinate and contract the rest: O(p**2) memory.
    vf, vg = f.values, g.values
    p = f.field.p
    rf, rg = _rolled(vf), _rolled(vg)
    total = 0j
    if k == 2:
        for a in range(p):
            total += ((rf @ (vf * rf[a])) * (rg @ (vg * rg[a]))).sum()
        return complex(total)
    for a in range(p):
        cf = np.einsum("x,bx,cx->bc", vf * rf[a], rf, rf)
        cg = np.einsum("x,bx,cx->bc", vg * rg[a], rg, rg)
        total += (cf * cg).sum()
    return complex(total)


def inner(f: FpFunction, g: FpFunction) -> complex:
    """Sesquilinear inner product sum over x of f(x) * conj(g(x))."""
    _same_field(f, g)
    return complex(np.vdot(g.values, f.values))


def norm2(f: FpFunction) -> float:
    """The 2-norm sqrt(<f, f>)."""
    return math.sqrt(inner(f, f).real)


@functools.lru_cache(maxsize=None)
def _chi2_function(field: PrimeField) -> FpFunction:
    return FpFunction.quadratic(field)


def check_inner_identity(f: FpFunction, g: FpFunction) -> IdentityCheck:
    """<f o chi2, g o chi2> against p<f,g> - <f,1><conj(g),1> (exact identity)."""
    _same_field(f, g)
    chi2 = _chi2_function(f.field)
    lhs = inner(circ(f, chi2), circ(g, chi2))
    p = f.field.p
    rhs = p * inner(f, g) - complex(f.values.sum()) * complex(np.conj(g.values).sum())
    ok = abs(lhs - rhs) <= IDENTITY_RTOL * (1 + abs(lhs))
    return IdentityCheck(lhs, rhs, ok)


class QuadrupleBound(NamedTuple):
    sum: int
    bound: float
    ok: bool


def check_quadruple_bound(field: PrimeField, a1: int, a2: int, a3: int,
                          a4: int) -> QuadrupleBound:
    """|sum over x of chi2(x+a1) chi2(x+a2) chi2(x+a3) chi2(x+a4)| against
    1 + 2 sqrt(p), for pairwise distinct shifts (exact integer sum)."""
    shifts = (a1, a2, a3, a4)
    p = field.p
    for s in shifts:
        if not 0 <= s < p:
            raise ValueError(f"shift {s} outside F_{p}")
    if len(set(shifts)) != 4:
        raise NotDistinct(f"shifts must be pairwise distinct, got {shifts}")
    chi2 = chi2_table(field)
    total = sum(chi2[(x + a1) % p] * chi2[(x + a2) % p]
                * chi2[(x + a3) % p] * chi2[(x + a4) % p] for x in range(p))
    bound = 1 + 2 * math.sqrt(p)
    return QuadrupleBound(total, bound, abs(total) <= bound + BOUND_SLACK)


class QuadrupleSweep(NamedTuple):
    quadruples: int
    violations: int
    max_abs: int
    bound: float


def quadruple_bound_sweep(field: PrimeField) -> QuadrupleSweep:
    """check_quadruple_bound over every 4-subset of F_p at once.

    All sums are entries of one Gram matrix of pairwise chi2-shift products;
    a 4-subset appears as a disjoint pair of index pairs (three pairings, two
    orders, all with the same sum), so the max over disjoint entries covers
    every quadruple.  Memory grows as C(p, 2)**2: fine at the p <= 61 scale
    this is meant for.
    """
    p = field.p
    bound = 1 + 2 * math.sqrt(p)
    if p < 4:
        return QuadrupleSweep(0, 0, 0, bound)
    chi = np.array(chi2_table(field), dtype=np.float64)
    rolled = np.stack([np.roll(chi, -a) for a in range(p)])
    pairs = list(itertools.combinations(range(p), 2))
    prod = np.stack([rolled[a] * rolled[b] for a, b in pairs])
    gram = prod @ prod.T
    ia = np.array([a for a, _ in pairs])
    ib = np.array([b for _, b in pairs])
    disjoint = ((ia[:, None] != ia[None, :]) & (ia[:, None] != ib[None, :])
                & (ib[:, None] != ia[None, :]) & (ib[:, None] != ib[None, :]))
    vals = np.abs(gram[disjoint])
    bad = int(np.count_nonzero(vals > bound + BOUND_SLACK)) // 6
    return QuadrupleSweep(math.comb(p, 4), bad, int(vals.max()), bound)


def random_integer_function(field: PrimeField, rng: SplitMix64,
                            bound: int = 3) -> FpFunction:
    """Integer-valued test function with entries uniform in [-bound, bound]."""
    return FpFunction.from_values(
        field, [rng.randint(-bound, bound) for _ in range(field.p)])


def random_complex_function(field: PrimeField, rng: SplitMix64) -> FpFunction:
    """Complex test function with real and imaginary parts uniform in [-1, 1].

    Real part is drawn before imaginary part, element by element, so a seed
    reproduces the same function everywhere.
    """
    return FpFunction.from_values(
        field,
        [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(field.p)])

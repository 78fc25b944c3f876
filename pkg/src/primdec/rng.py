"""Deterministic 64-bit generator for reproducible randomized checks.

SplitMix64 with the standard constants:

    state <- (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output = z ^ (z >> 31)

Integers below a bound come from ``next_u64() % bound``; floats use the top
53 bits.  Every randomized subcommand and test draws from this sequence only,
so (seed, draw order) pins an entire run, independent of the host platform.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Tiny deterministic PRNG; not cryptographic, just reproducible."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        """Uniform-ish integer in [0, n); the modulo bias is irrelevant here."""
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi], both ends inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.randbelow(hi - lo + 1)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * 2.0**-53)

    def choice(self, seq):
        return seq[self.randbelow(len(seq))]

    def distinct(self, k: int, n: int) -> list[int]:
        """k distinct integers in [0, n), in draw order."""
        if k > n:
            raise ValueError(f"cannot draw {k} distinct values from [0, {n})")
        out: list[int] = []
        seen = set()
        while len(out) < k:
            v = self.randbelow(n)
            if v not in seen:
                seen.add(v)
                out.append(v)
        return out

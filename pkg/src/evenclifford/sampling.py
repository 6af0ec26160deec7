"""Deterministic random rationals for the verification sweeps.

A SplitMix64 stream keyed by a 64-bit seed; the same seed always yields the
same elements on every platform, which keeps CLI reports byte-identical.
"""

from __future__ import annotations

from fractions import Fraction

MASK64 = (1 << 64) - 1

NUMERATORS = range(-9, 10)
DENOMINATORS = (1, 2, 3)


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection, free of modulo bias."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def rational(self) -> Fraction:
        num = NUMERATORS[self.below(len(NUMERATORS))]
        return Fraction(num, self.choice(DENOMINATORS))

    def rationals(self, k: int) -> list[Fraction]:
        return [self.rational() for _ in range(k)]

    def floats(self, k: int, scale: float = 3.0) -> list[float]:
        return [scale * (2.0 * self.uniform() - 1.0) for _ in range(k)]


def random_element(cls, rng: SplitMix64, lam: int = 1, mode: str = "exact"):
    """Random element of a lambda-unit algebra class (OctonionLike, SedenionLike, ...)."""
    if mode == "exact":
        return cls(rng.rationals(cls.DIM), lam)
    if mode == "float":
        return cls(rng.floats(cls.DIM), lam)
    raise ValueError(f"unknown mode {mode!r}")

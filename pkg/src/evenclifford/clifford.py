"""Blade-level engine for the Euclidean Clifford algebra Cl(n, 0).

Blades are stored as generator bitmasks (bit ``i`` set means ``e_i`` is a
factor), always in ascending generator order.  Every generator squares to
+1 and distinct generators anticommute, so the product of two blades is a
single blade times a sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class DimensionMismatch(ValueError):
    """Raised when operands live in Clifford algebras of different size."""


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class Blade:
    mask: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("generator count must be non-negative")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#b} out of range for n={self.n}")

    @property
    def grade(self) -> int:
        return popcount(self.mask)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.mask >> i & 1)

    def __str__(self) -> str:
        return blade_name(self.mask)


@dataclass(frozen=True)
class SignedBlade:
    mask: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def blade_name(mask: int) -> str:
    """Render a mask as ``e_{0}e_{2}...``; the empty mask renders as ``1``."""
    if not mask:
        return "1"
    out = []
    i = 0
    while mask >> i:
        if mask >> i & 1:
            out.append(f"e_{{{i}}}")
        i += 1
    return "".join(out)


def reorder_sign(a: int, b: int) -> int:
    """Sign picked up when the concatenation of blades ``a`` and ``b`` is sorted.

    For every generator ``j`` of ``b`` we count the generators of ``a`` with a
    larger index; each one must be swapped past ``e_j``.
    """
    swaps = 0
    j = 0
    while b >> j:
        if b >> j & 1:
            swaps += popcount(a >> (j + 1))
        j += 1
    return -1 if swaps & 1 else 1


def blade_product(a: Blade, b: Blade) -> SignedBlade:
    if a.n != b.n:
        raise DimensionMismatch(f"Cl({a.n},0) blade times Cl({b.n},0) blade")
    return SignedBlade(a.mask ^ b.mask, reorder_sign(a.mask, b.mask))


def word_to_blade(word: Iterable[int], n: int) -> SignedBlade:
    """Normalize an arbitrary generator word, e.g. ``(3, 1)`` for e_3e_1.

    Repeated generators cancel to +1.
    """
    mask, sign = 0, 1
    for g in word:
        if not 0 <= g < n:
            raise ValueError(f"generator {g} out of range for n={n}")
        sign *= reorder_sign(mask, 1 << g)
        mask ^= 1 << g
    return SignedBlade(mask, sign)


class Multivector:
    """Sparse element of Cl(n, 0): a map from blade mask to coefficient.

    Coefficients may be ``Fraction`` (exact mode) or ``float``.  Zero
    coefficients are never stored, so two equal multivectors have equal
    ``terms`` dictionaries.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[int, object] | None = None):
        self.n = n
        clean = {}
        for mask, c in (terms or {}).items():
            if not 0 <= mask < (1 << n):
                raise ValueError(f"mask {mask:#b} out of range for n={n}")
            if c != 0:
                clean[mask] = c
        self._terms = clean

    @classmethod
    def scalar(cls, value, n: int) -> "Multivector":
        return cls(n, {0: value})

    @classmethod
    def blade(cls, mask: int, n: int, coeff=1) -> "Multivector":
        return cls(n, {mask: coeff})

    @classmethod
    def from_word(cls, word: Iterable[int], n: int, coeff=1) -> "Multivector":
        sb = word_to_blade(word, n)
        return cls(n, {sb.mask: sb.sign * coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __getitem__(self, mask: int):
        return self._terms.get(mask, 0)

    def __iter__(self):
        return iter(sorted(self._terms.items(), key=lambda kv: (popcount(kv[0]), kv[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "Multivector"):
        if self.n != other.n:
            raise DimensionMismatch(f"Cl({self.n},0) vs Cl({other.n},0)")

    def __eq__(self, other) -> bool:
        if isinstance(other, Multivector):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, float, Fraction)):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector(self.n, out)

    def __neg__(self) -> "Multivector":
        return Multivector(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return Multivector(self.n, {m: c * other for m, c in self._terms.items()})

    def __rmul__(self, other):
        return Multivector(self.n, {m: other * c for m, c in self._terms.items()})

    def __repr__(self) -> str:
        return f"Multivector({self.n}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self:
            parts.append(str(c) if m == 0 else f"{c}*{blade_name(m)}")
        return " + ".join(parts)


def geometric_product(A: Multivector, B: Multivector) -> Multivector:
    A._check(B)
    out: dict[int, object] = {}
    for a, x in A._terms.items():
        for b, y in B._terms.items():
            m = a ^ b
            out[m] = out.get(m, 0) + reorder_sign(a, b) * x * y
    return Multivector(A.n, out)


def reverse_sign(grade: int) -> int:
    return -1 if (grade * (grade - 1) // 2) & 1 else 1


def reverse(A: Multivector) -> Multivector:
    return Multivector(A.n, {m: reverse_sign(popcount(m)) * c for m, c in A._terms.items()})


def dot(a: Blade, b: Blade) -> Multivector:
    """Symmetric half of the blade product, (ab + ba) / 2."""
    A, B = Multivector.blade(a.mask, a.n), Multivector.blade(b.mask, b.n)
    if a.n != b.n:
        raise DimensionMismatch(f"Cl({a.n},0) vs Cl({b.n},0)")
    return (A * B + B * A) * Fraction(1, 2)


def wedge(a: Blade, b: Blade) -> Multivector:
    """Antisymmetric half of the blade product, (ab - ba) / 2."""
    A, B = Multivector.blade(a.mask, a.n), Multivector.blade(b.mask, b.n)
    if a.n != b.n:
        raise DimensionMismatch(f"Cl({a.n},0) vs Cl({b.n},0)")
    return (A * B - B * A) * Fraction(1, 2)


def grade_projection(A: Multivector, k: int) -> Multivector:
    if not 0 <= k <= A.n:
        raise ValueError(f"grade {k} outside 0..{A.n}")
    return Multivector(A.n, {m: c for m, c in A._terms.items() if popcount(m) == k})


def even_basis(n: int) -> list[Blade]:
    if n < 1:
        raise ValueError("need at least one generator")
    masks = [m for m in range(1 << n) if popcount(m) % 2 == 0]
    masks.sort(key=lambda m: (popcount(m), m))
    return [Blade(m, n) for m in masks]

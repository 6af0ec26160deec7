"""Shared machinery for algebras spanned by lambda-scaled even blades.

A basis unit is ``sign * lambda**power * B`` with ``B`` a canonical blade
of Cl(n, 0).  Products of units are computed with the blade engine and
re-expressed in the same unit basis, which yields a structure table whose
entries ``(k, sigma, p)`` mean ``b_i b_j = sigma * lambda**p * b_k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Number
from typing import ClassVar, Sequence

from .clifford import Multivector, popcount, reorder_sign, reverse_sign, word_to_blade
from .errors import OrientationMismatch


@dataclass(frozen=True)
class LambdaUnit:
    mask: int
    sign: int
    power: int

    @property
    def grade(self) -> int:
        return popcount(self.mask)


@dataclass(frozen=True)
class Entry:
    k: int
    sigma: int
    p: int

    def sign(self, lam: int) -> int:
        return self.sigma * lam if self.p else self.sigma


@dataclass(frozen=True)
class StructureTable:
    lam: int
    names: tuple[str, ...]
    entries: tuple[tuple[Entry, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Entry:
        i, j = ij
        return self.entries[i][j]

    def product(self, i: int, j: int) -> tuple[int, int]:
        """Return ``(k, s)`` with ``b_i b_j = s * b_k`` at this table's lambda."""
        e = self.entries[i][j]
        return e.k, e.sign(self.lam)

    def entry_name(self, i: int, j: int) -> str:
        k, s = self.product(i, j)
        return ("-" if s < 0 else "") + self.names[k]

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "basis": list(self.names),
            "entries": [
                [{"k": e.k, "sigma": e.sigma, "p": e.p} for e in row] for row in self.entries
            ],
        }


def check_lambda(lam) -> int:
    if lam not in (1, -1):
        raise ValueError(f"orientation must be +1 or -1, got {lam!r}")
    return int(lam)


def units_from_words(words: Sequence[Sequence[int]], n: int) -> tuple[LambdaUnit, ...]:
    """Normalize generator words; every non-empty word carries one lambda."""
    out = []
    for w in words:
        sb = word_to_blade(w, n)
        out.append(LambdaUnit(sb.mask, sb.sign, 1 if sb.mask else 0))
    return tuple(out)


def derive_table(units: Sequence[LambdaUnit], names: Sequence[str], lam: int) -> StructureTable:
    lam = check_lambda(lam)
    index = {u.mask: k for k, u in enumerate(units)}
    rows = []
    for a in units:
        row = []
        for b in units:
            mask = a.mask ^ b.mask
            if mask not in index:
                raise ValueError(f"basis not closed: product lands on blade {mask:#b}")
            k = index[mask]
            c = units[k]
            sigma = a.sign * b.sign * c.sign * reorder_sign(a.mask, b.mask)
            row.append(Entry(k, sigma, (a.power + b.power + c.power) % 2))
        rows.append(tuple(row))
    return StructureTable(lam, tuple(names), tuple(rows))


def _parse_coeff(v):
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(v, float):
        return v
    return Fraction(v)


def _dump_coeff(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    return v


class LambdaElement:
    """Element of a lambda-unit algebra; subclasses fill in the basis."""

    DIM: ClassVar[int]
    N: ClassVar[int]
    WORDS: ClassVar[tuple[tuple[int, ...], ...]]
    NAMES: ClassVar[tuple[str, ...]]
    ALGEBRA: ClassVar[str]

    __slots__ = ("coeffs", "lam")

    def __init__(self, coeffs: Sequence, lam: int = 1):
        coeffs = tuple(coeffs)
        if len(coeffs) != self.DIM:
            raise ValueError(f"{type(self).__name__} needs {self.DIM} coefficients, got {len(coeffs)}")
        self.coeffs = coeffs
        self.lam = check_lambda(lam)

    # -- basis and tables --------------------------------------------------

    @classmethod
    def units(cls) -> tuple[LambdaUnit, ...]:
        return _units(cls)

    @classmethod
    def table(cls, lam: int = 1) -> StructureTable:
        return _table(cls, check_lambda(lam))

    @classmethod
    def basis(cls, i: int, lam: int = 1, coeff=1):
        c = [0] * cls.DIM
        c[i] = coeff
        return cls(c, lam)

    @classmethod
    def zero(cls, lam: int = 1):
        return cls([0] * cls.DIM, lam)

    @classmethod
    def one(cls, lam: int = 1):
        return cls.basis(0, lam)

    @classmethod
    def imaginary_indices(cls) -> tuple[int, ...]:
        """Units whose square is -1 (the reverse negates exactly these)."""
        return tuple(i for i, u in enumerate(cls.units()) if reverse_sign(u.grade) < 0)

    # -- arithmetic --------------------------------------------------------

    def _same(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.lam != self.lam:
            raise OrientationMismatch(f"lambda {self.lam} vs {other.lam}")

    def __add__(self, other):
        self._same(other)
        return type(self)([a + b for a, b in zip(self.coeffs, other.coeffs)], self.lam)

    def __sub__(self, other):
        self._same(other)
        return type(self)([a - b for a, b in zip(self.coeffs, other.coeffs)], self.lam)

    def __neg__(self):
        return type(self)([-a for a in self.coeffs], self.lam)

    def __mul__(self, other):
        if isinstance(other, LambdaElement):
            return self.multiply(other)
        if isinstance(other, Number):
            return type(self)([a * other for a in self.coeffs], self.lam)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return type(self)([other * a for a in self.coeffs], self.lam)
        return NotImplemented

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.lam == other.lam and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((type(self).__name__, self.lam, self.coeffs))

    def __bool__(self):
        return any(c != 0 for c in self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def __repr__(self):
        cs = ", ".join(str(c) for c in self.coeffs)
        return f"{type(self).__name__}([{cs}], lam={self.lam})"

    def __str__(self):
        parts = []
        for c, name in zip(self.coeffs, self.NAMES):
            if c != 0:
                parts.append(str(c) if name == "1" else f"{c}*{name}")
        return " + ".join(parts) or "0"

    def multiply(self, other):
        self._same(other)
        t = self.table(self.lam)
        out = [0] * self.DIM
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            row = t.entries[i]
            for j, y in enumerate(other.coeffs):
                if y == 0:
                    continue
                e = row[j]
                out[e.k] += e.sign(self.lam) * x * y
        return type(self)(out, self.lam)

    def dagger(self):
        """Reverse: negate the coefficients of the imaginary (grade 2 mod 4) units."""
        flip = set(self.imaginary_indices())
        return type(self)([-c if i in flip else c for i, c in enumerate(self.coeffs)], self.lam)

    def scalar_part(self):
        return self.coeffs[0]

    def left_matrix(self) -> list[list]:
        """Matrix ``L`` with ``coeffs(self * Y) = L @ coeffs(Y)``."""
        t = self.table(self.lam)
        m = [[0] * self.DIM for _ in range(self.DIM)]
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j in range(self.DIM):
                k, s = t.product(i, j)
                m[k][j] += s * x
        return m

    def right_matrix(self) -> list[list]:
        """Matrix ``R`` with ``coeffs(X * self) = R @ coeffs(X)``."""
        t = self.table(self.lam)
        m = [[0] * self.DIM for _ in range(self.DIM)]
        for j, y in enumerate(self.coeffs):
            if y == 0:
                continue
            for i in range(self.DIM):
                k, s = t.product(i, j)
                m[k][i] += s * y
        return m

    # -- Clifford embedding ------------------------------------------------

    def to_multivector(self) -> Multivector:
        terms = {}
        for c, u in zip(self.coeffs, self.units()):
            if c != 0:
                s = u.sign * (self.lam if u.power else 1)
                terms[u.mask] = s * c
        return Multivector(self.N, terms)

    @classmethod
    def from_multivector(cls, mv: Multivector, lam: int = 1):
        lam = check_lambda(lam)
        if mv.n != cls.N:
            raise ValueError(f"expected a Cl({cls.N},0) multivector, got Cl({mv.n},0)")
        units = cls.units()
        index = {u.mask: k for k, u in enumerate(units)}
        out = [0] * cls.DIM
        for mask, c in mv.terms.items():
            if mask not in index:
                raise ValueError(f"blade {mask:#b} is outside the {cls.ALGEBRA} span")
            u = units[index[mask]]
            out[index[mask]] = u.sign * (lam if u.power else 1) * c
        return cls(out, lam)

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        return {"algebra": self.ALGEBRA, "lambda": self.lam, "coeffs": [_dump_coeff(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("algebra", cls.ALGEBRA) != cls.ALGEBRA:
            raise ValueError(f"expected algebra {cls.ALGEBRA!r}, got {data.get('algebra')!r}")
        return cls([_parse_coeff(v) for v in data["coeffs"]], data.get("lambda", 1))


@lru_cache(maxsize=None)
def _units(cls) -> tuple[LambdaUnit, ...]:
    return units_from_words(cls.WORDS, cls.N)


@lru_cache(maxsize=None)
def _table(cls, lam: int) -> StructureTable:
    return derive_table(_units(cls), cls.NAMES, lam)


def parse_table(rows: Sequence[str], names: Sequence[str]) -> list[list[tuple[int, int]]]:
    """Parse whitespace-separated table rows like ``"u_1 -1 u_3 -u_2"``.

    Each cell becomes ``(k, s)``; cell ``1`` / ``-1`` is the identity unit.
    """
    lookup = {name: k for k, name in enumerate(names)}
    lookup.setdefault("1", 0)
    out = []
    for row in rows:
        cells = []
        for cell in row.split():
            s = -1 if cell.startswith("-") else 1
            cells.append((lookup[cell.lstrip("-+")], s))
        out.append(cells)
    return out

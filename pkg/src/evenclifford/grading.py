"""Even-subgroup gradings and the associator 3-cocycle.

Degrees are written with the highest generator on the left: bit vector
(b_{n-1}, ..., b_0) for a blade with generator mask b.  For the
octonion-like algebra that is the order (e_inf, e_z, e_y, e_x).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping

from .algebra import LambdaElement, StructureTable
from .errors import ZeroDenominator


@dataclass(frozen=True, order=True)
class GradeVector:
    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"not a bit vector: {self.bits}")

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "GradeVector":
        return cls(tuple((mask >> (n - 1 - i)) & 1 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def parity(self) -> int:
        return sum(self.bits) % 2

    def __add__(self, other: "GradeVector") -> "GradeVector":
        if other.n != self.n:
            raise ValueError("grade vectors of different length")
        return GradeVector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __str__(self):
        return "(" + ",".join(map(str, self.bits)) + ")"


@dataclass(frozen=True)
class GradingAssignment:
    n: int
    degrees: tuple[GradeVector, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        if self.degrees and any(self.degrees[0].bits):
            raise ValueError("the identity must have degree zero")
        for d in self.degrees:
            if d.n != self.n or d.parity:
                raise ValueError(f"degree {d} is not in the even subgroup of Z2^{self.n}")

    def is_bijection(self) -> bool:
        return sorted(self.degrees) == even_subgroup(self.n)

    def to_json(self) -> dict:
        return {name: list(d.bits) for name, d in zip(self.names, self.degrees)}

    def swapped(self, i: int, j: int) -> "GradingAssignment":
        """Copy with two degrees exchanged (used for fault injection)."""
        d = list(self.degrees)
        d[i], d[j] = d[j], d[i]
        return replace(self, degrees=tuple(d))


def even_subgroup(n: int) -> list[GradeVector]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return sorted(GradeVector(bits) for bits in itertools.product((0, 1), repeat=n) if sum(bits) % 2 == 0)


# Printed assignments, basis order as in the respective algebra modules.
PRINTED_DEGREES = {
    "octonion-like": (
        (0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0),
        (1, 0, 0, 1), (1, 0, 1, 0), (1, 1, 0, 0), (1, 1, 1, 1),
    ),
    "sedenion-like": (
        (0, 0, 0, 0, 0),
        (0, 0, 0, 1, 1), (0, 0, 1, 0, 1), (0, 1, 0, 0, 1),
        (0, 0, 1, 1, 0), (0, 1, 0, 1, 0), (0, 1, 1, 0, 0),
        (0, 1, 1, 1, 1),
        (1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (1, 0, 1, 0, 0), (1, 1, 0, 0, 0),
        (1, 0, 1, 1, 1), (1, 1, 0, 1, 1), (1, 1, 1, 0, 1),
        (1, 1, 1, 1, 0),
    ),
}


def _algebra(name_or_cls) -> type[LambdaElement]:
    if isinstance(name_or_cls, type):
        return name_or_cls
    from .octonion import OctonionLike
    from .sedenion import SedenionLike

    lookup = {c.ALGEBRA: c for c in (OctonionLike, SedenionLike)}
    try:
        return lookup[name_or_cls]
    except KeyError:
        raise ValueError(f"unknown algebra {name_or_cls!r}") from None


def printed_grading(algebra) -> GradingAssignment:
    cls = _algebra(algebra)
    rows = PRINTED_DEGREES[cls.ALGEBRA]
    return GradingAssignment(cls.N, tuple(GradeVector(r) for r in rows), cls.NAMES)


def constructed_grading(algebra) -> GradingAssignment:
    """Generator-indicator degrees, highest generator leftmost."""
    cls = _algebra(algebra)
    return GradingAssignment(
        cls.N, tuple(GradeVector.from_mask(u.mask, cls.N) for u in cls.units()), cls.NAMES
    )


def grading_diff(algebra) -> list[dict]:
    """Basis units whose printed degree differs from the constructed one."""
    p, c = printed_grading(algebra), constructed_grading(algebra)
    return [
        {"basis": name, "printed": list(a.bits), "constructed": list(b.bits)}
        for name, a, b in zip(p.names, p.degrees, c.degrees)
        if a != b
    ]


def additivity_violations(assignment: GradingAssignment, table: StructureTable) -> list[tuple[int, int]]:
    d = assignment.degrees
    out = []
    for i in range(table.dim):
        for j in range(table.dim):
            if d[i] + d[j] != d[table[i, j].k]:
                out.append((i, j))
    return out


def verify_degree_additivity(assignment: GradingAssignment, table: StructureTable) -> bool:
    if len(assignment.degrees) != table.dim:
        raise ValueError("assignment and table refer to different algebras")
    return not additivity_violations(assignment, table)


def associator_cocycle(table: StructureTable) -> dict[tuple[int, int, int], Fraction]:
    """phi(i, j, k) with (b_i b_j) b_k = phi * b_i (b_j b_k)."""
    dim = table.dim
    prod = [[table.product(i, j) for j in range(dim)] for i in range(dim)]
    phi = {}
    for i, j, k in itertools.product(range(dim), repeat=3):
        ij, s1 = prod[i][j]
        left, s2 = prod[ij][k]
        jk, s3 = prod[j][k]
        right, s4 = prod[i][jk]
        if left != right:
            raise ZeroDenominator(f"products of ({i},{j},{k}) land on different units")
        phi[(i, j, k)] = Fraction(s1 * s2, s3 * s4)
    return phi


def pushforward(phi: Mapping[tuple[int, int, int], Fraction], assignment: GradingAssignment):
    """Move phi onto degree triples; returns (map, clashes).

    ``clashes`` lists index triples whose value differs from an earlier
    triple with the same degrees, i.e. evidence that phi is not well defined
    on the group.
    """
    d = assignment.degrees
    out: dict = {}
    clashes = []
    for (i, j, k), v in sorted(phi.items()):
        key = (d[i], d[j], d[k])
        if key in out and out[key] != v:
            clashes.append((i, j, k))
        out.setdefault(key, v)
    return out, clashes


def cocycle_violations(phi: Mapping, group: list) -> list[tuple]:
    """Tuples breaking the 3-cocycle identity or the normalization phi(a, e, b) = 1."""
    e = group[0]
    if any(e.bits):
        raise ValueError("the group list must start with the identity")
    bad = []
    for a, b in itertools.product(group, repeat=2):
        if phi[(a, e, b)] != 1:
            bad.append(("normalization", a, b))
    for a, b, c, d in itertools.product(group, repeat=4):
        lhs = phi[(a + b, c, d)] * phi[(a, b, c + d)]
        rhs = phi[(a, b, c)] * phi[(a, b + c, d)] * phi[(b, c, d)]
        if lhs != rhs:
            bad.append(("cocycle", a, b, c, d))
    return bad


def check_cocycle_conditions(phi: Mapping, group: list) -> bool:
    return not cocycle_violations(phi, group)


def constant_cocycle(group: list, value=1) -> dict:
    return {t: Fraction(value) for t in itertools.product(group, repeat=3)}


def cocycle_report(algebra, lam: int = 1) -> list:
    """Flat list of violations for the pushed-forward associator; empty on success."""
    cls = _algebra(algebra)
    assignment = printed_grading(cls)
    phi = associator_cocycle(cls.table(lam))
    out = [("not-one",) + t for t, v in sorted(phi.items()) if v != 1]
    on_group, clashes = pushforward(phi, assignment)
    out += [("ill-defined",) + t for t in clashes]
    out += cocycle_violations(on_group, even_subgroup(cls.N))
    return out

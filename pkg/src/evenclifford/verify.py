"""Verification suites behind ``evenclifford verify``.

Each suite returns a :class:`VerifyReport`.  Failures hold the inputs and
both sides of the identity that broke.  Table diffs against the printed
tables are informational unless ``strict`` is set.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import grading, hopf, octonion, sedenion
from .algebra import LambdaElement, _dump_coeff
from .linalg import SingularMatrix, solve
from .octonion import OctonionLike
from .sampling import SplitMix64, random_element
from .sedenion import SedenionLike

SUITES = ("assoc", "table-diff", "matrix", "norm", "closure", "commutant", "hopf", "grading", "cocycle")

RANDOM_CASES = 200
ORTHOGONAL_PAIRS = 500
FLOAT_RTOL = 1e-9


@dataclass
class VerifyReport:
    suite: str
    algebra: str
    lam: int
    cases: int = 0
    failures: list = field(default_factory=list)
    table_diff: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, case, lhs, rhs) -> None:
        self.failures.append({"case": _jsonable(case), "lhs": _jsonable(lhs), "rhs": _jsonable(rhs)})

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "algebra": self.algebra,
            "lambda": self.lam,
            "cases": self.cases,
            "failures": self.failures,
            "table_diff": self.table_diff,
            "notes": self.notes,
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out


def _jsonable(v):
    if isinstance(v, LambdaElement):
        return [_dump_coeff(c) for c in v.coeffs]
    if isinstance(v, grading.GradeVector):
        return list(v.bits)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, Fraction):
        return _dump_coeff(v)
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


def _close(a, b) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return abs(a - b) <= FLOAT_RTOL * max(1.0, abs(a), abs(b))
    return a == b


def _same(x: LambdaElement, y: LambdaElement) -> bool:
    return x.lam == y.lam and all(_close(a, b) for a, b in zip(x.coeffs, y.coeffs))


# -- suites -------------------------------------------------------------------

def suite_assoc(cls, lam, rng, mode, strict, rep):
    t = cls.table(lam)
    for i, j, k in itertools.product(range(cls.DIM), repeat=3):
        rep.cases += 1
        a, s1 = t.product(i, j)
        left, s2 = t.product(a, k)
        b, s3 = t.product(j, k)
        right, s4 = t.product(i, b)
        if (left, s1 * s2) != (right, s3 * s4):
            rep.fail([i, j, k], [left, s1 * s2], [right, s3 * s4])
    # The table product must agree with the Clifford product of embeddings.
    for _ in range(RANDOM_CASES):
        x, y = random_element(cls, rng, lam), random_element(cls, rng, lam)
        rep.cases += 1
        lhs = (x * y).to_multivector()
        rhs = x.to_multivector() * y.to_multivector()
        if lhs != rhs:
            rep.fail(["embedding", x, y], str(lhs), str(rhs))


def suite_table_diff(cls, lam, rng, mode, strict, rep):
    module = octonion if cls is OctonionLike else sedenion
    rep.table_diff = module.table_diff(1)
    t = cls.table(lam)
    for j in range(cls.DIM):
        rep.cases += 1
        if t.product(0, j) != (j, 1) or t.product(j, 0) != (j, 1):
            rep.fail(["identity", j], t.entry_name(0, j), t.entry_name(j, 0))
    squares = [t.product(i, i) for i in range(cls.DIM)]
    real = sum(1 for k, s in squares if k == 0 and s == 1)
    imag = sum(1 for k, s in squares if k == 0 and s == -1)
    expected = (2, 6) if cls is OctonionLike else (6, 10)
    rep.cases += 1
    if (real, imag) != expected:
        rep.fail("unit classification", [real, imag], list(expected))
    if rep.table_diff:
        rep.notes.append(f"{len(rep.table_diff)} entries differ from the printed table")
        if strict:
            for d in rep.table_diff:
                rep.fail(["printed table", d["row"], d["col"]], d["derived_entry"], d["printed_entry"])


def suite_matrix(cls, lam, rng, mode, strict, rep):
    for _ in range(RANDOM_CASES):
        x, y = random_element(cls, rng, lam, mode), random_element(cls, rng, lam, mode)
        rep.cases += 1
        xy = (x * y).coeffs
        via_left = [sum(a * b for a, b in zip(row, y.coeffs)) for row in x.left_matrix()]
        via_right = [sum(a * b for a, b in zip(row, x.coeffs)) for row in y.right_matrix()]
        if not (all(map(_close, xy, via_left)) and all(map(_close, xy, via_right))):
            rep.fail([x, y], list(xy), [via_left, via_right])
    if cls is OctonionLike and lam == 1:
        for label, printed, of in (
            ("left", octonion.PRINTED_LEFT_MATRIX, lambda i: OctonionLike.basis(i).left_matrix()),
            ("right", octonion.PRINTED_RIGHT_MATRIX, lambda i: OctonionLike.basis(i).right_matrix()),
        ):
            rep.cases += 1
            want = octonion.parse_symbolic_matrix(printed)
            got = octonion.symbolic_pattern(of)
            if got != want:
                rep.fail(f"printed {label} matrix", got, want)


def suite_norm(cls, lam, rng, mode, strict, rep):
    if cls is OctonionLike:
        _norm_octonion(lam, rng, mode, rep)
    else:
        _norm_sedenion(lam, rng, rep)


def _norm_octonion(lam, rng, mode, rep):
    # 1 -/+ e_x e_y e_z e_inf; at lam=+1 these are 1 - u_7 and 1 + u_7.
    one, u7 = OctonionLike.one(lam), OctonionLike.basis(7, lam, coeff=lam)
    for which, x in ((1, one - u7), (2, one + u7)):
        rep.cases += 1
        v = octonion.covariant_seminorm_sq(x, which)
        if not (x and v == 0):
            rep.fail(["degenerate", which, x], v, 0)
    for _ in range(RANDOM_CASES):
        x = random_element(OctonionLike, rng, lam)
        rep.cases += 1
        n1, n2 = (octonion.covariant_seminorm_sq(x, w) for w in (1, 2))
        # Invertibility is decided by the linear system, independently of the seminorms.
        try:
            y = OctonionLike(solve(x.left_matrix(), [1] + [0] * 7), lam)
            invertible = True
        except SingularMatrix:
            invertible = False
        if invertible != (n1 != 0 and n2 != 0):
            rep.fail(["inverse exists", x], invertible, [n1, n2])
        elif invertible and (x * y != OctonionLike.one(lam) or y * x != OctonionLike.one(lam)):
            rep.fail(["inverse", x], x * y, OctonionLike.one(lam))
        a, b = (octonion.covariant_seminorm_sq(x * x, w) for w in (1, 2))
        if (a, b) != (n1 * n1, n2 * n2):
            rep.fail(["seminorm multiplicative", x], [a, b], [n1 * n1, n2 * n2])
        # Float-side checks: determinant and eigenvalues.
        xf = OctonionLike([float(c) for c in x.coeffs], lam)
        det = abs(np.linalg.det(np.array(xf.left_matrix(), dtype=float)))
        want = float(n1 * n2) ** 2
        if abs(det - want) > FLOAT_RTOL * max(1.0, want):
            rep.fail(["determinant", x], det, want)
        if not octonion.eigen_check(xf, FLOAT_RTOL):
            rep.fail(["eigenvalues", x], octonion.closed_form_eigenvalues(xf),
                     sorted(octonion.numeric_eigenvalues(xf).tolist(), key=lambda z: (z.real, z.imag)))


def _norm_sedenion(lam, rng, rep):
    ex = worked_example(lam)
    rep.cases += 1
    d = sedenion.orthogonality_defect(ex)
    if d or sedenion.norm_sq(ex) != 4:
        rep.fail("example element", [d, sedenion.coefficient_norm_sq(ex)], [0, 4])
    for _ in range(RANDOM_CASES):
        s = random_element(SedenionLike, rng, lam)
        rep.cases += 1
        if sedenion.coefficient_norm_sq(s) != sum(c * c for c in s.coeffs):
            rep.fail(["scalar part", s], sedenion.coefficient_norm_sq(s), sum(c * c for c in s.coeffs))
    for _ in range(ORTHOGONAL_PAIRS):
        s, t = sedenion.random_orthogonal(rng, lam), sedenion.random_orthogonal(rng, lam)
        rep.cases += 1
        lhs, rhs = sedenion.norm_multiplicativity_check(s, t)
        if lhs != rhs:
            rep.fail(["norm multiplicative", s, t], lhs, rhs)


def suite_closure(cls, lam, rng, mode, strict, rep):
    if cls is OctonionLike:
        rep.notes.append("closure applies to the sedenion-like normed set only")
        return
    ex = worked_example(lam)
    rep.cases += 1
    d = sedenion.closure_check(ex, ex)
    if d:
        rep.fail(["example squared"], d, 0)
    for _ in range(ORTHOGONAL_PAIRS):
        s, t = sedenion.random_orthogonal(rng, lam), sedenion.random_orthogonal(rng, lam)
        rep.cases += 1
        d = sedenion.closure_check(s, t)
        if d:
            rep.fail([s, t], d, 0)


def suite_commutant(cls, lam, rng, mode, strict, rep):
    for _ in range(RANDOM_CASES):
        x, y = random_element(cls, rng, lam), random_element(cls, rng, lam)
        rep.cases += 1
        n = x * x.dagger()
        if cls is OctonionLike:
            leftover = n.coeffs[1:7]
            if any(leftover) or n * y != y * n:
                rep.fail([x, y], n, "u_0 and u_7 only, central")
        elif not sedenion.commutant_check(x, y):
            rep.fail([x, y], [n, n * y], [x.dagger() * x, y * n])


def suite_hopf(cls, lam, rng, mode, strict, rep):
    res = hopf.verify_all(cls, lam)
    rep.cases = 3 * cls.DIM + cls.DIM * cls.DIM
    for key, bad in res.items():
        for case in bad:
            rep.fail([key, case], False, True)
    flagged = sum(1 for r in hopf.bialgebra_compatibility_report(cls, lam) if not r["compatible"])
    rep.notes.append(f"coproduct is not multiplicative on {flagged} basis pairs (negative structure sign)")


def suite_grading(cls, lam, rng, mode, strict, rep):
    p = grading.printed_grading(cls)
    t = cls.table(lam)
    rep.cases = cls.DIM * cls.DIM
    for i, j in grading.additivity_violations(p, t):
        k = t[i, j].k
        rep.fail([i, j], p.degrees[i] + p.degrees[j], p.degrees[k])
    if not p.is_bijection():
        rep.fail("bijection onto even subgroup", sorted(p.degrees), grading.even_subgroup(cls.N))
    for d in grading.grading_diff(cls):
        rep.fail(["printed degree", d["basis"]], d["constructed"], d["printed"])


def suite_cocycle(cls, lam, rng, mode, strict, rep):
    rep.cases = cls.DIM ** 3
    for v in grading.cocycle_report(cls, lam):
        rep.fail(list(v), "violation", None)
    g = grading.even_subgroup(cls.N)
    if not grading.check_cocycle_conditions(grading.constant_cocycle(g), g):
        rep.fail("constant cocycle", False, True)


_RUNNERS = {
    "assoc": suite_assoc,
    "table-diff": suite_table_diff,
    "matrix": suite_matrix,
    "norm": suite_norm,
    "closure": suite_closure,
    "commutant": suite_commutant,
    "hopf": suite_hopf,
    "grading": suite_grading,
    "cocycle": suite_cocycle,
}


def worked_example(lam: int = 1) -> SedenionLike:
    """1 + e0e1e2e3 + e0e4 + e1e2e3e4 as a Clifford element.

    Each non-scalar unit carries lambda, so the coefficients are (1, lam, lam, lam).
    """
    c = [0] * 16
    c[0] = 1
    for i in (7, 8, 15):
        c[i] = lam
    return SedenionLike(c, lam)


def run_suite(name: str, cls: type[LambdaElement], lam: int = 1, seed: int = 0,
              mode: str = "exact", strict: bool = False) -> VerifyReport:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    rep = VerifyReport(name, cls.ALGEBRA, lam)
    # Each suite gets its own stream so results do not depend on suite order.
    rng = SplitMix64(seed ^ (SUITES.index(name) << 56))
    start = time.perf_counter()
    _RUNNERS[name](cls, lam, rng, mode, strict, rep)
    rep.wall_time = time.perf_counter() - start
    return rep


def run(suites, cls, lam=1, seed=0, mode="exact", strict=False) -> list[VerifyReport]:
    names = list(SUITES) if "all" in suites else sorted(set(suites), key=SUITES.index)
    return [run_suite(n, cls, lam, seed, mode, strict) for n in names]

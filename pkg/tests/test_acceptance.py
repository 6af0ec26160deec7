"""One check per acceptance criterion; each prints a PASS/FAIL line.

Run under pytest (lines are collected into the terminal summary) or
directly with ``python tests/test_acceptance.py``.
"""

import itertools
import time
from functools import lru_cache

import numpy as np

from evenclifford import grading, hopf, octonion, sedenion
from evenclifford.algebra import _table
from evenclifford.errors import SingularElement
from evenclifford.linalg import SingularMatrix, solve
from evenclifford.octonion import OctonionLike
from evenclifford.sampling import SplitMix64, random_element
from evenclifford.sedenion import SedenionLike

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

SEED = 2024
RTOL = 1e-9


def record(name, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _table_equal_printed(lam=1):
    t = octonion.derive_structure_table(lam)
    printed = octonion.printed_table()
    return sum(t.product(i, j) == printed[i][j] for i in range(8) for j in range(8))


def test_table_fidelity_octonion_like():
    _table.cache_clear()
    start = time.perf_counter()
    matches = _table_equal_printed()
    elapsed = time.perf_counter() - start
    record("Table fidelity (O^l)", matches == 64 and elapsed < 1.0,
           f"{matches}/64 entries match, {elapsed:.3f}s (limit 1s)")


def test_table_fidelity_sedenion_like():
    _table.cache_clear()
    start = time.perf_counter()
    diff = sedenion.table_diff(1)
    t = sedenion.derive_structure_table(1)
    bad = 0
    for i, j, k in itertools.product(range(16), repeat=3):
        x = SedenionLike.basis(i)
        y = SedenionLike.basis(j)
        z = SedenionLike.basis(k)
        bad += (x * y) * z != x * (y * z)
    elapsed = time.perf_counter() - start
    diff_text = "; ".join(f"{d['row']}*{d['col']} printed {d['printed_entry']} derived {d['derived_entry']}" for d in diff)
    record("Table fidelity (S^l)", bad == 0 and elapsed < 5.0 and t.dim == 16,
           f"4096 triples, {bad} non-associative, {elapsed:.2f}s (limit 5s); "
           f"{len(diff)} diff(s) vs printed table: {diff_text or 'none'}")


def test_seminorm_degeneracy():
    one, u7 = OctonionLike.one(), OctonionLike.basis(7)
    a, b = one - u7, one + u7
    n1, n2 = octonion.seminorm_sq(a, 1), octonion.seminorm_sq(b, 2)
    record("Seminorm degeneracy", bool(a) and bool(b) and n1 == 0 and n2 == 0,
           f"||1-u7||_1^2 = {n1}, ||1+u7||_2^2 = {n2}, both elements nonzero")


def test_inverse_det_and_eigenvalues():
    rng = SplitMix64(SEED)
    exact_bad = det_bad = eig_bad = 0
    singular = 0
    worst_det = worst_eig = 0.0
    for _ in range(200):
        x = random_element(OctonionLike, rng)
        n1, n2 = octonion.seminorm_sq(x, 1), octonion.seminorm_sq(x, 2)
        try:
            y = OctonionLike(solve(x.left_matrix(), [1] + [0] * 7))
            solvable = True
        except SingularMatrix:
            solvable = False
        try:
            inv = octonion.inverse(x)
            reported = True
        except SingularElement:
            reported = False
            singular += 1
        if solvable != (n1 != 0 and n2 != 0) or reported != solvable:
            exact_bad += 1
        elif solvable and (x * inv != OctonionLike.one() or inv * x != OctonionLike.one() or inv != y):
            exact_bad += 1
        xf = OctonionLike([float(c) for c in x.coeffs])
        det = abs(np.linalg.det(np.array(xf.left_matrix())))
        want = (float(n1) * float(n2)) ** 2  # (||X||_1 ||X||_2)^4
        rel = abs(det - want) / max(1.0, want)
        worst_det = max(worst_det, rel)
        det_bad += rel > RTOL
        mags = sorted(octonion.eigen_magnitudes_sq(xf))
        dense = sorted(abs(z) ** 2 for z in octonion.numeric_eigenvalues(xf))
        scale = max(1.0, max(dense))
        err = max(abs(p - q) for p, q in zip(mags, dense)) / scale
        worst_eig = max(worst_eig, err)
        eig_bad += err > RTOL
    record("Inverse and spectrum (O^l)", exact_bad == det_bad == eig_bad == 0,
           f"200 exact X ({singular} singular): {exact_bad} inverse failures; "
           f"det law worst rel err {worst_det:.1e}, eigen magnitudes worst rel err {worst_eig:.1e} (tol 1e-9)")


def test_dagger_commutes():
    rng = SplitMix64(SEED + 1)
    bad = 0
    for _ in range(200):
        x, y = random_element(OctonionLike, rng), random_element(OctonionLike, rng)
        n = x * x.dagger()
        if any(n.coeffs[1:7]) or n != x.dagger() * x or n * y != y * n:
            bad += 1
    record("XX^dagger = X^dagger X (O^l)", bad == 0, f"200 random (X, Y): {bad} failures, exact")


def test_worked_example():
    s = SedenionLike([1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1])
    d = sedenion.orthogonality_defect(s)
    n = sedenion.norm_sq(s) if not d else None
    record("Worked orthogonal example", not d and n == 4, f"defect = {d}, ||S||^2 = {n}")


@lru_cache(maxsize=1)
def orthogonal_pairs():
    """The 500 shared pairs and the time spent drawing them."""
    start = time.perf_counter()
    rng = SplitMix64(SEED + 2)
    pairs = [(sedenion.random_orthogonal(rng), sedenion.random_orthogonal(rng)) for _ in range(500)]
    return pairs, time.perf_counter() - start


def test_orthogonal_closure():
    pairs, _ = orthogonal_pairs()
    bad = sum(bool(sedenion.closure_check(s, t)) for s, t in pairs)
    record("Closure of orthogonal elements", bad == 0, f"500 orthogonal pairs: defect(ST) != 0 for {bad}")


def test_norm_multiplicativity():
    pairs, sample_time = orthogonal_pairs()
    start = time.perf_counter()
    bad = 0
    for s, t in pairs:
        lhs, rhs = sedenion.norm_multiplicativity_check(s, t)
        bad += lhs != rhs
    elapsed = sample_time + time.perf_counter() - start
    record("Norm multiplicativity", bad == 0 and elapsed < 10.0,
           f"500 orthogonal pairs: ||ST||^2 != ||S||^2 ||T||^2 for {bad}; {elapsed:.2f}s (limit 10s)")


def test_hopf_axioms():
    problems = []
    for cls in (OctonionLike, SedenionLike):
        for lam in (1, -1):
            res = hopf.verify_all(cls, lam)
            problems += [(cls.ALGEBRA, lam, k, v) for k, v in res.items() if v]
            hopf.BasisInverseTable.build(cls, lam).verify(cls, lam)
    record("Hopf axioms", not problems,
           "coassociativity, counit, antipode on 8 + 16 basis elements, both orientations; "
           f"inverse tables verified; report flags exactly the negative pairs; problems: {problems or 'none'}")


def test_grading():
    parts = []
    ok = True
    for cls in (OctonionLike, SedenionLike):
        g = grading.printed_grading(cls)
        t = cls.table(1)
        add = grading.verify_degree_additivity(g, t)
        bij = g.is_bijection()
        phi = grading.associator_cocycle(t)
        ones = all(v == 1 for v in phi.values())
        group = grading.even_subgroup(cls.N)
        cocycle = grading.check_cocycle_conditions(grading.constant_cocycle(group), group)
        ok &= add and bij and ones and cocycle
        parts.append(f"{cls.ALGEBRA}: additivity {cls.DIM ** 2} pairs {add}, bijection {bij}, "
                     f"cocycle==1 on {len(phi)} triples {ones}, constant 3-cocycle {cocycle}")
    record("Grading", ok, "; ".join(parts))


def test_matrix_representation():
    rng = SplitMix64(SEED + 3)
    bad = 0
    for _ in range(200):
        x, y = random_element(OctonionLike, rng), random_element(OctonionLike, rng)
        z = list((x * y).coeffs)
        mx = [sum(a * b for a, b in zip(row, y.coeffs)) for row in x.left_matrix()]
        my = [sum(a * b for a, b in zip(row, x.coeffs)) for row in y.right_matrix()]
        bad += z != mx or z != my
    left = octonion.symbolic_pattern(lambda i: OctonionLike.basis(i).left_matrix())
    right = octonion.symbolic_pattern(lambda i: OctonionLike.basis(i).right_matrix())
    printed = (left == octonion.parse_symbolic_matrix(octonion.PRINTED_LEFT_MATRIX)
               and right == octonion.parse_symbolic_matrix(octonion.PRINTED_RIGHT_MATRIX))
    record("Matrix representation", bad == 0 and printed,
           f"200 random pairs: {bad} failures; printed M_x, M_y reproduced: {printed}")


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass

"""The 16-dimensional associative sedenion-like algebra (even part of Cl(5, 0)).

Basis order follows the printed span: 1, e01, e02, e03, e12, e31, e23,
e0123, e04, e14, e24, e34, e0214, e0134, e0324, e1234, each non-scalar
unit carrying one factor of lambda.  Words written out of ascending order
(e31, e0214, e0324) are normalized with their transposition sign.

An element splits as ``S = S_r + S_d * eps`` with ``eps = -e1e2e3e4``.  Both
parts live in the even subalgebra of Cl(4, 0) on e0..e3, expressed in the
first eight units above (:class:`DualPart`).  That is the same algebra as
:class:`~evenclifford.octonion.OctonionLike`, only in a different basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LambdaElement, LambdaUnit, StructureTable, check_lambda, parse_table
from .clifford import Multivector
from .errors import NotOrthogonal, SingularElement
from .linalg import SingularMatrix, nullspace, solve
from .octonion import OctonionLike
from .sampling import SplitMix64

WORDS16 = (
    (),
    (0, 1), (0, 2), (0, 3), (1, 2), (3, 1), (2, 3),
    (0, 1, 2, 3),
    (0, 4), (1, 4), (2, 4), (3, 4),
    (0, 2, 1, 4), (0, 1, 3, 4), (0, 3, 2, 4),
    (1, 2, 3, 4),
)
NAMES16 = tuple("1" if not w else "e" + "".join(map(str, w)) for w in WORDS16)

# The dual unit (not the Hopf counit); it carries no lambda.
DUAL_UNIT = Multivector.from_word((1, 2, 3, 4), 5, coeff=-1)


class SedenionLike(LambdaElement):
    __slots__ = ()

    DIM = 16
    N = 5
    WORDS = WORDS16
    NAMES = NAMES16
    ALGEBRA = "sedenion-like"


class DualPart(LambdaElement):
    """Octonion-like number written over 1, e01, e02, e03, e12, e31, e23, e0123."""

    __slots__ = ()

    DIM = 8
    N = 4
    WORDS = WORDS16[:8]
    NAMES = NAMES16[:8]
    ALGEBRA = "octonion-like/e0123-frame"

    def to_octonion_like(self) -> OctonionLike:
        return OctonionLike.from_multivector(self.to_multivector(), self.lam)

    @classmethod
    def from_octonion_like(cls, x: OctonionLike) -> "DualPart":
        return cls.from_multivector(x.to_multivector(), x.lam)

    def embed(self) -> Multivector:
        """The same element inside Cl(5, 0)."""
        return Multivector(5, self.to_multivector().terms)


@dataclass(frozen=True)
class DualSplit:
    real: DualPart
    dual: DualPart

    @property
    def real_part(self) -> DualPart:
        return self.real

    @property
    def dual_part(self) -> DualPart:
        return self.dual

    def to_json(self) -> dict:
        return {"real": self.real.to_json()["coeffs"], "dual": self.dual.to_json()["coeffs"]}


def basis_blades() -> tuple[LambdaUnit, ...]:
    return SedenionLike.units()


def derive_structure_table(lam: int = 1) -> StructureTable:
    return SedenionLike.table(lam)


def multiply(s: SedenionLike, t: SedenionLike) -> SedenionLike:
    return s.multiply(t)


def dagger(s: SedenionLike) -> SedenionLike:
    return s.dagger()


def real_unit_indices() -> tuple[int, ...]:
    t = derive_structure_table(1)
    return tuple(i for i in range(16) if t.product(i, i) == (0, 1))


# -- dual split ------------------------------------------------------------

def split(s: SedenionLike) -> DualSplit:
    """Split off the first eight units; the rest is ``S_d * eps``.

    ``S_d`` is recovered as ``(rest) * eps`` because eps squares to +1.
    At lambda=+1 this reproduces S_d = (-s15, s14, s13, s12, s11, s10, s9, s8).
    """
    c = s.coeffs
    real = DualPart(c[:8], s.lam)
    rest = SedenionLike((0,) * 8 + c[8:], s.lam).to_multivector()
    d = rest * DUAL_UNIT
    dual = DualPart.from_multivector(Multivector(4, d.terms), s.lam)
    return DualSplit(real, dual)


def join(parts: DualSplit) -> SedenionLike:
    r, d = parts.real, parts.dual
    if r.lam != d.lam:
        raise ValueError("real and dual parts have different orientation")
    mv = r.embed() + d.embed() * DUAL_UNIT
    return SedenionLike.from_multivector(mv, r.lam)


def _defect(r: DualPart, d: DualPart) -> DualPart:
    return r * d.dagger() + d * r.dagger()


def orthogonality_defect(s: SedenionLike) -> DualPart:
    """S_r S_d^dagger + S_d S_r^dagger; zero exactly for members of the normed set."""
    p = split(s)
    return _defect(p.real, p.dual)


def is_orthogonal(s: SedenionLike) -> bool:
    return not orthogonality_defect(s)


def _require_orthogonal(s: SedenionLike) -> None:
    d = orthogonality_defect(s)
    if d:
        raise NotOrthogonal(d, s)


def coefficient_norm_sq(s: SedenionLike):
    """Scalar part of S S^dagger, i.e. the sum of squared coefficients."""
    return (s * s.dagger()).coeffs[0]


def norm_sq(s: SedenionLike):
    """Squared norm of an element of the normed set; raises NotOrthogonal otherwise."""
    _require_orthogonal(s)
    return coefficient_norm_sq(s)


def closure_check(s: SedenionLike, t: SedenionLike) -> DualPart:
    """Defect of the product of two orthogonal elements."""
    _require_orthogonal(s)
    _require_orthogonal(t)
    return orthogonality_defect(s * t)


def norm_multiplicativity_check(s: SedenionLike, t: SedenionLike) -> tuple:
    """Return (||ST||^2, ||S||^2 ||T||^2) for orthogonal S, T.

    The first value is the coefficient norm of ST, which does not assume
    that ST is itself orthogonal.
    """
    ns, nt = norm_sq(s), norm_sq(t)
    return coefficient_norm_sq(s * t), ns * nt


def commutant_check(s: SedenionLike, t: SedenionLike) -> bool:
    """True iff S S^dagger = S^dagger S and S S^dagger commutes with T."""
    n = s * s.dagger()
    return n == s.dagger() * s and n * t == t * n


def left_matrix(s: SedenionLike) -> list[list]:
    return s.left_matrix()


def inverse(s: SedenionLike) -> SedenionLike:
    """Solve left_matrix(S) y = e_0 exactly.  The algebra has zero divisors,
    so a singular matrix is reported as SingularElement."""
    try:
        sol = solve(s.left_matrix(), [1] + [0] * 15)
    except SingularMatrix:
        raise SingularElement((), s) from None
    y = SedenionLike(sol, s.lam)
    if y * s != SedenionLike.one(s.lam):
        raise SingularElement((), s)
    return y


def dual_number_product(a: DualSplit, b: DualSplit) -> DualSplit:
    """Product of two splits when eps is treated as a central unit with eps^2 = 1.

    (A_r + A_d eps)(B_r + B_d eps) = (A_r B_r + A_d B_d) + (A_r B_d + A_d B_r) eps.
    This is *not* the Clifford product: in Cl(5, 0) eps anticommutes with
    every unit that contains e0.
    """
    return DualSplit(a.real * b.real + a.dual * b.dual, a.real * b.dual + a.dual * b.real)


# -- sampling --------------------------------------------------------------

def defect_matrix(real: DualPart) -> list[list]:
    """Matrix of the linear map S_d -> defect(S_r, S_d) for fixed S_r."""
    cols = [_defect(real, DualPart.basis(j, real.lam)).coeffs for j in range(8)]
    return [[cols[j][i] for j in range(8)] for i in range(8)]


def random_orthogonal(rng: SplitMix64, lam: int = 1) -> SedenionLike:
    """Random member of the normed set.

    Draw S_r, then draw S_d from the kernel of the (linear in S_d) defect
    map by exact elimination; every sample is orthogonal by construction.
    """
    lam = check_lambda(lam)
    real = DualPart(rng.rationals(8), lam)
    kernel = nullspace(defect_matrix(real))
    weights = rng.rationals(len(kernel))
    dual = [sum((w * v[i] for w, v in zip(weights, kernel)), Fraction(0)) for i in range(8)]
    s = join(DualSplit(real, DualPart(dual, lam)))
    assert is_orthogonal(s)
    return s


# -- defect as quadratic forms ----------------------------------------------

def defect_forms(lam: int = 1) -> list[dict[tuple[int, int], Fraction]]:
    """Each defect coefficient as a quadratic form ``{(i, j): c}`` (i <= j) in s_0..s_15.

    Recovered by polarization on indicator vectors, independent of any
    hand expansion.
    """
    def q(vec):
        return orthogonality_defect(SedenionLike(vec, lam)).coeffs

    def e(*idx):
        v = [0] * 16
        for i in idx:
            v[i] += 1
        return v

    diag = [q(e(i)) for i in range(16)]
    forms: list[dict] = [dict() for _ in range(8)]
    for i in range(16):
        for j in range(i, 16):
            if i == j:
                vals = diag[i]
            else:
                both = q(e(i, j))
                vals = [both[k] - diag[i][k] - diag[j][k] for k in range(8)]
            for k, v in enumerate(vals):
                if v != 0:
                    forms[k][(i, j)] = Fraction(v)
    return forms


def quoted_relations() -> dict[str, dict[tuple[int, int], int]]:
    """The two printed scalar relations, written as forms that should vanish.

    s0 s15 - sum_{i=1..7} s_i s_{15-i}  and  s0 s8 - sum_{i=1..7} s_i s_{8+i}.
    """
    def form(pairs):
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in pairs:
            key = (min(i, j), max(i, j))
            out[key] = out.get(key, 0) + c
        return {k: v for k, v in out.items() if v}

    first = form([((0, 15), 1)] + [((i, 15 - i), -1) for i in range(1, 8)])
    second = form([((0, 8), 1)] + [((i, 8 + i), -1) for i in range(1, 8)])
    return {"s0*s15": first, "s0*s8": second}


def defect_coefficient_relations(s: SedenionLike | None = None, lam: int = 1) -> dict:
    """Report the true bilinear relations behind the orthogonality condition.

    For each quoted relation the report lists the defect slot whose form has
    the same monomials (if any) and the sign pattern actually found.  When an
    element is given its defect slots are evaluated too.
    """
    if s is not None:
        lam = s.lam
    forms = defect_forms(lam)
    slots = []
    for k, f in enumerate(forms):
        slots.append({
            "slot": DualPart.NAMES[k],
            "zero_form": not f,
            "terms": [{"i": i, "j": j, "coeff": _dump(c)} for (i, j), c in sorted(f.items())],
        })
    matches = []
    for name, quoted in quoted_relations().items():
        support = set(quoted)
        hit = None
        for k, f in enumerate(forms):
            if f and set(f) == support:
                hit = k
                break
        entry = {"relation": name, "quoted": _signs(quoted), "slot": None, "found": None,
                 "scale": None, "signs_agree": False}
        if hit is not None:
            f = forms[hit]
            ratio = f[(0, 15) if name == "s0*s15" else (0, 8)] / quoted[(0, 15) if name == "s0*s15" else (0, 8)]
            entry.update(
                slot=DualPart.NAMES[hit],
                found=_signs(f),
                scale=_dump(ratio),
                signs_agree=all(f[key] == ratio * quoted[key] for key in support),
            )
        matches.append(entry)
    report = {"lambda": lam, "slots": slots, "relations": matches}
    if s is not None:
        d = orthogonality_defect(s)
        report["values"] = [_dump(v) for v in d.coeffs]
        report["holds"] = not d
    return report


def _signs(form) -> list[dict]:
    return [{"i": i, "j": j, "sign": 1 if c > 0 else -1} for (i, j), c in sorted(form.items())]


def _dump(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else str(v)


# -- printed table -----------------------------------------------------------

# Rows/columns e01 .. e1234 as printed for lambda=+1 (no scalar row/column).
PRINTED_TABLE_ROWS = (
    "-1 -e12 e31 e02 -e03 e0123 -e23 -e14 e04 -e0214 e0134 e24 -e34 e1234 -e0324",
    "e12 -1 -e23 -e01 e0123 e03 -e31 -e24 e0214 e04 -e0324 -e14 e1234 e34 -e0134",
    "-e31 e23 -1 e0123 e01 -e02 -e12 -e34 -e0134 e0324 e04 e1234 e14 -e24 -e0214",
    "-e02 e01 e0123 -1 e23 -e31 -e03 -e0214 -e24 e14 e1234 e04 e0324 -e0134 -e34",
    "e03 e0123 -e01 -e23 -1 e12 -e02 -e0134 e34 e1234 -e14 -e0324 e04 e0214 -e24",
    "e0123 -e03 e02 e31 -e12 -1 e01 -e0324 e1234 -e34 e24 e0134 -e0214 e04 -e14",
    "-e23 -e31 -e12 -e03 -e02 -e01 1 -e1234 -e0324 -e0134 -e0214 -e34 -e24 -e14 -e04",
    "e14 e24 e34 -e0214 -e0134 -e0324 e1234 -1 -e01 -e02 -e03 e12 e31 e23 -e0123",
    "-e04 e0214 -e0134 e24 -e34 e1234 e0324 e01 -1 -e12 e31 -e02 e03 -e0123 -e23",
    "-e0214 -e04 e0324 -e14 e1234 e34 e0134 e02 e12 -1 -e23 e01 -e0123 -e03 -e31",
    "e0134 -e0324 -e04 e1234 e14 -e24 e0214 e03 -e31 e23 -1 -e0123 -e01 e02 -e12",
    "e24 -e14 -e1234 e04 e0324 -e0134 e34 e12 -e02 e01 e0123 1 -e23 e31 -e03",
    "-e34 -e1234 e14 -e0324 e04 e0214 e24 e31 e03 e0123 -e01 e23 1 -e12 -e02",
    "-e1234 e34 -e24 e0134 -e0214 e04 e14 e23 e0123 -e03 e02 -e31 e12 1 -e01",
    "e0324 e0134 e0214 -e34 -e24 -e14 e04 e0123 -e23 -e31 -e12 e03 e02 e01 1",
)


def printed_table() -> list[list[tuple[int, int]]]:
    """Printed 15x15 block, indexed by basis numbers 1..15 (row/col 0 omitted)."""
    return parse_table(PRINTED_TABLE_ROWS, NAMES16)


def table_diff(lam: int = 1) -> list[dict]:
    t = derive_structure_table(lam)
    diffs = []
    for i, row in enumerate(printed_table(), start=1):
        for j, (k, s) in enumerate(row, start=1):
            if t.product(i, j) != (k, s):
                diffs.append({
                    "row": NAMES16[i],
                    "col": NAMES16[j],
                    "printed_entry": ("-" if s < 0 else "") + NAMES16[k],
                    "derived_entry": t.entry_name(i, j),
                })
    return diffs

"""Diagonal coproduct, sum counit and basis-inverse antipode.

The maps are defined on basis units and extended linearly:
coproduct(u_i) = u_i (x) u_i, counit(u_i) = 1, antipode(u_i) = u_i^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LambdaElement, check_lambda


@dataclass(frozen=True)
class TensorElement:
    """Sparse element of H (x) H (or a higher tensor power) keyed by index tuples."""

    dim: int
    terms: dict

    def __post_init__(self):
        clean = {}
        for key, c in self.terms.items():
            if any(not 0 <= i < self.dim for i in key):
                raise ValueError(f"index {key} out of range for dimension {self.dim}")
            if c != 0:
                clean[key] = c
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(self.dim, out)

    def __neg__(self):
        return TensorElement(self.dim, {k: -c for k, c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> list:
        return [{"index": list(k), "coeff": _dump(c)} for k, c in sorted(self.terms.items())]


def _dump(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    return v


# -- the three maps -----------------------------------------------------------

def coproduct(x: LambdaElement) -> TensorElement:
    return TensorElement(x.DIM, {(i, i): a for i, a in enumerate(x.coeffs)})


def counit(x: LambdaElement):
    return sum(x.coeffs, 0)


@dataclass(frozen=True)
class BasisInverseTable:
    """``inv[i] = (k, sigma)`` with ``u_i^{-1} = sigma * u_k``."""

    inv: tuple

    @classmethod
    def build(cls, algebra: type[LambdaElement], lam: int = 1) -> "BasisInverseTable":
        """u_i^{-1} = u_i for real units (u_i^2 = 1), u_i^3 = -u_i for imaginary ones."""
        t = algebra.table(check_lambda(lam))
        inv = []
        for i in range(algebra.DIM):
            k, s = t.product(i, i)
            if k != 0:
                raise ValueError(f"u_{i}^2 is not a scalar")
            inv.append((i, s))
        table = cls(tuple(inv))
        table.verify(algebra, lam)
        return table

    def verify(self, algebra: type[LambdaElement], lam: int = 1) -> bool:
        t = algebra.table(lam)
        for i, (k, s) in enumerate(self.inv):
            for a, b in ((i, k), (k, i)):
                r, sign = t.product(a, b)
                if (r, sign * s) != (0, 1):
                    raise AssertionError(f"u_{i} times its tabulated inverse is not u_0")
        return True

    def __getitem__(self, i: int):
        return self.inv[i]


def antipode(x: LambdaElement) -> LambdaElement:
    table = BasisInverseTable.build(type(x), x.lam)
    out = [0] * x.DIM
    for i, a in enumerate(x.coeffs):
        k, s = table[i]
        out[k] += s * a
    return type(x)(out, x.lam)


# -- tensor helpers -----------------------------------------------------------

def _apply_left(t: TensorElement, f) -> TensorElement:
    """(f (x) id) on a 2-tensor, where f maps a basis index to a TensorElement over tuples."""
    out = TensorElement(t.dim, {})
    for (i, j), c in t.terms.items():
        image = f(i)
        out = out + TensorElement(t.dim, {key + (j,): c * v for key, v in image.terms.items()})
    return out


def _apply_right(t: TensorElement, f) -> TensorElement:
    out = TensorElement(t.dim, {})
    for (i, j), c in t.terms.items():
        image = f(j)
        out = out + TensorElement(t.dim, {(i,) + key: c * v for key, v in image.terms.items()})
    return out


def _basis_coproduct(dim: int):
    return lambda i: TensorElement(dim, {(i, i): 1})


def tensor_multiply(a: TensorElement, b: TensorElement, algebra: type[LambdaElement], lam: int) -> TensorElement:
    """(u_a (x) u_b)(u_c (x) u_d) = (u_a u_c) (x) (u_b u_d), signs folded into the coefficient."""
    t = algebra.table(lam)
    out: dict = {}
    for (i, j), x in a.terms.items():
        for (k, l), y in b.terms.items():
            p, s1 = t.product(i, k)
            q, s2 = t.product(j, l)
            out[(p, q)] = out.get((p, q), 0) + s1 * s2 * x * y
    return TensorElement(a.dim, out)


def _mu(t: TensorElement, algebra: type[LambdaElement], lam: int) -> LambdaElement:
    table = algebra.table(lam)
    out = [0] * algebra.DIM
    for (i, j), c in t.terms.items():
        k, s = table.product(i, j)
        out[k] += s * c
    return algebra(out, lam)


# -- axioms -------------------------------------------------------------------

def verify_coassociativity(x: LambdaElement | int, algebra: type[LambdaElement] | None = None, lam: int = 1) -> bool:
    """(id (x) coproduct) coproduct = (coproduct (x) id) coproduct on a basis index or element."""
    x = _element(x, algebra, lam)
    d = coproduct(x)
    delta = _basis_coproduct(x.DIM)
    return _apply_right(d, delta) == _apply_left(d, delta)


def verify_counit(x: LambdaElement | int, algebra: type[LambdaElement] | None = None, lam: int = 1) -> bool:
    """(counit (x) id) coproduct = x = (id (x) counit) coproduct."""
    x = _element(x, algebra, lam)
    left = [0] * x.DIM
    right = [0] * x.DIM
    for (i, j), c in coproduct(x).terms.items():
        left[j] += c   # counit(u_i) = 1
        right[i] += c
    cls = type(x)
    return cls(left, x.lam) == x and cls(right, x.lam) == x


def verify_antipode(x: LambdaElement | int, algebra: type[LambdaElement] | None = None, lam: int = 1) -> bool:
    """mu (id (x) S) coproduct = mu (S (x) id) coproduct = counit(x) u_0.

    Both sides are linear in x, so the basis check extends to every element.
    """
    x = _element(x, algebra, lam)
    cls = type(x)
    inv = BasisInverseTable.build(cls, x.lam)

    def s_basis(i):
        k, s = inv[i]
        return TensorElement(x.DIM, {(k,): s})

    ident = lambda i: TensorElement(x.DIM, {(i,): 1})  # noqa: E731
    d = coproduct(x)
    target = cls.one(x.lam) * counit(x)
    left = _mu(_flatten(_apply_right(d, s_basis)), cls, x.lam)
    right = _mu(_flatten(_apply_left(_apply_right(d, ident), s_basis)), cls, x.lam)
    return left == target and right == target


def _flatten(t: TensorElement) -> TensorElement:
    return TensorElement(t.dim, {(k[0], k[-1]): c for k, c in t.terms.items()})


def _element(x, algebra, lam) -> LambdaElement:
    if isinstance(x, LambdaElement):
        return x
    if algebra is None:
        raise TypeError("a basis index needs the algebra class")
    return algebra.basis(x, lam)


def bialgebra_compatibility_report(algebra: type[LambdaElement], lam: int = 1) -> list[dict]:
    """Compare coproduct(u_i u_j) with coproduct(u_i) coproduct(u_j) for every basis pair."""
    lam = check_lambda(lam)
    t = algebra.table(lam)
    out = []
    for i in range(algebra.DIM):
        for j in range(algebra.DIM):
            prod = algebra.basis(i, lam) * algebra.basis(j, lam)
            lhs = coproduct(prod)
            rhs = tensor_multiply(
                coproduct(algebra.basis(i, lam)), coproduct(algebra.basis(j, lam)), algebra, lam
            )
            out.append({
                "i": i,
                "j": j,
                "structure_sign": t.product(i, j)[1],
                "compatible": lhs == rhs,
            })
    return out


def verify_all(algebra: type[LambdaElement], lam: int = 1) -> dict:
    """Run every basis-level axiom and the report cross-check; returns per-check failure lists."""
    idx = range(algebra.DIM)
    report = bialgebra_compatibility_report(algebra, lam)
    BasisInverseTable.build(algebra, lam)
    return {
        "coassociativity": [i for i in idx if not verify_coassociativity(i, algebra, lam)],
        "counit": [i for i in idx if not verify_counit(i, algebra, lam)],
        "antipode": [i for i in idx if not verify_antipode(i, algebra, lam)],
        "report_mismatch": [
            (r["i"], r["j"]) for r in report if r["compatible"] != (r["structure_sign"] > 0)
        ],
    }

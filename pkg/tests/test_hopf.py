import pytest

from evenclifford.hopf import (
    BasisInverseTable,
    TensorElement,
    antipode,
    bialgebra_compatibility_report,
    coproduct,
    counit,
    tensor_multiply,
    verify_all,
    verify_antipode,
    verify_coassociativity,
    verify_counit,
)
from evenclifford.octonion import OctonionLike
from evenclifford.sampling import SplitMix64, random_element
from evenclifford.sedenion import SedenionLike

ALGEBRAS = [OctonionLike, SedenionLike]
LAMS = [1, -1]


def u(i, coeff=1, lam=1):
    return OctonionLike.basis(i, lam, coeff)


def test_coproduct_examples():
    assert coproduct(u(0)).terms == {(0, 0): 1}
    assert coproduct(u(1, 2) + u(5, 3)).terms == {(1, 1): 2, (5, 5): 3}
    assert not coproduct(OctonionLike.zero())


def test_counit_examples():
    assert counit(u(3)) == 1
    assert counit(u(0, 2) + u(7, 3)) == 5
    assert counit(OctonionLike.zero()) == 0


def test_antipode_examples():
    assert antipode(u(0)) == u(0)
    assert antipode(u(1)) == -u(1)
    assert antipode(SedenionLike.basis(7)) == SedenionLike.basis(7)
    for i in range(1, 7):
        assert antipode(u(i)) == u(i) * u(i) * u(i)


@pytest.mark.parametrize("cls", ALGEBRAS)
@pytest.mark.parametrize("lam", LAMS)
def test_basis_inverse_table(cls, lam):
    t = BasisInverseTable.build(cls, lam)
    one = cls.one(lam)
    for i in range(cls.DIM):
        k, s = t[i]
        inv = cls.basis(k, lam, s)
        assert cls.basis(i, lam) * inv == one == inv * cls.basis(i, lam)


def test_basis_inverse_rule_for_sedenion_like():
    t = BasisInverseTable.build(SedenionLike)
    real = {0, 7, 12, 13, 14, 15}
    assert all(t[i] == (i, 1 if i in real else -1) for i in range(16))


@pytest.mark.parametrize("cls", ALGEBRAS)
@pytest.mark.parametrize("lam", LAMS)
def test_axioms_on_basis(cls, lam):
    for i in range(cls.DIM):
        assert verify_coassociativity(i, cls, lam)
        assert verify_counit(i, cls, lam)
        assert verify_antipode(i, cls, lam)


@pytest.mark.parametrize("cls", ALGEBRAS)
def test_linear_axioms_on_random_elements(cls):
    rng = SplitMix64(51)
    for _ in range(20):
        x = random_element(cls, rng)
        assert verify_coassociativity(x)
        assert verify_counit(x)
    assert verify_counit(cls.zero())


def test_tensor_element_rejects_bad_index():
    with pytest.raises(ValueError):
        TensorElement(8, {(8, 0): 1})


def test_tensor_multiply_folds_signs():
    a = coproduct(u(1))
    assert tensor_multiply(a, a, OctonionLike, 1).terms == {(0, 0): 1}


def test_compatibility_examples():
    rep = {(r["i"], r["j"]): r for r in bialgebra_compatibility_report(OctonionLike)}
    assert all(rep[(0, j)]["compatible"] for j in range(8))
    assert rep[(1, 1)] == {"i": 1, "j": 1, "structure_sign": -1, "compatible": False}


@pytest.mark.parametrize("cls", ALGEBRAS)
@pytest.mark.parametrize("lam", LAMS)
def test_compatibility_flags_negative_signs(cls, lam):
    t = cls.table(lam)
    rep = bialgebra_compatibility_report(cls, lam)
    assert len(rep) == cls.DIM ** 2
    flagged = {(r["i"], r["j"]) for r in rep if not r["compatible"]}
    negative = {(i, j) for i in range(cls.DIM) for j in range(cls.DIM) if t.product(i, j)[1] < 0}
    assert flagged == negative


def test_verify_all_clean():
    for cls in ALGEBRAS:
        assert all(not v for v in verify_all(cls).values())

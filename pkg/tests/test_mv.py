import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import chain_elements, rationals01
from mundici.errors import ElementNotInCarrier, SourceTargetMismatch
from mundici.mv import (
    Chain,
    Chang,
    FiniteTable,
    MvHom,
    Product,
    check_mv_axioms,
    check_mv_hom,
    is_isomorphic_finite,
    mv_inf,
    mv_leq,
    mv_sup,
    odot,
)

L2, L3, L4 = Chain(2), Chain(3), Chain(4)
half = F(1, 2)


def test_odot_examples():
    assert odot(L2, half, half) == 0
    assert odot(L2, F(1), half) == half
    for x in L4.elements():
        assert odot(L4, x, L4.neg(L4.zero)) == x


def test_odot_matches_lukasiewicz_tnorm():
    # independent oracle: max(0, x + y - 1)
    for n in range(1, 7):
        A = Chain(n)
        for x, y in itertools.product(A.elements(), repeat=2):
            assert odot(A, x, y) == max(F(0), x + y - 1)


def test_order_examples():
    assert not mv_leq(L2, F(1), half)
    assert mv_leq(L3, F(1, 3), F(2, 3))
    assert all(mv_leq(L4, F(0), x) for x in L4.elements())
    assert mv_sup(L2, half, F(1)) == 1
    assert mv_inf(L3, F(1, 3), F(2, 3)) == F(1, 3)


def test_checked_ops_reject_foreign_elements():
    with pytest.raises(ElementNotInCarrier):
        odot(L2, F(1, 3), half)
    with pytest.raises(ElementNotInCarrier):
        mv_leq(L3, F(1, 2), F(0))


@pytest.mark.parametrize("A", [Chain(n) for n in range(1, 7)] + [Product((L2, L3))], ids=str)
def test_lattice_properties_exhaustive(A):
    els = A.elements()
    for x, y, z in itertools.product(els, repeat=3):
        assert A.leq(x, x)
        if A.leq(x, y) and A.leq(y, x):
            assert x == y
        if A.leq(x, y) and A.leq(y, z):
            assert A.leq(x, z)
        s, i = A.sup(x, y), A.inf(x, y)
        assert A.leq(x, s) and A.leq(y, s) and A.leq(i, x) and A.leq(i, y)
        if A.leq(x, z) and A.leq(y, z):
            assert A.leq(s, z)
        if A.leq(z, x) and A.leq(z, y):
            assert A.leq(z, i)
        assert A.leq(x, y) == A.leq(A.neg(y), A.neg(x))


@given(rationals01(), rationals01())
def test_rational_interval_sup_inf_are_max_min(x, y):
    A = Chain(None)
    assert A.sup(x, y) == max(x, y)
    assert A.inf(x, y) == min(x, y)


@given(st.integers(0, 30), st.integers(0, 30), st.booleans(), st.booleans())
def test_chang_order_is_lexicographic(a, b, sa, sb):
    A = Chang()
    x = (0, a) if sa else (1, -a)
    y = (0, b) if sb else (1, -b)
    assert A.leq(x, y) == (x <= y)


@pytest.mark.parametrize("A", [Chain(n) for n in range(1, 7)] + [Product((L2, L3))], ids=str)
def test_axioms_finite(A):
    r = check_mv_axioms(A)
    assert r.ok and r.exhaustive, r


@pytest.mark.parametrize("A", [Chang(), Chain(None)], ids=str)
def test_axioms_sampled(A):
    r = check_mv_axioms(A, budget=200, seed=3)
    assert r.ok and not r.exhaustive and r.seed == 3


def test_corrupted_table_fails_with_witness():
    spec = FiniteTable.from_algebra(L2)
    table = [list(r) for r in spec.oplus_table]
    table[1][2] = 1  # 1/2 + 1 = 1/2
    bad = FiniteTable(3, tuple(map(tuple, table)), spec.neg_table, spec.zero_index)
    r = check_mv_axioms(bad)
    assert r.status == "fail" and r.axiom in range(1, 7) and r.witness


def test_from_algebra_is_isomorphic():
    assert is_isomorphic_finite(FiniteTable.from_algebra(L3), L3)
    assert not is_isomorphic_finite(L2, Product((Chain(1), Chain(1))))


def test_hom_examples():
    assert check_mv_hom(MvHom.identity(L2)).ok
    assert check_mv_hom(MvHom(L2, L4, lambda x: x, "incl")).ok
    r = check_mv_hom(MvHom(L2, L2, lambda x: F(0), "zero"))
    assert r.status == "fail" and r.axiom == "neg"
    with pytest.raises(SourceTargetMismatch):
        check_mv_hom(MvHom(L4, L2, lambda x: x, "bad"))


@given(chain_elements(6), chain_elements(6))
def test_neg_is_involution_and_de_morgan(x, y):
    A = Chain(6)
    assert A.neg(A.neg(x)) == x
    assert A.neg(A.oplus(x, y)) == A.odot(A.neg(x), A.neg(y))

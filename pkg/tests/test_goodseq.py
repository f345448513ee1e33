import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mundici.errors import AlgebraMismatch, NotAGoodSequence
from mundici.goodseq import (
    GoodSequence,
    check_cancellation,
    check_monoid_laws,
    check_order_existential,
    enumerate_good,
    good_inf,
    good_leq,
    good_sum,
    good_sup,
    is_good,
    normalize,
    zero_seq,
)
from mundici.mv import Chain, Chang, FiniteTable, Product

L2, L3 = Chain(2), Chain(3)
h = F(1, 2)


def seq(A, *xs):
    return normalize(A, [F(x) if not isinstance(x, F) else x for x in xs])


def from_total(A, t):
    """Oracle: over L_n the good sequence with rational total t is (1,...,1,frac)."""
    k = math.floor(t)
    return normalize(A, [F(1)] * k + [t - k])


def test_normalize_examples():
    assert normalize(L2, [h, F(0), F(0)]) == seq(L2, h)
    assert normalize(L2, []).components == ()
    with pytest.raises(NotAGoodSequence) as exc:
        normalize(L2, [h, h])
    assert exc.value.index == 1


def test_sum_examples():
    assert good_sum(seq(L2, h), seq(L2, h)) == seq(L2, 1)
    assert good_sum(seq(L2, 1, h), seq(L2, h)) == seq(L2, 1, 1)
    x = seq(L3, 1, F(2, 3))
    assert good_sum(x, zero_seq(L3)) == x


def test_lattice_examples():
    a, b = seq(L2, 1, h), seq(L2, 1)
    assert good_inf(a, b) == seq(L2, 1)
    assert good_sup(a, b) == a
    assert good_leq(zero_seq(L2), a)


def test_mixing_algebras_is_an_error():
    with pytest.raises(AlgebraMismatch):
        good_sum(seq(L2, h), seq(L3, 1))


def test_str_and_indexing():
    a = seq(L2, 1, h)
    assert str(a) == "(1,1/2)" and str(zero_seq(L2)) == "(0)"
    assert a[1] == 1 and a[2] == h and a[5] == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_sum_matches_rational_oracle_exhaustively(n):
    A = Chain(n)
    for x in enumerate_good(A, 3):
        for y in enumerate_good(A, 3):
            s = good_sum(x, y)
            assert s == from_total(A, sum(x.components, F(0)) + sum(y.components, F(0)))
            assert is_good(A, s.components)
            assert len(s) <= len(x) + len(y)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 4 * n), st.integers(0, 4 * n))))
def test_sum_matches_rational_oracle(args):
    n, p, q = args
    A = Chain(n)
    x, y = from_total(A, F(p, n)), from_total(A, F(q, n))
    assert good_sum(x, y) == from_total(A, F(p + q, n))


def test_components_are_non_increasing():
    A = Product((L2, L3))
    for x in enumerate_good(A, 3):
        for i in range(1, len(x)):
            assert A.leq(x[i + 1], x[i])


def test_enumeration_count_l2():
    assert len(enumerate_good(L2, 3)) == 7


@pytest.mark.parametrize("A,m", [(L2, 3), (L3, 3), (Product((L2, Chain(1))), 2)], ids=str)
def test_monoid_laws_exhaustive(A, m):
    r = check_monoid_laws(A, max_len=m)
    assert r.ok and r.exhaustive, r


@pytest.mark.parametrize("A", [Chang(), Chain(None)], ids=str)
def test_monoid_laws_sampled(A):
    assert check_monoid_laws(A, max_len=3, budget=150).ok
    assert check_cancellation(A, max_len=3, budget=150).ok


@pytest.mark.parametrize("A", [L2, L3, Chain(4)], ids=str)
def test_cancellation_exhaustive(A):
    r = check_cancellation(A, max_len=3)
    assert r.ok and r.exhaustive


def test_cancellation_fails_for_a_non_cancellative_operation():
    r = check_cancellation(L2, max_len=2, add=good_sup)
    assert r.status == "fail" and r.axiom == "cancel"


def test_planted_wrong_table_breaks_the_monoid():
    # L2 with a wrong neg: neg(1/2) = 1 changes odot and so the sum
    base = FiniteTable.from_algebra(L2)
    neg = list(base.neg_table)
    neg[1] = 2
    bad = FiniteTable(3, base.oplus_table, tuple(neg), base.zero_index)
    r = check_monoid_laws(bad, max_len=2)
    assert r.status == "fail" and r.witness


@pytest.mark.parametrize("A", [L2, L3], ids=str)
def test_order_is_existential(A):
    assert check_order_existential(A, max_len=2).ok


def test_good_sequence_is_hashable_value():
    assert len({seq(L2, 1, h), GoodSequence(L2, (F(1), h))}) == 1

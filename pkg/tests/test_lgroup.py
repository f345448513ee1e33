from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mundici.lgroup import (
    FreePointwise,
    LexZ2,
    LHom,
    RationalVec,
    ScaledInt,
    abs_value,
    check_l_hom,
    check_lu_axioms,
    check_torsion_free,
    neg_part,
    pos_part,
)
from mundici.obstruction import CyclicMock

ZOO = [ScaledInt(1), ScaledInt(3), FreePointwise((1, 1)), FreePointwise((2, 3)), LexZ2((1, 0)), RationalVec((F(1),))]
ints = st.integers(-40, 40)


def test_abs_examples():
    assert abs_value(ScaledInt(1), -3) == 3
    assert abs_value(FreePointwise((1, 1)), (2, -1)) == (2, 1)
    assert abs_value(LexZ2(), (0, -5)) == (0, 5)


def test_parts_examples():
    Z = ScaledInt(1)
    assert pos_part(Z, -2) == 0 and neg_part(Z, -2) == 2
    assert pos_part(FreePointwise((1, 1)), (2, -1)) == (2, 0)
    assert pos_part(LexZ2(), (0, 3)) == (0, 3)


@pytest.mark.parametrize("G", ZOO, ids=str)
def test_axioms_pass(G):
    r = check_lu_axioms(G)
    assert r.ok, r


def test_non_strong_unit_fails_axiom_14():
    G = FreePointwise((1, 0))
    assert not G.strong
    r = check_lu_axioms(G)
    assert r.status == "fail" and r.axiom == 14 and r.witness == {"x": "(0,1)"}
    assert G.unit_bound((0, 1)) is None


@given(ints, ints)
def test_lex_unit_bound_is_sound(a, b):
    G = LexZ2()
    x = (a, b)
    n = G.unit_bound(x)
    assert G.leq(G.abs(x), G.times(n, G.unit))


@given(st.lists(ints, min_size=2, max_size=2), st.lists(st.integers(1, 4), min_size=2, max_size=2))
def test_pointwise_unit_bound_is_sound_and_minimal(x, u):
    G = FreePointwise(tuple(u))
    x = tuple(x)
    n = G.unit_bound(x)
    assert G.leq(G.abs(x), G.times(n, G.unit))
    if n > 0:
        assert not G.leq(G.abs(x), G.times(n - 1, G.unit))


@given(st.integers(-100, 100), st.integers(1, 6))
def test_scaled_unit_bound_minimal(x, n):
    G = ScaledInt(n)
    k = G.unit_bound(x)
    assert abs(x) <= k * n and (k == 0 or abs(x) > (k - 1) * n)


@pytest.mark.parametrize("G", ZOO, ids=str)
def test_decomposition_into_parts(G):
    import random

    rng = random.Random(1)
    for _ in range(100):
        x = G.sample(rng)
        p, m = G.pos_part(x), G.neg_part(x)
        assert G.sub(p, m) == x
        assert G.inf(p, m) == G.zero


@given(ints, ints, ints, ints, ints, ints)
def test_lex_translation_invariance(a, b, c, d, e, f):
    G = LexZ2()
    x, y, t = (a, b), (c, d), (e, f)
    if G.leq(x, y):
        assert G.leq(G.add(t, x), G.add(t, y))


def test_hom_examples():
    Z1, Z2 = ScaledInt(1), ScaledInt(2)
    assert check_l_hom(LHom.identity(Z2)).ok
    assert check_l_hom(LHom(Z1, Z2, lambda x: 2 * x, "double")).ok
    r = check_l_hom(LHom(Z1, Z2, lambda x: x, "incl"))
    assert r.status == "fail" and r.axiom == "unit"


@pytest.mark.parametrize("G", ZOO, ids=str)
def test_torsion_free(G):
    assert check_torsion_free(G, budget=50).ok


@pytest.mark.parametrize("k", range(2, 7))
def test_cyclic_mock_has_torsion(k):
    r = check_torsion_free(CyclicMock(k), budget=50)
    assert r.status == "fail" and r.witness["n"] <= k

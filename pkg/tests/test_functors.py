import random
from fractions import Fraction as F

import pytest

from mundici.errors import ImageEscapesInterval, NegativeElement
from mundici.functors import (
    GroupElement,
    check_naturality,
    check_strong_unit_of_l,
    gamma,
    gamma_hom,
    good_decompose,
    group_eq,
    l_group,
    l_hom,
    phi,
    psi,
    psi_backward,
    psi_forward,
)
from mundici.goodseq import enumerate_good, normalize, single, zero_seq
from mundici.lgroup import FreePointwise, LexZ2, LHom, RationalVec, ScaledInt, check_l_hom, check_lu_axioms
from mundici.mv import Chain, Chang, MvHom, Product, check_mv_axioms, check_mv_hom

L2, L3, L4 = Chain(2), Chain(3), Chain(4)
h = F(1, 2)


# gamma


def test_gamma_examples():
    assert gamma(ScaledInt(1)).elements() == [0, 1]
    G3 = gamma(ScaledInt(3))
    iso = MvHom(G3, L3, lambda k: F(k, 3), "k/3")
    assert check_mv_hom(iso).ok
    assert sorted(iso(k) for k in G3.elements()) == L3.elements()
    C = gamma(LexZ2())
    assert C.neg((0, 1)) == (1, -1)


@pytest.mark.parametrize(
    "G", [ScaledInt(2), FreePointwise((1, 2)), LexZ2(), RationalVec((F(1),))], ids=str
)
def test_gamma_is_an_mv_algebra(G):
    assert check_mv_axioms(gamma(G), budget=150).ok


@pytest.mark.parametrize("G", [ScaledInt(3), FreePointwise((2, 1)), LexZ2(), RationalVec((F(1), F(2)))], ids=str)
def test_gamma_odot_shortcut_matches_definition(G):
    A = gamma(G)
    rng = random.Random(0)
    for _ in range(200):
        x, y = A.sample(rng), A.sample(rng)
        assert A.odot(x, y) == A.neg(A.oplus(A.neg(x), A.neg(y)))


def test_gamma_hom():
    Z1, Z2 = ScaledInt(1), ScaledInt(2)
    g = gamma_hom(LHom(Z1, Z2, lambda x: 2 * x, "double"))
    assert [g(x) for x in gamma(Z1).elements()] == [0, 2]
    assert check_mv_hom(gamma_hom(LHom.identity(Z2))).ok
    assert check_l_hom(LHom(Z1, Z2, lambda x: x)).status == "fail"
    with pytest.raises(ImageEscapesInterval):
        gamma_hom(LHom(Z1, ScaledInt(1), lambda x: 3 * x))


# l_group


def test_l_group_examples():
    L = l_group(L2)
    a = L.pair([h])
    assert L.add(a, a) == L.unit
    for x in enumerate_good(L2, 2):
        assert GroupElement(x, x) == L.zero
    assert group_eq(L.pair([h]), L.pair([F(1)], [h]))


def test_group_elements_are_unhashable():
    with pytest.raises(TypeError):
        hash(l_group(L2).zero)


def test_group_eq_is_a_congruence():
    L = l_group(L2, 2)
    seqs = enumerate_good(L2, 2)
    els = [GroupElement(p, q) for p in seqs for q in seqs]
    rng = random.Random(0)
    for _ in range(300):
        x, y, z = rng.choice(els), rng.choice(els), rng.choice(els)
        if x == y:
            assert y == x
            assert L.add(x, z) == L.add(y, z)
            assert L.neg(x) == L.neg(y)
            assert L.inf(x, z) == L.inf(y, z)
            assert L.sup(x, z) == L.sup(y, z)
            if y == z:
                assert x == z


@pytest.mark.parametrize("A", [L2, L3, Product((L2, Chain(1))), Chang()], ids=str)
def test_l_group_axioms(A):
    assert check_lu_axioms(l_group(A, 3), budget=100).ok


@pytest.mark.parametrize("A", [L2, L3, Chang()], ids=str)
def test_strong_unit_of_l(A):
    assert check_strong_unit_of_l(A, max_len=2, budget=100).ok


def test_l_hom_functorial():
    i24 = MvHom(L2, L4, lambda x: x, "i24")
    L = l_hom(i24)
    assert check_l_hom(L, budget=60).ok
    assert L(l_group(L2).unit) == l_group(L4).unit
    idl = l_hom(MvHom.identity(L3))
    x = l_group(L3).pair([F(1), F(1, 3)], [F(2, 3)])
    assert idl(x) == x
    i12 = MvHom(Chain(1), L2, lambda x: x, "i12")
    comp = l_hom(i12.then(i24))
    step = l_hom(i12).then(l_hom(i24))
    for p in enumerate_good(Chain(1), 3):
        for q in enumerate_good(Chain(1), 3):
            y = GroupElement(p, q)
            assert comp(y) == step(y)


# phi


@pytest.mark.parametrize("A", [Chain(n) for n in range(1, 7)] + [Product((L2, L3))], ids=str)
def test_phi_iso_finite(A):
    w = phi(A)
    assert w.report.ok and w.report.exhaustive, w.report
    assert w.to_json()["iso"] is True


def test_phi_iso_chang():
    assert phi(Chang(), budget=100).report.ok


def test_phi_examples():
    w = phi(L2)
    GA = w.target
    assert w.forward(F(0)) == l_group(L2).zero
    assert GA.oplus(w.forward(h), w.forward(h)) == w.forward(F(1))


def test_interval_of_l3_is_in_bijection_with_l3():
    L = l_group(L3, 3)
    interval = L.interval_elements()
    assert len(interval) == 4
    w = phi(L3)
    assert sorted(w.backward(x) for x in interval) == L3.elements()


# psi


def test_good_decompose_examples():
    assert good_decompose(ScaledInt(1), 3).components == (1, 1, 1)
    assert good_decompose(ScaledInt(2), 0).components == ()
    assert good_decompose(FreePointwise((1, 1)), (2, 1)).components == ((1, 1), (1, 0))
    with pytest.raises(NegativeElement):
        good_decompose(ScaledInt(1), -1)


def test_psi_examples():
    Z = ScaledInt(1)
    L = l_group(gamma(Z))
    assert psi_forward(Z, 0) == L.zero
    two = psi_forward(Z, 2)
    assert two.p.components == (1, 1) and two.q.components == ()
    assert psi_backward(Z, two) == 2
    m = psi_forward(Z, -1)
    assert m.p.components == () and m.q.components == (1,)


@pytest.mark.parametrize(
    "G", [ScaledInt(n) for n in range(1, 5)] + [FreePointwise((1, 1)), LexZ2(), RationalVec((F(1),))], ids=str
)
def test_psi_iso(G):
    w = psi(G, budget=120)
    assert w.report.ok, w.report


def test_decomposition_is_unique_on_finite_intervals():
    # greedy result is the only good sequence over gamma(G) with the same total
    G = ScaledInt(3)
    A = gamma(G)
    for b in range(10):
        hits = [s for s in enumerate_good(A, 4) if sum(s.components) == b]
        assert hits == [good_decompose(G, b)]


# naturality


def test_naturality_examples():
    assert check_naturality(MvHom.identity(L3)).ok
    assert check_naturality(MvHom(L2, L4, lambda x: x, "i24")).ok
    assert check_naturality(LHom(ScaledInt(1), ScaledInt(2), lambda x: 2 * x, "double")).ok
    assert check_naturality(LHom.identity(LexZ2()), budget=60).ok


def test_unit_element_shapes():
    A = L3
    L = l_group(A)
    assert L.unit == GroupElement(single(A, F(1)), zero_seq(A))
    assert L.times(3, L.unit) == GroupElement(normalize(A, [F(1)] * 3), zero_seq(A))


from fractions import Fraction as F

import pytest

from mundici import zoo
from mundici.errors import NotContinuous, NotOpen, RestrictionEscapesInterval, SpecError
from mundici.lgroup import LHom, ScaledInt
from mundici.mv import Chain, is_isomorphic_finite
from mundici.sheaf import (
    FiniteSpace,
    StructSheaf,
    antichain,
    chain_space,
    check_gamma_sections,
    check_l_sections,
    check_point_classical,
    check_sections_strong,
    check_sheaf,
    check_sheaf_naturality,
    check_sheaf_roundtrip,
    constant_sheaf,
    gamma_sheaf,
    inverse_image,
    l_sheaf,
    point_space,
    restrict_sections,
    sections,
    sierpinski,
)

SHEAVES = zoo.sheaf_zoo()


# spaces


def test_sierpinski_opens():
    S = sierpinski()
    assert S.opens() == [frozenset(), frozenset({"o"}), frozenset({"c", "o"})]
    assert S.up("c") == {"c", "o"} and S.up("o") == {"o"}
    assert not S.is_open({"c"})


def test_space_counts():
    assert len(chain_space(3).opens()) == 4
    assert len(antichain(3).opens()) == 8
    assert len(point_space().opens()) == 2


def test_bad_spaces():
    with pytest.raises(SpecError):
        FiniteSpace(("a", "b"), ((True, False), (False, False)))
    with pytest.raises(SpecError):
        FiniteSpace(("a", "b", "c"), ((1, 1, 0), (0, 1, 1), (0, 0, 1)))
    with pytest.raises(SpecError):
        FiniteSpace(("a", "a"), ((1, 0), (0, 1)))


def test_bad_sheaves():
    X = sierpinski()
    with pytest.raises(SpecError):
        StructSheaf(X, {"c": Chain(2), "o": Chain(4)}, {})
    with pytest.raises(SpecError):
        StructSheaf(X, {"c": Chain(2), "o": ScaledInt(2)}, {})


# sections


def test_sierpinski_sections():
    Fs = SHEAVES["sierpinski-mv"]
    glob = sections(Fs, {"c", "o"})
    assert glob.elements() == [(F(0), F(0)), (F(1, 2), F(1, 2)), (F(1), F(1))]
    assert is_isomorphic_finite(glob, Chain(2))
    assert len(sections(Fs, {"o"}).elements()) == 5
    assert sections(Fs, set()).elements() == [()]
    assert not glob.contains((F(1, 2), F(1, 4)))


def test_sections_are_mv_algebras():
    from mundici.mv import check_mv_axioms

    for key in ("sierpinski-mv", "chain3-mv", "chain2-mv"):
        Fs = SHEAVES[key]
        for U in Fs.space.opens():
            assert check_mv_axioms(sections(Fs, U), budget=60).ok


def test_lu_sections():
    from mundici.lgroup import check_lu_axioms

    G = SHEAVES["sierpinski-lu"]
    glob = sections(G, {"c", "o"})
    assert glob.unit == (2, 4)
    assert len(glob.interval_elements()) == 3
    assert check_lu_axioms(glob, budget=60).ok


def test_not_open():
    with pytest.raises(NotOpen):
        sections(SHEAVES["sierpinski-mv"], {"c"})


def test_restrict_sections():
    from mundici.mv import check_mv_hom

    Fs = SHEAVES["sierpinski-mv"]
    r = restrict_sections(Fs, {"c", "o"}, {"o"})
    assert r((F(1, 2), F(1, 2))) == (F(1, 2),)
    assert check_mv_hom(r).ok


# functors on sheaves


def test_gamma_sheaf_stalks():
    H = gamma_sheaf(SHEAVES["sierpinski-lu"])
    assert len(H.stalk("c").elements()) == 3
    assert len(H.stalk("o").elements()) == 5
    assert check_sheaf(H).ok


def test_gamma_sheaf_escape():
    X = sierpinski()
    G2 = ScaledInt(2)
    bad = StructSheaf(X, {"c": G2, "o": G2}, {("c", "o"): LHom(G2, G2, lambda x: 3 * x, "triple")})
    r = check_sheaf(bad)
    assert r.status == "fail" and r.axiom == "unit"
    with pytest.raises(RestrictionEscapesInterval):
        gamma_sheaf(bad)


def test_constant_sheaf():
    K = constant_sheaf(chain_space(3), Chain(3))
    assert check_sheaf(K).ok
    assert len(sections(K, {0, 1, 2}).elements()) == 4
    assert check_sheaf_roundtrip(K, max_len=2, budget=40).ok


def test_antichain_l_sheaf():
    K = StructSheaf(antichain(2), {0: Chain(1), 1: Chain(2)}, {})
    LK = l_sheaf(K, 2)
    assert check_sheaf(LK, budget=40).ok
    assert check_l_sections(K, max_len=2, budget=40).ok
    assert len(sections(K, {0, 1}).elements()) == 6


def test_inverse_image():
    Fs = SHEAVES["sierpinski-mv"]
    same = inverse_image({"c": "c", "o": "o"}, sierpinski(), Fs)
    assert same.stalks == Fs.stalks
    const = inverse_image({0: "o", 1: "o", 2: "o"}, chain_space(3), Fs)
    assert all(S == Chain(4) for S in const.stalks.values())
    assert check_sheaf(const).ok
    with pytest.raises(NotContinuous):
        inverse_image({"c": "o", "o": "c"}, sierpinski(), Fs)
    with pytest.raises(NotContinuous):
        inverse_image({"c": "c"}, sierpinski(), Fs)


@pytest.mark.parametrize("name", sorted(SHEAVES))
def test_sheaf_roundtrip(name):
    Fs = SHEAVES[name]
    assert check_sheaf(Fs, budget=40).ok
    assert check_sheaf_roundtrip(Fs, max_len=2, budget=40).ok


@pytest.mark.parametrize("name,f,X,ys", zoo.sheaf_maps(), ids=[m[0] for m in zoo.sheaf_maps()])
def test_sheaf_naturality(name, f, X, ys):
    r = check_sheaf_naturality(f, X, [SHEAVES[y] for y in ys], max_len=2, budget=40)
    assert r.ok, r


def test_point_classical():
    assert check_point_classical(SHEAVES["point-mv"], max_len=2, budget=40).ok
    assert check_point_classical(SHEAVES["point-lu"], max_len=2, budget=40).ok


@pytest.mark.parametrize("name", ["sierpinski-lu", "chain3-lu", "chain2-lu", "point-lu"])
def test_sections_of_groups(name):
    G = SHEAVES[name]
    assert check_gamma_sections(G, budget=40).ok
    assert check_sections_strong(G, budget=40).ok


@pytest.mark.parametrize("name", ["sierpinski-mv", "chain2-mv"])
def test_l_sections(name):
    assert check_l_sections(SHEAVES[name], max_len=2, budget=40).ok

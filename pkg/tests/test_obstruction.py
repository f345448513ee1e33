import pytest

from mundici import zoo
from mundici.lgroup import check_lu_axioms, check_torsion_free
from mundici.obstruction import (
    CyclicMock,
    check_non_bi_interpretability,
    lattice_ordered_finite_groups,
    small_abelian_groups,
)


def test_only_trivial_finite_l_group():
    assert lattice_ordered_finite_groups(6) == [("Z/1", (0,))]


def test_small_group_list():
    names = [g[0] for g in small_abelian_groups(6)]
    assert "Z/2xZ/2" in names and len(names) == 7


@pytest.mark.parametrize("k", [2, 3, 5])
def test_cyclic_mock_has_torsion(k):
    r = check_torsion_free(CyclicMock(k), budget=30)
    assert r.status == "fail" and r.witness


@pytest.mark.parametrize("k", [2, 3])
def test_cyclic_mock_is_not_an_l_group(k):
    assert check_lu_axioms(CyclicMock(k), budget=80).status == "fail"


def test_trivial_cyclic_is_torsion_free():
    assert check_torsion_free(CyclicMock(1), budget=10).ok


def test_report():
    r = check_non_bi_interpretability(zoo.group_zoo(), budget=30)
    assert r.ok, r
    bad = check_non_bi_interpretability({"Z/3": CyclicMock(3)}, budget=30)
    assert bad.status == "fail"

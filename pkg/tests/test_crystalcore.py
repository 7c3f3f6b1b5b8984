import pytest
from hypothesis import given, strategies as st

from cellcrystal.crystalcore import (NEG_INF, ZERO, ElementaryCrystal, MonomialCrystal, TensorCrystal,
                                     elementary_tensor, generate_component, graph_isomorphic, monomial,
                                     vector_crystal_graph)
from cellcrystal.errors import InvalidInput
from cellcrystal.rootdata import cartan_matrix

A2 = cartan_matrix("A", 2).a
WORD = (1, 2, 1, 2, 1)


def test_elementary_crystal():
    b = ElementaryCrystal(A2, 1)
    assert b.wt(3) == (6, -3)
    assert b.eps(3, 1) == -3 and b.phi(3, 1) == 3
    assert b.eps(3, 2) == NEG_INF and b.e(3, 2) is ZERO
    assert b.f(b.e(3, 1), 1) == 3


def test_bad_color():
    with pytest.raises(InvalidInput):
        ElementaryCrystal(A2, 3)


points = st.lists(st.integers(-6, 6), min_size=len(WORD), max_size=len(WORD)).map(tuple)


@given(points, st.sampled_from([1, 2]))
def test_tensor_rules_agree_and_invert(b, i):
    multi, binary = elementary_tensor(A2, WORD), elementary_tensor(A2, WORD, "binary")
    assert multi.e(b, i) == binary.e(b, i)
    assert multi.f(b, i) == binary.f(b, i)
    assert multi.e(multi.f(b, i), i) == b
    assert multi.phi(b, i) - multi.eps(b, i) == multi.wt(b)[i - 1]


@given(points, st.sampled_from([1, 2]))
def test_eps_shift_under_e(b, i):
    t = elementary_tensor(A2, WORD)
    assert t.eps(t.e(b, i), i) == t.eps(b, i) - 1


@pytest.mark.parametrize("fam,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_monomial_component_matches_vector_crystal(fam, n):
    ref = vector_crystal_graph(fam, n)
    cr = MonomialCrystal(cartan_matrix(fam, n).a)
    g = generate_component(cr, monomial({(1, 1): 1}), 4 * n, mode="f")
    assert len(g) == len(ref)
    ok, why = graph_isomorphic(g, ref, labels=("wt", "eps", "phi"))
    assert ok, why


def test_graph_structure_and_exports():
    t = TensorCrystal([ElementaryCrystal(A2, 1), ElementaryCrystal(A2, 2)])
    g = generate_component(t, (0, 0), 2)
    assert not g.check_structure()
    assert g.to_dot().startswith("digraph")
    assert len(g.to_json()["nodes"]) == len(g)


def test_step_bound_zero_and_negative():
    t = elementary_tensor(A2, WORD)
    assert len(generate_component(t, (0,) * 5, 0)) == 1
    with pytest.raises(InvalidInput):
        generate_component(t, (0,) * 5, -1)

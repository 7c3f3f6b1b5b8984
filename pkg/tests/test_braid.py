import numpy as np
import pytest
from hypothesis import given, strategies as st

from cellcrystal import braid
from cellcrystal.cellular import CellularCrystal, binf_truncation, potential_catalog
from cellcrystal.errors import InvalidInput
from cellcrystal.rootdata import BraidMove, canonical_longest_word, cartan_matrix, word_graph_path


def window(n):
    return st.lists(st.integers(-9, 9), min_size=n, max_size=n).map(tuple)


def test_commuting_move_swaps():
    t = braid.load_transition(0, 1)
    assert t((3, -4)) == (-4, 3)


@given(window(3))
def test_length_three_closed_form_is_involutive(x):
    t = braid.load_transition(1, 1)
    assert t(t(x)) == x


def test_length_three_rederived_from_matrices():
    derived, closed = braid.derive_phi(1), braid.load_transition(1, 1)
    rng = np.random.default_rng(0)
    for x in rng.integers(-8, 9, size=(500, 3)):
        assert derived(tuple(x)) == closed(tuple(x))


@pytest.mark.parametrize("k,L", [(2, 4), (3, 6)])
def test_rank_two_transitions_are_mutually_inverse(k, L):
    fwd, back = braid.load_transition(k, 1), braid.load_transition(k, 2)
    X = np.random.default_rng(k).integers(-9, 10, size=(2000, L))
    assert (back.batch(fwd.batch(X)) == X).all()
    assert (fwd.batch(back.batch(X)) == X).all()


def test_fixture_json_roundtrip():
    t = braid.load_transition(2, 1)
    again = braid.TropTransition.from_json(t.to_json())
    x = (3, -1, 4, -1)
    assert again(x) == t(x)


@pytest.mark.parametrize("fam,n", [("A", 2), ("C", 2), ("B", 2), ("G", 2)])
def test_transport_is_a_crystal_morphism(fam, n):
    c = cartan_matrix(fam, n)
    w1 = canonical_longest_word(fam, n)
    w2 = tuple(reversed(w1))
    path = word_graph_path(c, w1, w2)
    A, B = CellularCrystal(c, w1), CellularCrystal(c, w2)
    rng = np.random.default_rng(1)
    for x in rng.integers(-6, 7, size=(150, len(w1))):
        x = tuple(int(v) for v in x)
        y = braid.apply_path(c, w1, x, path)[1]
        assert A.wt(x) == B.wt(y)
        for i in c.index_set:
            assert A.eps(x, i) == B.eps(y, i)
            assert braid.apply_path(c, w1, A.f(x, i), path)[1] == B.f(y, i)


def test_round_trip_a2():
    c = cartan_matrix("A", 2)
    w, x = (1, 2, 1), (2, -3, 5)
    path = word_graph_path(c, w, (2, 1, 2))
    w2, y = braid.apply_path(c, w, x, path)
    assert braid.apply_path(c, w2, y, braid.reverse_path(w, path)) == (w, x)


def test_omega_nonnegative_on_binf_a3():
    c = cartan_matrix("A", 3)
    g, _ = binf_truncation("A", 3, 4)
    w = potential_catalog("A", 3).word
    assert all(braid.omega(c, w, x, i) >= 0 for x in g.nodes for i in c.index_set)


def test_omega_first_and_last_on_leading_word():
    c = cartan_matrix("A", 2)
    assert braid.omega(c, (1, 2, 1), (4, 5, 6), 1) == 4
    assert braid.omega(c, (1, 2, 1), (4, 5, 6), 1, end="last") == 6
    with pytest.raises(InvalidInput):
        braid.omega(c, (1, 2, 1), (4, 5, 6), 1, end="middle")


def test_xi_zeroes_the_leading_coordinate():
    c = cartan_matrix("A", 2)
    assert braid.xi(c, (1, 2, 1), (4, 5, 6), 1)[0] == 0


def test_bad_move_rejected():
    with pytest.raises(InvalidInput):
        BraidMove(1, 1, 2, 3).apply((2, 1, 2))

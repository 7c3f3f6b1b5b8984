import pytest
from hypothesis import given, strategies as st

from cellcrystal.errors import InvalidInput
from cellcrystal.rootdata import (BraidMove, braid_length, canonical_longest_word, cartan_matrix,
                                  is_longest, is_reduced, langlands_dual, parse_word,
                                  positive_roots_from_word, reflect, replay, word_graph_path)

# number of positive roots, from the standard classification
POS_ROOTS = {("A", 1): 1, ("A", 4): 10, ("B", 3): 9, ("C", 4): 16, ("D", 5): 20,
             ("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}


@pytest.mark.parametrize("fam,n", sorted(POS_ROOTS))
def test_positive_root_count_and_longest_word(fam, n):
    c = cartan_matrix(fam, n)
    assert c.num_positive_roots == POS_ROOTS[fam, n]
    w = canonical_longest_word(fam, n)
    assert len(w) == POS_ROOTS[fam, n]
    assert is_longest(c, w)
    assert sorted(positive_roots_from_word(c, w)) == sorted(c.positive_roots)


def test_cartan_conventions():
    assert cartan_matrix("B", 2).a == ((2, -1), (-2, 2))
    assert cartan_matrix("C", 2).a == ((2, -2), (-1, 2))
    assert cartan_matrix("G", 2).a == ((2, -1), (-3, 2))
    assert langlands_dual(cartan_matrix("B", 3)).a == cartan_matrix("C", 3).a


def test_invalid_types_rejected():
    for fam, n in [("Q", 2), ("D", 3), ("E", 5), ("G", 3), ("A", 0)]:
        with pytest.raises(InvalidInput):
            cartan_matrix(fam, n)


def test_braid_lengths():
    assert braid_length(cartan_matrix("A", 3), 1, 3) == 2
    assert braid_length(cartan_matrix("A", 3), 1, 2) == 3
    assert braid_length(cartan_matrix("C", 2), 1, 2) == 4
    assert braid_length(cartan_matrix("G", 2), 2, 1) == 6


def test_reducedness():
    c = cartan_matrix("A", 2)
    assert not is_reduced(c, (1, 1))
    assert is_reduced(c, (1, 2, 1)) and not is_reduced(c, (1, 2, 1, 2))


@pytest.mark.parametrize("fam,n", [("A", 3), ("B", 3), ("G", 2), ("D", 4)])
def test_word_graph_path_reaches_target(fam, n):
    c = cartan_matrix(fam, n)
    w = canonical_longest_word(fam, n)
    target = tuple(reversed(w))
    path = word_graph_path(c, w, target)
    assert replay(w, path) == target


def test_braid_move_roundtrip():
    mv = BraidMove(2, 1, 2, 3)
    w = (3, 1, 2, 1)
    assert mv.reverse().apply(mv.apply(w)) == w
    with pytest.raises(InvalidInput):
        mv.apply((1, 1, 1, 1))


@pytest.mark.parametrize("text", ["121", "1,2,1", "1 2 1"])
def test_parse_word(text):
    assert parse_word(text) == (1, 2, 1)


@given(st.sampled_from([("A", 3), ("B", 2), ("C", 3), ("G", 2)]), st.data())
def test_reflection_is_involution(t, data):
    c = cartan_matrix(*t)
    i = data.draw(st.integers(1, c.rank))
    w = tuple(data.draw(st.lists(st.integers(-5, 5), min_size=c.rank, max_size=c.rank)))
    assert reflect(c, i, reflect(c, i, w)) == w

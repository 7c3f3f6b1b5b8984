import pytest
from hypothesis import given, strategies as st

from cellcrystal.cellular import (CellularCrystal, binf_member, binf_truncation, catalog_laurent,
                                  cell_e_pow, ef_partial_potential, from_tensor, ks_check,
                                  lower_normality_check, lower_potential_from_minors,
                                  lowest_term_check, potential_catalog, potential_from_minors,
                                  psi_morphism_report, tensor_model, to_tensor)
from cellcrystal.crystalcore import ZERO
from cellcrystal.errors import InvalidInput, UnsupportedMinor
from cellcrystal.rootdata import canonical_longest_word, cartan_matrix
from conftest import kostant_counts

G2 = cartan_matrix("G", 2)
W = canonical_longest_word("G", 2)
pts = st.lists(st.integers(-7, 7), min_size=6, max_size=6).map(tuple)


@given(pts, st.sampled_from([1, 2]))
def test_cellular_matches_tensor_model(x, i):
    cr, tm = CellularCrystal(G2, W), tensor_model(G2, W)
    b = to_tensor(x)
    assert from_tensor(b) == x
    assert cr.wt(x) == tm.wt(b)
    assert cr.eps(x, i) == tm.eps(b, i)
    assert cr.e(x, i) == from_tensor(tm.e(b, i))
    assert cr.f(x, i) == from_tensor(tm.f(b, i))


@given(pts, st.sampled_from([1, 2]), st.integers(-4, 4), st.integers(-4, 4))
def test_e_power_is_a_group_action(x, i, m, n):
    cr = CellularCrystal(G2, W)
    assert cell_e_pow(G2, W, x, i, 1) == cr.e(x, i)
    assert cell_e_pow(G2, W, x, i, -1) == cr.f(x, i)
    assert cell_e_pow(G2, W, cell_e_pow(G2, W, x, i, m), i, n) == cell_e_pow(G2, W, x, i, m + n)


def test_catalog_g2_has_fourteen_terms():
    assert len(catalog_laurent("G", 2).terms) == 14


@pytest.mark.parametrize("fam,n", [("A", 3), ("C", 3), ("G", 2)])
def test_catalog_equals_minor_sum(fam, n):
    assert potential_from_minors(fam, n).laurent == potential_catalog(fam, n).laurent


def test_spin_minor_is_not_realized():
    with pytest.raises(UnsupportedMinor):
        potential_from_minors("B", 2)


@pytest.mark.parametrize("fam,n,depth", [("A", 2, 6), ("C", 2, 6), ("G", 2, 6), ("A", 3, 5)])
def test_truncation_sizes_match_partition_function(fam, n, depth):
    c = cartan_matrix(fam, n)
    want = sum(kostant_counts([sum(r) for r in c.positive_roots], depth))
    for real in ("potential", "tensor"):
        assert len(binf_truncation(fam, n, depth, real)[0]) == want


def test_truncation_has_unique_source_at_origin():
    g, _ = binf_truncation("B", 2, 4)
    assert g.sources() == [0] and g.nodes[0] == (0, 0, 0, 0)
    assert len(binf_truncation("B", 2, 0)[0]) == 1


def test_cutoff_blocks_leaving_the_cone():
    pot = potential_catalog("A", 2)
    cr = CellularCrystal(cartan_matrix("A", 2), pot.word, pot)
    assert cr.e((0, 0, 0), 1) is ZERO and cr.e((0, 0, 0), 2) is ZERO
    assert binf_member(cr.f((0, 0, 0), 1), pot)


def test_ks_conditions_b2():
    assert all(r.passed for r in ks_check("B", 2, 4).values())


def test_ks_detects_weakened_potential():
    pot = potential_catalog("A", 2)
    weak = pot.without_form((0, 0, 1))
    assert not all(r.passed for r in ks_check("A", 2, 4, weak).values())


def test_psi_is_a_strict_morphism_a2():
    for i in (1, 2):
        assert psi_morphism_report("A", 2, 4, i).ok


def test_lower_normality_a2():
    assert lower_normality_check("A", 2, 4).passed
    assert lower_potential_from_minors("A", 2).word[-1] in (1, 2)


@pytest.mark.parametrize("fam,n", [("A", 3), ("C", 2), ("G", 2)])
def test_lowest_terms_present(fam, n):
    assert all(lowest_term_check(fam, n, j).passed for j in range(1, n + 1))


def test_exceptional_partial_potential_is_marked():
    pot = ef_partial_potential("E", 6)
    assert pot.partial and len(pot.forms) == 6


def test_depth_zero_ks_rejected():
    with pytest.raises(InvalidInput):
        ks_check("A", 2, 0)

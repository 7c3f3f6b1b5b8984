import pytest

from cellcrystal.cellular import CellularCrystal, binf_member, potential_catalog
from cellcrystal.connectivity import (condition_H_check, connectedness_report, constructive_certificate,
                                      coverage_check, decompose, h_basis, intersection_witness,
                                      kernel_basis, beta_rows, pair_bfs, shift_equivariance_check)
from cellcrystal.rootdata import cartan_matrix

A2 = cartan_matrix("A", 2)


def test_a2_lattice_by_hand():
    # beta_1 = x1 - x2 + x3 on 1 2 1, so the kernel is spanned by (1,1,0) and (0,1,1)
    assert beta_rows(A2, (1, 2, 1)) == {0: (1, -1, 1)}
    lat = h_basis(A2)
    assert lat.same_lattice
    assert sorted(lat.generators) == [(0, 1, 1), (1, 1, 0)]
    assert len(kernel_basis(A2, (1, 2, 1))) == 2


@pytest.mark.parametrize("fam,n", [("B", 4), ("D", 5), ("E", 6), ("F", 4), ("G", 2)])
def test_lattice_equality(fam, n):
    assert h_basis(cartan_matrix(fam, n)).same_lattice


def test_shift_equivariance_small():
    assert shift_equivariance_check(cartan_matrix("C", 2), samples=500).passed


@pytest.mark.parametrize("fam,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2)])
def test_condition_h(fam, n):
    assert condition_H_check(cartan_matrix(fam, n), potential_catalog(fam, n)).passed


def test_condition_h_reports_a_bad_form():
    pot = potential_catalog("A", 2).with_form((2, 0, 0))
    rep = condition_H_check(A2, pot)
    assert not rep.passed and rep.details["offending"] == [[2, 0, 0]]
    assert decompose(A2, (1, 2, 1), (1, 0, 0))


def test_intersection_witness_membership():
    pot = potential_catalog("A", 2)
    H = (1, 2, 1)
    w = intersection_witness(A2, pot, H)
    assert binf_member(w, pot) and binf_member(tuple(a - b for a, b in zip(w, H)), pot)


def test_coverage_small_box():
    assert coverage_check(cartan_matrix("G", 2), potential_catalog("G", 2), 2).passed


def test_certificate_and_direct_search_agree():
    pot = potential_catalog("A", 2)
    cert = constructive_certificate(A2, pot, (-3, 2, -1))
    assert cert["ok"]
    free = CellularCrystal(A2, pot.word)
    assert pair_bfs(free, (-3, 2, -1), (0, 0, 0), -6, 6) is True


def test_report_a2_and_refusal():
    rep = connectedness_report("A", 2, 3, 20)
    assert rep["ok"] and rep["pairs"]["failed"] == 0
    assert connectedness_report("E", 6, 2, 5)["status"] == "refused"

import pytest

from cellcrystal.crystalcore import as_cartan, generate_component
from cellcrystal.polyhedral import (PolyhedralCrystal, cyclic_iota, generate_Xi, membership_label,
                                    sigma_membership)
from cellcrystal.rootdata import cartan_matrix
from conftest import kostant_counts


def _crystal(fam, n):
    return PolyhedralCrystal(as_cartan(zip(*cartan_matrix(fam, n).a)), cyclic_iota(n))


@pytest.mark.parametrize("fam,n,depth", [("A", 2, 6), ("B", 2, 5), ("G", 2, 5), ("A", 3, 4)])
def test_depth_counts_match_partition_function(fam, n, depth):
    c = cartan_matrix(fam, n)
    want = sum(kostant_counts([sum(r) for r in c.positive_roots], depth))
    assert len(generate_component(_crystal(fam, n), (), depth, mode="f")) == want


def test_xi_closure_a2():
    a = as_cartan(zip(*cartan_matrix("A", 2).a))
    xi = generate_Xi(a, cyclic_iota(2), 3)
    assert membership_label(xi) == "ok"
    assert sigma_membership((0, 0, 0), xi)
    # f_1 f_2 from the top lands inside; a lone negative coordinate does not
    cr = _crystal("A", 2)
    b = cr.f(cr.f((), 2), 1)
    assert sigma_membership(tuple(b) + (0,) * (3 - len(b)), xi)
    assert not sigma_membership((0, -1, 0), xi)


def test_iota_rejects_repeats():
    from cellcrystal.errors import InvalidInput
    from cellcrystal.polyhedral import Iota

    with pytest.raises(InvalidInput):
        Iota((1, 1, 2), 2)

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cellcrystal.grouprep import (chamber_solve, defining_rep, determinant, generalized_minor,
                                  geo_e, geo_eps, mat_equal, mat_mul, product_rep_a1a1,
                                  random_point, theta_minus, y_sub)
from cellcrystal.rootdata import canonical_longest_word, cartan_matrix
from cellcrystal.tropsym import eval_positive

# dimensions of the standard (vector) representations
DIMS = {("A", 3): 4, ("B", 3): 7, ("C", 3): 6, ("D", 4): 8, ("G", 2): 7}

fracs = st.fractions(min_value=Fraction(-20), max_value=Fraction(20), max_denominator=50)


@pytest.mark.parametrize("fam,n", sorted(DIMS))
def test_defining_reps_satisfy_relations(fam, n):
    # construction verifies the Chevalley and Serre relations and raises on failure
    rep = defining_rep(fam, n)
    assert rep.dim == DIMS[fam, n]
    assert rep.a == cartan_matrix(fam, n).a


def test_product_rep_has_commuting_generators():
    rep = product_rep_a1a1()
    assert rep.a == ((2, 0), (0, 2))


@given(fracs, fracs)
def test_one_parameter_subgroup(a, b):
    rep = defining_rep("C", 2)
    for i in (1, 2):
        assert mat_equal(mat_mul(y_sub(rep, i, a), y_sub(rep, i, b)), y_sub(rep, i, a + b))


def test_determinant_small():
    assert determinant([[2, 1], [1, 1]]) == 1
    assert determinant([[0, 1, 0], [1, 0, 0], [0, 0, 3]]) == -3


def _numeric(M, pt):
    return [[eval_positive(e, pt) if hasattr(e, "terms") else e for e in r] for r in M]


@pytest.mark.parametrize("fam,src,dst", [("A", (1, 2, 1), (2, 1, 2)), ("C", (1, 2, 1, 2), (2, 1, 2, 1)),
                                         ("C", (2, 1, 2, 1), (1, 2, 1, 2))])
def test_chamber_solution_reassembles(fam, src, dst):
    rep = defining_rep(fam, 2)
    sol = chamber_solve(rep, src, dst)
    assert all(d.is_subtraction_free() for d in sol.d)
    rng = random.Random(3)
    for _ in range(5):
        pt = random_point(rng, len(src))
        d = [eval_positive(r, pt) for r in sol.d]
        lhs = theta_minus(rep, src, pt)
        assert mat_equal(lhs, theta_minus(rep, dst, d))


def test_lowest_generalized_minor_is_one():
    rep = defining_rep("A", 3)
    w = canonical_longest_word("A", 3)
    g = theta_minus(rep, w)
    assert all(generalized_minor(rep, g, w, (), i) == 1 for i in (1, 2, 3))


def test_geometric_action_is_unital_and_multiplicative():
    c = cartan_matrix("A", 2)
    w = (1, 2, 1)
    rng = random.Random(0)
    x = random_point(rng, 3)
    assert geo_e(c, w, 1, Fraction(1), x) == x
    a, b = Fraction(2, 3), Fraction(5, 7)
    assert geo_e(c, w, 1, a, geo_e(c, w, 1, b, x)) == geo_e(c, w, 1, a * b, x)
    assert geo_eps(c, w, 1, geo_e(c, w, 1, a, x)) == geo_eps(c, w, 1, x) / a

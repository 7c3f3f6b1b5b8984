from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cellcrystal.errors import InvalidInput, NotDivisible
from cellcrystal.tropsym import (Flattening, LaurentPoly, RationalPair, TropForm, eval_positive,
                                 tropicalize, tropicalize_ratio)

x, y = LaurentPoly.var(2, 0), LaurentPoly.var(2, 1)

exps = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
polys = st.dictionaries(exps, st.integers(1, 5), min_size=1, max_size=4).map(lambda d: LaurentPoly(2, d))
points = st.tuples(st.fractions(min_value=Fraction(1, 9), max_value=9),
                   st.fractions(min_value=Fraction(1, 9), max_value=9)).filter(lambda p: min(p) > 0)
ints = st.tuples(st.integers(-20, 20), st.integers(-20, 20))


def test_binomial_square():
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y


def test_negative_powers_cancel():
    assert x ** -2 * x ** 2 == 1


def test_exact_division_and_failure():
    assert ((x + y) * (x - y)).div_exact(x + y) == x - y
    with pytest.raises(NotDivisible):
        (x * x + 1).div_exact(x + y)


def test_rational_pair_equality_is_cross_multiplication():
    r = RationalPair(x * x - y * y, x + y)
    assert r == RationalPair(x - y)
    assert r.num.div_exact(r.den) == x - y
    assert RationalPair(2 * x, 4 * x * y).den == LaurentPoly.const(2, 2)


def test_text_roundtrip_with_flattening():
    fl = Flattening((1, 2, 1))
    p = fl.var(1, 1) * fl.var(1, 2) ** -1 + 3 * fl.var(2, 1)
    assert LaurentPoly.parse(p.to_text(fl), flat=fl) == p


def test_tropicalize_requires_positive_coefficients():
    with pytest.raises(InvalidInput):
        tropicalize(x - y)


def test_trop_form_dedup_and_eval():
    t = TropForm(((1, 0), (0, 1), (1, 0)))
    assert t.forms == ((0, 1), (1, 0))
    assert t((3, -2)) == -2


@given(polys, polys, points)
def test_evaluation_is_a_ring_map(f, g, p):
    assert eval_positive(f * g, p) == eval_positive(f, p) * eval_positive(g, p)
    assert eval_positive(f + g, p) == eval_positive(f, p) + eval_positive(g, p)


@given(polys, polys, ints)
def test_tropicalization_turns_product_into_sum(f, g, v):
    assert tropicalize(f * g)(v) == tropicalize(f)(v) + tropicalize(g)(v)
    assert tropicalize(f + g)(v) == min(tropicalize(f)(v), tropicalize(g)(v))


@given(polys, polys, ints)
def test_ratio_tropicalization(f, g, v):
    r = tropicalize_ratio(RationalPair(f, g))
    assert r(v) == tropicalize(f)(v) - tropicalize(g)(v)


@given(st.integers(1, 30), ints)
def test_tropical_value_is_the_dominant_exponent(t, v):
    # at x_k = s^{v_k} with 0 < s < 1 the lowest exponent m gives c s^m <= f <= (sum c) s^m
    f = x + 2 * x * y ** -1 + y ** 2
    s = Fraction(1, t + 1)
    m = tropicalize(f)(v)
    val = eval_positive(f, (s ** v[0], s ** v[1]))
    lead = sum(c for e, c in f.terms.items() if e[0] * v[0] + e[1] * v[1] == m)
    assert lead * s ** m <= val <= sum(f.terms.values()) * s ** m

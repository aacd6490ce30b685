from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixed_eulerian.polynomial import RationalPoly, product


def x(k, n=3):
    return RationalPoly.variable(n, k)


def test_zero_coefficients_dropped():
    p = x(0) - x(0)
    assert p.is_zero() and len(p) == 0
    assert RationalPoly(2, {(1, 0): 0}).is_zero()


def test_arithmetic_and_evaluation():
    p = (x(0) + 2 * x(1)) ** 2
    assert p.coefficient((1, 1, 0)) == 4
    assert p.evaluate((1, 1, 5)) == 9
    assert p.is_homogeneous(2)
    assert not (p + 1).is_homogeneous()


def test_uniform_specialization():
    p = x(0) * (x(0) + x(1)) + Fraction(1, 2) * x(2)
    assert p.uniform_specialization() == {2: 2, 1: Fraction(1, 2)}


def test_mismatched_variables():
    with pytest.raises(ValueError):
        x(0, 2) + x(0, 3)
    with pytest.raises(ValueError):
        RationalPoly(2, {(1,): 1})


def test_product_helper_and_repr():
    p = product([x(0), x(1), x(1)], 3)
    assert p == RationalPoly.monomial((1, 2, 0))
    assert repr(p) == "x1*x2^2"
    assert repr(RationalPoly(3)) == "0"


polys = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)),
    st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)),
    max_size=4,
).map(lambda d: RationalPoly(2, d))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p - p == RationalPoly(2)


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_evaluation_is_a_homomorphism(p, q, pt):
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)

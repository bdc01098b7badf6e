from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polarcount.laurent import LaurentPoly, RationalFunction
from polarcount.ypoly import Y, YPoly

exponents = st.tuples(
    st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3)
)
coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=4)
polys2 = st.dictionaries(exponents, coeffs, max_size=5).map(
    lambda d: LaurentPoly(2, d)
)
points2 = st.tuples(
    st.fractions(min_value=-5, max_value=5, max_denominator=3).filter(bool),
    st.fractions(min_value=-5, max_value=5, max_denominator=3).filter(bool),
)
safe_y = st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(
    lambda y: y != -1
)


def test_zero_coefficients_dropped():
    p = LaurentPoly(2, {(1, 0): 0, (0, 1): 2})
    assert p.terms == {(0, 1): YPoly((2,))}
    assert not LaurentPoly.zero(2)


def test_exponent_length_checked():
    with pytest.raises(ValueError):
        LaurentPoly(2, {(1,): 1})


def test_constructors():
    z1 = LaurentPoly.variable(2, 0)
    assert z1.terms == {(1, 0): YPoly((1,))}
    c = LaurentPoly.const(2, Fraction(1, 2))
    assert c.coefficient((0, 0)) == YPoly((Fraction(1, 2),))
    m = LaurentPoly.monomial(2, (-1, 2), Y)
    assert m.coefficient((-1, 2)) == Y


def test_arithmetic():
    z1, z2 = LaurentPoly.variable(2, 0), LaurentPoly.variable(2, 1)
    p = (1 + z1) * (1 + z2)
    assert p.coefficient((1, 1)) == YPoly((1,))
    assert p.coefficient((0, 0)) == YPoly((1,))
    assert (p - p) == LaurentPoly.zero(2)
    q = (1 + z1) ** 2
    assert q.coefficient((1, 0)) == YPoly((2,))
    assert (z1 * z2).coefficient((1, 1)) == YPoly((1,))


def test_negative_exponents_and_eval():
    zinv = LaurentPoly.monomial(2, (-1, 0))
    assert zinv.eval((2, 7), 0) == Fraction(1, 2)
    with pytest.raises(ValueError):
        zinv.eval((0, 1), 0)
    with pytest.raises(ValueError):
        zinv.eval((1,), 0)


def test_min_exponents():
    p = LaurentPoly(2, {(-1, 2): 1, (3, -4): 1})
    assert p.min_exponents() == (-1, -4)
    assert LaurentPoly.zero(2).min_exponents() == (0, 0)


def test_content():
    p = LaurentPoly(2, {(0, 0): Fraction(2, 3), (1, 0): Fraction(4, 3)})
    assert p.content() == Fraction(2, 3)


@given(polys2, polys2, points2, safe_y)
def test_eval_is_ring_homomorphism(p, q, z, y):
    assert (p + q).eval(z, y) == p.eval(z, y) + q.eval(z, y)
    assert (p * q).eval(z, y) == p.eval(z, y) * q.eval(z, y)


def test_rational_function_rejects_zero_denominator():
    one = LaurentPoly.const(1, 1)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(one, LaurentPoly.zero(1))


def test_equivalence_by_cross_multiplication():
    z = LaurentPoly.variable(1, 0)
    one = LaurentPoly.const(1, 1)
    # (1 - z^2)/(1 - z) == (1 + z)/1
    f = RationalFunction(one - z * z, one - z)
    g = RationalFunction(one + z, one)
    assert f.equivalent(g)
    assert not f.equivalent(RationalFunction(z, one))
    assert f != g  # structural equality stays strict


def test_normalize_cancels_monomials_and_content():
    z = LaurentPoly.variable(1, 0)
    # (2 z^3) / (4 z) -> z^2 / 2 after monomial and content cancellation
    f = RationalFunction(2 * z**3, 4 * z).normalize()
    assert f.num == z**2
    assert f.den == LaurentPoly.const(1, 2)


def test_rational_arithmetic_and_eval():
    z = LaurentPoly.variable(1, 0)
    one = LaurentPoly.const(1, 1)
    f = RationalFunction(one, one - z)
    g = RationalFunction(one, one + z)
    s = f + g
    assert s.eval((3,), 0) == Fraction(1, -2) + Fraction(1, 4)
    assert (f * g).eval((3,), 0) == Fraction(1, -2) * Fraction(1, 4)
    with pytest.raises(ZeroDivisionError):
        f.eval((1,), 0)


@given(polys2, polys2, polys2, points2, safe_y)
def test_rational_addition_matches_pointwise(a, b, d, z, y):
    if not d or d.eval(z, y) == 0:
        return
    f = RationalFunction(a, d) + RationalFunction(b, d)
    assert f.eval(z, y) == (a.eval(z, y) + b.eval(z, y)) / d.eval(z, y)

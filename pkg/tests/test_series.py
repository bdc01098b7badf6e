from fractions import Fraction

import pytest

from polarcount.series import (
    TruncatedSeries,
    hirzebruch_series,
    lhat_series,
    qy_series,
    qy_series_cleared,
    todd_series,
    verify_identities,
)
from polarcount.ypoly import YPoly

# frozen against two independent oracles (a direct exp/inversion script
# and sympy); index = power of x
TODD_COEFFS = [
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 12),
    Fraction(0),
    Fraction(-1, 720),
    Fraction(0),
    Fraction(1, 30240),
    Fraction(0),
    Fraction(-1, 1209600),
]
LHAT_COEFFS = [
    Fraction(1),
    Fraction(0),
    Fraction(1, 12),
    Fraction(0),
    Fraction(-1, 720),
    Fraction(0),
    Fraction(1, 30240),
    Fraction(0),
    Fraction(-1, 1209600),
]


def test_todd_frozen_values():
    assert list(todd_series(8).coeffs) == TODD_COEFFS


def test_lhat_frozen_values():
    assert list(lhat_series(8).coeffs) == LHAT_COEFFS


def test_todd_against_sympy():
    sp = pytest.importorskip("sympy")
    x = sp.Symbol("x")
    expr = x / (1 - sp.exp(-x))
    expansion = sp.series(expr, x, 0, 11).removeO()
    ours = todd_series(10)
    for k in range(11):
        assert sp.nsimplify(expansion.coeff(x, k)) == sp.Rational(
            ours[k].numerator, ours[k].denominator
        )


def test_lhat_against_sympy():
    sp = pytest.importorskip("sympy")
    x = sp.Symbol("x")
    expr = (x / 2) / sp.tanh(x / 2)
    expansion = sp.series(expr, x, 0, 11).removeO()
    ours = lhat_series(10)
    for k in range(11):
        assert sp.nsimplify(expansion.coeff(x, k)) == sp.Rational(
            ours[k].numerator, ours[k].denominator
        )


def test_family_at_concrete_y_against_sympy():
    sp = pytest.importorskip("sympy")
    x = sp.Symbol("x")
    y = sp.Rational(2)
    expr = (x / (1 - sp.exp(-x))) * (1 + y * sp.exp(-x)) / (1 + y)
    expansion = sp.series(expr, x, 0, 9).removeO()
    ours = qy_series(Fraction(2), 8)
    for k in range(9):
        assert sp.nsimplify(expansion.coeff(x, k)) == sp.Rational(
            ours[k].numerator, ours[k].denominator
        )


def test_identities_to_order_twelve():
    checks = verify_identities(12)
    assert checks and all(checks.values()), checks


def test_family_endpoints():
    assert qy_series(0, 10) == todd_series(10)
    assert qy_series(1, 10) == lhat_series(10)


def test_classical_family_needs_the_substitution():
    lhat = lhat_series(10)
    assert hirzebruch_series(1, 10).scale_argument(Fraction(1, 2)) == lhat
    assert hirzebruch_series(1, 10) != lhat
    assert hirzebruch_series(0, 10) == todd_series(10)


def test_rescaling_links_the_two_families():
    for y in (Fraction(2), Fraction(-1, 2), Fraction(5, 3)):
        scaled = hirzebruch_series(y, 8).scale_argument(Fraction(1, 1 + y))
        assert qy_series(y, 8) == scaled


def test_cleared_family_has_polynomial_coefficients():
    cleared = qy_series_cleared(6)
    assert all(isinstance(c, YPoly) for c in cleared.coeffs)
    assert cleared[0] == YPoly((1, 1))
    # cleared / (1+y) at y = 3 must equal the concrete family
    concrete = qy_series(3, 6)
    assert all(cleared[k](3) / 4 == concrete[k] for k in range(7))


def test_y_minus_one_rejected():
    with pytest.raises(ValueError):
        qy_series(-1, 4)
    with pytest.raises(ValueError):
        hirzebruch_series(-1, 4)


def test_series_plumbing():
    e = TruncatedSeries.exponential(-1, 5)
    assert e[3] == Fraction(-1, 6)
    assert e.scale_argument(-1) == TruncatedSeries.exponential(1, 5)
    zero_const = TruncatedSeries.constant(0, 3)
    with pytest.raises(ZeroDivisionError):
        zero_const.inverse()
    with pytest.raises(ValueError):
        e + TruncatedSeries.constant(1, 2)
    prod = e * e.inverse()
    assert prod == TruncatedSeries.constant(Fraction(1), 5)
    assert str(todd_series(4)) == "1 + 1/2*x + 1/12*x^2 - 1/720*x^4"

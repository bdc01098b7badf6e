"""Exact truncated power series: Todd, half-angle cotangent, and the
one-parameter family interpolating between them.

Coefficients are Fractions (or YPoly for the symbolic variant); all
operations truncate at a fixed order and are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .ypoly import ONE_PLUS_Y, Y, YPoly


class TruncatedSeries:
    """Power series in x modulo x**(order+1).

    coeffs[k] multiplies x**k.  Coefficients may be Fraction or YPoly;
    the ring operations only assume +, *, and comparison with 0.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls((c,) + (Fraction(0),) * order)

    @classmethod
    def exponential(cls, c, order: int) -> "TruncatedSeries":
        """e**(c*x) truncated: coefficients c**k / k!."""
        c = Fraction(c)
        return cls(tuple(c**k / factorial(k) for k in range(order + 1)))

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check(other)
            n = len(self.coeffs)
            out = []
            for k in range(n):
                acc = Fraction(0)
                for i in range(k + 1):
                    a, b = self.coeffs[i], other.coeffs[k - i]
                    if a != 0 and b != 0:
                        acc = acc + a * b
                out.append(acc)
            return TruncatedSeries(out)
        return TruncatedSeries(tuple(other * a for a in self.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; constant term must be a nonzero Fraction."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv0 = 1 / Fraction(c0)
        out = [inv0]
        for k in range(1, len(self.coeffs)):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(-inv0 * acc)
        return TruncatedSeries(out)

    def scale_argument(self, c) -> "TruncatedSeries":
        """Substitute x -> c*x."""
        c = Fraction(c)
        return TruncatedSeries(tuple(a * c**k for k, a in enumerate(self.coeffs)))

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            negative = isinstance(c, Fraction) and c < 0
            cs = str(-c if negative else c)
            if isinstance(c, YPoly) and c.degree > 0:
                cs = f"({cs})"
            xs = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = cs if not xs else (xs if cs == "1" else f"{cs}*{xs}")
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs!r})"


def todd_series(order: int) -> TruncatedSeries:
    """x / (1 - e**(-x)) truncated at x**order.

    Built by inverting (1 - e**(-x)) / x, whose k-th coefficient is
    (-1)**k / (k+1)!.
    """
    base = TruncatedSeries(
        tuple(Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1))
    )
    return base.inverse()


def lhat_series(order: int) -> TruncatedSeries:
    """(x/2) / tanh(x/2) truncated at x**order.

    Assembled from cosh(x/2) and sinh(x/2)/(x/2) directly, so it is an
    oracle independent of todd_series.
    """
    cosh = TruncatedSeries(
        tuple(
            Fraction(1, factorial(k) * 2**k) if k % 2 == 0 else Fraction(0)
            for k in range(order + 1)
        )
    )
    sinh_over = TruncatedSeries(
        tuple(
            Fraction(1, factorial(k + 1) * 2**k) if k % 2 == 0 else Fraction(0)
            for k in range(order + 1)
        )
    )
    return cosh * sinh_over.inverse()


def hirzebruch_series(y, order: int) -> TruncatedSeries:
    """x(1 + y*e**(-x(1+y))) / (1 - e**(-x(1+y))) at a concrete y != -1.

    The classical three-point family: y = 0 gives the Todd series, and
    substituting x -> x/2 at y = 1 gives the half-angle cotangent.
    """
    y = Fraction(y)
    if y == -1:
        raise ValueError("series family undefined at y = -1")
    # x/(1 - e**(-x(1+y))) is Todd(x(1+y)) with its numerator scaled back
    scaled_todd = Fraction(1, 1 + y) * todd_series(order).scale_argument(1 + y)
    factor = 1 + y * TruncatedSeries.exponential(-(1 + y), order)
    return scaled_todd * factor


def qy_series(y, order: int) -> TruncatedSeries:
    """(1/(1+y)) * Todd(x) * (1 + y*e**(-x)) at a concrete y != -1.

    The normalized family: equals hirzebruch_series(y, order) with
    x -> x/(1+y), hits Todd at y = 0 and the half-angle cotangent at
    y = 1 with no further substitution.
    """
    y = Fraction(y)
    if y == -1:
        raise ValueError("series family undefined at y = -1")
    factor = 1 + y * TruncatedSeries.exponential(-1, order)
    return Fraction(1, 1 + y) * (todd_series(order) * factor)


def qy_series_cleared(order: int) -> TruncatedSeries:
    """(1+y) * qy_series as a series with YPoly coefficients.

    Exactly Todd(x) * (1 + y*e**(-x)); symbolic in y, so one object
    covers every admissible weight.
    """
    todd = todd_series(order)
    expo = TruncatedSeries.exponential(-1, order)
    factor = TruncatedSeries(
        tuple(
            (YPoly.const(1) if k == 0 else YPoly()) + Y * c
            for k, c in enumerate(expo.coeffs)
        )
    )
    return todd * factor


def verify_identities(order: int) -> dict[str, bool]:
    """Exact cross-checks tying the family together; all should be True."""
    todd = todd_series(order)
    lhat = lhat_series(order)
    todd_neg = todd.scale_argument(-1)
    exp_neg = TruncatedSeries.exponential(-1, order)
    cleared = qy_series_cleared(order)
    sample_ys = (Fraction(2), Fraction(-1, 2), Fraction(5, 3))
    checks = {
        "todd_defining_product": todd
        * TruncatedSeries(
            tuple(Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1))
        )
        == TruncatedSeries.constant(Fraction(1), order),
        "todd_reflection": todd_neg == exp_neg * todd,
        "average_is_half_angle": Fraction(1, 2) * (todd + todd_neg) == lhat,
        "half_angle_is_even": all(
            lhat[k] == 0 for k in range(1, order + 1, 2)
        ),
        "family_at_zero_is_todd": qy_series(0, order) == todd,
        "family_at_one_is_half_angle": qy_series(1, order) == lhat,
        "classical_family_halved": hirzebruch_series(1, order).scale_argument(
            Fraction(1, 2)
        )
        == lhat,
        "cleared_family_matches": all(
            TruncatedSeries(tuple(c(y) for c in cleared.coeffs))
            == (1 + y) * qy_series(y, order)
            for y in sample_ys
        ),
        "weighted_average_form": all(
            qy_series(y, order)
            == Fraction(1, 1 + y) * todd + Fraction(y, 1 + y) * (exp_neg * todd)
            for y in sample_ys
        ),
    }
    return checks

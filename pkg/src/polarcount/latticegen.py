"""Lattice points, weighted counts, and the vertex generating-function
identity for regular integral polytopes.

Each vertex v with primitive edge directions a_1..a_n contributes the
rational function

    z^v * prod_j (1 + y*z^(a_j)) / ((1+y) * (1 - z^(a_j)))

and the sum over vertices collapses to the polynomial

    sum over lattice points p of (1/(1+y))^(codim of p) * z^p.

The per-vertex signs are already absorbed: rewriting a geometric series
along a flipped direction produces exactly one minus sign per flip.
Everything here needs determinant +-1 edge bases at every vertex and
integer vertices; anything else raises HypothesisError.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iter_product
from typing import NamedTuple, Optional, Sequence

from .laurent import LaurentPoly, RationalFunction
from .linalg import canonical_direction
from .polarize import polarize_cones
from .polytope import Polytope, fmt_point
from .weights import CheckResult, WeightParam, check_decomposition_at
from .ypoly import ONE_PLUS_Y, Y, YFrac


class HypothesisError(ValueError):
    """The operation needs a regular integral polytope and got less."""


class PoleError(ZeroDivisionError):
    """Evaluation point lies on a pole of some vertex term."""


def require_lattice_hypotheses(poly: Polytope, operation: str):
    if not poly.regular:
        raise HypothesisError(
            f"{operation} requires a regular polytope (every vertex edge "
            f"matrix has determinant +-1); this one is not regular"
        )
    if not poly.integral:
        raise HypothesisError(
            f"{operation} requires an integral polytope (all vertices in "
            f"the lattice); this one has non-integer vertices"
        )


# -- enumeration (no hypotheses needed) ---------------------------------


def box_points(lo: Sequence[int], hi: Sequence[int]):
    """Integer points of the box [lo_1,hi_1] x ... , in lexicographic order."""
    return iter_product(*(range(a, b + 1) for a, b in zip(lo, hi)))


def lattice_points(poly: Polytope) -> tuple[tuple[int, ...], ...]:
    """All lattice points of the polytope, lexicographically sorted."""
    lo, hi = poly.integer_box()
    return tuple(p for p in box_points(lo, hi) if poly.contains(p))


def codim_census(poly: Polytope) -> dict[int, int]:
    """How many lattice points sit on faces of each codimension."""
    census: dict[int, int] = {}
    for p in lattice_points(poly):
        c = len(poly.active_facets(p))
        census[c] = census.get(c, 0) + 1
    return census


def format_census(census: dict[int, int]) -> str:
    """Render a census as a sum of (1/(1+y))-power terms, codim ascending."""
    if not census:
        return "0"
    parts = []
    for c in sorted(census):
        count = census[c]
        if c == 0:
            parts.append(str(count))
        elif c == 1:
            parts.append(f"{count}/(1+y)")
        else:
            parts.append(f"{count}/(1+y)^{c}")
    return " + ".join(parts)


# -- weighted counts ----------------------------------------------------


def weighted_count_y(poly: Polytope) -> YFrac:
    """Symbolic weighted lattice count: sum of (1/(1+y))**codim."""
    require_lattice_hypotheses(poly, "weighted counting")
    total = YFrac(0)
    for c, count in codim_census(poly).items():
        total = total + count * YFrac(1, c)
    return total


def weighted_count(poly: Polytope, w: WeightParam) -> Fraction:
    require_lattice_hypotheses(poly, "weighted counting")
    total = Fraction(0)
    for c, count in codim_census(poly).items():
        total += count * w.on_face**c
    return total


# -- generating functions ------------------------------------------------


class VertexTerm(NamedTuple):
    """One vertex's rational function, with bookkeeping for summation.

    numerator is z^v times the product of per-edge binomials, where an
    edge whose primitive direction is not canonically oriented has had
    its geometric series rewritten: 1/(1 - z^(-b)) = -z^b/(1 - z^b).
    canonical_dirs lists the denominator directions after rewriting, so
    the denominator is (1+y)^n times prod (1 - z^b) over them.
    """

    vertex_index: int
    numerator: LaurentPoly
    canonical_dirs: tuple[tuple[int, ...], ...]


def vertex_term(poly: Polytope, vertex_index: int) -> VertexTerm:
    require_lattice_hypotheses(poly, "the vertex generating function")
    n = poly.dim
    v = poly.vertices[vertex_index]
    num = LaurentPoly.monomial(n, tuple(int(a) for a in v.point))
    dirs = []
    for a in v.edges:
        b = canonical_direction(a)
        if a == b:
            binom = LaurentPoly(n, {(0,) * n: 1, b: Y})
        else:
            binom = LaurentPoly(n, {(0,) * n: -Y, b: -1})
        num = num * binom
        dirs.append(b)
    return VertexTerm(vertex_index, num, tuple(dirs))


def vertex_genfun(poly: Polytope, vertex_index: int) -> RationalFunction:
    """The vertex's contribution as an explicit rational function."""
    term = vertex_term(poly, vertex_index)
    n = poly.dim
    den = LaurentPoly.const(n, ONE_PLUS_Y**n)
    for b in term.canonical_dirs:
        den = den * LaurentPoly(n, {(0,) * n: 1, b: -1})
    return RationalFunction(term.numerator, den)


def brion_sum(poly: Polytope) -> RationalFunction:
    """Sum of all vertex terms over one common factored denominator."""
    require_lattice_hypotheses(poly, "the vertex generating-function sum")
    n = poly.dim
    terms = [vertex_term(poly, i) for i in range(len(poly.vertices))]
    all_dirs: list[tuple[int, ...]] = []
    for t in terms:
        for b in t.canonical_dirs:
            if b not in all_dirs:
                all_dirs.append(b)
    total = LaurentPoly.zero(n)
    for t in terms:
        lifted = t.numerator
        for b in all_dirs:
            if b not in t.canonical_dirs:
                lifted = lifted * LaurentPoly(n, {(0,) * n: 1, b: -1})
        total = total + lifted
    den = LaurentPoly.const(n, ONE_PLUS_Y**n)
    for b in all_dirs:
        den = den * LaurentPoly(n, {(0,) * n: 1, b: -1})
    return RationalFunction(total, den)


def weighted_sum_poly(poly: Polytope) -> LaurentPoly:
    """Cleared weighted lattice sum: coefficient of z^p is (1+y)^(n - codim p).

    Dividing by (1+y)^n recovers the weighted sum itself; clearing keeps
    every coefficient polynomial.
    """
    require_lattice_hypotheses(poly, "the weighted lattice sum")
    n = poly.dim
    terms = {}
    for p in lattice_points(poly):
        c = len(poly.active_facets(p))
        terms[p] = ONE_PLUS_Y ** (n - c)
    return LaurentPoly(n, terms)


class BrionReport(NamedTuple):
    lhs: RationalFunction
    rhs: RationalFunction
    equal: bool


def brion_check(poly: Polytope) -> BrionReport:
    """Vertex-sum route vs direct lattice enumeration, exactly.

    Equality is decided by cross-multiplying the two rational functions;
    no expansion of geometric series and no numeric sampling.
    """
    lhs = brion_sum(poly)
    n = poly.dim
    rhs = RationalFunction(
        weighted_sum_poly(poly), LaurentPoly.const(n, ONE_PLUS_Y**n)
    )
    return BrionReport(lhs=lhs, rhs=rhs, equal=lhs.equivalent(rhs))


# -- pointwise evaluation -------------------------------------------------


def _monomial_value(z: Sequence[Fraction], expo: Sequence[int]) -> Fraction:
    val = Fraction(1)
    for zi, e in zip(z, expo):
        val *= zi**e
    return val


def chi_y_vertex_sum(poly: Polytope, w: WeightParam, z: Sequence) -> Fraction:
    """Sum of vertex terms evaluated at a concrete z with nonzero coordinates."""
    require_lattice_hypotheses(poly, "vertex-sum evaluation")
    zt = tuple(Fraction(a) for a in z)
    if len(zt) != poly.dim:
        raise ValueError(f"expected {poly.dim} coordinates, got {len(zt)}")
    if any(a == 0 for a in zt):
        raise ValueError("evaluation point must have nonzero coordinates")
    total = Fraction(0)
    for v in poly.vertices:
        term = _monomial_value(zt, tuple(int(a) for a in v.point))
        for a in v.edges:
            za = _monomial_value(zt, a)
            if za == 1:
                raise PoleError(
                    f"z^{a} = 1 at vertex {fmt_point(v.point)}: the point "
                    f"lies on a pole; perturb z"
                )
            term *= (1 + w.y * za) / ((1 + w.y) * (1 - za))
        total += term
    return total


def chi_y_lattice_sum(poly: Polytope, w: WeightParam, z: Sequence) -> Fraction:
    """Direct weighted sum over lattice points at a concrete z."""
    require_lattice_hypotheses(poly, "weighted lattice evaluation")
    zt = tuple(Fraction(a) for a in z)
    if any(a == 0 for a in zt):
        raise ValueError("evaluation point must have nonzero coordinates")
    total = Fraction(0)
    for p in lattice_points(poly):
        c = len(poly.active_facets(p))
        total += w.on_face**c * _monomial_value(zt, p)
    return total


class ChiReport(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def chi_y_check(poly: Polytope, w: WeightParam, z: Sequence) -> ChiReport:
    lhs = chi_y_vertex_sum(poly, w, z)
    rhs = chi_y_lattice_sum(poly, w, z)
    return ChiReport(lhs=lhs, rhs=rhs, equal=lhs == rhs)


# -- coefficient extraction ----------------------------------------------


def coefficient_extract(poly: Polytope, xi: Sequence, alpha: Sequence[int]) -> YFrac:
    """Coefficient of z^alpha on the vertex-cone side of the identity.

    Sums, over the cones polarized by xi, the signed weight of alpha in
    each cone; this is the z^alpha coefficient of the vertex sum read
    directly from the lattice series, with no polytope-side shortcut.
    """
    require_lattice_hypotheses(poly, "coefficient extraction")
    from .weights import signed_cone_sum_y

    cones = polarize_cones(poly, xi)
    return signed_cone_sum_y(cones, tuple(int(a) for a in alpha))


def multiplicity(poly: Polytope, alpha: Sequence[int]) -> YFrac:
    """Predicted z^alpha coefficient: (1/(1+y))**codim inside, else 0."""
    require_lattice_hypotheses(poly, "multiplicity prediction")
    c = poly.face_codim(tuple(int(a) for a in alpha))
    if c is None:
        return YFrac(0)
    return YFrac(1, c)


class MultiplicityReport(NamedTuple):
    extracted: YFrac
    predicted: YFrac
    equal: bool


def multiplicity_check(
    poly: Polytope, xi: Sequence, alpha: Sequence[int]
) -> MultiplicityReport:
    ext = coefficient_extract(poly, xi, alpha)
    pred = multiplicity(poly, alpha)
    return MultiplicityReport(extracted=ext, predicted=pred, equal=ext == pred)


# -- truncated cone series ------------------------------------------------


def cone_series_check(
    poly: Polytope,
    xi: Sequence,
    margin: int = 2,
    w: Optional[WeightParam] = None,
) -> list[CheckResult]:
    """Signed cone weights vs polytope weight on every box lattice point.

    The box is the polytope's integer bounding box inflated by margin.
    This is the generating-function identity read coefficient by
    coefficient; it holds for any simple polytope, so no hypotheses are
    imposed here.
    """
    cones = polarize_cones(poly, xi)
    lo, hi = poly.integer_box(margin)
    return [
        check_decomposition_at(poly, cones, p, w) for p in box_points(lo, hi)
    ]

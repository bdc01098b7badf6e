"""Polarized tangent cones of a simple polytope.

A polarizing vector pairs nonzero against every edge direction.  Each
tangent cone is polarized by flipping the generators whose pairing with
the polarizing vector is positive, so that every generator of the new
cone pairs negative.  The number of flips at a vertex determines the
sign of that cone's contribution to the decomposition of the polytope's
weighted characteristic function.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import canonical_direction, dot, inverse, matvec, vadd, vec, vsub
from .polytope import Polytope, fmt_point


class PolarizationError(ValueError):
    """No usable polarizing vector, or a degenerate pairing slipped in."""


@dataclass(frozen=True)
class PolarizedCone:
    """A tangent cone with sign-corrected generators.

    generators[k] is the vertex's k-th edge direction, negated when the
    original direction paired positive with the polarizing vector; the
    flipped flags record which ones were negated.  The cone is closed:
    apex plus nonnegative combinations of the generators.  Points with a
    zero coordinate along a flipped generator stay members; they carry
    the y/(1+y) weight factor, which vanishes at y = 0 and recovers the
    classical half-open convention there.
    """

    apex: tuple
    generators: tuple[tuple[int, ...], ...]
    flipped: tuple[bool, ...]
    vertex_index: int
    inverse_rows: tuple = field(repr=False)

    @property
    def flip_count(self) -> int:
        return sum(self.flipped)

    @property
    def sign(self) -> int:
        return -1 if self.flip_count % 2 else 1


def is_polarizing(poly: Polytope, xi: Sequence) -> bool:
    """True when xi pairs nonzero with every edge direction of poly."""
    xiv = vec(xi)
    return all(
        dot(d, xiv) != 0 for v in poly.vertices for d in v.edges
    )


def find_polarizing(poly: Polytope, seed: int = 1) -> tuple:
    """Deterministic small polarizing vector.

    Walks the moment curve (1, t, t**2, ...) for t = seed, seed+1, ...;
    each edge direction kills at most dim-1 values of t, so the walk
    ends quickly.  A seeded random fallback guards the (never observed)
    case of a long run of bad t.
    """
    n = poly.dim
    edge_count = sum(len(v.edges) for v in poly.vertices)
    budget = max(8, edge_count * max(1, n - 1) + 1)
    for t in range(seed, seed + budget):
        if t == 0:
            continue
        xi = tuple(Fraction(t) ** k for k in range(n))
        if is_polarizing(poly, xi):
            return xi
    rng = random.Random(seed)
    for _ in range(1000):
        xi = tuple(Fraction(rng.randint(-999, 999), rng.randint(1, 7)) for _ in range(n))
        if any(a != 0 for a in xi) and is_polarizing(poly, xi):
            return xi
    raise PolarizationError("could not find a polarizing vector")


def polarize_cones(poly: Polytope, xi: Sequence) -> tuple[PolarizedCone, ...]:
    """Polarized tangent cone at every vertex, in vertex order."""
    xiv = vec(xi)
    cones = []
    for idx, v in enumerate(poly.vertices):
        gens = []
        flips = []
        for d in v.edges:
            pairing = dot(d, xiv)
            if pairing == 0:
                raise PolarizationError(
                    f"vector {fmt_point(xiv)} pairs to zero with edge {d} "
                    f"at vertex {fmt_point(v.point)}"
                )
            if pairing > 0:
                gens.append(tuple(-a for a in d))
                flips.append(True)
            else:
                gens.append(d)
                flips.append(False)
        inv = inverse([[g[i] for g in gens] for i in range(poly.dim)])
        if inv is None:
            raise PolarizationError(
                f"generators at vertex {fmt_point(v.point)} are dependent"
            )
        cones.append(
            PolarizedCone(
                apex=v.point,
                generators=tuple(gens),
                flipped=tuple(flips),
                vertex_index=idx,
                inverse_rows=inv,
            )
        )
    return tuple(cones)


def cone_coordinates(cone: PolarizedCone, x: Sequence) -> tuple:
    """Coordinates of x - apex in the generator basis."""
    return matvec(cone.inverse_rows, vsub(x, cone.apex))


def cone_membership(cone: PolarizedCone, x: Sequence) -> Optional[tuple]:
    """Generator coordinates of x when x lies in the closed cone.

    Membership requires every coordinate >= 0; returns None otherwise.
    """
    coords = cone_coordinates(cone, x)
    if any(c < 0 for c in coords):
        return None
    return coords


# -- wall machinery ----------------------------------------------------
#
# The set of polarizing vectors is the complement of finitely many
# hyperplanes (one per edge direction).  Crossing a single wall flips
# the polarization of exactly the edges parallel to that wall's
# direction; the decomposition must be blind to the crossing.


def wall_directions(poly: Polytope) -> tuple[tuple[int, ...], ...]:
    """Distinct edge directions up to sign, canonically oriented."""
    seen = []
    for v in poly.vertices:
        for d in v.edges:
            c = canonical_direction(d)
            if c not in seen:
                seen.append(c)
    return tuple(seen)

def crossing_pair(poly: Polytope, wall: Sequence, seed: int = 0) -> tuple[tuple, tuple]:
    """Two polarizing vectors separated only by the given wall.

    Returns (xi_minus, xi_plus) with <wall, xi_minus> < 0 < <wall, xi_plus>
    and identical pairing signs against every edge direction not parallel
    to the wall.
    """
    beta = canonical_direction(wall)
    others = [d for d in wall_directions(poly) if d != beta]
    bb = dot(beta, beta)
    rng = random.Random(seed)
    base = None
    for _ in range(10000):
        r = tuple(Fraction(rng.randint(-99, 99)) for _ in range(poly.dim))
        # exact projection onto the wall, scaled to stay rational
        candidate = vsub(tuple(bb * a for a in r), tuple(dot(r, beta) * b for b in beta))
        if all(a == 0 for a in candidate) and others:
            continue
        if all(dot(d, candidate) != 0 for d in others):
            base = candidate
            break
    if base is None:
        raise PolarizationError(
            f"no generic point found on the wall {tuple(beta)}"
        )
    gaps = [
        abs(dot(d, base)) / abs(dot(d, beta))
        for d in others
        if dot(d, beta) != 0
    ]
    step = min(gaps) / 2 if gaps else Fraction(1)
    offset = tuple(step * b for b in beta)
    minus = vsub(base, offset)
    plus = vadd(base, offset)
    for xi in (minus, plus):
        if not is_polarizing(poly, xi):
            raise PolarizationError(
                f"wall crossing around {tuple(beta)} produced a "
                f"non-polarizing vector {fmt_point(xi)}"
            )
    return minus, plus

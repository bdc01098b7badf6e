"""Plane figures of polytopes, lattice weights, and polarized cones.

Output is plain SVG 1.1 text with nothing external.  All geometry is
computed in Fractions; floats appear only when coordinates are printed
into the SVG, and for label placement, which is display-only.
Conventions: one lattice unit is `unit` pixels, the origin sits at the
lower left, and the mathematical y axis points up (flipped at emission,
since SVG y points down).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence

from .latticegen import box_points
from .linalg import dot, vadd, vsub
from .polarize import PolarizedCone
from .polytope import Polytope
from .weights import WeightParam, polytope_weight, polytope_weight_y

_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#e377c2",
    "#17becf",
)


def _fmt(v) -> str:
    return f"{float(v):.2f}".rstrip("0").rstrip(".")


def _clip(points: list, normal, anchor) -> list:
    """Keep the part of a convex polygon with <normal, p - anchor> >= 0."""
    out = []
    m = len(points)
    for i in range(m):
        cur, nxt = points[i], points[(i + 1) % m]
        dc = dot(normal, vsub(cur, anchor))
        dn = dot(normal, vsub(nxt, anchor))
        if dc >= 0:
            out.append(cur)
        if (dc > 0 and dn < 0) or (dc < 0 and dn > 0):
            t = dc / (dc - dn)
            out.append(vadd(cur, tuple(t * d for d in vsub(nxt, cur))))
    return out


def _perp_toward(v, toward):
    """A normal of v pointing to the side containing `toward`."""
    n = (-Fraction(v[1]), Fraction(v[0]))
    return n if dot(n, toward) > 0 else (-n[0], -n[1])


def _boundary_order(poly: Polytope) -> list[int]:
    """Vertex indices in counterclockwise order, decided exactly."""
    bc = poly.barycenter()
    dirs = [(i, vsub(v.point, bc)) for i, v in enumerate(poly.vertices)]

    def half(d) -> int:
        # 0 for the upper half (including positive x axis), 1 below
        if d[1] > 0 or (d[1] == 0 and d[0] > 0):
            return 0
        return 1

    def compare(a, b) -> int:
        ha, hb = half(a[1]), half(b[1])
        if ha != hb:
            return ha - hb
        cross = a[1][0] * b[1][1] - a[1][1] * b[1][0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return [i for i, _ in sorted(dirs, key=cmp_to_key(compare))]


def render_svg(
    poly: Polytope,
    xi: Optional[Sequence] = None,
    cones: Optional[Sequence[PolarizedCone]] = None,
    w: Optional[WeightParam] = None,
    margin: int = 2,
    unit: int = 40,
) -> str:
    """SVG text for a 2-dimensional polytope.

    With cones given, each polarized cone is drawn as a translucent
    wedge clipped to the viewport and tagged with its sign.  With w
    given, every lattice point inside the polytope is labeled with its
    exact weight at w.y; with w None the label is symbolic in y.
    """
    if poly.dim != 2:
        raise ValueError(f"figures are 2-dimensional only, got dim {poly.dim}")
    lo, hi = poly.integer_box(margin)
    pad = unit
    width = (hi[0] - lo[0]) * unit + 2 * pad
    height = (hi[1] - lo[1]) * unit + 2 * pad

    def px(p) -> tuple:
        return (
            pad + (Fraction(p[0]) - lo[0]) * unit,
            height - pad - (Fraction(p[1]) - lo[1]) * unit,
        )

    def pt_attr(p) -> str:
        x, y = px(p)
        return f"{_fmt(x)},{_fmt(y)}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}" '
        f'font-family="sans-serif">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]

    world = [
        (Fraction(lo[0]), Fraction(lo[1])),
        (Fraction(hi[0]), Fraction(lo[1])),
        (Fraction(hi[0]), Fraction(hi[1])),
        (Fraction(lo[0]), Fraction(hi[1])),
    ]

    if cones:
        for k, cone in enumerate(cones):
            color = _PALETTE[k % len(_PALETTE)]
            g1, g2 = cone.generators
            region = _clip(world, _perp_toward(g2, g1), cone.apex)
            region = _clip(region, _perp_toward(g1, g2), cone.apex)
            if len(region) >= 3:
                pts = " ".join(pt_attr(p) for p in region)
                out.append(
                    f'<polygon points="{pts}" fill="{color}" '
                    f'fill-opacity="0.12" stroke="{color}" '
                    f'stroke-opacity="0.5" stroke-width="1"/>'
                )

    order = _boundary_order(poly)
    outline = " ".join(pt_attr(poly.vertices[i].point) for i in order)
    out.append(
        f'<polygon points="{outline}" fill="none" stroke="#111" '
        f'stroke-width="2"/>'
    )

    for p in box_points(lo, hi):
        x, y = px(p)
        if poly.contains(p):
            out.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#111"/>'
            )
            label = (
                str(polytope_weight(poly, p, w))
                if w is not None
                else str(polytope_weight_y(poly, p))
            )
            out.append(
                f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" '
                f'font-size="10" fill="#333">{label}</text>'
            )
        else:
            out.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.5" fill="none" '
                f'stroke="#999" stroke-width="1"/>'
            )

    if cones:
        for k, cone in enumerate(cones):
            color = _PALETTE[k % len(_PALETTE)]
            u = vadd(cone.generators[0], cone.generators[1])
            norm = float(dot(u, u)) ** 0.5 or 1.0
            ax, ay = px(cone.apex)
            dx = float(u[0]) / norm * 0.55 * unit
            dy = -float(u[1]) / norm * 0.55 * unit
            mark = "+" if cone.sign > 0 else "-"
            out.append(
                f'<text x="{float(ax) + dx:.2f}" y="{float(ay) + dy:.2f}" '
                f'font-size="16" font-weight="bold" fill="{color}" '
                f'text-anchor="middle">{mark}</text>'
            )

    legend = []
    if xi is not None:
        legend.append("xi = (" + ", ".join(str(Fraction(a)) for a in xi) + ")")
    legend.append(f"y = {w.y}" if w is not None else "y symbolic")
    out.append(
        f'<text x="{pad / 2:.2f}" y="{pad / 2:.2f}" font-size="12" '
        f'fill="#111">{"; ".join(legend)}</text>'
    )
    if xi is not None:
        # arrow showing the polarizing direction, anchored top right
        norm = float(dot(xi, xi)) ** 0.5 or 1.0
        x0, y0 = width - pad * 1.8, pad * 0.8
        dx = float(xi[0]) / norm * unit
        dy = -float(xi[1]) / norm * unit
        x1, y1 = x0 + dx, y0 + dy
        out.append(
            f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" '
            f'stroke="#111" stroke-width="1.5"/>'
        )
        # arrowhead: two short strokes angled back from the tip
        bx, by = -dx / unit, -dy / unit
        for s in (1.0, -1.0):
            hx = (bx * 0.82 - by * 0.57 * s) * 0.3 * unit
            hy = (bx * 0.57 * s + by * 0.82) * 0.3 * unit
            out.append(
                f'<line x1="{x1:.2f}" y1="{y1:.2f}" '
                f'x2="{x1 + hx:.2f}" y2="{y1 + hy:.2f}" '
                f'stroke="#111" stroke-width="1.5"/>'
            )
    out.append("</svg>")
    return "\n".join(out)

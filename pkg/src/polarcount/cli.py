"""Command-line interface.

Subcommands cover the whole pipeline: vertex enumeration, the signed
cone decomposition check, weighted lattice counts, the two-sided
character evaluation, the generating-function identity, the series
family, and SVG figures.  Exit codes: 0 success, 1 a mathematical check
failed, 2 bad input or usage.  All output is exact and deterministic;
timing goes to stderr so stdout can be diffed.
"""

from __future__ import annotations

import argparse
import hashlib
import random
import sys
import time
from fractions import Fraction

from . import latticegen, polytope, series, svgfig
from .polarize import PolarizationError, find_polarizing, polarize_cones
from .polytope import Polytope, PolytopeError, PolytopeFormatError, fmt_point
from .weights import WeightParam, check_decomposition_at, sample_points

_BUILTIN_HELP = (
    "builtin polytope: interval:LEN, cube:N[,SIDE], simplex:N[,DILATION], "
    "trapezoid[:WIDTH,HEIGHT], prism[:DILATION,HEIGHT]"
)


class InputError(ValueError):
    """Bad command-line input that is not argparse's business."""


def _parse_fraction(text: str, what: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"{what}: {text!r} is not a rational number") from e


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text.strip())
    except ValueError as e:
        raise InputError(f"{what}: {text!r} is not an integer") from e


def _build_builtin(text: str) -> Polytope:
    name, _, argstr = text.partition(":")
    name = name.strip().lower()
    args = [a for a in argstr.split(",") if a.strip()] if argstr else []
    if name == "interval":
        if len(args) != 1:
            raise InputError("interval takes exactly one parameter: interval:LEN")
        return polytope.interval(_parse_fraction(args[0], "interval length"))
    if name == "cube":
        if not 1 <= len(args) <= 2:
            raise InputError("cube takes one or two parameters: cube:N[,SIDE]")
        n = _parse_int(args[0], "cube dimension")
        side = _parse_fraction(args[1], "cube side") if len(args) == 2 else 1
        return polytope.hypercube(n, side)
    if name == "simplex":
        if not 1 <= len(args) <= 2:
            raise InputError(
                "simplex takes one or two parameters: simplex:N[,DILATION]"
            )
        n = _parse_int(args[0], "simplex dimension")
        d = _parse_fraction(args[1], "simplex dilation") if len(args) == 2 else 1
        return polytope.dilated_simplex(n, d)
    if name == "trapezoid":
        if args and len(args) != 2:
            raise InputError(
                "trapezoid takes zero or two parameters: trapezoid[:WIDTH,HEIGHT]"
            )
        if args:
            return polytope.trapezoid(
                _parse_fraction(args[0], "trapezoid width"),
                _parse_fraction(args[1], "trapezoid height"),
            )
        return polytope.trapezoid()
    if name == "prism":
        if args and len(args) != 2:
            raise InputError(
                "prism takes zero or two parameters: prism[:DILATION,HEIGHT]"
            )
        if args:
            return polytope.prism(
                _parse_fraction(args[0], "prism dilation"),
                _parse_fraction(args[1], "prism height"),
            )
        return polytope.prism()
    raise InputError(f"unknown builtin {name!r}; {_BUILTIN_HELP}")


def _load_polytope(ns) -> tuple[Polytope, str, str]:
    """Returns (polytope, source description, sha256 prefix of the source)."""
    if ns.file and ns.builtin:
        raise InputError("give a file or --builtin, not both")
    if ns.builtin:
        digest = hashlib.sha256(f"builtin:{ns.builtin}".encode()).hexdigest()
        return _build_builtin(ns.builtin), f"builtin {ns.builtin}", digest[:12]
    if ns.file:
        try:
            with open(ns.file, "rb") as fh:
                raw = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {ns.file}: {e}") from e
        digest = hashlib.sha256(raw).hexdigest()
        return polytope.from_file(ns.file), f"file {ns.file}", digest[:12]
    raise InputError("no polytope given: pass a file or --builtin NAME")


def _describe(poly: Polytope) -> str:
    return (
        f"polytope: dim {poly.dim}, {len(poly.facets)} facets, "
        f"{len(poly.vertices)} vertices, "
        f"{'regular' if poly.regular else 'not regular'}, "
        f"{'integral' if poly.integral else 'not integral'}"
    )


def _maybe_decimal(value: Fraction, places) -> str:
    exact = str(value)
    if places is None:
        return exact
    approx = f"{float(value):.{places}f}"
    return f"{exact} (~{approx})"


def _weight_param(ns) -> WeightParam:
    y = _parse_fraction(ns.y, "weight parameter y")
    try:
        return WeightParam(y)
    except ValueError as e:
        raise InputError(str(e)) from e


# -- subcommand bodies (each returns the exit code) ----------------------


def _cmd_vertices(ns, out) -> int:
    poly, source, digest = _load_polytope(ns)
    print(f"input: {source} (sha256 {digest})", file=out)
    print(_describe(poly), file=out)
    for i, v in enumerate(poly.vertices):
        edges = ", ".join(str(e) for e in v.edges)
        print(
            f"vertex {i}: {fmt_point(v.point)}  facets {list(v.active)}  "
            f"edges [{edges}]",
            file=out,
        )
    return 0


def _cmd_decompose(ns, out) -> int:
    poly, source, digest = _load_polytope(ns)
    print(f"input: {source} (sha256 {digest})", file=out)
    print(_describe(poly), file=out)
    w = _weight_param(ns) if ns.y is not None else None
    xi = find_polarizing(poly, seed=ns.seed)
    print(f"xi: {fmt_point(xi)}", file=out)
    cones = polarize_cones(poly, xi)
    for cone in cones:
        gens = ", ".join(str(g) for g in cone.generators)
        print(
            f"vertex {cone.vertex_index}: flips {cone.flip_count}, "
            f"sign {'+' if cone.sign > 0 else '-'}, generators [{gens}]",
            file=out,
        )
    rng = random.Random(ns.seed)
    points = sample_points(poly, xi, rng=rng, random_count=ns.random_points)
    failures = []
    for x in points:
        res = check_decomposition_at(poly, cones, x, w)
        if not res.equal:
            failures.append(res)
    mode = "symbolically in y" if w is None else f"at y = {w.y}"
    if failures:
        for res in failures:
            print(
                f"MISMATCH at {fmt_point(res.point)}: polytope {res.lhs}, "
                f"cones {res.rhs}",
                file=out,
            )
        print(
            f"check: FAIL ({len(failures)}/{len(points)} points disagree "
            f"{mode})",
            file=out,
        )
        return 1
    print(f"check: PASS ({len(points)}/{len(points)} points agree {mode})", file=out)
    return 0


def _cmd_count(ns, out) -> int:
    poly, source, digest = _load_polytope(ns)
    print(f"input: {source} (sha256 {digest})", file=out)
    print(_describe(poly), file=out)
    census = latticegen.codim_census(poly)
    total = sum(census.values())
    print(f"lattice points: {total}", file=out)
    for c in sorted(census):
        print(f"  codim {c}: {census[c]}", file=out)
    if ns.y is None:
        count = latticegen.weighted_count_y(poly)
        print(f"weighted count: {latticegen.format_census(census)}", file=out)
        print(f"reduced: {count}", file=out)
    else:
        w = _weight_param(ns)
        count = latticegen.weighted_count(poly, w)
        print(
            f"weighted count at y = {w.y}: {_maybe_decimal(count, ns.decimal)}",
            file=out,
        )
    return 0


def _cmd_chi(ns, out) -> int:
    poly, source, digest = _load_polytope(ns)
    print(f"input: {source} (sha256 {digest})", file=out)
    print(_describe(poly), file=out)
    w = _weight_param(ns)
    zparts = [p for p in ns.z.split(",") if p.strip()]
    if len(zparts) != poly.dim:
        raise InputError(
            f"--z needs {poly.dim} comma-separated rationals, got {len(zparts)}"
        )
    z = tuple(_parse_fraction(p, "z coordinate") for p in zparts)
    if any(a == 0 for a in z):
        raise InputError("z coordinates must be nonzero")
    report = latticegen.chi_y_check(poly, w, z)
    print(f"y = {w.y}, z = {fmt_point(z)}", file=out)
    print(
        f"vertex sum:  {_maybe_decimal(report.lhs, ns.decimal)}", file=out
    )
    print(
        f"lattice sum: {_maybe_decimal(report.rhs, ns.decimal)}", file=out
    )
    if not report.equal:
        print("check: FAIL (vertex and lattice sums disagree)", file=out)
        return 1
    print("check: PASS", file=out)
    return 0


def _cmd_brion(ns, out) -> int:
    poly, source, digest = _load_polytope(ns)
    print(f"input: {source} (sha256 {digest})", file=out)
    print(_describe(poly), file=out)
    report = latticegen.brion_check(poly)
    print(f"vertex terms: {len(poly.vertices)}", file=out)
    cleared = latticegen.weighted_sum_poly(poly)
    n = poly.dim
    den = "(1+y)" if n == 1 else f"(1+y)^{n}"
    print(f"weighted lattice sum: ({cleared}) / {den}", file=out)
    if not report.equal:
        print("check: FAIL (vertex sum differs from lattice sum)", file=out)
        return 1
    print("check: PASS (cross-multiplied equality of both routes)", file=out)
    return 0


def _cmd_series(ns, out) -> int:
    if ns.order < 0:
        raise InputError("--order must be nonnegative")
    k = ns.order
    todd = series.todd_series(k)
    lhat = series.lhat_series(k)
    print(f"order: {k}", file=out)
    print(f"todd:        {todd}", file=out)
    print(
        "todd coefficients: " + ", ".join(str(c) for c in todd.coeffs), file=out
    )
    print(f"half-angle:  {lhat}", file=out)
    print(
        "half-angle coefficients: " + ", ".join(str(c) for c in lhat.coeffs),
        file=out,
    )
    print(f"family*(1+y): {series.qy_series_cleared(k)}", file=out)
    if ns.y is not None:
        y = _parse_fraction(ns.y, "series parameter y")
        if y == -1:
            raise InputError("series family undefined at y = -1")
        print(f"family at y = {y}: {series.qy_series(y, k)}", file=out)
    checks = series.verify_identities(k)
    failed = [name for name, ok in checks.items() if not ok]
    for name, ok in checks.items():
        print(f"  {name}: {'ok' if ok else 'FAIL'}", file=out)
    if failed:
        print(f"check: FAIL ({len(failed)}/{len(checks)} identities)", file=out)
        return 1
    print(f"check: PASS ({len(checks)}/{len(checks)} identities)", file=out)
    return 0


def _cmd_svg(ns, out) -> int:
    poly, source, digest = _load_polytope(ns)
    if poly.dim != 2:
        raise InputError(
            f"svg needs a 2-dimensional polytope, got dim {poly.dim}"
        )
    w = _weight_param(ns)
    xi = find_polarizing(poly, seed=ns.seed)
    cones = polarize_cones(poly, xi)
    text = svgfig.render_svg(
        poly, xi=xi, cones=cones, w=w, margin=ns.margin
    )
    if ns.out == "-":
        print(text, file=out)
    else:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print("command: svg", file=out)
        print(f"input: {source} (sha256 {digest})", file=out)
        print(f"wrote {ns.out}", file=out)
    return 0


# -- parser ---------------------------------------------------------------


def _add_input_args(p: argparse.ArgumentParser):
    p.add_argument("file", nargs="?", help="polytope JSON file")
    p.add_argument("--builtin", metavar="NAME[:ARGS]", help=_BUILTIN_HELP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarcount",
        description=(
            "Exact weighted polar decompositions of simple polytopes and "
            "weighted lattice-point counts."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vertices", help="enumerate vertices and edge directions")
    _add_input_args(p)

    p = sub.add_parser(
        "decompose",
        help="check the signed cone decomposition of the weight function",
    )
    _add_input_args(p)
    p.add_argument("--seed", type=int, default=1, help="polarizing vector seed")
    p.add_argument(
        "--y", default=None, help="weight parameter (default: symbolic in y)"
    )
    p.add_argument(
        "--random-points",
        type=int,
        default=20,
        metavar="N",
        help="extra random sample points (default 20)",
    )

    p = sub.add_parser("count", help="weighted lattice-point count")
    _add_input_args(p)
    p.add_argument(
        "--y", default=None, help="weight parameter (default: symbolic in y)"
    )
    p.add_argument(
        "--decimal", type=int, default=None, metavar="K",
        help="also print a K-digit decimal approximation",
    )

    p = sub.add_parser(
        "chi", help="evaluate both sides of the character identity at a point"
    )
    _add_input_args(p)
    p.add_argument("--y", required=True, help="weight parameter")
    p.add_argument(
        "--z", required=True, help="comma-separated rational coordinates"
    )
    p.add_argument(
        "--decimal", type=int, default=None, metavar="K",
        help="also print a K-digit decimal approximation",
    )

    p = sub.add_parser(
        "brion",
        help="compare the vertex generating-function sum with the lattice sum",
    )
    _add_input_args(p)

    p = sub.add_parser("series", help="series family and its identities")
    p.add_argument("--order", type=int, default=8, help="truncation order")
    p.add_argument("--y", default=None, help="also print the family at this y")

    p = sub.add_parser("svg", help="draw a 2-d polytope with cones and weights")
    _add_input_args(p)
    p.add_argument("--seed", type=int, default=1, help="polarizing vector seed")
    p.add_argument("--y", default="0", help="weight parameter for labels")
    p.add_argument("--margin", type=int, default=2, help="lattice margin")
    p.add_argument(
        "--out", default="-", help="output file, or - for stdout (default)"
    )
    return parser


_HANDLERS = {
    "vertices": _cmd_vertices,
    "decompose": _cmd_decompose,
    "count": _cmd_count,
    "chi": _cmd_chi,
    "brion": _cmd_brion,
    "series": _cmd_series,
    "svg": _cmd_svg,
}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    start = time.monotonic()
    try:
        if ns.command != "svg":
            # svg may stream the image itself to stdout; keep that clean
            print(f"command: {ns.command}")
        code = _HANDLERS[ns.command](ns, sys.stdout)
    except (
        InputError,
        PolytopeError,
        PolytopeFormatError,
        PolarizationError,
        latticegen.HypothesisError,
        latticegen.PoleError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    finally:
        elapsed = time.monotonic() - start
        print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

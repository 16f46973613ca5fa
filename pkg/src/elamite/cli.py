"""``elamite`` command-line front end.

Exit status: 0 on success, 1 for malformed input or flags, 2 when a value is
well formed but mathematically out of range.  Each failure prints a single
``elamite: error: ...`` line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .ancient_numerics import CATALOG
from .construction import (
    Circle,
    Closure,
    Construction,
    Point,
    compose_ngon,
    double_ngon,
    durer_heptagon,
    elamite_heptagon,
    exact_ngon,
    heron_heptagon,
    hexagon_march,
    hexagon_triangle,
    hexagon_square,
    polygon_regularity_error,
    ptolemy_pentagon,
)
from .dissection import (
    Layout,
    Split,
    decompose_heptagon,
    goal_region,
    grid_classify,
    heptagon_area,
    load_placements,
    residual_identity,
    shipped_placements,
)
from .errors import DomainError, ElamiteError, ParseError
from .expression import eval_sex_expression
from .polygon_area import (
    FormulaId,
    elamite_instruction,
    error_analysis,
    error_report,
    exact_area_coefficient,
    formulas_for,
    heron_derivation,
    mpf_to_fraction,
    smt2_derivation,
)
from .sexagesimal import parse_sexagesimal, render_sexagesimal
from .svg import construction_svg, dissection_svg, write_atomic

PROG = "elamite"
DECIMALS = 10
TRUNCATED = " [truncated]"


class UsageError(ElamiteError):
    """Bad flags or a flag combination that makes no sense."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


# value parsing ------------------------------------------------------------


def parse_value(text: str) -> Fraction:
    """A sexagesimal literal (``0;35``), a decimal (``0.5``) or a fraction (``7/6``)."""
    text = text.strip()
    if ";" in text or "," in text:
        return parse_sexagesimal(text)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a number: {text!r}", 0) from None


def _num(x: float) -> float:
    return round(float(x), DECIMALS) + 0.0


def _pct(x: Any) -> float:
    return round(float(x), 2) + 0.0


def _sexa(x: Fraction, places: int = 6) -> str:
    digits = render_sexagesimal(x, places, "truncate")
    return str(digits) + ("" if digits.exact else TRUNCATED)


# rendering ----------------------------------------------------------------


def _cell(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _table(rows: Sequence[dict[str, Any]], columns: Sequence[str]) -> str:
    cells = [list(columns)] + [[_cell(r[c]) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _pairs(data: dict[str, Any]) -> str:
    width = max(len(k) for k in data)
    return "".join(f"{k.ljust(width)}  {_cell(v)}".rstrip() + "\n" for k, v in data.items())


def _json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _emit(fmt: str, table: str, data: Any) -> str:
    return _json(data) if fmt == "json" else table


# commands -----------------------------------------------------------------


def cmd_sexa(args: argparse.Namespace) -> str:
    value, digits = eval_sex_expression(args.expr, args.places)
    data = {
        "expression": args.expr,
        "rational": str(value),
        "sexagesimal": str(digits) + ("" if digits.exact else TRUNCATED),
        "truncated": not digits.exact,
    }
    return _emit(args.format, _pairs(data), data)


ERROR_COLUMNS = ("formula_id", "coefficient_sexagesimal", "coefficient_rational", "relative_error_percent")


def cmd_areas(args: argparse.Namespace) -> str:
    side = parse_value(args.side)
    if side <= 0:
        raise DomainError(f"side must be positive, got {side}")
    rows = []
    for f in formulas_for(args.n):
        if f.id is FormulaId.EXACT:
            coef = mpf_to_fraction(exact_area_coefficient(args.n))
            rational, err = None, 0.0
        else:
            coef = f.rational_coefficient
            rational, err = str(coef), _pct(error_report(f, args.n).relative_error_percent)
        area = coef * side * side
        rows.append(
            {
                "formula_id": f.id.value,
                "coefficient_sexagesimal": _sexa(coef),
                "coefficient_rational": rational,
                "relative_error_percent": err,
                "area": _num(area),
                "area_sexagesimal": _sexa(area),
            }
        )
    columns = ERROR_COLUMNS + ("area", "area_sexagesimal")
    shown = [dict(r, relative_error_percent=f"{r['relative_error_percent']:.2f}") for r in rows]
    return _emit(args.format, _table(shown, columns), rows)


def cmd_errors(args: argparse.Namespace) -> str:
    rows = [
        {
            "formula_id": rep.formula_id.value,
            "coefficient_sexagesimal": _sexa(rep.approx_coefficient),
            "coefficient_rational": str(rep.approx_coefficient),
            "relative_error_percent": _pct(rep.relative_error_percent),
        }
        for rep in error_analysis(args.n)
    ]
    table = _table([dict(r, relative_error_percent=f"{r['relative_error_percent']:.2f}") for r in rows], ERROR_COLUMNS)
    return _emit(args.format, table, rows)


def cmd_derive(args: argparse.Namespace) -> str:
    if args.which == "smt2":
        if args.a is not None:
            raise UsageError("derive smt2 takes --r, not --a")
        trace = smt2_derivation(parse_value(args.r if args.r is not None else "0;35"))
    else:
        if args.r is not None:
            raise UsageError(f"derive {args.which} takes --a, not --r")
        side = parse_value(args.a if args.a is not None else "1")
        trace = heron_derivation(side) if args.which == "heron" else elamite_instruction(side)
    rows = [
        {
            "step": s.label,
            "rational": str(s.value),
            "sexagesimal": str(s.rendering) + ("" if s.rendering.exact else TRUNCATED),
        }
        for s in trace.steps
    ]
    return _emit(args.format, _table(rows, ("step", "rational", "sexagesimal")), {"derivation": trace.name, "steps": rows})


def cmd_constants(args: argparse.Namespace) -> str:
    rows = []
    for c in CATALOG.values():
        rows.append(
            {
                "id": c.id,
                "value": None if c.value is None else str(c.value),
                "sexagesimal": None if c.value is None else _sexa(c.value),
                "decimal": _num(c.value if c.value is not None else c.check_value),
                "source": c.source,
                "replaces": c.replaces,
            }
        )
    return _emit(args.format, _table(rows, ("id", "value", "sexagesimal", "decimal", "source", "replaces")), rows)


# shape -> methods it accepts
METHODS = {
    "triangle": ("exact", "march"),
    "square": ("exact", "march"),
    "pentagon": ("exact", "ptolemy"),
    "hexagon": ("exact", "march"),
    "heptagon": ("exact", "heron", "durer", "elamite"),
    "ngon": ("exact", "double", "compose"),
}
CLOSURES = {"start": Closure.CONNECT_TO_START, "midpoint": Closure.MIDPOINT_OF_GAP_ARC}
SIDES = {"triangle": 3, "square": 4, "pentagon": 5, "hexagon": 6, "heptagon": 7}


def _build(args: argparse.Namespace, circle: Circle) -> Construction:
    shape, method = args.shape, args.method
    if method not in METHODS[shape]:
        raise UsageError(f"--shape {shape} supports --method {', '.join(METHODS[shape])}, not {method}")
    if args.sqrt3_approx and method != "heron":
        raise UsageError("--sqrt3-approx only applies to --method heron")
    if args.closure is not None and method not in ("heron", "durer", "elamite"):
        raise UsageError("--closure only applies to the marched heptagons")
    if shape == "ngon":
        if args.n is None:
            raise UsageError("--shape ngon needs --n")
        if method == "compose" and args.m is None:
            raise UsageError("--method compose needs --m")
    elif args.n is not None or args.m is not None:
        raise UsageError("--n and --m only apply to --shape ngon")
    closure = CLOSURES[args.closure or "start"]

    if method == "exact":
        return exact_ngon(args.n if shape == "ngon" else SIDES[shape], circle.radius)
    if method == "march":
        return {"triangle": hexagon_triangle, "square": hexagon_square, "hexagon": hexagon_march}[shape](circle)
    if method == "ptolemy":
        return ptolemy_pentagon(circle)
    if method == "heron":
        return heron_heptagon(circle, args.sqrt3_approx, closure)
    if method == "durer":
        return durer_heptagon(circle, closure)
    if method == "elamite":
        return elamite_heptagon(circle, closure)
    if method == "double":
        return double_ngon(exact_ngon(args.n, circle.radius).points, circle)
    return compose_ngon(args.n, args.m, circle)


def cmd_construct(args: argparse.Namespace) -> str:
    radius = parse_value(args.radius)
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")
    circle = Circle(Point(0.0, 0.0), float(radius))
    con = _build(args, circle)
    if args.svg:
        title = f"{args.shape} by {args.method}"
        write_atomic(args.svg, construction_svg(con, title))

    vertices = [{"vertex": i + 1, "x": _num(p.x), "y": _num(p.y)} for i, p in enumerate(con.points)]
    if not args.report:
        return _emit(args.format, _table(vertices, ("vertex", "x", "y")), vertices)

    sides = con.side_lengths()
    report: dict[str, Any] = {
        "shape": args.shape,
        "method": args.method,
        "radius": _num(circle.radius),
        "vertices": len(con.points),
        "steps": len(con.trace.steps),
        "min_side": _num(min(sides)),
        "max_side": _num(max(sides)),
        "regularity_error": _num(polygon_regularity_error(con.points, circle)),
    }
    if con.gap is not None:
        g = con.gap
        report.update(
            closure=g.closure_mode.value,
            chord_length=_num(g.chord_length),
            per_chord_angle_deg=_num(g.per_chord_central_angle_deg),
            chords=g.chords,
            cumulative_angle_deg=_num(g.cumulative_angle_deg),
            gap_deg=_num(g.gap_deg),
            measured_gap_deg=_num(g.measured_gap_deg),
        )
    for key in sorted(con.measurements):
        report[key] = _num(con.measurements[key])
    table = _pairs(report) + "\n" + _table(vertices, ("vertex", "x", "y"))
    return _emit(args.format, table, dict(report, points=vertices))


def cmd_dissect(args: argparse.Namespace) -> str:
    layout = Layout(args.layout)
    if args.placements:
        pf = load_placements(args.placements)
        if pf.layout is not layout:
            raise DomainError(f"placement file is for the {pf.layout.value} layout, not {layout.value}")
        if args.split is not None and Split(args.split) is not pf.split:
            raise DomainError(f"placement file uses split {pf.split.value}, not {args.split}")
    else:
        pf = shipped_placements(layout, args.split)
    region = goal_region(layout, Fraction(pf.a))
    pieces = decompose_heptagon(pf.a, pf.split)
    report = grid_classify(region, pf.placements, pieces, grid=args.grid)
    if args.svg:
        write_atomic(args.svg, dissection_svg(region, pf.placements, pieces, report))

    data: dict[str, Any] = {"layout": layout.value, "split": pf.split.value, "a": _num(pf.a), "grid": args.grid}
    data.update({f"cells_{k}": v for k, v in report.counts.items()})
    data["net_uncovered"] = _num(report.net_uncovered)
    if args.report:
        residual = residual_identity(Fraction(pf.a))
        data.update(
            goal_area=_num(report.goal_area),
            covered_area=_num(report.covered_area),
            total_piece_area=_num(report.total_piece_area),
            heptagon_area=_num(heptagon_area(pf.a)),
            pairwise_overlap_area=_num(report.pairwise_overlap_area),
            residual_cells_area=str(residual.three_cells_area),
            residual_percent=_pct(residual.percent),
            warnings=len(report.warnings),
        )
    return _emit(args.format, _pairs(data), data)


# parser -------------------------------------------------------------------


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Sexagesimal arithmetic and ancient polygon geometry.")
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sexa = sub.add_parser("sexa", help="evaluate base-60 arithmetic")
    sexa_sub = sexa.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ev = sexa_sub.add_parser("eval", help="evaluate an expression such as '7 * 0;7,55'")
    ev.add_argument("expr")
    ev.add_argument("--places", type=int, default=6)
    _add_format(ev)
    ev.set_defaults(func=cmd_sexa)

    areas = sub.add_parser("areas", help="area formulas for a regular n-gon")
    areas.add_argument("--n", type=int, default=7)
    areas.add_argument("--side", default="1")
    _add_format(areas)
    areas.set_defaults(func=cmd_areas)

    errors = sub.add_parser("errors", help="relative errors of the heptagon constants")
    errors.add_argument("--n", type=int, default=7)
    _add_format(errors)
    errors.set_defaults(func=cmd_errors)

    derive = sub.add_parser("derive", help="print a step-by-step derivation")
    derive.add_argument("which", choices=("smt2", "heron", "elamite"))
    derive.add_argument("--r", help="circumradius for smt2 (default 0;35)")
    derive.add_argument("--a", help="side for heron and elamite (default 1)")
    _add_format(derive)
    derive.set_defaults(func=cmd_derive)

    constants = sub.add_parser("constants", help="list the named approximations")
    _add_format(constants)
    constants.set_defaults(func=cmd_constants)

    construct = sub.add_parser("construct", help="run a compass-and-straightedge construction")
    construct.add_argument("--shape", required=True, choices=tuple(METHODS))
    construct.add_argument("--method", default="exact", choices=("exact", "march", "ptolemy", "heron", "durer", "elamite", "double", "compose"))
    construct.add_argument("--radius", default="1")
    construct.add_argument("--closure", choices=tuple(CLOSURES))
    construct.add_argument("--n", type=int)
    construct.add_argument("--m", type=int)
    construct.add_argument("--sqrt3-approx", action="store_true", help="use sqrt(3) ~ 7/4 (heron only)")
    construct.add_argument("--svg", help="write an SVG drawing to this path")
    construct.add_argument("--report", action="store_true")
    _add_format(construct)
    construct.set_defaults(func=cmd_construct)

    dissect = sub.add_parser("dissect", help="check a heptagon dissection against its goal region")
    dissect.add_argument("--layout", required=True, choices=tuple(l.value for l in Layout))
    dissect.add_argument("--placements", help="placement JSON (default: the shipped file)")
    dissect.add_argument("--split", choices=tuple(s.value for s in Split))
    dissect.add_argument("--grid", type=int, default=12)
    dissect.add_argument("--svg", help="write an SVG drawing to this path")
    dissect.add_argument("--report", action="store_true")
    _add_format(dissect)
    dissect.set_defaults(func=cmd_dissect)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"{PROG}: error: {exc}", file=stderr)
        return 1
    except (ElamiteError, ValueError, OSError) as exc:
        print(f"{PROG}: error: {exc}", file=stderr)
        return 2
    stdout.write(out)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:  # --help and --version
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())

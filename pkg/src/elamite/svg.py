"""Deterministic SVG drawings of constructions and dissections.

Every drawing uses the viewBox ``0 0 1000 1000`` and prints coordinates
with exactly six decimals, so identical inputs give identical bytes.
Files are written to a temporary sibling and renamed into place.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Callable, Iterable
from xml.sax.saxutils import escape

from .construction import Construction
from .dissection import GoalRegion, GridReport, Piece, Placement, placed_triangles

SIZE = 1000.0
CELL_COLORS = {
    "complete_colored": "#3b6fc4",
    "almost_colored": "#7c9fdb",
    "partial": "#b9cbee",
    "almost_blank_half": "#e4ebf8",
    "blank": "#ffffff",
}

Transform = Callable[[float, float], tuple[float, float]]


def fmt(v: float) -> str:
    text = f"{v:.6f}"
    return "0.000000" if text == "-0.000000" else text


def _pts(points: Iterable[tuple[float, float]], tf: Transform) -> str:
    return " ".join(f"{fmt(x)},{fmt(y)}" for x, y in (tf(px, py) for px, py in points))


def _header() -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE:.0f} {SIZE:.0f}" width="{SIZE:.0f}" height="{SIZE:.0f}">',
        '<rect x="0" y="0" width="1000" height="1000" fill="#ffffff"/>',
    ]


def construction_svg(con: Construction, title: str = "") -> str:
    """Circles and lines of the trace in one layer, the polygon in another."""
    c = con.circle
    scale = 400.0 / c.radius

    def tf(x: float, y: float) -> tuple[float, float]:
        return 500.0 + (x - c.center.x) * scale, 500.0 - (y - c.center.y) * scale

    out = _header()
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<g id="construction" fill="none" stroke="#9a9a9a" stroke-width="1">')
    trace = con.trace
    for step in trace.steps:
        if step.kind == "draw_circle":
            circ = trace.circles[step.label]
            cx, cy = tf(circ.center.x, circ.center.y)
            out.append(
                f'<circle id="{escape(step.label)}" cx="{fmt(cx)}" cy="{fmt(cy)}" r="{fmt(circ.radius * scale)}"/>'
            )
        elif step.kind == "draw_line":
            line = trace.lines[step.label]
            (x1, y1), (x2, y2) = tf(line.through.x, line.through.y), tf(line.and_.x, line.and_.y)
            out.append(
                f'<line id="{escape(step.label)}" x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}"/>'
            )
    out.append("</g>")
    out.append('<g id="polygon" fill="none" stroke="#c0392b" stroke-width="3">')
    out.append(f'<polygon points="{_pts(((p.x, p.y) for p in con.points), tf)}"/>')
    out.append("</g>")
    out.append('<g id="points" fill="#000000" font-family="monospace" font-size="14">')
    for step in trace.steps:
        if step.kind in ("mark_point", "intersect", "mark_midpoint_of_arc"):
            p = trace.points[step.label]
            x, y = tf(p.x, p.y)
            out.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="3.000000"/>')
            out.append(f'<text x="{fmt(x + 6)}" y="{fmt(y - 6)}">{escape(step.label)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def dissection_svg(
    region: GoalRegion, placements: Iterable[Placement], pieces: list[Piece], report: GridReport
) -> str:
    """Goal region, classified grid cells and the placed pieces."""
    margin = 50.0
    scale = (SIZE - 2 * margin) / max(region.width, region.height)
    top = margin + region.height * scale

    def tf(x: float, y: float) -> tuple[float, float]:
        return margin + x * scale, top - y * scale

    out = _header()
    out.append('<g id="cells" stroke="#d0d0d0" stroke-width="0.5">')
    s = report.cell_size
    for cell in report.cells:
        x, y = tf(cell.col * s, (cell.row + 1) * s)
        out.append(
            f'<rect x="{fmt(x)}" y="{fmt(y)}" width="{fmt(s * scale)}" height="{fmt(s * scale)}" '
            f'fill="{CELL_COLORS[cell.cls]}" class="{cell.cls}"/>'
        )
    out.append("</g>")
    rx0, ry0, rx1, ry1 = region.removed_cell
    x, y = tf(rx0, ry1)
    out.append('<g id="removed" fill="none" stroke="#555555" stroke-width="1" stroke-dasharray="6,4">')
    out.append(f'<rect x="{fmt(x)}" y="{fmt(y)}" width="{fmt((rx1 - rx0) * scale)}" height="{fmt((ry1 - ry0) * scale)}"/>')
    out.append("</g>")
    out.append('<g id="pieces" fill="#f5b041" fill-opacity="0.25" stroke="#7e5109" stroke-width="1.5">')
    for pid, tri in placed_triangles(placements, pieces):
        out.append(f'<polygon id="{escape(pid)}" points="{_pts(tri, tf)}"/>')
    out.append("</g>")
    out.append('<g id="region" fill="none" stroke="#000000" stroke-width="2.5">')
    out.append(f'<polygon points="{_pts(((p.x, p.y) for p in region.outline), tf)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_atomic(path: str | Path, text: str) -> None:
    """Write ``text`` to ``path`` so readers never see a partial file."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent or ".")
    umask = os.umask(0)
    os.umask(umask)
    try:
        os.chmod(tmp, 0o666 & ~umask)
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise

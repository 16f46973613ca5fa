"""Cut-and-paste check of the Elamite heptagon formula.

A regular heptagon of side ``a`` is cut into seven isosceles triangles
(apex at the centre), two or four of which are halved along their
heights.  The pieces are moved rigidly into a goal region of area
``4a^2 - (1/12) 4a^2``: a ``2a x 2a`` square or an ``4a x a`` rectangle,
each missing one of its twelve equal parts.  Coverage is then measured
cell by cell on a grid of ``a/12`` squares.
"""

from __future__ import annotations

import enum
import json
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .construction.kernel import Point, polygon_area
from .errors import DomainError
from .sexagesimal import RationalLike

Poly = list[tuple[float, float]]


class Split(str, enum.Enum):
    TWO = "two"
    FOUR = "four"


class Layout(str, enum.Enum):
    SQUARE = "square"
    RECTANGLE = "rectangle"


class PieceKind(str, enum.Enum):
    ISOSCELES = "isosceles"
    RIGHT = "right"


CELL_CLASSES = ("complete_colored", "almost_colored", "partial", "almost_blank_half", "blank")
_BLANK_TOL = 1e-12


@dataclass(frozen=True)
class Piece:
    """A triangle in its local frame.

    Isosceles: base from (-a/2, 0) to (a/2, 0), apex (0, h).
    Right: right angle at the origin, legs a/2 along +x and h along +y.
    ``h = a / (2 tan(pi/7))`` is the apothem of the heptagon.
    """

    id: str
    kind: PieceKind
    vertices: tuple[Point, Point, Point]
    area: float


def heptagon_apothem(a: float) -> float:
    return a / (2 * math.tan(math.pi / 7))


def heptagon_area(a: float) -> float:
    return 7 * a * heptagon_apothem(a) / 2


def decompose_heptagon(a: float, split: Split | str = Split.TWO) -> list[Piece]:
    """Seven isosceles pieces, with the last two (or four) halved: 9 or 11 pieces."""
    split = Split(split)
    a = float(a)
    if not (math.isfinite(a) and a > 0):
        raise DomainError(f"side must be positive, got {a}")
    h = heptagon_apothem(a)
    halved = 2 if split is Split.TWO else 4
    pieces = []
    for k in range(1, 8 - halved):
        pieces.append(
            Piece(f"T{k}", PieceKind.ISOSCELES, (Point(-a / 2, 0.0), Point(a / 2, 0.0), Point(0.0, h)), a * h / 2)
        )
    for k in range(1, 2 * halved + 1):
        pieces.append(Piece(f"R{k}", PieceKind.RIGHT, (Point(0.0, 0.0), Point(a / 2, 0.0), Point(0.0, h)), a * h / 4))
    return pieces


@dataclass(frozen=True)
class GoalRegion:
    layout: Layout
    side: float
    width: float
    height: float
    outline: tuple[Point, ...]  # counterclockwise
    removed_cell: tuple[float, float, float, float]  # x0, y0, x1, y1
    side_exact: Fraction

    @property
    def area(self) -> float:
        return polygon_area(list(self.outline))

    def exact_area(self) -> Fraction:
        """Area from the exact side the region was built with."""
        a = self.side_exact
        if self.layout is Layout.SQUARE:
            return (2 * a) ** 2 - (2 * a / 4) * (2 * a / 3)
        return 4 * a * a - (4 * a / 12) * a


def goal_region(layout: Layout | str, a: RationalLike | float) -> GoalRegion:
    """The 4a^2 figure split into 12 equal parts, with the last part removed.

    square: 2a x 2a in 4 columns x 3 rows; the top-right part is removed.
    rectangle: 4a wide, a tall, in 12 vertical strips; the rightmost is removed.
    """
    layout = Layout(layout)
    exact = Fraction(a)
    a = float(a)
    if not (math.isfinite(a) and a > 0):
        raise DomainError(f"side must be positive, got {a}")
    if layout is Layout.SQUARE:
        w = h = 2 * a
        cx, cy = w - w / 4, h - h / 3
        outline = (Point(0, 0), Point(w, 0), Point(w, cy), Point(cx, cy), Point(cx, h), Point(0, h))
        removed = (cx, cy, w, h)
    else:
        w, h = 4 * a, a
        cx = w - w / 12
        outline = (Point(0, 0), Point(cx, 0), Point(cx, h), Point(0, h))
        removed = (cx, 0.0, w, h)
    return GoalRegion(layout, a, w, h, outline, removed, exact)


@dataclass(frozen=True)
class Placement:
    """Reflect (x -> -x) if asked, rotate about the local origin, then translate."""

    piece_id: str
    dx: float
    dy: float
    rot_deg: float = 0.0
    reflected: bool = False

    def apply(self, piece: Piece) -> tuple[Point, ...]:
        t = math.radians(self.rot_deg)
        c, s = math.cos(t), math.sin(t)
        out = []
        for p in piece.vertices:
            x = -p.x if self.reflected else p.x
            out.append(Point(c * x - s * p.y + self.dx, s * x + c * p.y + self.dy))
        return tuple(out)


@dataclass(frozen=True)
class PlacementFile:
    layout: Layout
    a: float
    split: Split
    placements: tuple[Placement, ...]

    def to_json(self) -> str:
        payload = {
            "layout": self.layout.value,
            "a": self.a,
            "split": self.split.value,
            "placements": [
                {"piece_id": p.piece_id, "dx": p.dx, "dy": p.dy, "rot_deg": p.rot_deg, "reflected": p.reflected}
                for p in self.placements
            ],
        }
        return json.dumps(payload, indent=2) + "\n"


def parse_placements(text: str) -> PlacementFile:
    try:
        data = json.loads(text)
        layout = Layout(data["layout"])
        a = float(data["a"])
        raw = data["placements"]
        placements = tuple(
            Placement(
                str(p["piece_id"]),
                float(p["dx"]),
                float(p["dy"]),
                float(p.get("rot_deg", 0.0)),
                bool(p.get("reflected", False)),
            )
            for p in raw
        )
    except (ValueError, KeyError, TypeError) as exc:
        raise DomainError(f"bad placement file: {exc}") from None
    if "split" in data:
        split = Split(data["split"])
    elif len(placements) in (9, 11):
        split = Split.TWO if len(placements) == 9 else Split.FOUR
    else:
        raise DomainError("placement file has no split and neither 9 nor 11 placements")
    return PlacementFile(layout, a, split, placements)


def load_placements(path: str | Path) -> PlacementFile:
    return parse_placements(Path(path).read_text(encoding="utf-8"))


SHIPPED = {
    (Layout.SQUARE, Split.TWO): "square_two.json",
    (Layout.SQUARE, Split.FOUR): "square_four.json",
    (Layout.RECTANGLE, Split.TWO): "rectangle_two.json",
    (Layout.RECTANGLE, Split.FOUR): "rectangle_four.json",
}
# The pairings drawn in the original layouts.
DEFAULT_SPLIT = {Layout.SQUARE: Split.TWO, Layout.RECTANGLE: Split.FOUR}


def shipped_placements(layout: Layout | str, split: Split | str | None = None) -> PlacementFile:
    layout = Layout(layout)
    split = DEFAULT_SPLIT[layout] if split is None else Split(split)
    text = resources.files("elamite").joinpath("data", SHIPPED[layout, split]).read_text(encoding="utf-8")
    return parse_placements(text)


def clip_convex(subject: Sequence[tuple[float, float]], clip: Sequence[tuple[float, float]]) -> Poly:
    """Sutherland-Hodgman: ``subject`` clipped by the counterclockwise convex ``clip``."""
    out = list(subject)
    n = len(clip)
    for i in range(n):
        if not out:
            break
        ax, ay = clip[i]
        bx, by = clip[(i + 1) % n]
        ex, ey = bx - ax, by - ay

        def side(p: tuple[float, float]) -> float:
            return ex * (p[1] - ay) - ey * (p[0] - ax)

        src, out = out, []
        prev = src[-1]
        sp = side(prev)
        for cur in src:
            sc = side(cur)
            if sc >= 0:
                if sp < 0:
                    out.append(_cross_point(prev, cur, sp, sc))
                out.append(cur)
            elif sp >= 0:
                out.append(_cross_point(prev, cur, sp, sc))
            prev, sp = cur, sc
    return out


def _cross_point(p, q, sp, sq):
    t = sp / (sp - sq)
    return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))


def _area(poly: Sequence[tuple[float, float]]) -> float:
    s = 0.0
    for i, (x0, y0) in enumerate(poly):
        x1, y1 = poly[(i + 1) % len(poly)]
        s += x0 * y1 - x1 * y0
    return s / 2


def _ccw(poly: Sequence[Point]) -> Poly:
    pts = [(p.x, p.y) for p in poly]
    return pts if _area(pts) >= 0 else pts[::-1]


@dataclass(frozen=True)
class CellCoverage:
    col: int
    row: int
    fraction: float
    cls: str


@dataclass(frozen=True)
class GridReport:
    cell_size: float
    counts: dict[str, int]
    covered_area: float
    goal_area: float
    net_uncovered: float
    total_piece_area: float
    pairwise_overlap_area: float
    cells: tuple[CellCoverage, ...] = field(repr=False, default=())
    warnings: tuple[str, ...] = ()


def placed_triangles(placements: Iterable[Placement], pieces: Sequence[Piece]) -> list[tuple[str, Poly]]:
    by_id = {p.id: p for p in pieces}
    out = []
    seen = set()
    for pl in placements:
        if pl.piece_id not in by_id:
            raise DomainError(f"placement refers to unknown piece {pl.piece_id!r}")
        if pl.piece_id in seen:
            raise DomainError(f"piece {pl.piece_id!r} placed twice")
        seen.add(pl.piece_id)
        out.append((pl.piece_id, _ccw(pl.apply(by_id[pl.piece_id]))))
    return out


def _classify(f: float, complete: float, almost: float) -> str:
    if f >= complete:
        return "complete_colored"
    if f >= almost:
        return "almost_colored"
    if f > 1 - almost:
        return "partial"
    if f > _BLANK_TOL:
        return "almost_blank_half"
    return "blank"


def grid_classify(
    region: GoalRegion,
    placements: Sequence[Placement],
    pieces: Sequence[Piece],
    complete_threshold: float = 0.99,
    almost_threshold: float = 0.80,
    grid: int = 12,
) -> GridReport:
    """Clip every placed piece against every ``a/grid`` cell of the region.

    A cell's fraction is the summed clipped area over the cell area, so
    overlapping pieces count twice; ``pairwise_overlap_area`` reports how
    much that happens.  Classes use the fraction capped at 1.
    """
    if not (0 < almost_threshold <= complete_threshold <= 1):
        raise DomainError("need 0 < almost_threshold <= complete_threshold <= 1")
    if grid < 1 or grid % (6 if region.layout is Layout.SQUARE else 3):
        raise DomainError(f"grid={grid} does not align with the twelve parts of the {region.layout.value}")
    cell = region.side / grid
    cols, rows = round(region.width / cell), round(region.height / cell)
    rx0, ry0, rx1, ry1 = region.removed_cell

    tris = placed_triangles(placements, pieces)
    notes = []
    for pid, tri in tris:
        xs, ys = [p[0] for p in tri], [p[1] for p in tri]
        if max(xs) <= 0 or min(xs) >= region.width or max(ys) <= 0 or min(ys) >= region.height:
            msg = f"piece {pid} lies entirely outside the region's bounding box"
            notes.append(msg)
            warnings.warn(msg, stacklevel=2)
    boxes = [(min(p[0] for p in t), min(p[1] for p in t), max(p[0] for p in t), max(p[1] for p in t)) for _, t in tris]

    counts = dict.fromkeys(CELL_CLASSES, 0)
    cells = []
    covered = 0.0
    for row in range(rows):
        y0, y1 = row * cell, (row + 1) * cell
        for col in range(cols):
            x0, x1 = col * cell, (col + 1) * cell
            cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
            if rx0 < cx < rx1 and ry0 < cy < ry1:
                continue
            rect = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
            area = 0.0
            for (_, tri), (bx0, by0, bx1, by1) in zip(tris, boxes):
                if bx1 <= x0 or bx0 >= x1 or by1 <= y0 or by0 >= y1:
                    continue
                clipped = clip_convex(tri, rect)
                if len(clipped) >= 3:
                    area += _area(clipped)
            covered += area
            f = area / (cell * cell)
            cls = _classify(min(f, 1.0), complete_threshold, almost_threshold)
            counts[cls] += 1
            cells.append(CellCoverage(col, row, f, cls))

    overlap = 0.0
    for i in range(len(tris)):
        for j in range(i + 1, len(tris)):
            bi, bj = boxes[i], boxes[j]
            if bi[2] <= bj[0] or bj[2] <= bi[0] or bi[3] <= bj[1] or bj[3] <= bi[1]:
                continue
            common = clip_convex(tris[i][1], tris[j][1])
            if len(common) >= 3:
                overlap += _area(common)

    goal = region.area
    total = sum(_area(t) for _, t in tris)
    return GridReport(
        cell_size=cell,
        counts=counts,
        covered_area=covered,
        goal_area=goal,
        net_uncovered=goal - covered,
        total_piece_area=total,
        pairwise_overlap_area=overlap,
        cells=tuple(cells),
        warnings=tuple(notes),
    )


def piece_area_inside(region: GoalRegion, placements: Sequence[Placement], pieces: Sequence[Piece]) -> float:
    """Placed area inside the region, clipping against its convex parts."""
    if region.layout is Layout.SQUARE:
        x0, y0, _, _ = region.removed_cell
        parts = [
            [(0.0, 0.0), (region.width, 0.0), (region.width, y0), (0.0, y0)],
            [(0.0, y0), (x0, y0), (x0, region.height), (0.0, region.height)],
        ]
    else:
        parts = [[(p.x, p.y) for p in region.outline]]
    total = 0.0
    for _, tri in placed_triangles(placements, pieces):
        for part in parts:
            clipped = clip_convex(tri, part)
            if len(clipped) >= 3:
                total += _area(clipped)
    return total


@dataclass(frozen=True)
class ResidualIdentity:
    three_cells_area: Fraction
    elamite_goal_area: Fraction
    percent: Fraction


def residual_identity(a: RationalLike) -> ResidualIdentity:
    """Three blank a/12 cells against the goal area: a^2/48 out of (11/3) a^2."""
    a = Fraction(a)
    if a <= 0:
        raise DomainError(f"side must be positive, got {a}")
    cells = 3 * (a / 12) ** 2
    goal = Fraction(11, 3) * a * a
    return ResidualIdentity(cells, goal, cells / goal * 100)

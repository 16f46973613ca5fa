"""Regenerate the shipped placement files in src/elamite/data/.

Pieces are laid out in strips: isosceles triangles alternate base-down and
base-up along a strip as wide as the heptagon's apothem h, and a right piece
squares off each end, so a strip holding k isosceles pieces and two right
pieces is a (k+1)/2 x h rectangle.  Neither goal region is h wide in a
direction where the strips fit side by side, so some strips overlap; every
piece stays inside the region, which is what the area identities need.

    python scripts/make_placements.py
"""

from __future__ import annotations

import itertools
import math
from pathlib import Path

from elamite.dissection import (
    Layout,
    Placement,
    PlacementFile,
    Split,
    _area,
    clip_convex,
    decompose_heptagon,
    goal_region,
    heptagon_apothem,
    piece_area_inside,
)

A = 1.0
H = heptagon_apothem(A)
DATA = Path(__file__).resolve().parent.parent / "src" / "elamite" / "data"


def strip(k: int) -> list[tuple[str, list[tuple[float, float]]]]:
    """Triangles of a horizontal strip [0, (k+1)/2] x [0, H] in drawing order.

    Isosceles triangles are (base end, base end, apex); right triangles are
    (right-angle corner, end of the a/2 leg, end of the h leg).
    """
    out = [("right", [(0.0, H), (0.5, H), (0.0, 0.0)])]
    for i in range(k):
        if i % 2 == 0:
            j = i / 2
            out.append(("iso", [(j, 0.0), (j + 1, 0.0), (j + 0.5, H)]))
        else:
            j = (i - 1) / 2
            out.append(("iso", [(j + 1.5, H), (j + 0.5, H), (j + 1, 0.0)]))
    end = (k + 1) / 2
    if k % 2 == 1:
        out.append(("right", [(end, H), (end - 0.5, H), (end, 0.0)]))
    else:
        out.append(("right", [(end, 0.0), (end - 0.5, 0.0), (end, H)]))
    return out


def moved(tris, rot_deg=0.0, dx=0.0, dy=0.0):
    t = math.radians(rot_deg)
    c, s = math.cos(t), math.sin(t)
    return [(kind, [(c * x - s * y + dx, s * x + c * y + dy) for x, y in pts]) for kind, pts in tris]


def fit(kind: str, pts, piece_id: str) -> Placement:
    """Rigid motion taking the local piece onto the world triangle ``pts``."""
    p0, p1, p2 = pts
    theta = math.degrees(math.atan2(p1[1] - p0[1], p1[0] - p0[0]))
    if kind == "iso":
        return Placement(piece_id, (p0[0] + p1[0]) / 2, (p0[1] + p1[1]) / 2, theta % 360, False)
    cross = (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p1[1] - p0[1]) * (p2[0] - p0[0])
    if cross > 0:
        return Placement(piece_id, p0[0], p0[1], theta % 360, False)
    return Placement(piece_id, p0[0], p0[1], (theta - 180) % 360, True)


def assign(world, split: Split):
    pieces = decompose_heptagon(A, split)
    iso_ids = [p.id for p in pieces if p.kind.value == "isosceles"]
    right_ids = [p.id for p in pieces if p.kind.value == "right"]
    placements = []
    for kind, pts in world:
        pid = iso_ids.pop(0) if kind == "iso" else right_ids.pop(0)
        placements.append(fit(kind, pts, pid))
    assert not iso_ids and not right_ids, (iso_ids, right_ids)
    return placements


def tidy(p: Placement) -> Placement:
    r = lambda v: round(v, 15) + 0.0
    return Placement(p.piece_id, r(p.dx), r(p.dy), r(p.rot_deg), p.reflected)


def square_two():
    return moved(strip(3)) + moved(strip(2), dy=2 * A - H)


def square_four():
    world = moved(strip(3))
    for i in range(3):
        world += moved(strip(0), dx=0.5 * i, dy=2 * A - H)
    return world


def rectangle_four():
    world = []
    for i in range(3):
        world += moved(strip(1), rot_deg=90, dx=H * (i + 1))
    world += moved(strip(0), rot_deg=90, dx=11 / 3 * A, dy=0.0)
    return world


def rectangle_two():
    world = moved(strip(1), rot_deg=90, dx=H) + moved(strip(1), rot_deg=90, dx=2 * H)
    # three bare isosceles pieces standing on a vertical base
    world.append(("iso", [(2 * H, 1.0), (2 * H, 0.0), (3 * H, 0.5)]))
    world.append(("iso", [(11 / 3, 0.0), (11 / 3, 1.0), (11 / 3 - H, 0.5)]))
    world.append(best_extra_iso(world))
    return world


def best_extra_iso(world):
    """Place one more isosceles piece inside the rectangle with least overlap."""
    region = goal_region(Layout.RECTANGLE, A)
    outline = [(p.x, p.y) for p in region.outline]
    local = [(-0.5, 0.0), (0.5, 0.0), (0.0, H)]
    others = [ccw(pts) for _, pts in world]
    best = None
    for rot, dx, dy in itertools.product(range(0, 360, 5), [2 + i / 50 for i in range(85)], [i / 50 for i in range(51)]):
        t = math.radians(rot)
        c, s = math.cos(t), math.sin(t)
        pts = [(c * x - s * y + dx, s * x + c * y + dy) for x, y in local]
        tri = ccw(pts)
        inside = clip_convex(tri, outline)
        if len(inside) < 3 or abs(_area(inside) - _area(tri)) > 1e-12:
            continue
        lap = sum(_area(q) for o in others if len(q := clip_convex(tri, o)) >= 3)
        if best is None or lap < best[0] - 1e-12:
            best = (lap, [(pts[0][0], pts[0][1]), (pts[1][0], pts[1][1]), (pts[2][0], pts[2][1])])
    return ("iso", best[1])


def ccw(pts):
    return pts if _area(pts) >= 0 else pts[::-1]


def main() -> None:
    builders = {
        (Layout.SQUARE, Split.TWO): square_two,
        (Layout.SQUARE, Split.FOUR): square_four,
        (Layout.RECTANGLE, Split.TWO): rectangle_two,
        (Layout.RECTANGLE, Split.FOUR): rectangle_four,
    }
    for (layout, split), build in builders.items():
        placements = [tidy(p) for p in assign(build(), split)]
        pf = PlacementFile(layout, A, split, tuple(placements))
        region = goal_region(layout, A)
        pieces = decompose_heptagon(A, split)
        inside = piece_area_inside(region, placements, pieces)
        total = sum(p.area for p in pieces)
        print(f"{layout.value:9s} {split.value:4s} inside={inside:.15f} total={total:.15f} lost={total - inside:.2e}")
        path = DATA / f"{layout.value}_{split.value}.json"
        path.write_text(pf.to_json(), encoding="utf-8")


if __name__ == "__main__":
    main()

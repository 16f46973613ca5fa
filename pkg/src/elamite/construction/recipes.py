"""Regular polygons by compass and straightedge, exact and approximate.

All marching goes counterclockwise.  Every recipe returns a
:class:`Construction`: the final vertices in counterclockwise order, the
replayable trace that produced them and, for the heptagon marches, a
:class:`GapReport` describing how far the chords fall short of a full turn.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from ..ancient_numerics import constant, heptagon_side_from_radius
from ..errors import DomainError
from .kernel import EPS, Circle, Point, arc_midpoint, ccw_angle
from .trace import Builder, ConstructionTrace, counterclockwise_of

ORIGIN = Point(0.0, 0.0)
_LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


class Closure(str, enum.Enum):
    CONNECT_TO_START = "connect_to_start"
    MIDPOINT_OF_GAP_ARC = "midpoint_of_gap_arc"


@dataclass(frozen=True)
class GapReport:
    chord_length: float
    per_chord_central_angle_deg: float
    chords: int
    cumulative_angle_deg: float
    gap_deg: float
    closure_mode: Closure
    # Gap measured on the marked points rather than from the chord formula.
    measured_gap_deg: float


@dataclass(frozen=True)
class Construction:
    points: tuple[Point, ...]
    trace: ConstructionTrace
    circle: Circle
    gap: Optional[GapReport] = None
    measurements: Mapping[str, float] = field(default_factory=dict)

    def side_lengths(self) -> list[float]:
        n = len(self.points)
        return [self.points[i].distance(self.points[(i + 1) % n]) for i in range(n)]


def _start(c: Circle) -> Builder:
    b = Builder()
    b.mark_point("O", c.center)
    b.draw_circle("circle", "O", c.radius)
    return b


def _finish(b: Builder, labels: Sequence[str], c: Circle, gap: GapReport | None = None, **measurements: float) -> Construction:
    return Construction(tuple(b.points[l] for l in labels), b.freeze(), c, gap, measurements)


def _march(b: Builder, start: str, chord: float, count: int, labels: Sequence[str]) -> list[str]:
    """Step ``count`` chords of fixed length around ``circle`` from ``start``."""
    center = b.points["O"]
    current = start
    made = []
    for i in range(count):
        label = labels[i]
        b.draw_circle(f"arc_{label}", current, chord)
        b.intersect(label, "circle", f"arc_{label}", counterclockwise_of(center, b.points[current]))
        made.append(label)
        current = label
    return made


def _require_on_circle(p: Point, c: Circle, what: str = "start point") -> None:
    if not c.contains(p):
        raise DomainError(f"{what} ({p.x}, {p.y}) is not on the circle")


def _check_regular(points: Sequence[Point], c: Circle, what: str, n: int | None = None) -> None:
    if n is not None and len(points) != n:
        raise DomainError(f"{what} needs {n} points, got {len(points)}")
    if len(points) < 3:
        raise DomainError(f"{what} needs at least 3 points")
    tol = 1e3 * c.tol
    for p in points:
        if not c.contains(p, tol):
            raise DomainError(f"{what}: point ({p.x:.6g}, {p.y:.6g}) is not on the circle")
    step = 360.0 / len(points)
    angle_tol = math.degrees(tol / c.radius)
    turns = [ccw_angle(c.center, points[i], points[(i + 1) % len(points)]) for i in range(len(points))]
    ccw = all(abs(t - step) <= angle_tol for t in turns)
    cw = all(abs(t - (360.0 - step)) <= angle_tol for t in turns)
    if not (ccw or cw):
        raise DomainError(f"{what} is not a regular {len(points)}-gon")


def _circle_through(points: Sequence[Point]) -> Circle:
    cx = sum(p.x for p in points) / len(points)
    cy = sum(p.y for p in points) / len(points)
    center = Point(cx, cy)
    radius = sum(p.distance(center) for p in points) / len(points)
    if radius <= 0:
        raise DomainError("degenerate polygon")
    return Circle(center, radius)


def exact_ngon(n: int, r: float = 1.0, phase_deg: float = 0.0, center: Point = ORIGIN) -> Construction:
    """Reference n-gon: vertex k at ``phase + k*360/n`` degrees."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 3:
        raise DomainError(f"need an integer n >= 3, got {n!r}")
    c = Circle(center, float(r))
    b = _start(c)
    labels = [f"v{k + 1}" for k in range(n)]
    for k, label in enumerate(labels):
        b.mark_point(label, c.point_at(phase_deg + k * 360.0 / n))
    return _finish(b, labels, c)


def _hexagon_steps(b: Builder, c: Circle, start: Point) -> list[str]:
    _require_on_circle(start, c)
    b.mark_point("v1", start)
    labels = ["v1"] + _march(b, "v1", c.radius, 5, [f"v{k}" for k in range(2, 7)])
    closing = _march(b, "v6", c.radius, 1, ["v1'"])[0]
    if not b.points[closing].isclose(start, c.tol):
        raise DomainError("hexagon march did not close")  # pragma: no cover - geometric identity
    return labels


def hexagon_march(c: Circle, start: Point | None = None) -> Construction:
    """Six radius-length chords from ``start``; the sixth lands back on it."""
    start = c.point_at(0.0) if start is None else start
    b = _start(c)
    return _finish(b, _hexagon_steps(b, c, start), c)


def triangle_from_hexagon(hexagon: Sequence[Point], c: Circle | None = None) -> list[Point]:
    """Every other hexagon vertex, starting with the first."""
    c = _circle_through(hexagon) if c is None else c
    _check_regular(hexagon, c, "hexagon", 6)
    return [hexagon[0], hexagon[2], hexagon[4]]


def square_from_hexagon(hexagon: Sequence[Point], c: Circle) -> list[Point]:
    """Two opposite hexagon vertices and the midpoints of the two arcs between them."""
    _check_regular(hexagon, c, "hexagon", 6)
    h = list(hexagon)
    if ccw_angle(c.center, h[0], h[1]) > 180.0:
        h = [h[0]] + h[:0:-1]
    return [h[0], arc_midpoint(c, h[1], h[2]), h[3], arc_midpoint(c, h[4], h[5])]


def hexagon_triangle(c: Circle, start: Point | None = None) -> Construction:
    start = c.point_at(0.0) if start is None else start
    b = _start(c)
    v = _hexagon_steps(b, c, start)
    return _finish(b, [v[0], v[2], v[4]], c)


def hexagon_square(c: Circle, start: Point | None = None) -> Construction:
    start = c.point_at(0.0) if start is None else start
    b = _start(c)
    _hexagon_steps(b, c, start)
    b.mark_midpoint_of_arc("m2", "circle", "v2", "v3")
    b.mark_midpoint_of_arc("m5", "circle", "v5", "v6")
    return _finish(b, ["v1", "m2", "v4", "m5"], c)


def _nearest_to(target: Point):
    return lambda found: min(range(len(found)), key=lambda i: found[i].distance(target))


def ptolemy_pentagon(c: Circle) -> Construction:
    """Golden section of a radius, then five chords of length |CE|.

    A, B: ends of a horizontal diameter; C: top of the circle; D: midpoint
    of OB; E: on OA with DE = DC.  Then OE/OB and (OB - OE)/OE are both
    the golden ratio (sqrt(5) - 1)/2 and |CE| is the pentagon side.
    """
    r = c.radius
    b = _start(c)
    a = b.mark_point("A", c.point_at(180.0))
    b.draw_line("AO", "A", "O")
    b.intersect("B", "AO", "circle", lambda found: max(range(len(found)), key=lambda i: found[i].distance(a)))
    b.mark_midpoint_of_arc("C", "circle", "B", "A")
    b.draw_circle("circle_B", "B", r)
    b.intersect("P", "circle", "circle_B", 0)
    b.intersect("Q", "circle", "circle_B", 1)
    b.draw_line("PQ", "P", "Q")
    b.intersect("D", "PQ", "AO", 0)
    b.draw_circle("circle_D", "D", b.points["D"].distance(b.points["C"]))
    b.intersect("E", "circle_D", "AO", _nearest_to(a))
    o, e, bb = b.points["O"], b.points["E"], b.points["B"]
    oe, ob, eb = o.distance(e), o.distance(bb), e.distance(bb)
    side = b.points["C"].distance(e)
    labels = ["C"] + _march(b, "C", side, 4, ["v2", "v3", "v4", "v5"])
    closing = _march(b, "v5", side, 1, ["C'"])[0]
    return _finish(
        b,
        labels,
        c,
        OE=oe,
        OB=ob,
        EB=eb,
        OE_over_OB=oe / ob,
        cut_over_OE=(ob - oe) / oe,
        EB_over_OE=eb / oe,
        side=side,
        closure_error=b.points[closing].distance(b.points["C"]),
    )


def double_ngon(vertices: Sequence[Point], c: Circle) -> Construction:
    """Add the arc midpoint between neighbours using each chord's perpendicular bisector."""
    _check_regular(vertices, c, "polygon")
    n = len(vertices)
    b = _start(c)
    labels = [f"v{k + 1}" for k in range(n)]
    for label, p in zip(labels, vertices):
        b.mark_point(label, p)
    out = []
    for k in range(n):
        p, q = labels[k], labels[(k + 1) % n]
        chord = b.points[p].distance(b.points[q])
        b.draw_circle(f"bis_{p}", p, chord)
        b.draw_circle(f"bis_{q}_{k}", q, chord)
        b.intersect(f"x{k + 1}", f"bis_{p}", f"bis_{q}_{k}", 0)
        b.intersect(f"y{k + 1}", f"bis_{p}", f"bis_{q}_{k}", 1)
        b.draw_line(f"perp{k + 1}", f"x{k + 1}", f"y{k + 1}")
        near = arc_midpoint(c, b.points[p], b.points[q])
        if ccw_angle(c.center, b.points[p], b.points[q]) > 180.0:
            near = arc_midpoint(c, b.points[q], b.points[p])
        b.intersect(f"m{k + 1}", f"perp{k + 1}", "circle", _nearest_to(near))
        out += [p, f"m{k + 1}"]
    return _finish(b, out, c)


def compose_ngon(n: int, m: int, c: Circle, shared_vertex: Point | None = None) -> Construction:
    """Overlay an m-gon on every vertex of an n-gon; gcd(n, m) = 1 gives an nm-gon."""
    if not (isinstance(n, int) and isinstance(m, int) and n > m > 2):
        raise DomainError(f"need integers n > m > 2, got n={n}, m={m}")
    if math.gcd(n, m) != 1:
        raise DomainError(f"n={n} and m={m} share a factor; the marks would coincide")
    shared_vertex = c.point_at(0.0) if shared_vertex is None else shared_vertex
    _require_on_circle(shared_vertex, c, "shared vertex")
    phase = shared_vertex.angle_about(c.center)
    b = _start(c)
    for i in range(n):
        b.mark_point(f"v{i + 1}", c.point_at(phase + i * 360.0 / n))
    labels = []
    for i in range(n):
        base = phase + i * 360.0 / n
        for j in range(m):
            label = f"w{i + 1}_{j + 1}"
            b.mark_point(label, c.point_at(base + j * 360.0 / m))
            labels.append(label)
    labels.sort(key=lambda l: ccw_angle(c.center, shared_vertex, b.points[l]))
    spacing = min(
        ccw_angle(c.center, b.points[labels[k]], b.points[labels[(k + 1) % len(labels)]]) for k in range(len(labels))
    )
    if spacing < 360.0 / (n * m) - math.degrees(1e3 * EPS):
        raise DomainError("composed marks coincide")  # pragma: no cover - excluded by the gcd check
    return _finish(b, labels, c, min_spacing_deg=spacing)


def _heptagon_march(b: Builder, c: Circle, start: str, chord: float, closure: Closure | str) -> tuple[list[str], GapReport]:
    closure = Closure(closure)
    marks = _march(b, start, chord, 7, [f"{_LETTERS[i]}" for i in range(1, 8)])
    alpha = math.degrees(2 * math.asin(chord / (2 * c.radius)))
    measured_gap = ccw_angle(c.center, b.points[marks[-1]], b.points[start])
    if closure is Closure.CONNECT_TO_START:
        vertices = [start] + marks[:6]
    else:
        if measured_gap < 180.0:
            b.mark_midpoint_of_arc("M", "circle", marks[-1], start)
        else:  # the march overshot the start
            b.mark_midpoint_of_arc("M", "circle", start, marks[-1])
        vertices = marks[:6] + ["M"]
    gap = GapReport(
        chord_length=chord,
        per_chord_central_angle_deg=alpha,
        chords=7,
        cumulative_angle_deg=7 * alpha,
        gap_deg=360.0 - 7 * alpha,
        closure_mode=closure,
        measured_gap_deg=measured_gap if measured_gap < 180.0 else measured_gap - 360.0,
    )
    return vertices, gap


def _exact_heptagon_side(r: float) -> float:
    return 2 * r * math.sin(math.pi / 7)


def heron_heptagon(c: Circle, sqrt3_approx: bool = False, closure: Closure | str = Closure.CONNECT_TO_START) -> Construction:
    """Side = apothem of the inscribed hexagon, (sqrt(3)/2) r, or 7/8 r with sqrt(3) ~ 7/4."""
    b = _start(c)
    _hexagon_steps(b, c, c.point_at(0.0))
    b.mark_midpoint_of_arc("m1", "circle", "v1", "v2")
    b.draw_line("Om1", "O", "m1")
    b.draw_line("v1v2", "v1", "v2")
    foot = b.intersect("foot", "Om1", "v1v2", 0)
    apothem = foot.distance(c.center)
    side = float(constant("sqrt3_babylonian").value / 2) * c.radius if sqrt3_approx else apothem
    vertices, gap = _heptagon_march(b, c, "v1", side, closure)
    exact = _exact_heptagon_side(c.radius)
    return _finish(b, vertices, c, gap, side=side, apothem=apothem, side_error_percent=abs(side - exact) / exact * 100)


def durer_heptagon(c: Circle, closure: Closure | str = Closure.CONNECT_TO_START) -> Construction:
    """Side = |A v1| with A where line O-v2 meets the triangle side v1-v3."""
    b = _start(c)
    _hexagon_steps(b, c, c.point_at(0.0))
    b.draw_line("v1v3", "v1", "v3")
    b.draw_line("Ov2", "O", "v2")
    a = b.intersect("X", "Ov2", "v1v3", 0)
    side = a.distance(b.points["v1"])
    vertices, gap = _heptagon_march(b, c, "v1", side, closure)
    exact = _exact_heptagon_side(c.radius)
    return _finish(b, vertices, c, gap, side=side, side_error_percent=abs(side - exact) / exact * 100)


def elamite_heptagon(c: Circle, closure: Closure | str = Closure.CONNECT_TO_START, start: Point | None = None) -> Construction:
    """Seven chords of (6/7) r, the side implied by pi ~ 3.

    The march overshoots nothing and falls short of the start by the gap.
    ``connect_to_start`` keeps the start and the first six marks;
    ``midpoint_of_gap_arc`` drops the start and closes on the midpoint of
    the arc between the seventh mark and the start.
    """
    start = c.point_at(0.0) if start is None else start
    _require_on_circle(start, c)
    b = _start(c)
    b.mark_point("A", start)
    side = float(heptagon_side_from_radius(Fraction(1))) * c.radius
    vertices, gap = _heptagon_march(b, c, "A", side, closure)
    exact = _exact_heptagon_side(c.radius)
    return _finish(b, vertices, c, gap, side=side, side_error_percent=abs(side - exact) / exact * 100)


_GOLDEN = (math.sqrt(5) - 1) / 2


def _golden_section(f, lo: float, hi: float, tol: float) -> float:
    a, b = lo, hi
    x1, x2 = b - _GOLDEN * (b - a), a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
    return (a + b) / 2


def polygon_regularity_error(points: Sequence[Point], c: Circle, tol: float = 1e-9) -> float:
    """Worst vertex distance to the best-rotated regular polygon, in units of r."""
    n = len(points)
    if n < 3:
        raise DomainError(f"need at least 3 points, got {n}")
    step = 360.0 / n
    angles = [p.angle_about(c.center) for p in points]

    def worst(phase: float) -> float:
        out = 0.0
        for p, theta in zip(points, angles):
            k = round((theta - phase) / step)
            d = min(p.distance(c.point_at(phase + j * step)) for j in (k - 1, k, k + 1))
            out = max(out, d)
        return out / c.radius

    samples = 720
    grid = [i * step / samples for i in range(samples)]
    values = [worst(phi) for phi in grid]
    best = min(range(samples), key=values.__getitem__)
    h = step / samples
    phase = _golden_section(worst, grid[best] - h, grid[best] + h, tol)
    return min(worst(phase), values[best])

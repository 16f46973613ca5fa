"""Planar points, circles and lines with tolerance-aware intersections.

Tolerances are relative: ``EPS`` times the size of the figure (for a
construction, its circumradius).  Two intersection points are always
returned in a fixed order: larger y first, ties (within tolerance) broken
by larger x first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError

EPS = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def distance(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def isclose(self, other: Point, tol: float = EPS) -> bool:
        return self.distance(other) <= tol

    def angle_about(self, center: Point) -> float:
        """Polar angle in degrees in [0, 360) as seen from ``center``."""
        return math.degrees(math.atan2(self.y - center.y, self.x - center.x)) % 360.0


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise DomainError(f"circle radius must be positive and finite, got {self.radius}")

    @property
    def tol(self) -> float:
        return EPS * self.radius

    def contains(self, p: Point, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        return abs(p.distance(self.center) - self.radius) <= tol

    def point_at(self, angle_deg: float) -> Point:
        t = math.radians(angle_deg)
        return Point(self.center.x + self.radius * math.cos(t), self.center.y + self.radius * math.sin(t))


@dataclass(frozen=True)
class Line:
    through: Point
    and_: Point

    def __post_init__(self) -> None:
        scale = max(1.0, abs(self.through.x), abs(self.through.y))
        if self.through.distance(self.and_) <= EPS * scale:
            raise DomainError("a line needs two distinct points")

    @property
    def direction(self) -> tuple[float, float]:
        dx, dy = self.and_.x - self.through.x, self.and_.y - self.through.y
        n = math.hypot(dx, dy)
        return dx / n, dy / n


def ordered(points: list[Point], tol: float) -> list[Point]:
    """Sort by y descending, then x descending, with ties judged by ``tol``."""
    if len(points) < 2:
        return list(points)
    p, q = points
    if abs(p.y - q.y) > tol:
        return [p, q] if p.y > q.y else [q, p]
    return [p, q] if p.x >= q.x else [q, p]


def circle_circle_intersect(c1: Circle, c2: Circle) -> list[Point]:
    tol = EPS * max(c1.radius, c2.radius)
    dx, dy = c2.center.x - c1.center.x, c2.center.y - c1.center.y
    d = math.hypot(dx, dy)
    if d <= tol:
        if abs(c1.radius - c2.radius) <= tol:
            raise DomainError("coincident circles intersect everywhere")
        return []
    r1, r2 = c1.radius, c2.radius
    if d > r1 + r2 + tol or d < abs(r1 - r2) - tol:
        return []
    along = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    ux, uy = dx / d, dy / d
    foot = (c1.center.x + along * ux, c1.center.y + along * uy)
    if abs(d - (r1 + r2)) <= tol or abs(d - abs(r1 - r2)) <= tol:
        return [Point(*foot)]
    h = math.sqrt(max(r1 * r1 - along * along, 0.0))
    return ordered(
        [Point(foot[0] - h * uy, foot[1] + h * ux), Point(foot[0] + h * uy, foot[1] - h * ux)],
        tol,
    )


def line_circle_intersect(line: Line, c: Circle) -> list[Point]:
    ux, uy = line.direction
    px, py = line.through.x - c.center.x, line.through.y - c.center.y
    t0 = -(px * ux + py * uy)
    fx, fy = px + t0 * ux, py + t0 * uy
    dist = math.hypot(fx, fy)
    tol = c.tol
    if dist > c.radius + tol:
        return []
    if abs(dist - c.radius) <= tol:
        return [Point(c.center.x + fx, c.center.y + fy)]
    h = math.sqrt(c.radius * c.radius - dist * dist)
    return ordered(
        [
            Point(c.center.x + fx + h * ux, c.center.y + fy + h * uy),
            Point(c.center.x + fx - h * ux, c.center.y + fy - h * uy),
        ],
        tol,
    )


def line_line_intersect(l1: Line, l2: Line) -> list[Point]:
    u1, u2 = l1.direction, l2.direction
    cross = u1[0] * u2[1] - u1[1] * u2[0]
    wx, wy = l2.through.x - l1.through.x, l2.through.y - l1.through.y
    scale = max(1.0, math.hypot(wx, wy))
    if abs(cross) <= EPS:
        if abs(wx * u1[1] - wy * u1[0]) <= EPS * scale:
            raise DomainError("coincident lines intersect everywhere")
        return []
    t = (wx * u2[1] - wy * u2[0]) / cross
    return [Point(l1.through.x + t * u1[0], l1.through.y + t * u1[1])]


def intersect(a: Circle | Line, b: Circle | Line) -> list[Point]:
    if isinstance(a, Circle) and isinstance(b, Circle):
        return circle_circle_intersect(a, b)
    if isinstance(a, Line) and isinstance(b, Line):
        return line_line_intersect(a, b)
    if isinstance(a, Line):
        return line_circle_intersect(a, b)
    return line_circle_intersect(b, a)


def arc_midpoint(c: Circle, start: Point, end: Point) -> Point:
    """Midpoint of the arc running counterclockwise from ``start`` to ``end``."""
    a0 = math.atan2(start.y - c.center.y, start.x - c.center.x)
    a1 = math.atan2(end.y - c.center.y, end.x - c.center.x)
    sweep = (a1 - a0) % (2 * math.pi)
    if sweep <= EPS:
        sweep = 2 * math.pi
    t = a0 + sweep / 2
    return Point(c.center.x + c.radius * math.cos(t), c.center.y + c.radius * math.sin(t))


def ccw_angle(center: Point, p: Point, q: Point) -> float:
    """Counterclockwise angle in degrees from ``p`` to ``q`` around ``center``, in [0, 360)."""
    return (q.angle_about(center) - p.angle_about(center)) % 360.0


def polygon_area(points: list[Point]) -> float:
    """Signed shoelace area, positive for counterclockwise order."""
    s = 0.0
    for i, p in enumerate(points):
        q = points[(i + 1) % len(points)]
        s += p.x * q.y - q.x * p.y
    return s / 2

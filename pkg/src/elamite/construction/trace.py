"""Replayable records of compass and straightedge work.

A :class:`Builder` performs each step as it is recorded; :func:`replay`
re-executes a finished :class:`ConstructionTrace` from its steps alone.
Every object gets a label, and a step may only refer to labels created by
earlier steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Mapping

from ..errors import DomainError
from .kernel import Circle, Line, Point, arc_midpoint, intersect

STEP_KINDS = ("mark_point", "draw_circle", "draw_line", "intersect", "mark_midpoint_of_arc")


@dataclass(frozen=True)
class Step:
    kind: str
    label: str
    refs: tuple[str, ...] = ()
    # mark_point: (x, y); draw_circle: (radius,); intersect: (index,)
    params: tuple[float, ...] = ()


@dataclass(frozen=True)
class ConstructionTrace:
    steps: tuple[Step, ...]
    points: Mapping[str, Point]
    circles: Mapping[str, Circle] = field(default_factory=dict)
    lines: Mapping[str, Line] = field(default_factory=dict)

    def point(self, label: str) -> Point:
        return self.points[label]


class Builder:
    def __init__(self) -> None:
        self.steps: list[Step] = []
        self.points: dict[str, Point] = {}
        self.circles: dict[str, Circle] = {}
        self.lines: dict[str, Line] = {}

    def _fresh(self, label: str) -> None:
        if label in self.points or label in self.circles or label in self.lines:
            raise DomainError(f"label {label!r} already used")

    def _object(self, label: str) -> Circle | Line:
        if label in self.circles:
            return self.circles[label]
        if label in self.lines:
            return self.lines[label]
        raise DomainError(f"step refers to unknown curve {label!r}")

    def _point(self, label: str) -> Point:
        try:
            return self.points[label]
        except KeyError:
            raise DomainError(f"step refers to unknown point {label!r}") from None

    def mark_point(self, label: str, p: Point) -> Point:
        self._fresh(label)
        self.steps.append(Step("mark_point", label, (), (p.x, p.y)))
        self.points[label] = p
        return p

    def draw_circle(self, label: str, center: str, radius: float) -> Circle:
        self._fresh(label)
        c = Circle(self._point(center), float(radius))
        self.steps.append(Step("draw_circle", label, (center,), (c.radius,)))
        self.circles[label] = c
        return c

    def draw_line(self, label: str, p: str, q: str) -> Line:
        self._fresh(label)
        line = Line(self._point(p), self._point(q))
        self.steps.append(Step("draw_line", label, (p, q)))
        self.lines[label] = line
        return line

    def intersect(self, label: str, a: str, b: str, choose: int | Callable[[list[Point]], int] = 0) -> Point:
        """Intersect two curves and keep one of the (ordered) results."""
        self._fresh(label)
        found = intersect(self._object(a), self._object(b))
        index = choose(found) if callable(choose) else choose
        if not 0 <= index < len(found):
            raise DomainError(f"{a} and {b} have {len(found)} intersection(s); cannot take #{index}")
        self.steps.append(Step("intersect", label, (a, b), (index,)))
        self.points[label] = found[index]
        return found[index]

    def mark_midpoint_of_arc(self, label: str, circle: str, start: str, end: str) -> Point:
        self._fresh(label)
        c = self._object(circle)
        if not isinstance(c, Circle):
            raise DomainError(f"{circle!r} is not a circle")
        p = arc_midpoint(c, self._point(start), self._point(end))
        self.steps.append(Step("mark_midpoint_of_arc", label, (circle, start, end)))
        self.points[label] = p
        return p

    def freeze(self) -> ConstructionTrace:
        return ConstructionTrace(
            tuple(self.steps),
            MappingProxyType(dict(self.points)),
            MappingProxyType(dict(self.circles)),
            MappingProxyType(dict(self.lines)),
        )


def replay(trace: ConstructionTrace) -> ConstructionTrace:
    """Rebuild a trace from its steps; coordinates come out bit-identical."""
    b = Builder()
    for step in trace.steps:
        if step.kind == "mark_point":
            b.mark_point(step.label, Point(*step.params))
        elif step.kind == "draw_circle":
            b.draw_circle(step.label, step.refs[0], step.params[0])
        elif step.kind == "draw_line":
            b.draw_line(step.label, *step.refs)
        elif step.kind == "intersect":
            b.intersect(step.label, step.refs[0], step.refs[1], int(step.params[0]))
        elif step.kind == "mark_midpoint_of_arc":
            b.mark_midpoint_of_arc(step.label, *step.refs)
        else:
            raise DomainError(f"unknown step kind {step.kind!r}")
    return b.freeze()


def counterclockwise_of(center: Point, current: Point) -> Callable[[list[Point]], int]:
    """Chooser for the intersection lying counterclockwise of ``current``."""

    def choose(found: list[Point]) -> int:
        best, best_turn = -1, -math.inf
        for i, p in enumerate(found):
            turn = (current.x - center.x) * (p.y - center.y) - (current.y - center.y) * (p.x - center.x)
            if turn > best_turn:
                best, best_turn = i, turn
        if best_turn <= 0:
            raise DomainError("no intersection lies counterclockwise of the current point")
        return best

    return choose

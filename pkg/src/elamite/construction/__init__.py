"""Compass-and-straightedge geometry: kernel, traces and polygon recipes."""

from .kernel import (
    EPS,
    Circle,
    Line,
    Point,
    arc_midpoint,
    circle_circle_intersect,
    line_circle_intersect,
    line_line_intersect,
    polygon_area,
)
from .recipes import (
    Closure,
    Construction,
    GapReport,
    compose_ngon,
    double_ngon,
    durer_heptagon,
    elamite_heptagon,
    exact_ngon,
    heron_heptagon,
    hexagon_march,
    hexagon_square,
    hexagon_triangle,
    polygon_regularity_error,
    ptolemy_pentagon,
    square_from_hexagon,
    triangle_from_hexagon,
)
from .trace import STEP_KINDS, Builder, ConstructionTrace, Step, replay

__all__ = [
    "EPS",
    "Builder",
    "Circle",
    "Closure",
    "Construction",
    "ConstructionTrace",
    "GapReport",
    "Line",
    "Point",
    "STEP_KINDS",
    "Step",
    "arc_midpoint",
    "circle_circle_intersect",
    "compose_ngon",
    "double_ngon",
    "durer_heptagon",
    "elamite_heptagon",
    "exact_ngon",
    "heron_heptagon",
    "hexagon_march",
    "hexagon_square",
    "hexagon_triangle",
    "line_circle_intersect",
    "line_line_intersect",
    "polygon_area",
    "polygon_regularity_error",
    "ptolemy_pentagon",
    "replay",
    "square_from_hexagon",
    "triangle_from_hexagon",
]

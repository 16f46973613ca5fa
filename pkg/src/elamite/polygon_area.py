"""Area coefficients of regular polygons: the exact one and the ancient ones.

An area coefficient ``C`` turns a side ``a`` into an area ``C * a**2``.
The exact coefficient of an n-gon is ``(n/4) * cot(pi/n)``; everything
else here is a rational approximation of it for the heptagon (or the
triangle), together with step-by-step traces of how the approximations
are obtained.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from .ancient_numerics import (
    Branch,
    SqrtDecomposition,
    anchored_at,
    babylonian_sqrt,
    constant,
    heptagon_side_from_radius,
)
from .errors import DomainError
from .sexagesimal import RationalLike, RenderMode, SexagesimalDigits, render_sexagesimal

DEFAULT_PRECISION = 50
TRACE_PLACES = 8

BABYLONIAN_UNTRUNCATED = Fraction(133, 36)  # 3;41,40
BABYLONIAN_TRUNCATED = Fraction(221, 60)  # 3;41


class FormulaId(str, enum.Enum):
    EXACT = "exact"
    BABYLONIAN_HEPTAGON = "babylonian_heptagon"
    ELAMITE_HEPTAGON = "elamite_heptagon"
    HERON_HEPTAGON = "heron_heptagon"
    TRIANGLE_SEVEN_SIXTEENTHS = "triangle_seven_sixteenths"


@dataclass(frozen=True)
class AreaFormula:
    id: FormulaId
    coefficient_kind: str  # "rational" or "transcendental"
    rational_coefficient: Optional[Fraction]
    applicable_n: Optional[int]  # None: every n >= 3

    def applies_to(self, n: int) -> bool:
        return self.applicable_n is None or self.applicable_n == n


FORMULAS: dict[FormulaId, AreaFormula] = {
    f.id: f
    for f in (
        AreaFormula(FormulaId.EXACT, "transcendental", None, None),
        AreaFormula(FormulaId.BABYLONIAN_HEPTAGON, "rational", BABYLONIAN_TRUNCATED, 7),
        AreaFormula(FormulaId.ELAMITE_HEPTAGON, "rational", Fraction(11, 3), 7),
        AreaFormula(FormulaId.HERON_HEPTAGON, "rational", Fraction(43, 12), 7),
        AreaFormula(FormulaId.TRIANGLE_SEVEN_SIXTEENTHS, "rational", Fraction(7, 16), 3),
    )
}

RATIONAL_FORMULAS = tuple(f for f in FORMULAS.values() if f.coefficient_kind == "rational")


def formula(id: FormulaId | str) -> AreaFormula:
    try:
        return FORMULAS[FormulaId(id)]
    except ValueError:
        raise DomainError(f"unknown area formula {id!r}") from None


def formulas_for(n: int) -> list[AreaFormula]:
    return [f for f in FORMULAS.values() if f.applies_to(n)]


def babylonian_constant(truncated: bool = True) -> Fraction:
    return BABYLONIAN_TRUNCATED if truncated else BABYLONIAN_UNTRUNCATED


@dataclass(frozen=True)
class RegularPolygonSpec:
    """A regular n-gon given by its side or by its circumradius (not both)."""

    n: int
    side: Optional[Fraction] = None
    circumradius: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.n < 3:
            raise DomainError(f"a polygon needs n >= 3, got {self.n}")
        if (self.side is None) == (self.circumradius is None):
            raise DomainError("give exactly one of side and circumradius")
        length = self.side if self.side is not None else self.circumradius
        if length <= 0:
            raise DomainError(f"length must be positive, got {length}")

    def exact_area(self, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
        with mpmath.workdps(precision):
            if self.side is not None:
                return exact_area_coefficient(self.n, precision) * fraction_to_mpf(Fraction(self.side) ** 2)
            r = fraction_to_mpf(Fraction(self.circumradius))
            return self.n * r * r * mpmath.sin(2 * mpmath.pi / self.n) / 2


def exact_area_coefficient(n: int, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """``(n/4) * cot(pi/n)`` to ``precision`` significant decimal digits."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 3:
        raise DomainError(f"a polygon needs an integer n >= 3, got {n!r}")
    with mpmath.workdps(precision):
        return +(mpmath.mpf(n) / 4 * mpmath.cot(mpmath.pi / n))


def fraction_to_mpf(x: RationalLike) -> mpmath.mpf:
    """Round a rational to the working precision."""
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def mpf_to_fraction(x: mpmath.mpf) -> Fraction:
    """The exact binary value held by an mpf."""
    man, exp = mpmath.mpf(x).man_exp
    return Fraction(int(man)) * Fraction(2) ** int(exp)


def approximate_area(f: AreaFormula | FormulaId | str, side: RationalLike, n: Optional[int] = None) -> Fraction:
    """``coefficient * side**2`` for a rational formula."""
    if not isinstance(f, AreaFormula):
        f = formula(f)
    if f.rational_coefficient is None:
        raise DomainError(f"{f.id.value} has no rational coefficient; use exact_area_coefficient")
    if n is not None and not f.applies_to(n):
        raise DomainError(f"{f.id.value} applies to n={f.applicable_n}, not n={n}")
    side = Fraction(side)
    if side <= 0:
        raise DomainError(f"side must be positive, got {side}")
    return f.rational_coefficient * side * side


@dataclass(frozen=True)
class DerivationStep:
    label: str
    value: Fraction
    rendering: SexagesimalDigits


@dataclass(frozen=True)
class DerivationTrace:
    name: str
    steps: tuple[DerivationStep, ...]

    @property
    def final(self) -> Fraction:
        return self.steps[-1].value

    def value(self, label: str) -> Fraction:
        for step in self.steps:
            if step.label == label:
                return step.value
        raise KeyError(label)

    def labels(self) -> list[str]:
        return [s.label for s in self.steps]


def _render_for_trace(value: Fraction) -> SexagesimalDigits:
    try:
        return render_sexagesimal(value, TRACE_PLACES, RenderMode.REQUIRE_EXACT)
    except DomainError:
        return render_sexagesimal(value, TRACE_PLACES, RenderMode.TRUNCATE)


def _trace(name: str, steps: Sequence[tuple[str, Fraction]]) -> DerivationTrace:
    return DerivationTrace(name, tuple(DerivationStep(lab, v, _render_for_trace(v)) for lab, v in steps))


def _positive(value: RationalLike, what: str) -> Fraction:
    value = Fraction(value)
    if value <= 0:
        raise DomainError(f"{what} must be positive, got {value}")
    return value


def elamite_instruction(side: RationalLike) -> DerivationTrace:
    """Multiply the square of the side by 4, take away a twelfth of that."""
    a = _positive(side, "side")
    four_a2 = 4 * a * a
    twelfth = four_a2 / 12
    return _trace(
        "elamite",
        [
            ("4*a^2", four_a2),
            ("(1/12)*4*a^2", twelfth),
            ("area", four_a2 - twelfth),
        ],
    )


def smt2_derivation(r: RationalLike, anchor: Optional[RationalLike] = None) -> DerivationTrace:
    """The heptagon chain of the Susa tablet, starting from the circumradius.

    The side comes from ``7a = 6r``; the apothem ``h = (1/2)*sqrt(4r^2 - a^2)``
    is taken with one Babylonian square-root step.  The tablet anchors that
    root at 1 for ``r = 0;35``, which is ``2a``; ``2a`` stays the default so
    the chain scales with ``r``.  Pass ``anchor`` to choose differently.
    """
    r = _positive(r, "radius")
    a = heptagon_side_from_radius(r)
    radicand = 4 * r * r - a * a
    decomposition: SqrtDecomposition = anchored_at(radicand, 2 * a if anchor is None else anchor)
    root = babylonian_sqrt(decomposition)
    h = root / 2
    triangle = a / 2 * h
    heptagon = 7 * triangle
    coefficient = heptagon / (a * a)
    truncated = render_sexagesimal(coefficient, 1, RenderMode.TRUNCATE).to_rational()
    return _trace(
        "smt2",
        [
            ("r", r),
            ("a", a),
            ("a/2", a / 2),
            ("r^2", r * r),
            ("4*r^2", 4 * r * r),
            ("a^2", a * a),
            ("4*r^2 - a^2", radicand),
            ("sqrt anchor", decomposition.anchor),
            ("sqrt remainder", decomposition.remainder if decomposition.branch is Branch.PLUS else -decomposition.remainder),
            ("sqrt(4*r^2 - a^2)", root),
            ("h", h),
            ("triangle area", triangle),
            ("heptagon area", heptagon),
            ("coefficient", coefficient),
            ("truncated coefficient", truncated),
        ],
    )


def _exact_sqrt(x: Fraction) -> Fraction:
    num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if Fraction(num, den) ** 2 != x:
        raise DomainError(f"{x} is not the square of a rational")
    return Fraction(num, den)


def heron_derivation(side: RationalLike) -> DerivationTrace:
    """Heron's route: r ~ (8/7)a, then sqrt(23) ~ 43/9."""
    a = _positive(side, "side")
    r = constant("heptagon_radius_heron").value * a
    radicand = r * r - (a / 2) ** 2
    # radicand = 23 * (square part)**2 for every rational side
    square_part = _exact_sqrt(radicand / 23)
    sqrt23_factor = 7 * (a / 2) * square_part
    sqrt23 = constant("sqrt23_heron").value
    return _trace(
        "heron",
        [
            ("r", r),
            ("a/2", a / 2),
            ("r^2 - (a/2)^2", radicand),
            ("sqrt((r^2 - (a/2)^2)/23)", square_part),
            ("area / sqrt(23)", sqrt23_factor),
            ("sqrt(23)", sqrt23),
            ("area", sqrt23_factor * sqrt23),
        ],
    )


@dataclass(frozen=True)
class ErrorReport:
    formula_id: FormulaId
    approx_coefficient: Fraction
    exact_coefficient: mpmath.mpf
    absolute_error: mpmath.mpf
    relative_error_percent: mpmath.mpf


def error_report(f: AreaFormula | FormulaId | str, n: int, precision: int = DEFAULT_PRECISION) -> ErrorReport:
    if not isinstance(f, AreaFormula):
        f = formula(f)
    if f.rational_coefficient is None or not f.applies_to(n):
        raise DomainError(f"{f.id.value} gives no rational coefficient for n={n}")
    with mpmath.workdps(precision):
        exact = exact_area_coefficient(n, precision)
        approx = fraction_to_mpf(f.rational_coefficient)
        abs_err = abs(exact - approx)
        return ErrorReport(f.id, f.rational_coefficient, exact, abs_err, abs_err / exact * 100)


def error_analysis(n: int = 7, precision: int = DEFAULT_PRECISION) -> list[ErrorReport]:
    """Heron, Babylonian and Elamite heptagon constants against the exact one."""
    if n != 7:
        raise DomainError(f"error analysis is only defined for the heptagon, got n={n}")
    ids = (FormulaId.HERON_HEPTAGON, FormulaId.BABYLONIAN_HEPTAGON, FormulaId.ELAMITE_HEPTAGON)
    return [error_report(i, n, precision) for i in ids]

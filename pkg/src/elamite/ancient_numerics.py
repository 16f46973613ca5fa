"""Single-step square roots and the named constants of ancient practice."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .sexagesimal import RationalLike


class Branch(str, enum.Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class SqrtDecomposition:
    """The radicand written as ``anchor**2 + remainder`` (or minus)."""

    anchor: Fraction
    remainder: Fraction
    branch: Branch = Branch.PLUS

    def __post_init__(self) -> None:
        object.__setattr__(self, "anchor", Fraction(self.anchor))
        object.__setattr__(self, "remainder", Fraction(self.remainder))
        object.__setattr__(self, "branch", Branch(self.branch))
        if self.anchor <= 0:
            raise DomainError(f"anchor must be positive, got {self.anchor}")
        if self.remainder < 0:
            raise DomainError(f"remainder must be non-negative, got {self.remainder}")
        if self.branch is Branch.MINUS and self.remainder >= self.anchor**2:
            raise DomainError("minus branch needs remainder < anchor**2")

    @property
    def radicand(self) -> Fraction:
        if self.branch is Branch.PLUS:
            return self.anchor**2 + self.remainder
        return self.anchor**2 - self.remainder


def babylonian_sqrt(d: SqrtDecomposition) -> Fraction:
    """sqrt(a**2 +- b) ~ a +- b/(2a).  Always overshoots when b > 0."""
    step = d.remainder / (2 * d.anchor)
    return d.anchor + step if d.branch is Branch.PLUS else d.anchor - step


def nearest_integer_anchor(x: RationalLike) -> SqrtDecomposition:
    """Decompose ``x`` around the largest integer ``i`` with ``i*i <= x``."""
    x = Fraction(x)
    if x < 1:
        raise DomainError(f"need x >= 1 for an integer anchor, got {x}")
    i = math.isqrt(x.numerator // x.denominator)
    return SqrtDecomposition(Fraction(i), x - i * i, Branch.PLUS)


def anchored_at(x: RationalLike, anchor: RationalLike) -> SqrtDecomposition:
    """Decompose ``x`` around a caller-chosen anchor, picking the branch."""
    x, anchor = Fraction(x), Fraction(anchor)
    diff = x - anchor**2
    if diff >= 0:
        return SqrtDecomposition(anchor, diff, Branch.PLUS)
    return SqrtDecomposition(anchor, -diff, Branch.MINUS)


@dataclass(frozen=True)
class NamedConstant:
    id: str
    value: Optional[Fraction]
    replaces: str
    source: str
    # Decimal value of the quantity for targets that are not rationals.
    check_value: Optional[float] = None


_CATALOG = (
    NamedConstant("pi_babylonian", Fraction(3), "pi", "babylonian"),
    NamedConstant("sqrt3_babylonian", Fraction(7, 4), "sqrt(3)", "babylonian"),
    NamedConstant("sqrt23_heron", Fraction(43, 9), "sqrt(23)", "heron"),
    NamedConstant("heptagon_radius_heron", Fraction(8, 7), "circumradius r of a unit-side heptagon (r ~ 8/7 a)", "heron"),
    NamedConstant("heptagon_side_heron", Fraction(7, 8), "side a of a heptagon in a unit circle (a ~ 7/8 r)", "heron"),
    NamedConstant("heptagon_radius_elamite", Fraction(7, 6), "circumradius r of a unit-side heptagon (r ~ 7/6 a)", "elamite"),
    NamedConstant(
        "golden_ratio_target",
        None,
        "(sqrt(5) - 1)/2, the ratio constructed for the pentagon",
        "ptolemy",
        check_value=(math.sqrt(5) - 1) / 2,
    ),
)

CATALOG: dict[str, NamedConstant] = {c.id: c for c in _CATALOG}


def constant(id: str) -> NamedConstant:
    try:
        return CATALOG[id]
    except KeyError:
        raise DomainError(f"unknown constant {id!r}; known: {', '.join(CATALOG)}") from None


def heptagon_side_from_radius(r: RationalLike) -> Fraction:
    """Side from circumradius by equating 7a with 2*pi*r, pi ~ 3."""
    r = Fraction(r)
    if r <= 0:
        raise DomainError(f"radius must be positive, got {r}")
    return 2 * constant("pi_babylonian").value * r / 7


def heptagon_radius_from_side(a: RationalLike) -> Fraction:
    a = Fraction(a)
    if a <= 0:
        raise DomainError(f"side must be positive, got {a}")
    return 7 * a / (2 * constant("pi_babylonian").value)

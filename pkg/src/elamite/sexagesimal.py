"""Exact base-60 numerals.

Values are :class:`fractions.Fraction` throughout; ``Rational`` is just an
alias so signatures read the way the scribes' numbers do.  Literals use a
comma between digits and a semicolon between the integer and fractional
parts, e.g. ``12,23,5;13,45,9`` or ``0;31,40``.
"""

from __future__ import annotations

import enum
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, ParseError

Rational = Fraction
RationalLike = Union[Fraction, int]

BASE = 60

_DIGIT = r"\d{1,2}"
LITERAL_PATTERN = rf"-?{_DIGIT}(?:,{_DIGIT})*(?:;{_DIGIT}(?:,{_DIGIT})*)?"
_LITERAL_RE = re.compile(LITERAL_PATTERN)


class RenderMode(str, enum.Enum):
    TRUNCATE = "truncate"
    NEAREST = "nearest"
    REQUIRE_EXACT = "require_exact"


@dataclass(frozen=True)
class SexagesimalDigits:
    """Sign plus base-60 digits, most significant first.

    ``exact`` is False when the digits are a truncation or rounding of the
    value they were rendered from.
    """

    sign: int
    integer_digits: tuple[int, ...]
    fractional_digits: tuple[int, ...] = ()
    exact: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "integer_digits", tuple(self.integer_digits))
        object.__setattr__(self, "fractional_digits", tuple(self.fractional_digits))
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be -1, 0 or 1, got {self.sign}")
        if not self.integer_digits:
            raise DomainError("integer_digits must not be empty; use (0,)")
        if len(self.integer_digits) > 1 and self.integer_digits[0] == 0:
            raise DomainError("leading zero in integer_digits")
        for d in self.integer_digits + self.fractional_digits:
            if not 0 <= d < BASE:
                raise DomainError(f"digit {d} outside [0, 59]")
        is_zero = not any(self.integer_digits) and not any(self.fractional_digits)
        if is_zero != (self.sign == 0):
            raise DomainError("sign must be 0 exactly when all digits are zero")

    def __str__(self) -> str:
        text = ",".join(str(d) for d in self.integer_digits)
        if self.fractional_digits:
            text += ";" + ",".join(str(d) for d in self.fractional_digits)
        return "-" + text if self.sign < 0 else text

    def to_rational(self) -> Fraction:
        value = Fraction(0)
        for d in self.integer_digits:
            value = value * BASE + d
        scale = Fraction(1)
        for d in self.fractional_digits:
            scale /= BASE
            value += d * scale
        return -value if self.sign < 0 else value


def parse_sexagesimal(text: str) -> Fraction:
    """Parse a literal such as ``"3;41,40"`` into an exact rational."""
    if not isinstance(text, str) or text == "":
        raise ParseError("empty sexagesimal literal", 0)
    if _LITERAL_RE.fullmatch(text) is None:
        raise ParseError(f"malformed sexagesimal literal {text!r}", _first_bad_column(text))
    negative = text.startswith("-")
    body = text[1:] if negative else text
    int_part, _, frac_part = body.partition(";")
    int_digits = [int(d) for d in int_part.split(",")]
    frac_digits = [int(d) for d in frac_part.split(",")] if frac_part else []

    column = 1 if negative else 0
    for chunk in body.replace(";", ",").split(","):
        if int(chunk) >= BASE:
            raise ParseError(f"digit {int(chunk)} is not below 60 in {text!r}", column)
        column += len(chunk) + 1

    value = Fraction(0)
    for d in int_digits:
        value = value * BASE + d
    scale = Fraction(1)
    for d in frac_digits:
        scale /= BASE
        value += d * scale
    return -value if negative else value


def _first_bad_column(text: str) -> int:
    # Longest prefix that can still grow into a valid literal.
    for i in range(len(text), 0, -1):
        prefix = text[:i]
        if re.fullmatch(r"-?(\d{1,2}[,;])*\d{0,2}", prefix) and prefix.count(";") <= 1:
            return i
    return 0


def is_regular(n: int) -> bool:
    """True iff ``n`` is 2^p * 3^q * 5^r, i.e. ``1/n`` terminates in base 60."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"is_regular expects a positive integer, got {n!r}")
    if n < 1:
        raise DomainError(f"is_regular expects n >= 1, got {n}")
    for p in (2, 3, 5):
        while n % p == 0:
            n //= p
    return n == 1


def render_sexagesimal(
    x: RationalLike,
    max_places: int = 6,
    mode: RenderMode | str = RenderMode.TRUNCATE,
) -> SexagesimalDigits:
    """Render ``x`` with at most ``max_places`` fractional digits.

    ``truncate`` chops towards zero, ``nearest`` rounds half away from zero
    and ``require_exact`` raises :class:`DomainError` unless the expansion
    terminates within ``max_places`` digits.  Trailing zero digits are never
    emitted.
    """
    mode = RenderMode(mode)
    if isinstance(max_places, bool) or not isinstance(max_places, int) or max_places < 0:
        raise DomainError(f"max_places must be a non-negative integer, got {max_places!r}")
    x = Fraction(x)
    sign = (x > 0) - (x < 0)
    magnitude = abs(x)
    scaled = magnitude * BASE**max_places

    if mode is RenderMode.REQUIRE_EXACT:
        if not is_regular(x.denominator):
            raise DomainError(f"{x} has no terminating sexagesimal expansion")
        if scaled.denominator != 1:
            raise DomainError(f"{x} needs more than {max_places} sexagesimal places")
        units = scaled.numerator
    elif mode is RenderMode.TRUNCATE:
        units = scaled.numerator // scaled.denominator
    else:
        units = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    exact = units == scaled

    frac_digits = []
    for _ in range(max_places):
        units, d = divmod(units, BASE)
        frac_digits.append(d)
    frac_digits.reverse()
    while frac_digits and frac_digits[-1] == 0:
        frac_digits.pop()

    int_digits = []
    while units:
        units, d = divmod(units, BASE)
        int_digits.append(d)
    int_digits.reverse()

    if not int_digits and not frac_digits:
        sign = 0
    return SexagesimalDigits(sign, tuple(int_digits) or (0,), tuple(frac_digits), exact)


def format_sexagesimal(x: RationalLike, max_places: int = 6, mode: RenderMode | str = RenderMode.TRUNCATE) -> str:
    return str(render_sexagesimal(x, max_places, mode))


_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def rational_arithmetic(lhs: RationalLike, op: str, rhs: RationalLike) -> Fraction:
    """Exact ``lhs op rhs``; result is always in lowest terms."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise DomainError(f"unknown operator {op!r}") from None
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    if fn is operator.truediv and rhs == 0:
        raise DomainError("division by zero")
    return fn(lhs, rhs)

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from elamite.errors import DomainError, ParseError
from elamite.expression import BinOp, Neg, Num, eval_sex_expression, parse_expression
from elamite.sexagesimal import format_sexagesimal, parse_sexagesimal


@pytest.mark.parametrize(
    "text, sexa",
    [
        ("7 * 0;7,55", "0;55,25"),
        ("(0;35) * (0;35)", "0;20,25"),
        ("1 + 0", "1"),
        ("4 × 0;20,25", "1;21,40"),
        ("1;21,40 − 0;15", "1;6,40"),
        ("0;55,25 ÷ 0;15", "3;41,40"),
    ],
)
def test_examples(text, sexa):
    _, digits = eval_sex_expression(text)
    assert str(digits) == sexa
    assert digits.exact


def test_precedence_and_associativity():
    assert eval_sex_expression("1 + 2 * 3")[0] == 7
    assert eval_sex_expression("(1 + 2) * 3")[0] == 9
    assert eval_sex_expression("8 - 3 - 2")[0] == 3
    assert eval_sex_expression("8 / 4 / 2")[0] == 1
    assert eval_sex_expression("-2 * -3")[0] == 6
    assert eval_sex_expression("--1")[0] == 1


def test_tree_shape():
    tree = parse_expression("1 - 2 * -3")
    assert tree == BinOp("-", Num(Fraction(1), "1"), BinOp("*", Num(Fraction(2), "2"), Neg(Num(Fraction(3), "3"))))


def test_truncation_marker():
    value, digits = eval_sex_expression("1/7", places=3)
    assert value == Fraction(1, 7)
    assert str(digits) == "0;8,34,17"
    assert not digits.exact


@pytest.mark.parametrize(
    "text, column",
    [
        ("", 0),
        ("1 +", 3),
        ("(1 + 2", 6),
        ("1 2", 2),
        ("2 * x", 4),
        ("1 + 3;75", 6),
        (")", 0),
        ("3;", 1),
    ],
)
def test_parse_errors_carry_position(text, column):
    with pytest.raises(ParseError) as info:
        eval_sex_expression(text)
    assert info.value.position == column


def test_division_by_zero():
    with pytest.raises(DomainError):
        eval_sex_expression("1 / (1 - 1)")


def test_bad_places():
    with pytest.raises(DomainError):
        eval_sex_expression("1", places=-1)


@given(st.integers(0, 10**6), st.integers(0, 10**6), st.integers(1, 10**6))
def test_agrees_with_fraction_arithmetic(a, b, c):
    a, b, c = (format_sexagesimal(v) for v in (a, b, c))
    text = f"{a} + {b} / {c} * {c} - {a}"
    assert eval_sex_expression(text)[0] == parse_sexagesimal(b)

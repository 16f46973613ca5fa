"""Arithmetic over sexagesimal literals.

Grammar (usual precedence, left associative)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | primary
    primary := literal | '(' expr ')'

``×``, ``÷`` and ``−`` are accepted as spellings of ``*``, ``/`` and ``-``.
Literals are unsigned here; a leading minus is the unary operator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, ParseError
from .sexagesimal import SexagesimalDigits, parse_sexagesimal, rational_arithmetic, render_sexagesimal

_NUMBER = re.compile(r"\d+(?:,\d+)*(?:;\d+(?:,\d+)*)?")
_SYMBOLS = {"+": "+", "-": "-", "−": "-", "*": "*", "×": "*", "/": "/", "÷": "/", "(": "(", ")": ")"}


@dataclass(frozen=True)
class Num:
    value: Fraction
    text: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


Node = Union[Num, Neg, BinOp]


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", an operator symbol, or "end"
    text: str
    pos: int  # 0-based column


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(_SYMBOLS[ch], ch, i))
            i += 1
            continue
        m = _NUMBER.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {ch!r}", i)
        tokens.append(_Token("num", m.group(), i))
        i = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> Node:
        node = self.term()
        while self.peek.kind in ("+", "-"):
            op = self.take().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek.kind in ("*", "/"):
            op = self.take().kind
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek.kind == "-":
            self.take()
            return Neg(self.unary())
        return self.primary()

    def primary(self) -> Node:
        tok = self.take()
        if tok.kind == "num":
            try:
                return Num(parse_sexagesimal(tok.text), tok.text)
            except ParseError as exc:
                # re-anchor the column from the literal to the whole expression
                raise ParseError(exc.message, tok.pos + (exc.position or 0)) from None
        if tok.kind == "(":
            node = self.expr()
            close = self.take()
            if close.kind != ")":
                raise ParseError("expected ')'", close.pos)
            return node
        if tok.kind == "end":
            raise ParseError("unexpected end of expression", tok.pos)
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)


def parse_expression(text: str) -> Node:
    """Parse ``text`` into an expression tree; errors carry a 0-based column."""
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek.kind != "end":
        tok = parser.peek
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)
    return node


def evaluate(node: Node) -> Fraction:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    return rational_arithmetic(evaluate(node.left), node.op, evaluate(node.right))


def eval_sex_expression(text: str, places: int = 6) -> tuple[Fraction, SexagesimalDigits]:
    """Exact value of ``text`` and its base-60 rendering truncated to ``places``.

    The rendering's ``exact`` flag is False when digits were cut off.
    """
    if isinstance(places, bool) or not isinstance(places, int) or places < 0:
        raise DomainError(f"places must be a non-negative integer, got {places!r}")
    value = evaluate(parse_expression(text))
    return value, render_sexagesimal(value, places, "truncate")

"""Concrete syntax: parser, canonical printer, and JSON serialization.

Grammar, lowest precedence first:

    expr     = term   { "+" term }                 left associative
    term     = factor { ("*" | "/") factor }       left associative
    factor   = "-" factor | postfix
    postfix  = atom { "^" exponent }               exponent = "-1" or a natural
    atom     = "(" expr ")" | "inv" "(" expr ")" | natural | identifier

Natural literals expand to structural numerals (0, 1, 1+1, (1+1)+1, ...)
and "^n" expands through the iterated-product definition of powers, so
the abstract syntax never stores literals or exponents.  Identifiers
match [a-z][a-z0-9_]*; "inv" is reserved for the function form of the
inverse.

The printer emits minimal parentheses under the same precedence table;
parsing its output reproduces the term exactly.  By default maximal
numeral subterms collapse back to decimal literals; structural mode
spells them out.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .exceptions import ParseError, SchemaError
from .terms import (
    ONE,
    ZERO,
    Add,
    Div,
    Inv,
    Mul,
    Neg,
    One,
    Term,
    Var,
    Zero,
    numeral,
    power,
)


@dataclass(frozen=True)
class Span:
    """1-based start/end positions of a piece of source text."""

    start_line: int
    start_column: int
    end_line: int
    end_column: int


@dataclass(frozen=True)
class ParsedInput:
    term: Term
    source: str
    span: Span


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(r"[a-z][a-z0-9_]*|[0-9]+|[()+*/^-]")
_WHITESPACE = " \t\r\n"


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, column = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in _WHITESPACE:
            if ch == "\n":
                line += 1
                column = 1
            else:
                column += 1
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {ch!r}", line, column)
        lexeme = m.group()
        if lexeme[0].isdigit():
            kind = "nat"
        elif lexeme[0].isalpha():
            kind = "ident"
        else:
            kind = lexeme
        tokens.append(_Token(kind, lexeme, line, column))
        column += len(lexeme)
        i = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], source: str):
        self.tokens = tokens
        self.pos = 0
        self.source = source

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str) -> _Token:
        token = self.peek()
        if token is None or token.kind != kind:
            self.fail(f"expected {kind!r}")
        return self.advance()

    def fail(self, message: str) -> None:
        token = self.peek()
        if token is None:
            line, column = self.end_position()
            raise ParseError(f"{message}, found end of input", line, column)
        raise ParseError(f"{message}, found {token.text!r}", token.line, token.column)

    def end_position(self) -> tuple[int, int]:
        if not self.tokens:
            return 1, 1
        last = self.tokens[-1]
        return last.line, last.column + len(last.text)

    def parse_expr(self) -> Term:
        node = self.parse_term()
        while (token := self.peek()) is not None and token.kind == "+":
            self.advance()
            node = Add(node, self.parse_term())
        return node

    def parse_term(self) -> Term:
        node = self.parse_factor()
        while (token := self.peek()) is not None and token.kind in ("*", "/"):
            self.advance()
            right = self.parse_factor()
            node = Mul(node, right) if token.kind == "*" else Div(node, right)
        return node

    def parse_factor(self) -> Term:
        token = self.peek()
        if token is not None and token.kind == "-":
            self.advance()
            return Neg(self.parse_factor())
        return self.parse_postfix()

    def parse_postfix(self) -> Term:
        node = self.parse_atom()
        while (token := self.peek()) is not None and token.kind == "^":
            self.advance()
            node = self.parse_exponent(node)
        return node

    def parse_exponent(self, base: Term) -> Term:
        token = self.peek()
        if token is not None and token.kind == "-":
            self.advance()
            digits = self.peek()
            if digits is None or digits.kind != "nat" or digits.text != "1":
                self.fail("expected 1 after '^-' (only ^-1 is an inverse)")
            self.advance()
            return Inv(base)
        if token is not None and token.kind == "nat":
            self.advance()
            return power(base, int(token.text))
        self.fail("expected -1 or a natural number after '^'")
        raise AssertionError("unreachable")

    def parse_atom(self) -> Term:
        token = self.peek()
        if token is None:
            self.fail("expected an expression")
        assert token is not None
        if token.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if token.kind == "ident" and token.text == "inv":
            self.advance()
            self.expect("(")
            node = self.parse_expr()
            self.expect(")")
            return Inv(node)
        if token.kind == "ident":
            self.advance()
            return Var(token.text)
        if token.kind == "nat":
            self.advance()
            return numeral(int(token.text))
        self.fail("expected an expression")
        raise AssertionError("unreachable")


def parse(text: str) -> ParsedInput:
    """Parse an expression; raises ParseError with position on bad input."""
    tokens = _tokenize(text)
    parser = _Parser(tokens, text)
    if not tokens:
        raise ParseError("empty input", 1, 1)
    term = parser.parse_expr()
    if parser.peek() is not None:
        parser.fail("unexpected trailing input")
    first = tokens[0]
    end_line, end_column = parser.end_position()
    return ParsedInput(term, text, Span(first.line, first.column, end_line, end_column))


def parse_term(text: str) -> Term:
    return parse(text).term


class NumeralStyle(Enum):
    DECIMAL = "decimal"
    STRUCTURAL = "structural"


def numeral_value(t: Term) -> Optional[int]:
    """The n with t = numeral(n), or None if t is not a numeral."""
    count = 0
    node = t
    while isinstance(node, Add) and isinstance(node.right, One):
        count += 1
        node = node.left
    if isinstance(node, One):
        return count + 1
    if isinstance(node, Zero) and count == 0:
        return 0
    return None


def power_view(t: Term) -> Optional[tuple[Term, int]]:
    """The (base, n) with t = power(base, n) and n >= 2, else None."""
    count = 0
    node = t
    base: Optional[Term] = None
    while isinstance(node, Mul) and (base is None or node.right == base):
        base = node.right
        count += 1
        node = node.left
    if isinstance(node, One) and base is not None and count >= 2:
        return base, count
    return None


# Precedence levels for printing; higher binds tighter.
_ADD, _MUL, _NEG, _POSTFIX, _ATOM = 1, 2, 3, 4, 5


def render(t: Term, numerals: NumeralStyle = NumeralStyle.DECIMAL) -> str:
    """Canonical minimal-parentheses text; parse(render(t)) equals t."""
    text, _ = _render(t, numerals)
    return text


def _render(t: Term, numerals: NumeralStyle) -> tuple[str, int]:
    if numerals is NumeralStyle.DECIMAL:
        value = numeral_value(t)
        if value is not None:
            return str(value), _ATOM
    # x^2 parses to the structural unfolding 1*x*x, so collapsing the
    # chain back keeps parse(render(t)) == t while reading naturally.
    powered = power_view(t)
    if powered is not None:
        base, exponent = powered
        return f"{_child(base, _POSTFIX, numerals)}^{exponent}", _POSTFIX
    match t:
        case Zero():
            return "0", _ATOM
        case One():
            return "1", _ATOM
        case Var(name):
            return name, _ATOM
        case Add(left, right):
            return f"{_child(left, _ADD, numerals)} + {_child(right, _ADD + 1, numerals)}", _ADD
        case Mul(left, right):
            return f"{_child(left, _MUL, numerals)} * {_child(right, _MUL + 1, numerals)}", _MUL
        case Div(left, right):
            return f"{_child(left, _MUL, numerals)} / {_child(right, _MUL + 1, numerals)}", _MUL
        case Neg(arg):
            return f"-{_child(arg, _NEG, numerals)}", _NEG
        case Inv(arg):
            return f"{_child(arg, _POSTFIX, numerals)}^-1", _POSTFIX
    raise TypeError(f"not a term: {t!r}")


def _child(t: Term, minimum: int, numerals: NumeralStyle) -> str:
    text, level = _render(t, numerals)
    return text if level >= minimum else f"({text})"


_SERIAL_OPS = {"zero": Zero, "one": One, "neg": Neg, "inv": Inv, "add": Add, "mul": Mul, "div": Div}
_OP_NAMES = {cls: name for name, cls in _SERIAL_OPS.items()}


def term_to_dict(t: Term) -> dict:
    match t:
        case Zero() | One():
            return {"op": _OP_NAMES[type(t)]}
        case Var(name):
            return {"op": "var", "name": name}
        case Neg(arg) | Inv(arg):
            return {"op": _OP_NAMES[type(t)], "args": [term_to_dict(arg)]}
        case Add(left, right) | Mul(left, right) | Div(left, right):
            return {"op": _OP_NAMES[type(t)], "args": [term_to_dict(left), term_to_dict(right)]}
    raise TypeError(f"not a term: {t!r}")


def term_from_dict(doc: object) -> Term:
    if not isinstance(doc, dict):
        raise SchemaError(f"expected an object, got {type(doc).__name__}")
    op = doc.get("op")
    if op == "var":
        name = doc.get("name")
        if not isinstance(name, str):
            raise SchemaError("var node needs a string 'name'")
        try:
            return Var(name)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
    if op in ("zero", "one"):
        return ZERO if op == "zero" else ONE
    if op in ("neg", "inv", "add", "mul", "div"):
        args = doc.get("args")
        arity = 1 if op in ("neg", "inv") else 2
        if not isinstance(args, list) or len(args) != arity:
            raise SchemaError(f"{op} node needs exactly {arity} args")
        children = [term_from_dict(arg) for arg in args]
        return _SERIAL_OPS[op](*children)
    raise SchemaError(f"unknown op tag: {op!r}")


def serialize(t: Term) -> str:
    """JSON document for a term: op tag, children under 'args', var 'name'."""
    return json.dumps(term_to_dict(t))


def deserialize(text: str) -> Term:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    return term_from_dict(doc)

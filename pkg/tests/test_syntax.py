"""Tests for parsing, printing, and serialization."""

import json
import random
import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meadows import (
    Add,
    Div,
    Inv,
    Mul,
    Neg,
    NumeralStyle,
    ONE,
    ParseError,
    SchemaError,
    SignatureId,
    Var,
    ZERO,
    deserialize,
    numeral,
    parse,
    parse_term,
    power,
    render,
    serialize,
    term_from_dict,
    term_to_dict,
)
from termgen import random_term

X = Var("x")
Y = Var("y")
Z = Var("z")


class TestParse:
    def test_inverse_law_input(self):
        assert parse_term("x * x^-1") == Mul(X, Inv(X))

    def test_sum_of_squares(self):
        squares = Add(Add(ONE, power(X, 2)), power(Y, 2))
        got = parse_term("(1 + x^2 + y^2) * (1 + x^2 + y^2)^-1")
        assert got == Mul(squares, Inv(squares))

    def test_division_by_zero_literal(self):
        assert parse_term("3 / 0") == Div(numeral(3), ZERO)

    def test_precedence(self):
        assert parse_term("x + y * z") == Add(X, Mul(Y, Z))
        assert parse_term("x * y + z") == Add(Mul(X, Y), Z)
        assert parse_term("-x^-1") == Neg(Inv(X))
        assert parse_term("-x * y") == Mul(Neg(X), Y)

    def test_left_associativity(self):
        assert parse_term("x / y / z") == Div(Div(X, Y), Z)
        assert parse_term("x / y * z") == Mul(Div(X, Y), Z)
        assert parse_term("x * y / z") == Div(Mul(X, Y), Z)
        assert parse_term("x + y + z") == Add(Add(X, Y), Z)

    def test_function_form_of_inverse(self):
        assert parse_term("inv(x + y)") == Inv(Add(X, Y))
        assert parse_term("inv(inv(x))") == Inv(Inv(X))

    def test_exponent_sugar(self):
        assert parse_term("x^2") == power(X, 2)
        assert parse_term("(x + y)^3") == power(Add(X, Y), 3)
        assert parse_term("x^-1^-1") == Inv(Inv(X))

    def test_naturals_expand_to_numerals(self):
        assert parse_term("0") == ZERO
        assert parse_term("1") == ONE
        assert parse_term("4") == numeral(4)
        assert parse_term("12") == numeral(12)

    def test_prefix_minus(self):
        assert parse_term("x + -y") == Add(X, Neg(Y))
        assert parse_term("--x") == Neg(Neg(X))

    def test_identifiers(self):
        assert parse_term("velocity_2") == Var("velocity_2")

    def test_parsed_input_carries_source_and_span(self):
        result = parse("x + y")
        assert result.term == Add(X, Y)
        assert result.source == "x + y"
        assert result.span.start_line == 1
        assert result.span.start_column == 1


class TestParseErrors:
    def test_empty_input(self):
        with pytest.raises(ParseError) as info:
            parse("")
        assert (info.value.line, info.value.column) == (1, 1)

    def test_unknown_character(self):
        with pytest.raises(ParseError) as info:
            parse("x @ y")
        assert (info.value.line, info.value.column) == (1, 3)

    def test_uppercase_identifier(self):
        with pytest.raises(ParseError):
            parse("X")

    def test_no_binary_minus(self):
        with pytest.raises(ParseError):
            parse("x - y")

    def test_dangling_operator(self):
        with pytest.raises(ParseError):
            parse("x +")

    def test_trailing_input(self):
        with pytest.raises(ParseError) as info:
            parse("x y")
        assert info.value.column == 3

    def test_error_position_spans_lines(self):
        with pytest.raises(ParseError) as info:
            parse("x +\n@")
        assert (info.value.line, info.value.column) == (2, 1)

    def test_unclosed_parenthesis(self):
        with pytest.raises(ParseError):
            parse("(x + y")

    def test_bare_inv_is_reserved(self):
        with pytest.raises(ParseError):
            parse("inv")
        with pytest.raises(ParseError):
            parse("inv + 1")

    def test_unsupported_exponent(self):
        with pytest.raises(ParseError):
            parse("x^-2")
        with pytest.raises(ParseError):
            parse("x^y")


class TestRender:
    def test_numeral_collapsing_modes(self):
        t = Mul(Add(ONE, ONE), Inv(X))
        assert render(t) == "2 * x^-1"
        assert render(t, NumeralStyle.STRUCTURAL) == "(1 + 1) * x^-1"

    def test_zero(self):
        assert render(ZERO) == "0"

    def test_division_parentheses(self):
        assert render(Div(X, Add(Y, ONE))) == "x / (y + 1)"

    def test_minimal_parentheses(self):
        assert render(Add(X, Mul(Y, Z))) == "x + y * z"
        assert render(Mul(Add(X, Y), Z)) == "(x + y) * z"
        assert render(Add(Add(X, Y), Z)) == "x + y + z"
        assert render(Add(X, Add(Y, Z))) == "x + (y + z)"

    def test_inverse_of_compound(self):
        assert render(Inv(Add(X, Y))) == "(x + y)^-1"
        assert render(Inv(Neg(X))) == "(-x)^-1"
        assert render(Neg(Inv(X))) == "-x^-1"

    def test_powers_collapse(self):
        assert render(power(X, 2)) == "x^2"
        assert render(power(Add(X, ONE), 3), NumeralStyle.STRUCTURAL) == "(x + 1)^3"

    def test_numerals(self):
        assert render(numeral(7)) == "7"
        assert render(numeral(7), NumeralStyle.STRUCTURAL) == "1 + 1 + 1 + 1 + 1 + 1 + 1"

    @given(st.integers(0, 5000), st.sampled_from(list(SignatureId)))
    @settings(max_examples=250, deadline=None)
    def test_parse_render_round_trip(self, seed: int, sig: SignatureId):
        rng = random.Random(seed)
        t = random_term(rng, sig, max_size=18, variables=("x", "y", "z"))
        assert parse_term(render(t)) == t
        assert parse_term(render(t, NumeralStyle.STRUCTURAL)) == t

    @given(st.integers(0, 5000))
    @settings(max_examples=100, deadline=None)
    def test_render_stays_inside_the_grammar(self, seed: int):
        rng = random.Random(seed)
        sig = rng.choice(list(SignatureId))
        t = random_term(rng, sig, max_size=18, variables=("x", "y"))
        for style in NumeralStyle:
            assert re.fullmatch(r"[a-z0-9_()+*/^\s-]+", render(t, style))


class TestSerialization:
    def test_one(self):
        assert json.loads(serialize(ONE)) == {"op": "one"}

    def test_schema_shape(self):
        assert term_to_dict(Var("x")) == {"op": "var", "name": "x"}
        assert term_to_dict(Inv(ZERO)) == {"op": "inv", "args": [{"op": "zero"}]}
        assert term_to_dict(Add(ONE, ZERO)) == {
            "op": "add",
            "args": [{"op": "one"}, {"op": "zero"}],
        }

    @given(st.integers(0, 5000), st.sampled_from(list(SignatureId)))
    @settings(max_examples=150, deadline=None)
    def test_round_trip(self, seed: int, sig: SignatureId):
        rng = random.Random(seed)
        t = random_term(rng, sig, max_size=18, variables=("x", "y"))
        assert deserialize(serialize(t)) == t
        assert term_from_dict(term_to_dict(t)) == t

    def test_unknown_op(self):
        with pytest.raises(SchemaError):
            term_from_dict({"op": "sub", "args": [{"op": "one"}, {"op": "one"}]})

    def test_malformed_json(self):
        with pytest.raises(SchemaError):
            deserialize("not json at all {")

    def test_non_object_document(self):
        with pytest.raises(SchemaError):
            deserialize("[1, 2, 3]")

    def test_missing_variable_name(self):
        with pytest.raises(SchemaError):
            term_from_dict({"op": "var"})

    def test_invalid_variable_name(self):
        with pytest.raises(SchemaError):
            term_from_dict({"op": "var", "name": "X"})
        with pytest.raises(SchemaError):
            term_from_dict({"op": "var", "name": "inv"})

    def test_wrong_arity(self):
        with pytest.raises(SchemaError):
            term_from_dict({"op": "add", "args": [{"op": "one"}]})
        with pytest.raises(SchemaError):
            term_from_dict({"op": "inv", "args": []})

    def test_missing_args(self):
        with pytest.raises(SchemaError):
            term_from_dict({"op": "mul"})

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from meadows import (
    ONE,
    ZERO,
    Add,
    Carrier,
    CarrierViolation,
    Div,
    Inv,
    Mul,
    Neg,
    SignatureId,
    UnboundVariable,
    Var,
    eval_total,
    numeral,
    parse_rational,
)
from termgen import random_env, random_term

X = Var("x")


def test_inverse_of_zero_is_zero():
    assert eval_total(Inv(ZERO), {}, Carrier.NON_NEGATIVE) == 0


def test_division_by_zero_is_zero():
    # 3 / 0 = 3 * (1 / 0) = 3 * 0 under the zero-totalized reading.
    assert eval_total(Div(numeral(3), ZERO), {}, Carrier.ALL) == 0
    assert eval_total(Div(ZERO, ZERO), {}, Carrier.ALL) == 0


def test_inverse_cancels_for_nonzero():
    env = {"x": Fraction(5, 7)}
    assert eval_total(Mul(X, Inv(X)), env, Carrier.POSITIVE) == 1


def test_numerals_evaluate_to_their_value():
    for n in range(12):
        assert eval_total(numeral(n), {}) == n


def test_carrier_restrictions():
    with pytest.raises(CarrierViolation):
        eval_total(ZERO, {}, Carrier.POSITIVE)
    with pytest.raises(CarrierViolation):
        eval_total(Neg(ONE), {}, Carrier.NON_NEGATIVE)
    with pytest.raises(CarrierViolation):
        eval_total(X, {"x": Fraction(-1)}, Carrier.POSITIVE)
    with pytest.raises(CarrierViolation):
        eval_total(X, {"x": Fraction(0)}, Carrier.POSITIVE)
    assert eval_total(Neg(ONE), {}, Carrier.ALL) == -1


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        eval_total(X, {}, Carrier.ALL)


def test_parse_rational():
    assert parse_rational("3") == 3
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-4/6") == Fraction(-2, 3)
    with pytest.raises(CarrierViolation):
        parse_rational("-1", Carrier.NON_NEGATIVE)
    with pytest.raises(CarrierViolation):
        parse_rational("0", Carrier.POSITIVE)
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("x")


@given(st.integers(min_value=0, max_value=2**31))
def test_compositional(seed):
    rng = random.Random(seed)
    sig = rng.choice(list(SignatureId))
    t = random_term(rng, sig, 18, ("x", "y"))
    env = random_env(rng, ("x", "y"), Carrier.ALL)
    value = eval_total(t, env)
    if isinstance(t, Add):
        assert value == eval_total(t.left, env) + eval_total(t.right, env)
    elif isinstance(t, Mul):
        assert value == eval_total(t.left, env) * eval_total(t.right, env)
    elif isinstance(t, Neg):
        assert value == -eval_total(t.arg, env)
    elif isinstance(t, Inv):
        inner = eval_total(t.arg, env)
        assert value == (0 if inner == 0 else 1 / inner)
    elif isinstance(t, Div):
        denom = eval_total(t.right, env)
        assert value == (0 if denom == 0 else eval_total(t.left, env) / denom)


@given(st.integers(min_value=0, max_value=2**31))
def test_results_stay_in_carrier(seed):
    rng = random.Random(seed)
    t = random_term(rng, SignatureId.IAMD, 18, ("x",))
    env = random_env(rng, ("x",), Carrier.POSITIVE)
    assert eval_total(t, env, Carrier.POSITIVE) > 0
    t = random_term(rng, SignatureId.IAMDZ, 18, ("x",))
    env = random_env(rng, ("x",), Carrier.NON_NEGATIVE)
    assert eval_total(t, env, Carrier.NON_NEGATIVE) >= 0

"""Exact rational evaluation with totalized inverse and division.

The inverse of 0 is 0, and q / 0 is q * (1/0) = 0.  Everything is
arbitrary-precision ``fractions.Fraction``; no floating point is used
anywhere, so value equality is decidable and exact.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from typing import Mapping

from .exceptions import CarrierViolation, UnboundVariable
from .terms import Add, Div, Inv, Mul, Neg, One, Term, Var, Zero

Rational = Fraction


class Carrier(Enum):
    """Value domain of an evaluator; enum values are the command-line names."""

    POSITIVE = "pos"
    NON_NEGATIVE = "nonneg"
    ALL = "all"

    def contains(self, value: Fraction) -> bool:
        if self is Carrier.POSITIVE:
            return value > 0
        if self is Carrier.NON_NEGATIVE:
            return value >= 0
        return True


RATIONAL_LITERAL = re.compile(r"(-?)(\d+)(?:/(\d+))?\Z")


def parse_rational(text: str, carrier: Carrier = Carrier.ALL) -> Fraction:
    """Parse ``n``, ``-n``, ``n/m`` or ``-n/m`` into an exact rational.

    The sign is rejected unless the carrier is all rationals, and the
    parsed value must lie in the carrier.
    """
    m = RATIONAL_LITERAL.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    sign, num, den = m.groups()
    if sign and carrier is not Carrier.ALL:
        raise CarrierViolation(f"negative literal {text!r} outside the all-rationals carrier")
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    if sign:
        value = -value
    if not carrier.contains(value):
        raise CarrierViolation(f"{value} is outside the {carrier.value} carrier")
    return value


def eval_total(t: Term, env: Mapping[str, Fraction], carrier: Carrier = Carrier.ALL) -> Fraction:
    """Evaluate ``t`` under ``env`` with 0^-1 = 0 and q / 0 = 0.

    Raises CarrierViolation when the term or an assigned value steps
    outside the carrier (the constant 0 over positives, negation outside
    all rationals), and UnboundVariable for uncovered variables.
    """
    match t:
        case Zero():
            if carrier is Carrier.POSITIVE:
                raise CarrierViolation("the constant 0 is outside the positive carrier")
            return Fraction(0)
        case One():
            return Fraction(1)
        case Var(name):
            try:
                value = Fraction(env[name])
            except KeyError:
                raise UnboundVariable(f"no value for variable {name}") from None
            if not carrier.contains(value):
                raise CarrierViolation(f"{name} = {value} is outside the {carrier.value} carrier")
            return value
        case Add(left, right):
            return eval_total(left, env, carrier) + eval_total(right, env, carrier)
        case Mul(left, right):
            return eval_total(left, env, carrier) * eval_total(right, env, carrier)
        case Neg(arg):
            if carrier is not Carrier.ALL:
                raise CarrierViolation(f"negation is not available over the {carrier.value} carrier")
            return -eval_total(arg, env, carrier)
        case Inv(arg):
            v = eval_total(arg, env, carrier)
            return Fraction(0) if v == 0 else 1 / v
        case Div(left, right):
            u = eval_total(left, env, carrier)
            v = eval_total(right, env, carrier)
            return Fraction(0) if v == 0 else u / v
    raise TypeError(f"not a term: {t!r}")

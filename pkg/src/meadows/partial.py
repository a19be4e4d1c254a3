"""Partial evaluation by punching, and the syntactic definedness criterion.

Punching makes a total algebra partial by declaring an operation
undefined at chosen points: the inverse at 0, or division by 0 (for
every numerator, or only for nonzero numerators so that 0 / 0 = 0
survives).  Undefined propagates strictly through every operation.

For the inverse punch there is a static criterion: the sets Nz
(syntactically non-zero terms) and Def (syntactically defined terms)
are built inductively from 1 in Nz and 0 in Def, closed under + and *,
with the inverse preserving Nz only.  Membership in Def
guarantees a defined value; membership in Nz additionally guarantees a
positive one.

The literal Nz rule for sums ("a sum with one non-zero summand is
non-zero") does not look at the other summand at all, so it would
accept 1 + 0^-1, which is undefined under the inverse punch.  The
default here guards the rule by requiring the other summand to be in
Def; the literal unguarded rule stays available behind a flag for
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Union

from .exceptions import (
    CarrierViolation,
    NotInSignature,
    SignatureMismatch,
    UnboundVariable,
)
from .terms import Add, Div, Inv, Mul, SignatureId, Term, Var, Zero, One, conforms


class PunchId(Enum):
    """Which operation is punched, and where."""

    INV0 = "inv0"
    DIV_ALL0 = "divall0"
    DIV_NONZERO0 = "divnz0"

    @property
    def signature(self) -> SignatureId:
        return SignatureId.IAMDZ if self is PunchId.INV0 else SignatureId.DAMDZ


@dataclass(frozen=True, slots=True)
class Defined:
    value: Fraction


@dataclass(frozen=True, slots=True)
class Undefined:
    pass


UNDEFINED = Undefined()
PartialValue = Union[Defined, Undefined]


class DefClass(Enum):
    """Verdict of the syntactic definedness criterion."""

    IN_NZ = "nz"
    IN_DEF_ONLY = "def"
    OUTSIDE = "outside"

    @property
    def in_def(self) -> bool:
        return self is not DefClass.OUTSIDE


def eval_punched(t: Term, env: Mapping[str, Fraction], punch: PunchId) -> PartialValue:
    """Evaluate exactly, except Undefined at the punched points.

    Inverse punch: u^-1 is Undefined when u evaluates to 0.  Division
    punches: u / v is Undefined when v evaluates to 0, either always or
    only when u is nonzero (then 0 / 0 = 0).  Undefined is strict: it
    swallows every surrounding operation.
    """
    if not conforms(t, punch.signature):
        raise SignatureMismatch(
            f"term does not conform to the {punch.signature.value} signature "
            f"required by punch {punch.value}"
        )
    for name, value in env.items():
        if value < 0:
            raise CarrierViolation(f"{name} = {value} is negative")
    return _eval_punched(t, env, punch)


def _eval_punched(t: Term, env: Mapping[str, Fraction], punch: PunchId) -> PartialValue:
    match t:
        case Zero():
            return Defined(Fraction(0))
        case One():
            return Defined(Fraction(1))
        case Var(name):
            if name not in env:
                raise UnboundVariable(f"no value for variable {name}")
            return Defined(Fraction(env[name]))
        case Add(left, right):
            a = _eval_punched(left, env, punch)
            b = _eval_punched(right, env, punch)
            if isinstance(a, Undefined) or isinstance(b, Undefined):
                return UNDEFINED
            return Defined(a.value + b.value)
        case Mul(left, right):
            a = _eval_punched(left, env, punch)
            b = _eval_punched(right, env, punch)
            if isinstance(a, Undefined) or isinstance(b, Undefined):
                return UNDEFINED
            return Defined(a.value * b.value)
        case Inv(arg):
            a = _eval_punched(arg, env, punch)
            if isinstance(a, Undefined) or a.value == 0:
                return UNDEFINED
            return Defined(1 / a.value)
        case Div(left, right):
            a = _eval_punched(left, env, punch)
            b = _eval_punched(right, env, punch)
            if isinstance(a, Undefined) or isinstance(b, Undefined):
                return UNDEFINED
            if b.value == 0:
                if punch is PunchId.DIV_NONZERO0 and a.value == 0:
                    return Defined(Fraction(0))
                return UNDEFINED
            return Defined(a.value / b.value)
    raise TypeError(f"not a term: {t!r}")


def classify_def(t: Term, unguarded_addition: bool = False) -> DefClass:
    """Classify a term by the inductive Nz/Def rules for the inverse punch.

    Free variables classify as Def only: a variable may be assigned 0,
    so it cannot be placed in Nz.  With ``unguarded_addition`` the
    literal sum rule is used, which ignores the other summand and is
    unsound (it accepts 1 + 0^-1); the default requires the other
    summand to be in Def.
    """
    if not conforms(t, SignatureId.IAMDZ):
        raise NotInSignature("the definedness criterion applies to iamdz terms")
    return _classify(t, unguarded_addition)


def _classify(t: Term, unguarded: bool) -> DefClass:
    match t:
        case Zero() | Var(_):
            return DefClass.IN_DEF_ONLY
        case One():
            return DefClass.IN_NZ
        case Add(left, right):
            a, b = _classify(left, unguarded), _classify(right, unguarded)
            if unguarded:
                if a is DefClass.IN_NZ or b is DefClass.IN_NZ:
                    return DefClass.IN_NZ
            elif (a is DefClass.IN_NZ and b.in_def) or (b is DefClass.IN_NZ and a.in_def):
                return DefClass.IN_NZ
            if a.in_def and b.in_def:
                return DefClass.IN_DEF_ONLY
            return DefClass.OUTSIDE
        case Mul(left, right):
            a, b = _classify(left, unguarded), _classify(right, unguarded)
            if a is DefClass.IN_NZ and b is DefClass.IN_NZ:
                return DefClass.IN_NZ
            if a.in_def and b.in_def:
                return DefClass.IN_DEF_ONLY
            return DefClass.OUTSIDE
        case Inv(arg):
            if _classify(arg, unguarded) is DefClass.IN_NZ:
                return DefClass.IN_NZ
            return DefClass.OUTSIDE
    raise TypeError(f"not a term: {t!r}")

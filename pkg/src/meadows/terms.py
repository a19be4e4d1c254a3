"""Term syntax over the union of all meadow signatures.

A term is an immutable tree built from the constants 0 and 1, variables,
addition, multiplication, additive inverse (negation), multiplicative
inverse, and division.  Individual signatures permit only a subset of
these constructors; ``conforms`` checks membership dynamically so the
same tree type serves every signature.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .exceptions import ZeroNotInSignature

VAR_NAME = re.compile(r"[a-z][a-z0-9_]*\Z")

# reserved in the concrete syntax for the function form of the inverse
RESERVED_WORDS = frozenset({"inv"})


class Term:
    """Base class of the term tree; instances are immutable and hashable."""

    __slots__ = ()

    def __add__(self, other: "Term") -> "Term":
        return Add(self, other)

    def __mul__(self, other: "Term") -> "Term":
        return Mul(self, other)

    def __neg__(self) -> "Term":
        return Neg(self)

    def __truediv__(self, other: "Term") -> "Term":
        return Div(self, other)

    def __pow__(self, exponent: int) -> "Term":
        if exponent == -1:
            return Inv(self)
        return power(self, exponent)

    def inv(self) -> "Term":
        return Inv(self)


@dataclass(frozen=True, slots=True)
class Zero(Term):
    pass


@dataclass(frozen=True, slots=True)
class One(Term):
    pass


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str

    def __post_init__(self):
        if not VAR_NAME.match(self.name) or self.name in RESERVED_WORDS:
            raise ValueError(f"invalid variable name: {self.name!r}")


@dataclass(frozen=True, slots=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Inv(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Div(Term):
    left: Term
    right: Term


ZERO = Zero()
ONE = One()


class SignatureId(Enum):
    """The seven signatures; enum values are the command-line names.

    CR is the commutative-ring signature {0, 1, +, *, -}.  IMD/DMD extend
    it with the inverse / division operator.  The *arithmetical* variants
    drop negation (IAMDZ, DAMDZ) and then also the constant 0 (IAMD,
    DAMD).
    """

    CR = "cr"
    IMD = "imd"
    DMD = "dmd"
    IAMDZ = "iamdz"
    DAMDZ = "damdz"
    IAMD = "iamd"
    DAMD = "damd"

    @property
    def constructors(self) -> frozenset[type]:
        return _SIGNATURE_CONSTRUCTORS[self]

    def allows(self, node_type: type) -> bool:
        return node_type is Var or node_type in _SIGNATURE_CONSTRUCTORS[self]

    @property
    def has_zero(self) -> bool:
        return Zero in _SIGNATURE_CONSTRUCTORS[self]

    @property
    def has_neg(self) -> bool:
        return Neg in _SIGNATURE_CONSTRUCTORS[self]

    @property
    def has_inv(self) -> bool:
        return Inv in _SIGNATURE_CONSTRUCTORS[self]

    @property
    def has_div(self) -> bool:
        return Div in _SIGNATURE_CONSTRUCTORS[self]


_RING = frozenset({Zero, One, Add, Mul, Neg})

_SIGNATURE_CONSTRUCTORS: dict[SignatureId, frozenset[type]] = {
    SignatureId.CR: _RING,
    SignatureId.IMD: _RING | {Inv},
    SignatureId.DMD: _RING | {Div},
    SignatureId.IAMDZ: frozenset({Zero, One, Add, Mul, Inv}),
    SignatureId.DAMDZ: frozenset({Zero, One, Add, Mul, Div}),
    SignatureId.IAMD: frozenset({One, Add, Mul, Inv}),
    SignatureId.DAMD: frozenset({One, Add, Mul, Div}),
}


def numeral(n: int, sig: SignatureId = SignatureId.IAMDZ) -> Term:
    """The numeral term for the natural number ``n``.

    0 maps to the constant 0 (only over signatures that have it), 1 to
    the constant 1, and n >= 2 to the left-nested sum ((1 + 1) + ...) + 1.
    """
    if n < 0:
        raise ValueError("numerals are defined for natural numbers only")
    if n == 0:
        if not sig.has_zero:
            raise ZeroNotInSignature(f"numeral 0 does not exist over {sig.value}")
        return ZERO
    t: Term = ONE
    for _ in range(n - 1):
        t = Add(t, ONE)
    return t


def power(t: Term, n: int) -> Term:
    """Exponent sugar: power(t, 0) = 1 and power(t, n+1) = power(t, n) * t."""
    if n < 0:
        raise ValueError("exponents are natural numbers; use Inv for the inverse")
    result: Term = ONE
    for _ in range(n):
        result = Mul(result, t)
    return result


def conforms(t: Term, sig: SignatureId) -> bool:
    """True iff every constructor occurring in ``t`` is permitted by ``sig``."""
    stack = [t]
    allowed = sig.constructors
    while stack:
        node = stack.pop()
        kind = type(node)
        if kind is Var:
            continue
        if kind not in allowed:
            return False
        if kind in (Add, Mul, Div):
            stack.append(node.left)
            stack.append(node.right)
        elif kind in (Neg, Inv):
            stack.append(node.arg)
    return True


def substitute(t: Term, var: str, replacement: Term) -> Term:
    """Replace every occurrence of the variable ``var`` in ``t`` by ``replacement``."""
    match t:
        case Var(name):
            return replacement if name == var else t
        case Zero() | One():
            return t
        case Add(left, right):
            return Add(substitute(left, var, replacement), substitute(right, var, replacement))
        case Mul(left, right):
            return Mul(substitute(left, var, replacement), substitute(right, var, replacement))
        case Div(left, right):
            return Div(substitute(left, var, replacement), substitute(right, var, replacement))
        case Neg(arg):
            return Neg(substitute(arg, var, replacement))
        case Inv(arg):
            return Inv(substitute(arg, var, replacement))
    raise TypeError(f"not a term: {t!r}")


def free_vars(t: Term) -> tuple[str, ...]:
    """The variables occurring in ``t``, sorted lexicographically."""
    seen: set[str] = set()
    stack = [t]
    while stack:
        node = stack.pop()
        match node:
            case Var(name):
                seen.add(name)
            case Add(left, right) | Mul(left, right) | Div(left, right):
                stack.append(left)
                stack.append(right)
            case Neg(arg) | Inv(arg):
                stack.append(arg)
    return tuple(sorted(seen))


def is_closed(t: Term) -> bool:
    return not free_vars(t)


def term_size(t: Term) -> int:
    """Number of constructor nodes (variables and constants count as 1)."""
    match t:
        case Add(left, right) | Mul(left, right) | Div(left, right):
            return 1 + term_size(left) + term_size(right)
        case Neg(arg) | Inv(arg):
            return 1 + term_size(arg)
        case _:
            return 1

"""Canonical forms for arithmetical meadow terms.

Inverse-free terms over {1, +, *} normalize to polynomials with strictly
positive integer coefficients (``PosPoly``); positivity is structural,
since the signature has no subtraction.  A term with inverses splits
into a numerator/denominator pair of such polynomials (``PolyFraction``)
by pushing the inverse through products and collapsing double inverses.
Closed terms reduce further to a coprime integer fraction
(``ClosedNormal``), with an explicit zero form once the constant 0 is in
the signature.

Two inverse-free terms are provably equal over the arithmetical-meadow
axioms exactly when their ``PosPoly`` forms coincide, which is what the
decision procedures in :mod:`meadows.decide` rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping

from .exceptions import ContainsInverse, NotClosed, NotInSignature, SizeLimit
from .terms import (
    ONE,
    ZERO,
    Add,
    Div,
    Inv,
    Mul,
    Neg,
    One,
    SignatureId,
    Term,
    Var,
    Zero,
    conforms,
    free_vars,
)

# Monomials are sparse exponent vectors: ((var, exp), ...) sorted by
# variable name, every exponent >= 1; () is the constant monomial.
Monomial = tuple[tuple[str, int], ...]

DEFAULT_MAX_MONOMIALS = 100_000


class PosPoly:
    """Multivariate polynomial whose coefficients are all >= 1.

    The zero polynomial does not exist here: the mapping is never empty.
    Equality is plain map equality, independent of any monomial order;
    the graded-lexicographic order is used only for printing and
    deterministic iteration.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Monomial, int]):
        if not coeffs:
            raise ValueError("a positive polynomial has at least one monomial")
        for mono, coeff in coeffs.items():
            if coeff < 1:
                raise ValueError(f"coefficient {coeff} is not positive")
            if any(exp < 1 for _, exp in mono):
                raise ValueError(f"zero exponent stored in monomial {mono}")
            if list(mono) != sorted(mono):
                raise ValueError(f"monomial {mono} is not sorted by variable")
        self._coeffs = dict(coeffs)

    @classmethod
    def constant(cls, value: int) -> "PosPoly":
        return cls({(): value})

    @classmethod
    def variable(cls, name: str) -> "PosPoly":
        return cls({((name, 1),): 1})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PosPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __repr__(self) -> str:
        return f"PosPoly({self.render()})"

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Monomial/coefficient pairs in graded-lex descending order."""
        variables = self.variables
        def key(mono: Monomial):
            exps = dict(mono)
            vector = tuple(exps.get(v, 0) for v in variables)
            return (sum(vector), vector)
        for mono in sorted(self._coeffs, key=key, reverse=True):
            yield mono, self._coeffs[mono]

    @property
    def variables(self) -> tuple[str, ...]:
        names = {v for mono in self._coeffs for v, _ in mono}
        return tuple(sorted(names))

    @property
    def is_constant(self) -> bool:
        return set(self._coeffs) == {()}

    def constant_value(self) -> int:
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self._coeffs[()]

    def max_exponent(self) -> int:
        return max((exp for mono in self._coeffs for _, exp in mono), default=0)

    def add(self, other: "PosPoly") -> "PosPoly":
        merged = dict(self._coeffs)
        for mono, coeff in other._coeffs.items():
            merged[mono] = merged.get(mono, 0) + coeff
        return PosPoly(merged)

    def mul(self, other: "PosPoly", max_monomials: int = DEFAULT_MAX_MONOMIALS) -> "PosPoly":
        product: dict[Monomial, int] = {}
        for mono_a, coeff_a in self._coeffs.items():
            exps_a = dict(mono_a)
            for mono_b, coeff_b in other._coeffs.items():
                exps = dict(exps_a)
                for v, e in mono_b:
                    exps[v] = exps.get(v, 0) + e
                key = tuple(sorted(exps.items()))
                product[key] = product.get(key, 0) + coeff_a * coeff_b
                if len(product) > max_monomials:
                    raise SizeLimit(len(product), max_monomials)
        return PosPoly(product)

    def __add__(self, other: "PosPoly") -> "PosPoly":
        return self.add(other)

    def __mul__(self, other: "PosPoly") -> "PosPoly":
        return self.mul(other)

    def evaluate(self, env: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self._coeffs.items():
            value = Fraction(coeff)
            for v, e in mono:
                value *= env[v] ** e
            total += value
        return total

    def render(self) -> str:
        """Canonical text: graded-lex descending, e.g. ``2*x^2*y + x + 3``."""
        parts = []
        for mono, coeff in self.items():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(coeff), *factors]))
        return " + ".join(parts)


@dataclass(frozen=True)
class PolyFraction:
    """Numerator/denominator pair of positive polynomials.

    No polynomial cancellation is attempted: the decision procedure
    compares cross products, so reduced form is unnecessary, and the
    subtraction-free setting offers no factorization to exploit anyway.
    """

    numerator: PosPoly
    denominator: PosPoly

    def __iter__(self) -> Iterator[PosPoly]:
        return iter((self.numerator, self.denominator))

    def render(self) -> str:
        return f"({self.numerator.render()}) / ({self.denominator.render()})"


@dataclass(frozen=True)
class ClosedNormal:
    """A coprime integer fraction, or zero (numerator 0, denominator 1).

    The numerator carries the sign; it is >= 1 for terms over the
    zero-free arithmetical signature, >= 0 once 0 is present, and any
    integer for full meadow terms.
    """

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be >= 1")
        if self.numerator == 0 and self.denominator != 1:
            raise ValueError("zero is represented as 0/1")
        if gcd(abs(self.numerator), self.denominator) != 1:
            raise ValueError(f"{self.numerator}/{self.denominator} is not in lowest terms")

    @classmethod
    def zero(cls) -> "ClosedNormal":
        return cls(0, 1)

    @classmethod
    def fraction(cls, numerator: int, denominator: int) -> "ClosedNormal":
        if denominator == 0:
            raise ValueError("denominator must be nonzero")
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        if numerator == 0:
            return cls.zero()
        g = gcd(abs(numerator), denominator)
        return cls(numerator // g, denominator // g)

    @classmethod
    def from_rational(cls, value: Fraction) -> "ClosedNormal":
        return cls(value.numerator, value.denominator)

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0

    def as_rational(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


def poly_normal(t: Term, max_monomials: int = DEFAULT_MAX_MONOMIALS) -> PosPoly:
    """Normalize an inverse-free term over {1, +, *} to a PosPoly.

    Fully distributes products over sums and merges equal monomials by
    adding coefficients.  Two inverse-free terms are equal over the
    arithmetical-meadow axioms iff their normal forms are equal.
    """
    # Explicit stack: numeral chains nest thousands of constructors deep.
    out: list[PosPoly] = []
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        match node:
            case One():
                out.append(PosPoly.constant(1))
            case Var(name):
                out.append(PosPoly.variable(name))
            case Add(left, right) | Mul(left, right):
                if ready:
                    b = out.pop()
                    a = out.pop()
                    if isinstance(node, Add):
                        out.append(a.add(b))
                    else:
                        out.append(a.mul(b, max_monomials))
                else:
                    stack.append((node, True))
                    stack.append((right, False))
                    stack.append((left, False))
            case Inv(_):
                raise ContainsInverse("poly_normal expects an inverse-free term")
            case Zero() | Neg(_) | Div(_, _):
                raise NotInSignature(
                    f"{type(node).__name__} is not an inverse-free iamd constructor"
                )
            case _:
                raise TypeError(f"not a term: {node!r}")
    return out[0]


def split_inverse(t: Term, max_monomials: int = DEFAULT_MAX_MONOMIALS) -> PolyFraction:
    """Split a zero-free arithmetical term into an inverse-free fraction.

    The inverse distributes over products and cancels with itself, so a
    single inverse can be floated to the top; both components are then
    polynomial-normalized.  The result denotes the same value as ``t``
    at every positive point, and numerator * denominator^-1 is provably
    equal to ``t``.
    """
    out: list[PolyFraction] = []
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        match node:
            case One():
                one = PosPoly.constant(1)
                out.append(PolyFraction(one, one))
            case Var(name):
                out.append(PolyFraction(PosPoly.variable(name), PosPoly.constant(1)))
            case Add(left, right) | Mul(left, right):
                if ready:
                    b = out.pop()
                    a = out.pop()
                    if isinstance(node, Add):
                        num = a.numerator.mul(b.denominator, max_monomials).add(
                            b.numerator.mul(a.denominator, max_monomials)
                        )
                    else:
                        num = a.numerator.mul(b.numerator, max_monomials)
                    den = a.denominator.mul(b.denominator, max_monomials)
                    out.append(PolyFraction(num, den))
                else:
                    stack.append((node, True))
                    stack.append((right, False))
                    stack.append((left, False))
            case Inv(arg):
                if ready:
                    inner = out.pop()
                    out.append(PolyFraction(inner.denominator, inner.numerator))
                else:
                    stack.append((node, True))
                    stack.append((arg, False))
            case Zero() | Neg(_) | Div(_, _):
                raise NotInSignature(f"{type(node).__name__} does not occur in the iamd signature")
            case _:
                raise TypeError(f"not a term: {node!r}")
    return out[0]


def closed_normal_iamd(t: Term, max_monomials: int = DEFAULT_MAX_MONOMIALS) -> ClosedNormal:
    """Coprime-fraction normal form of a closed zero-free term.

    Always a strictly positive fraction; closed terms over {1, +, *, ^-1}
    cannot denote 0.
    """
    if not conforms(t, SignatureId.IAMD):
        raise NotInSignature("term does not conform to the iamd signature")
    if free_vars(t):
        raise NotClosed(f"term has free variables: {', '.join(free_vars(t))}")
    split = split_inverse(t, max_monomials)
    return ClosedNormal.fraction(
        split.numerator.constant_value(), split.denominator.constant_value()
    )


def zero_elim(t: Term) -> Term:
    """Eliminate the constant 0 from a term over {0, 1, +, *, ^-1}.

    Rewrites bottom-up with 0 + u = u, u + 0 = u, 0 * u = 0, u * 0 = 0
    and 0^-1 = 0.  The result is either the constant 0 (the term is
    provably 0) or a term with no 0 left, and is provably equal to ``t``.
    """
    if not conforms(t, SignatureId.IAMDZ):
        raise NotInSignature("zero elimination applies to iamdz terms")
    return _zero_elim(t)


def _zero_elim(t: Term) -> Term:
    match t:
        case Zero() | One() | Var(_):
            return t
        case Add(left, right):
            a, b = _zero_elim(left), _zero_elim(right)
            if isinstance(a, Zero):
                return b
            if isinstance(b, Zero):
                return a
            return Add(a, b)
        case Mul(left, right):
            a, b = _zero_elim(left), _zero_elim(right)
            if isinstance(a, Zero) or isinstance(b, Zero):
                return ZERO
            return Mul(a, b)
        case Inv(arg):
            a = _zero_elim(arg)
            return ZERO if isinstance(a, Zero) else Inv(a)
    raise TypeError(f"not a term: {t!r}")


def closed_normal_iamdz(t: Term, max_monomials: int = DEFAULT_MAX_MONOMIALS) -> ClosedNormal:
    """Normal form of a closed term over {0, 1, +, *, ^-1}: zero or a coprime fraction."""
    if not conforms(t, SignatureId.IAMDZ):
        raise NotInSignature("term does not conform to the iamdz signature")
    if free_vars(t):
        raise NotClosed(f"term has free variables: {', '.join(free_vars(t))}")
    reduced = zero_elim(t)
    if isinstance(reduced, Zero):
        return ClosedNormal.zero()
    return closed_normal_iamd(reduced, max_monomials)


def closed_normal_full(t: Term) -> ClosedNormal:
    """Signed normal form of a closed full-meadow term (inversive or divisive).

    Computed by exact zero-totalized evaluation; in the initial algebra,
    closed-term equality is value equality, so this is canonical.
    """
    if not (conforms(t, SignatureId.IMD) or conforms(t, SignatureId.DMD)):
        raise NotInSignature("term does not conform to the imd or dmd signature")
    if free_vars(t):
        raise NotClosed(f"term has free variables: {', '.join(free_vars(t))}")
    from .evaluate import Carrier, eval_total

    return ClosedNormal.from_rational(eval_total(t, {}, Carrier.ALL))

"""Pure syntax maps between divisive and inversive terms.

Division abbreviates multiplication by an inverse: p / q stands for
p * q^-1, and conversely x^-1 stands for 1 / x.  The maps recurse
structurally and never simplify (no collapsing of 1 * u); readability
is the normalizer's job, value preservation under the zero-totalized
semantics is this module's.
"""

from __future__ import annotations

from .exceptions import MixedSignature
from .terms import ONE, Add, Div, Inv, Mul, Neg, One, Term, Var, Zero


def div_to_inv(t: Term) -> Term:
    """Rewrite every u / v into u * v^-1.  The input must not contain ^-1."""
    match t:
        case Zero() | One() | Var(_):
            return t
        case Add(left, right):
            return Add(div_to_inv(left), div_to_inv(right))
        case Mul(left, right):
            return Mul(div_to_inv(left), div_to_inv(right))
        case Neg(arg):
            return Neg(div_to_inv(arg))
        case Div(left, right):
            return Mul(div_to_inv(left), Inv(div_to_inv(right)))
        case Inv(_):
            raise MixedSignature("term already contains an inverse")
    raise TypeError(f"not a term: {t!r}")


def inv_to_div(t: Term) -> Term:
    """Rewrite every u^-1 into 1 / u.  The input must not contain /."""
    match t:
        case Zero() | One() | Var(_):
            return t
        case Add(left, right):
            return Add(inv_to_div(left), inv_to_div(right))
        case Mul(left, right):
            return Mul(inv_to_div(left), inv_to_div(right))
        case Neg(arg):
            return Neg(inv_to_div(arg))
        case Inv(arg):
            return Div(ONE, inv_to_div(arg))
        case Div(_, _):
            raise MixedSignature("term already contains a division")
    raise TypeError(f"not a term: {t!r}")

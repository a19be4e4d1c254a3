"""Meadows: exact arithmetic of fields with a totalized inverse (0^-1 = 0).

The package covers seven signatures built from {0, 1, +, *, -} by adding
a multiplicative inverse (^-1) or a division (/) and optionally dropping
the additive identity and additive inverse, their named equational
theories, canonical normal forms with strictly positive polynomials,
decision procedures for provable equality, exact and punched-partial
evaluation over the rationals, and a concrete syntax with a CLI.
"""

from .decide import (
    Counterexample,
    Decision,
    MatchedNormals,
    RecursionTrace,
    TraceStep,
    decide_closed,
    decide_divisive,
    decide_iamd,
    decide_iamdz_gil,
)
from .evaluate import Carrier, Rational, eval_total, parse_rational
from .exceptions import (
    CarrierViolation,
    ContainsInverse,
    MeadowError,
    MixedSignature,
    NotClosed,
    NotInSignature,
    ParseError,
    SchemaError,
    SignatureMismatch,
    SizeLimit,
    UnboundVariable,
    ZeroNotInSignature,
)
from .normalize import (
    DEFAULT_MAX_MONOMIALS,
    ClosedNormal,
    Monomial,
    PolyFraction,
    PosPoly,
    closed_normal_full,
    closed_normal_iamd,
    closed_normal_iamdz,
    poly_normal,
    split_inverse,
    zero_elim,
)
from .partial import (
    UNDEFINED,
    DefClass,
    Defined,
    PartialValue,
    PunchId,
    Undefined,
    classify_def,
    eval_punched,
)
from .syntax import (
    NumeralStyle,
    ParsedInput,
    Span,
    deserialize,
    numeral_value,
    parse,
    parse_term,
    render,
    serialize,
    term_from_dict,
    term_to_dict,
)
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
    is_closed,
    numeral,
    power,
    substitute,
    term_size,
)
from .theories import (
    AxiomCheck,
    ConditionalLaw,
    Equation,
    ModelReport,
    Theory,
    TheoryId,
    Witness,
    axioms,
    check_model,
    conditional_law,
    theory,
)
from .translate import div_to_inv, inv_to_div

__all__ = [
    "Add",
    "AxiomCheck",
    "Carrier",
    "CarrierViolation",
    "ClosedNormal",
    "ConditionalLaw",
    "ContainsInverse",
    "Counterexample",
    "DEFAULT_MAX_MONOMIALS",
    "Decision",
    "DefClass",
    "Defined",
    "Div",
    "Equation",
    "Inv",
    "MatchedNormals",
    "MeadowError",
    "MixedSignature",
    "ModelReport",
    "Monomial",
    "Mul",
    "Neg",
    "NotClosed",
    "NotInSignature",
    "NumeralStyle",
    "ONE",
    "One",
    "ParseError",
    "ParsedInput",
    "PartialValue",
    "PolyFraction",
    "PosPoly",
    "PunchId",
    "Rational",
    "RecursionTrace",
    "SchemaError",
    "SignatureId",
    "SignatureMismatch",
    "SizeLimit",
    "Span",
    "Term",
    "Theory",
    "TheoryId",
    "TraceStep",
    "UNDEFINED",
    "UnboundVariable",
    "Undefined",
    "Var",
    "Witness",
    "ZERO",
    "Zero",
    "ZeroNotInSignature",
    "axioms",
    "check_model",
    "classify_def",
    "closed_normal_full",
    "closed_normal_iamd",
    "closed_normal_iamdz",
    "conditional_law",
    "conforms",
    "decide_closed",
    "decide_divisive",
    "decide_iamd",
    "decide_iamdz_gil",
    "deserialize",
    "div_to_inv",
    "eval_punched",
    "eval_total",
    "free_vars",
    "inv_to_div",
    "is_closed",
    "numeral",
    "numeral_value",
    "parse",
    "parse_rational",
    "parse_term",
    "poly_normal",
    "power",
    "render",
    "serialize",
    "split_inverse",
    "substitute",
    "term_from_dict",
    "term_size",
    "term_to_dict",
    "theory",
    "zero_elim",
]

"""Command-line interface.

Subcommands: parse, normalize, eval, decide, defined, translate.
Exit codes: 0 success; 1 a decide verdict of false; 2 usage, parse, or
domain errors; 3 an undefined result when evaluating under a punch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .decide import (
    Counterexample,
    Decision,
    MatchedNormals,
    RecursionTrace,
    decide_closed,
    decide_divisive,
    decide_iamd,
    decide_iamdz_gil,
)
from .evaluate import Carrier, eval_total, parse_rational
from .exceptions import MeadowError, ParseError
from .normalize import (
    DEFAULT_MAX_MONOMIALS,
    closed_normal_full,
    closed_normal_iamd,
    closed_normal_iamdz,
    split_inverse,
    zero_elim,
)
from .partial import Defined, PunchId, classify_def, eval_punched
from .syntax import NumeralStyle, parse, render, term_to_dict
from .terms import SignatureId, Term, Zero, conforms, is_closed
from .theories import TheoryId
from .translate import div_to_inv, inv_to_div

_NORMALIZE_SIGS = ("iamd", "iamdz", "imd", "dmd", "damd", "damdz")

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2
EXIT_UNDEFINED = 3


@dataclass(frozen=True)
class _TheoryChoice:
    """Either a named open-term theory or closed-term decision at a signature."""

    theory: Optional[TheoryId]
    closed_sig: Optional[SignatureId]


def _theory_choice(text: str) -> _TheoryChoice:
    named = {
        "iamd": TheoryId.IAMD,
        "damd": TheoryId.DAMD,
        "ratiaz-gil": TheoryId.RATIAZ_GIL,
        "ratdaz-gil": TheoryId.RATDAZ_GIL,
    }
    if text in named:
        return _TheoryChoice(named[text], None)
    if text.startswith("closed:"):
        sig_name = text.removeprefix("closed:")
        for sig in SignatureId:
            if sig.value == sig_name:
                return _TheoryChoice(None, sig)
        raise argparse.ArgumentTypeError(f"unknown signature {sig_name!r} in {text!r}")
    raise argparse.ArgumentTypeError(
        f"{text!r} is not iamd, damd, ratiaz-gil, ratdaz-gil, or closed:SIG"
    )


def _parse_assignment(text: str, carrier: Carrier) -> dict[str, Fraction]:
    env: dict[str, Fraction] = {}
    if not text:
        return env
    for piece in text.split(","):
        name, sep, value = piece.partition("=")
        if not sep:
            raise ValueError(f"bad assignment {piece!r}; expected name=value")
        env[name.strip()] = parse_rational(value.strip(), carrier)
    return env


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "structured"), default="text", help="output format"
    )
    common.add_argument(
        "--max-monomials",
        type=int,
        default=DEFAULT_MAX_MONOMIALS,
        metavar="N",
        help="abort normalization past this many monomials",
    )
    common.add_argument("--seed", type=int, default=0, metavar="N", help="sampling seed")
    common.add_argument(
        "--numerals",
        choices=("structural", "decimal"),
        default="decimal",
        help="print numerals as decimal literals or spelled out",
    )

    top = argparse.ArgumentParser(
        prog="meadows",
        description="Exact arithmetic, normal forms, and equation deciding "
        "for meadow terms (fields with a totalized inverse, 0^-1 = 0) and "
        "their arithmetical variants without 0 and -.",
        epilog="Grammar: + < (* and /, left associative) < prefix - < postfix "
        "^-1 and ^n; inv(t) is the function form of t^-1; naturals expand to "
        "numerals 0, 1, 1+1, (1+1)+1, ...; identifiers are [a-z][a-z0-9_]*.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="check and echo an expression")
    p.add_argument("expr")
    p.add_argument("--sig", choices=[s.value for s in SignatureId], help="conformance check")

    p = sub.add_parser("normalize", parents=[common], help="normal form of a term")
    p.add_argument("expr")
    p.add_argument("--sig", choices=_NORMALIZE_SIGS, required=True)

    p = sub.add_parser("eval", parents=[common], help="exact evaluation")
    p.add_argument("expr")
    p.add_argument("--assign", default="", metavar="X=Q,...", help="variable assignment")
    p.add_argument("--carrier", choices=[c.value for c in Carrier], default="all")
    p.add_argument("--punch", choices=[p.value for p in PunchId], help="partial semantics")

    p = sub.add_parser("decide", parents=[common], help="decide a term equation")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument(
        "--theory",
        type=_theory_choice,
        required=True,
        metavar="{iamd|damd|ratiaz-gil|ratdaz-gil|closed:SIG}",
    )

    p = sub.add_parser("defined", parents=[common], help="syntactic definedness class")
    p.add_argument("expr")

    p = sub.add_parser("translate", parents=[common], help="between / and ^-1 forms")
    p.add_argument("expr")
    p.add_argument("--to", choices=("inv", "div"), required=True)

    return top


def _emit(args: argparse.Namespace, text: str, structured: dict) -> None:
    if args.format == "structured":
        print(json.dumps(structured))
    else:
        print(text)


def _style(args: argparse.Namespace) -> NumeralStyle:
    return NumeralStyle(args.numerals)


def _cmd_parse(args: argparse.Namespace) -> int:
    term = parse(args.expr).term
    if args.sig is not None:
        sig = SignatureId(args.sig)
        if not conforms(term, sig):
            print(f"error: term does not conform to the {sig.value} signature", file=sys.stderr)
            return EXIT_ERROR
    rendered = render(term, _style(args))
    _emit(args, rendered, {"rendered": rendered, "term": term_to_dict(term)})
    return EXIT_OK


def _cmd_normalize(args: argparse.Namespace) -> int:
    term = parse(args.expr).term
    sig = SignatureId(args.sig)
    mm = args.max_monomials
    if is_closed(term):
        if sig is SignatureId.IAMD:
            normal = closed_normal_iamd(term, mm)
        elif sig is SignatureId.IAMDZ:
            normal = closed_normal_iamdz(term, mm)
        else:
            normal = closed_normal_full(term)
        _emit(
            args,
            normal.render(),
            {
                "kind": "zero" if normal.is_zero else "fraction",
                "numerator": normal.numerator,
                "denominator": normal.denominator,
            },
        )
        return EXIT_OK
    inversive = term
    if sig in (SignatureId.DAMD, SignatureId.DAMDZ):
        inversive = div_to_inv(term)
    elif sig not in (SignatureId.IAMD, SignatureId.IAMDZ):
        print(f"error: no open-term normal form for {sig.value}", file=sys.stderr)
        return EXIT_ERROR
    if sig in (SignatureId.IAMDZ, SignatureId.DAMDZ):
        inversive = zero_elim(inversive)
        if isinstance(inversive, Zero):
            _emit(args, "0", {"kind": "zero", "numerator": 0, "denominator": 1})
            return EXIT_OK
    fraction = split_inverse(inversive, mm)
    _emit(
        args,
        fraction.render(),
        {
            "kind": "poly-fraction",
            "numerator": fraction.numerator.render(),
            "denominator": fraction.denominator.render(),
        },
    )
    return EXIT_OK


def _cmd_eval(args: argparse.Namespace) -> int:
    term = parse(args.expr).term
    if args.punch is not None:
        env = _parse_assignment(args.assign, Carrier.NON_NEGATIVE)
        result = eval_punched(term, env, PunchId(args.punch))
        if isinstance(result, Defined):
            _emit(args, str(result.value), {"defined": True, "value": str(result.value)})
            return EXIT_OK
        _emit(args, "undefined", {"defined": False, "value": None})
        return EXIT_UNDEFINED
    carrier = Carrier(args.carrier)
    env = _parse_assignment(args.assign, carrier)
    value = eval_total(term, env, carrier)
    _emit(args, str(value), {"defined": True, "value": str(value)})
    return EXIT_OK


def _evidence_text(decision: Decision) -> str:
    evidence = decision.evidence
    if isinstance(evidence, MatchedNormals):
        label = "matched normals" if decision.verdict else "distinct normals"
        return f"{label}: {evidence.render()}"
    if isinstance(evidence, Counterexample):
        return f"counterexample: {evidence.render()}"
    if isinstance(evidence, RecursionTrace):
        return f"case split: {evidence.render()}"
    raise TypeError(f"unknown evidence: {evidence!r}")


def _evidence_doc(evidence) -> dict:
    if isinstance(evidence, MatchedNormals):
        return {
            "kind": "normals",
            "lhs": evidence.lhs.render(),
            "rhs": evidence.rhs.render(),
        }
    if isinstance(evidence, Counterexample):
        return {
            "kind": "counterexample",
            "assignment": {v: str(q) for v, q in sorted(evidence.assignment.items())},
            "lhs_value": str(evidence.lhs_value),
            "rhs_value": str(evidence.rhs_value),
        }
    if isinstance(evidence, RecursionTrace):
        return {
            "kind": "case-split",
            "steps": [
                {"case": step.description, "verdict": step.decision.verdict}
                for step in evidence.steps
            ],
        }
    raise TypeError(f"unknown evidence: {evidence!r}")


def _cmd_decide(args: argparse.Namespace) -> int:
    lhs = parse(args.lhs).term
    rhs = parse(args.rhs).term
    choice: _TheoryChoice = args.theory
    mm, seed = args.max_monomials, args.seed
    if choice.closed_sig is not None:
        decision = decide_closed(lhs, rhs, choice.closed_sig)
    elif choice.theory is TheoryId.IAMD:
        decision = decide_iamd(lhs, rhs, mm, seed)
    elif choice.theory is TheoryId.RATIAZ_GIL:
        decision = decide_iamdz_gil(lhs, rhs, mm, seed)
    else:
        assert choice.theory is not None
        decision = decide_divisive(lhs, rhs, choice.theory, mm, seed)
    verdict = "true" if decision.verdict else "false"
    _emit(
        args,
        f"{verdict}\n{_evidence_text(decision)}",
        {"verdict": decision.verdict, "evidence": _evidence_doc(decision.evidence)},
    )
    return EXIT_OK if decision.verdict else EXIT_FALSE


def _cmd_defined(args: argparse.Namespace) -> int:
    term = parse(args.expr).term
    verdict = classify_def(term)
    _emit(args, verdict.value, {"class": verdict.value})
    return EXIT_OK


def _cmd_translate(args: argparse.Namespace) -> int:
    term = parse(args.expr).term
    translated = div_to_inv(term) if args.to == "inv" else inv_to_div(term)
    rendered = render(translated, _style(args))
    _emit(args, rendered, {"rendered": rendered, "term": term_to_dict(translated)})
    return EXIT_OK


_COMMANDS = {
    "parse": _cmd_parse,
    "normalize": _cmd_normalize,
    "eval": _cmd_eval,
    "decide": _cmd_decide,
    "defined": _cmd_defined,
    "translate": _cmd_translate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc} (line {exc.line}, column {exc.column})", file=sys.stderr)
        return EXIT_ERROR
    except (MeadowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Tests for the command-line interface, driven through main()."""

import json
import shutil
import subprocess

import pytest

from meadows.cli import EXIT_ERROR, EXIT_FALSE, EXIT_OK, EXIT_UNDEFINED, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseCommand:
    def test_echoes_canonical_form(self, capsys):
        code, out, _ = run(capsys, "parse", "x *   x^-1")
        assert code == EXIT_OK
        assert out == "x * x^-1\n"

    def test_conformance_accept(self, capsys):
        code, _, _ = run(capsys, "parse", "x + 0", "--sig", "iamdz")
        assert code == EXIT_OK

    def test_conformance_reject(self, capsys):
        code, _, err = run(capsys, "parse", "x + 0", "--sig", "iamd")
        assert code == EXIT_ERROR
        assert "does not conform" in err

    def test_parse_error_reports_position(self, capsys):
        code, _, err = run(capsys, "parse", "x +")
        assert code == EXIT_ERROR
        assert "line 1" in err and "column" in err

    def test_structural_numerals(self, capsys):
        code, out, _ = run(capsys, "parse", "4", "--numerals", "structural")
        assert code == EXIT_OK
        assert out == "1 + 1 + 1 + 1\n"

    def test_structured_output(self, capsys):
        code, out, _ = run(capsys, "parse", "2 * x", "--format", "structured")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["rendered"] == "2 * x"
        assert doc["term"]["op"] == "mul"


class TestNormalizeCommand:
    def test_closed_fraction(self, capsys):
        code, out, _ = run(capsys, "normalize", "2 * 4^-1", "--sig", "iamd")
        assert code == EXIT_OK
        assert out == "1/2\n"

    def test_closed_zero(self, capsys):
        code, out, _ = run(capsys, "normalize", "0^-1", "--sig", "iamdz")
        assert code == EXIT_OK
        assert out == "0\n"

    def test_closed_negative(self, capsys):
        code, out, _ = run(capsys, "normalize", "-(2 * 4^-1)", "--sig", "imd")
        assert code == EXIT_OK
        assert out == "-1/2\n"

    def test_closed_divisive_vanishing_divisor(self, capsys):
        code, out, _ = run(capsys, "normalize", "1 / (1 + -1)", "--sig", "dmd")
        assert code == EXIT_OK
        assert out == "0\n"

    def test_open_polynomial_fraction(self, capsys):
        code, out, _ = run(capsys, "normalize", "x + y^-1", "--sig", "iamd")
        assert code == EXIT_OK
        assert out == "(x*y + 1) / (y)\n"

    def test_open_zero_elimination(self, capsys):
        code, out, _ = run(capsys, "normalize", "x + 0 * y", "--sig", "iamdz")
        assert code == EXIT_OK
        assert out == "(x) / (1)\n"

    def test_open_all_zero(self, capsys):
        code, out, _ = run(capsys, "normalize", "0 * x", "--sig", "iamdz")
        assert code == EXIT_OK
        assert out == "0\n"

    def test_open_divisive(self, capsys):
        code, out, _ = run(capsys, "normalize", "x / y", "--sig", "damd")
        assert code == EXIT_OK
        assert out == "(x) / (y)\n"

    def test_no_open_form_for_full_meadows(self, capsys):
        # "--" lets expressions starting with a minus through argparse.
        code, _, err = run(capsys, "normalize", "--sig", "imd", "--", "-x")
        assert code == EXIT_ERROR
        assert "no open-term normal form" in err

    def test_monomial_guardrail(self, capsys):
        code, _, err = run(
            capsys, "normalize", "(x + 1)^12", "--sig", "iamd", "--max-monomials", "10"
        )
        assert code == EXIT_ERROR
        assert "monomial" in err

    def test_structured_fraction(self, capsys):
        code, out, _ = run(
            capsys, "normalize", "2 * 4^-1", "--sig", "iamd", "--format", "structured"
        )
        assert code == EXIT_OK
        assert json.loads(out) == {"kind": "fraction", "numerator": 1, "denominator": 2}

    def test_structured_poly_fraction(self, capsys):
        code, out, _ = run(
            capsys, "normalize", "x + y^-1", "--sig", "iamd", "--format", "structured"
        )
        doc = json.loads(out)
        assert doc["kind"] == "poly-fraction"
        assert doc["numerator"] == "x*y + 1"
        assert doc["denominator"] == "y"


class TestEvalCommand:
    def test_closed_value(self, capsys):
        code, out, _ = run(capsys, "eval", "1 + 2^-1")
        assert code == EXIT_OK
        assert out == "3/2\n"

    def test_assignment(self, capsys):
        code, out, _ = run(capsys, "eval", "x * y", "--assign", "x=1/2,y=3")
        assert code == EXIT_OK
        assert out == "3/2\n"

    def test_zero_totalized_division(self, capsys):
        code, out, _ = run(capsys, "eval", "3 / 0")
        assert code == EXIT_OK
        assert out == "0\n"

    def test_carrier_rejects_value(self, capsys):
        code, _, err = run(capsys, "eval", "x", "--assign", "x=-1", "--carrier", "nonneg")
        assert code == EXIT_ERROR
        assert "error" in err

    def test_punched_undefined(self, capsys):
        code, out, _ = run(capsys, "eval", "0^-1", "--punch", "inv0")
        assert code == EXIT_UNDEFINED
        assert out == "undefined\n"

    def test_punched_defined(self, capsys):
        code, out, _ = run(capsys, "eval", "0 / 0", "--punch", "divnz0")
        assert code == EXIT_OK
        assert out == "0\n"

    def test_strong_punch_diverges(self, capsys):
        code, out, _ = run(capsys, "eval", "0 / 0", "--punch", "divall0")
        assert code == EXIT_UNDEFINED
        assert out == "undefined\n"

    def test_unbound_variable(self, capsys):
        code, _, err = run(capsys, "eval", "x")
        assert code == EXIT_ERROR
        assert "error" in err

    def test_structured_undefined(self, capsys):
        code, out, _ = run(capsys, "eval", "0^-1", "--punch", "inv0", "--format", "structured")
        assert code == EXIT_UNDEFINED
        assert json.loads(out) == {"defined": False, "value": None}

    def test_bad_assignment_syntax(self, capsys):
        code, _, err = run(capsys, "eval", "x", "--assign", "x:1")
        assert code == EXIT_ERROR
        assert "expected name=value" in err


class TestDecideCommand:
    def test_true_verdict(self, capsys):
        code, out, _ = run(capsys, "decide", "x * x^-1", "1", "--theory", "iamd")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "true"
        assert lines[1].startswith("matched normals:")

    def test_false_verdict_with_counterexample(self, capsys):
        code, out, _ = run(capsys, "decide", "x * x^-1", "1", "--theory", "ratiaz-gil")
        assert code == EXIT_FALSE
        lines = out.splitlines()
        assert lines[0] == "false"
        assert "counterexample" in lines[1]
        assert "x = 0" in lines[1]

    def test_divisive_theory(self, capsys):
        code, out, _ = run(capsys, "decide", "x / x", "1", "--theory", "damd")
        assert code == EXIT_OK

    def test_divisive_gil_theory(self, capsys):
        code, _, _ = run(capsys, "decide", "1 / (1 / x)", "x", "--theory", "ratdaz-gil")
        assert code == EXIT_OK

    def test_closed_decision(self, capsys):
        code, _, _ = run(capsys, "decide", "2 * 3^-1", "4 * 6^-1", "--theory", "closed:iamd")
        assert code == EXIT_OK

    def test_closed_false(self, capsys):
        code, out, _ = run(capsys, "decide", "0^-1", "1", "--theory", "closed:iamdz")
        assert code == EXIT_FALSE
        assert "distinct normals" in out

    def test_case_split_evidence(self, capsys):
        code, out, _ = run(
            capsys,
            "decide",
            "(x * (x + y)) * (x * (x + y))^-1",
            "x * x^-1",
            "--theory",
            "ratiaz-gil",
        )
        assert code == EXIT_OK
        assert "case split" in out

    def test_structured_verdict(self, capsys):
        code, out, _ = run(
            capsys, "decide", "x", "y", "--theory", "iamd", "--format", "structured"
        )
        assert code == EXIT_FALSE
        doc = json.loads(out)
        assert doc["verdict"] is False
        assert doc["evidence"]["kind"] == "counterexample"
        assert set(doc["evidence"]["assignment"]) == {"x", "y"}

    def test_unknown_theory_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["decide", "x", "x", "--theory", "nope"])
        assert info.value.code == 2

    def test_signature_error(self, capsys):
        code, _, err = run(capsys, "decide", "--theory", "iamd", "--", "-x", "x")
        assert code == EXIT_ERROR
        assert "error" in err


class TestDefinedCommand:
    def test_nonzero(self, capsys):
        code, out, _ = run(capsys, "defined", "2^-1")
        assert (code, out) == (EXIT_OK, "nz\n")

    def test_defined_only(self, capsys):
        code, out, _ = run(capsys, "defined", "0 * x")
        assert (code, out) == (EXIT_OK, "def\n")

    def test_outside(self, capsys):
        code, out, _ = run(capsys, "defined", "0^-1")
        assert (code, out) == (EXIT_OK, "outside\n")

    def test_rejects_divisive_terms(self, capsys):
        code, _, err = run(capsys, "defined", "x / y")
        assert code == EXIT_ERROR


class TestTranslateCommand:
    def test_to_inversive(self, capsys):
        code, out, _ = run(capsys, "translate", "x / y", "--to", "inv")
        assert code == EXIT_OK
        assert out == "x * y^-1\n"

    def test_to_divisive(self, capsys):
        code, out, _ = run(capsys, "translate", "inv(x)", "--to", "div")
        assert code == EXIT_OK
        assert out == "1 / x\n"

    def test_mixed_signature(self, capsys):
        code, _, err = run(capsys, "translate", "x^-1", "--to", "inv")
        assert code == EXIT_ERROR
        assert "error" in err


class TestEntryPoint:
    def test_console_script_installed(self):
        exe = shutil.which("meadows")
        assert exe is not None
        done = subprocess.run(
            [exe, "eval", "2 + 2^-1"], capture_output=True, text=True, timeout=60
        )
        assert done.returncode == 0
        assert done.stdout == "5/2\n"

    def test_missing_subcommand_is_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2

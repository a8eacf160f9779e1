import json
from fractions import Fraction

import jsonschema
import pytest

from qdeform.cli import main, parse_monomial
from qdeform.algebra import Context, LaurentPoly, q, var
from qdeform.identities import REPORT_SCHEMA, VerificationConfig, registry


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list_all(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert len(out.strip().splitlines()) == len(registry())


def test_list_prefix(capsys):
    code, out, _ = run(capsys, "list", "mehler.", "--json")
    assert code == 0
    assert len(json.loads(out)) == 4


def test_list_unknown_prefix(capsys):
    code, out, _ = run(capsys, "list", "nothing.here")
    assert code == 0 and out == ""


def test_expand_rn(capsys):
    code, out, _ = run(capsys, "expand", "rn", "n=2")
    assert code == 0 and out.strip() == "u*x^2 + (1+q)*x*y + v*y^2"


def test_expand_hn(capsys):
    assert run(capsys, "expand", "hn", "n=0")[1].strip() == "1"
    assert run(capsys, "expand", "hn", "n=2")[1].strip() == "1 + (1+q)*x + x^2"


def test_expand_exton_needs_scale(capsys):
    code, _, err = run(capsys, "expand", "exton", "n=1")
    assert code == 3 and "scale" in err
    code, out, _ = run(capsys, "expand", "exton", "n=1", "--scale", "2")
    assert code == 0 and out.strip() == "x + y"


def test_expand_series(capsys):
    code, out, _ = run(capsys, "expand", "eq_deformed", "u=0", "--order", "3")
    assert code == 0 and out.strip().startswith("1 + 1/(1-q)*z")
    code, out, _ = run(capsys, "expand", "phi", "upper=a", "lower=", "u=1", "--order", "2")
    assert code == 0 and "z^2" in out


def test_expand_usage_errors(capsys):
    assert run(capsys, "expand", "rn")[0] == 2
    assert run(capsys, "expand", "rn", "n=-1")[0] == 2
    assert run(capsys, "expand", "rn", "n=2", "x=1+y")[0] == 2
    assert run(capsys, "expand", "nonsense")[0] == 2


def test_verify_one_json(capsys):
    code, out, _ = run(capsys, "verify", "genfunc.qbinomial", "--order", "8", "--json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1 and reports[0]["status"] == "verified"
    jsonschema.validate(reports[0], REPORT_SCHEMA)


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "no.such.id")
    assert code == 2 and "no.such.id" in err


def test_verify_family_override(capsys):
    code, out, _ = run(capsys, "verify", "pascal.both", "--family", "n=0:4")
    assert code == 0 and "n=0..4" in out
    assert run(capsys, "verify", "pascal.both", "--family", "n=4:0")[0] == 2
    assert run(capsys, "verify", "pascal.both", "--family", "bad")[0] == 2


def test_verify_prefix_text_summary(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--prefix", "exton_op.", "--scale", "1", "--order", "4")
    assert code == 0
    assert out.strip().splitlines()[-1] == "verified=0 mismatch=0 error=0 skipped=7 total=7"


def test_verify_errata_inverts_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--errata", "--prefix", "errata.rr_op.")
    assert code == 0 and "mismatch=2" in out
    code, _, _ = run(capsys, "verify", "errata.rr_op.phi45")
    assert code == 2  # errata ids live in their own registry


def test_bad_flags(capsys):
    assert run(capsys, "verify", "--order", "-1")[0] == 2
    assert run(capsys, "verify", "--jobs", "0")[0] == 2
    assert run(capsys)[0] == 2


def test_parse_monomial():
    ctx = Context(2)
    assert parse_monomial("-2*q^3*x", Context(1)) == -2 * q(3) * var("x")
    assert parse_monomial("q^1/2", ctx) == LaurentPoly.qpow(Fraction(1, 2), ctx)
    assert parse_monomial("0", Context(1)) == 0


def test_config_rejects_negative_order():
    with pytest.raises(ValueError):
        VerificationConfig(order=-1)

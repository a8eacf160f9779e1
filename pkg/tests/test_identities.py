from pathlib import Path

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdeform.identities import (
    REPORT_SCHEMA,
    UnknownIdentity,
    VerificationConfig,
    errata_registry,
    lookup,
    perturbed_qbinomial,
    registry,
    select,
    summarize,
    verify,
    verify_all,
    verify_spec,
)

SOURCE = Path(__file__).resolve().parents[1] / "paper.md"

# cheap series entries for the order-sweeping properties
CHEAP = ["qbinomial.theorem", "sokal.functional_eq", "genfunc.qbinomial", "genfunc.h", "hn.generating",
         "op.on_exp", "phi.deformed_reduction", "exp.specializations"]


def _strip(report):
    out = report.to_json()
    out.pop("elapsed_ms")
    return out


def test_registry_shape():
    specs = registry()
    assert len(specs) >= 45
    ids = [s.id for s in specs]
    assert len(ids) == len(set(ids))
    assert all(s.anchor.strip() for s in specs)


def test_scale_two_entries_are_the_exton_family():
    for s in registry():
        assert (s.required_scale == 2) == ("exton" in s.id), s.id


@pytest.mark.skipif(not SOURCE.exists(), reason="source text not present")
def test_anchors_are_verbatim():
    text = SOURCE.read_text()
    missing = [s.id for s in registry() + errata_registry() if s.anchor not in text]
    assert missing == []


def test_prefix_filter():
    rn = select("rn.")
    assert rn and all(s.id.startswith("rn.") for s in rn)
    assert len(select("mehler.")) == 4


def test_empty_filter():
    reports = verify_all(VerificationConfig(order=6), prefix="no.such.")
    assert reports == []
    assert summarize(reports) == {"verified": 0, "mismatch": 0, "error": 0, "skipped": 0, "total": 0}


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        lookup("no.such.id")
    with pytest.raises(UnknownIdentity):
        verify("no.such.id")


def test_generalized_qbinomial_verifies():
    r = verify("genfunc.qbinomial", VerificationConfig(order=8))
    assert r.status == "verified" and r.order == 8


def test_rn_qdiff_verifies():
    r = verify("rn.qdiff", VerificationConfig(families={"n": (1, 8)}))
    assert r.status == "verified"
    assert r.family_ranges == {"n": [1, 8]}


def test_heine_records_substitution():
    r = verify("heine.generalized", VerificationConfig(order=4))
    assert r.status == "verified"
    assert r.substitutions


def test_exton_entries_skip_at_scale_one():
    reports = verify_all(VerificationConfig(order=4, scale=1), prefix="exton_op.")
    assert reports and all(r.status == "skipped" and r.reason for r in reports)


def test_perturbed_builder_mismatches():
    r = verify_spec(perturbed_qbinomial(), VerificationConfig(order=8))
    assert r.status == "mismatch"
    m = r.first_mismatch
    assert m["monomial"] and m["lhs"] != m["rhs"]


def test_errata_all_mismatch():
    reports = verify_all(VerificationConfig(order=6), errata=True, jobs=2)
    assert len(reports) == len(errata_registry())
    bad = [r.id for r in reports if r.status != "mismatch"]
    assert bad == []
    for r in reports:
        main_id = r.id[len("errata."):]
        assert main_id.startswith(("dq.", "phi21.", "rn.", "op.", "mehler.", "rogers.", "rr_op.", "exton_op."))


def test_reports_validate_against_schema():
    for ident in ["genfunc.qbinomial", "pascal.both", "exton_op.on_exp"]:
        jsonschema.validate(verify(ident, VerificationConfig(order=5)).to_json(), REPORT_SCHEMA)
    jsonschema.validate(verify_spec(perturbed_qbinomial()).to_json(), REPORT_SCHEMA)


def test_text_report_has_no_timing():
    r = verify("genfunc.qbinomial", VerificationConfig(order=6))
    assert "verified to order 6" in r.text()
    assert "ms" not in r.text()


def test_parallel_run_keeps_registry_order():
    cfg = VerificationConfig(order=4)
    serial = verify_all(cfg, prefix="op.")
    parallel = verify_all(cfg, prefix="op.", jobs=3)
    assert [_strip(r) for r in serial] == [_strip(r) for r in parallel]


@given(st.sampled_from(CHEAP), st.integers(1, 7))
@settings(max_examples=12)
def test_monotone_in_order(ident, order):
    assert verify(ident, VerificationConfig(order=order)).status == "verified"
    assert verify(ident, VerificationConfig(order=order - 1)).status == "verified"


@given(st.sampled_from(CHEAP + ["pascal.both", "rn.recurrences"]), st.integers(2, 6))
@settings(max_examples=10)
def test_deterministic(ident, order):
    cfg = VerificationConfig(order=order)
    assert _strip(verify(ident, cfg)) == _strip(verify(ident, cfg))


def test_perturbed_control_is_deterministic():
    cfg = VerificationConfig(order=6)
    a = verify_spec(perturbed_qbinomial(), cfg)
    b = verify_spec(perturbed_qbinomial(), cfg)
    assert _strip(a) == _strip(b)

"""Acceptance criteria 1-14, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line; the lines are also
collected and repeated in the terminal summary.
"""

import json
import subprocess
import sys
import time

import jsonschema

from qdeform.identities import (
    REPORT_SCHEMA,
    VerificationConfig,
    lookup,
    perturbed_qbinomial,
    select,
    verify_spec,
)

RESULTS = {}


def record(n, ok, detail):
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)


def run_criterion(n, title, specs, limit, config=None, orders=None):
    """Verify ``specs`` (id -> order override or None) within ``limit`` seconds."""
    config = config or VerificationConfig(scale=2)
    start = time.perf_counter()
    reports = []
    for spec in specs:
        cfg = config
        if orders and spec.id in orders:
            cfg = VerificationConfig(order=orders[spec.id], scale=config.scale, families=config.families)
        reports.append(verify_spec(spec, cfg))
    elapsed = time.perf_counter() - start
    bad = [f"{r.id}:{r.status}" for r in reports if r.status != "verified"]
    ok = not bad and elapsed < limit and bool(reports)
    detail = f"{title}: {len(reports) - len(bad)}/{len(reports)} verified in {elapsed:.2f}s (limit {limit}s)"
    if bad:
        detail += "  failing: " + ", ".join(bad)
    record(n, ok, detail)
    assert not bad, bad
    assert elapsed < limit
    return reports


def ids(*names):
    return [lookup(n) for n in names]


def test_c01_kernel_identities():
    specs = ids("pochhammer.iden1", "pochhammer.iden2", "pochhammer.iden3", "pochhammer.iden4",
                "pochhammer.qinverse", "pascal.both", "pascal.qinverse_rep", "binomial.exponents")
    reports = run_criterion(1, "kernel identity suite", specs, 5)
    for r in reports:
        for lo, hi in r.family_ranges.values():
            assert lo == 0 and hi >= 8


def test_c02_qbinomial_theorem():
    run_criterion(2, "q-binomial theorem, order 10", ids("qbinomial.theorem"), 5,
                  orders={"qbinomial.theorem": 10})


def test_c03_sokal_and_kder():
    specs = ids("sokal.functional_eq", "dq.kder_basic")
    reports = run_criterion(3, "functional equation and D_q^k e_q, order 10", specs, 5,
                            orders={"sokal.functional_eq": 10, "dq.kder_basic": 10})
    assert reports[1].family_ranges == {"k": [0, 4]}


def test_c04_leibniz():
    reports = run_criterion(4, "Leibniz rule, 25 seeded trials", ids("dq.leibniz"), 10)
    assert reports[0].instances == 25


def test_c05_qdifference_and_limit_equation():
    run_criterion(5, "2Phi1 q-difference (order 10) and limit equation (order 8)",
                  ids("phi21.qdiff", "gauss2F1.limit_eq"), 30,
                  orders={"phi21.qdiff": 10, "gauss2F1.limit_eq": 8})


def test_c06_rn_suite():
    specs = ids("rn.recurrences", "rn.shift", "rn.qdiff", "rn.limit") + select("rn.hyper_rep.")
    reports = run_criterion(6, "R_n recurrences, shift, q-difference, representations, limit", specs, 60)
    ranges = {r.id: r.family_ranges for r in reports}
    assert ranges["rn.recurrences"] == {"n": [0, 10]}
    assert ranges["rn.qdiff"] == {"n": [1, 8]}
    assert ranges["rn.limit"] == {"n": [8, 10]}
    assert len([r for r in reports if r.id.startswith("rn.hyper_rep.")]) == 6


def test_c07_operator_suite():
    run_criterion(7, "operator suite, order 6", select("op."), 120, config=VerificationConfig(order=6))


def test_c08_generating_functions():
    specs = [s for s in select("genfunc.") if not s.id.startswith("genfunc.rr_products")]
    orders = {s.id: 6 for s in specs}
    orders["genfunc.qbinomial"] = 8
    run_criterion(8, "generating functions (order 8 / 6)", specs, 60, orders=orders)


def test_c09_rogers_ramanujan_products():
    reports = run_criterion(9, "Rogers-Ramanujan products to q-order 30", select("genfunc.rr_products."), 10)
    assert all(r.order >= 30 for r in reports)


def test_c10_heine():
    run_criterion(10, "generalized Heine and corollaries, order 6", select("heine."), 120,
                  config=VerificationConfig(order=6))


def test_c11_mehler_rogers():
    run_criterion(11, "Mehler and Rogers families, order 6", select("mehler.") + select("rogers."), 300,
                  config=VerificationConfig(order=6))


def test_c12_rr_and_exton_operators():
    run_criterion(12, "Rogers-Ramanujan and Exton operator corollaries, scale 2",
                  select("rr_op.") + select("exton_op."), 300, config=VerificationConfig(order=6, scale=2))


def _cli_json():
    proc = subprocess.run([sys.executable, "-m", "qdeform", "verify", "--all", "--order", "6", "--json",
                           "--jobs", "4"], capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout


def test_c13_cli_verify_all():
    start = time.perf_counter()
    code1, out1 = _cli_json()
    code2, out2 = _cli_json()
    elapsed = time.perf_counter() - start
    problems = []
    if code1 != 0 or code2 != 0:
        problems.append(f"exit codes {code1},{code2}")
    a, b = json.loads(out1), json.loads(out2)
    for r in a:
        try:
            jsonschema.validate(r, REPORT_SCHEMA)
        except jsonschema.ValidationError as exc:
            problems.append(f"{r.get('id')}: {exc.message}")
        if r["status"] not in ("verified", "skipped") or (r["status"] == "skipped" and not r["reason"]):
            problems.append(f"{r['id']}:{r['status']}")
    strip = lambda rs: [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in rs]
    if strip(a) != strip(b):
        problems.append("runs differ")
    counts = {s: sum(r["status"] == s for r in a) for s in ("verified", "skipped")}
    record(13, not problems, f"CLI verify --all --order 6 twice: {counts['verified']} verified, "
                             f"{counts['skipped']} skipped, identical JSON, {elapsed:.1f}s"
           + (("  problems: " + "; ".join(problems)) if problems else ""))
    assert not problems


def test_c14_negative_control():
    r = verify_spec(perturbed_qbinomial(), VerificationConfig(order=8))
    m = r.first_mismatch
    ok = r.status == "mismatch" and bool(m and m["monomial"])
    where = f"at {m['monomial']}: lhs={m['lhs']} rhs={m['rhs']}" if m else "no mismatch reported"
    record(14, ok, f"perturbed builder gives {r.status} {where}")
    assert ok

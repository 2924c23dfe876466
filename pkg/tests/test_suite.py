"""Spec parsing, report rendering, determinism, and the golden file."""

import json
import pathlib

import pytest

from wresverify.suite import (CHECK_NAMES, SCHEMA_VERSION, SpecError,
                              SuiteSpec, CheckRecord, VerificationReport,
                              exit_code, parse_spec, render_report,
                              run_suite)

GOLDEN = pathlib.Path(__file__).parent / "golden" / "default_report.json"


def test_parse_defaults():
    assert parse_spec("") == SuiteSpec()
    assert parse_spec("# only a comment\n\n") == SuiteSpec()


def test_parse_example():
    spec = parse_spec("family = dirac\nchecks = [cases, psi]")
    assert spec.family == "dirac"
    assert spec.checks == ("cases", "psi")


def test_parse_full():
    text = """
    family = signature   # one family only
    checks = [oracle, identities]
    oracle_rank = 3
    seed = 42
    output = md
    """
    spec = parse_spec(text)
    assert spec.family == "signature"
    # registry order is normalized regardless of spelling order
    assert spec.checks == ("identities", "oracle")
    assert spec.oracle_rank == 3
    assert spec.seed == 42
    assert spec.output == "markdown"


def test_parse_errors_have_positions_and_suggestions():
    with pytest.raises(SpecError) as e:
        parse_spec("family = diracc")
    assert e.value.line == 1
    assert "dirac" in str(e.value)

    with pytest.raises(SpecError) as e:
        parse_spec("famly = dirac")
    assert "did you mean 'family'" in str(e.value)

    with pytest.raises(SpecError) as e:
        parse_spec("checks = [cases, nonsense]")
    assert "cases" not in e.value.reason or "nonsense" in e.value.reason

    with pytest.raises(SpecError) as e:
        parse_spec("family = dirac\nfamily = both")
    assert e.value.line == 2 and "duplicate" in e.value.reason

    with pytest.raises(SpecError):
        parse_spec("checks = cases")          # not a bracketed list
    with pytest.raises(SpecError):
        parse_spec("seed = -1")
    with pytest.raises(SpecError):
        parse_spec("oracle_rank = zero")
    with pytest.raises(SpecError):
        parse_spec("just some words")


def test_render_empty_report():
    rep = VerificationReport(SuiteSpec(checks=()), (), 0.0)
    doc = json.loads(render_report(rep, "json"))
    assert doc["version"] == SCHEMA_VERSION
    assert doc["summary"] == {"total": 0, "passed": 0, "failed": 0,
                              "flags": 0, "all_match": True}
    assert doc["records"] == []


def test_render_failing_record():
    rec = CheckRecord("cases", "x", "1", "2", False)
    rep = VerificationReport(SuiteSpec(checks=("cases",)), (rec,), 0.0)
    doc = json.loads(render_report(rep, "json"))
    assert doc["summary"]["all_match"] is False
    assert exit_code(rep) == 1
    md = render_report(rep, "markdown")
    assert "FAIL" in md


def test_wall_time_excluded_from_rendering():
    rec = CheckRecord("cases", "x", "1", "1", True)
    a = VerificationReport(SuiteSpec(checks=("cases",)), (rec,), 1.23)
    b = VerificationReport(SuiteSpec(checks=("cases",)), (rec,), 9.87)
    assert render_report(a, "json") == render_report(b, "json")


def test_internal_errors_become_failed_records(monkeypatch):
    from wresverify import suite as suite_mod

    def boom(spec):
        raise RuntimeError("engine exploded")

    monkeypatch.setitem(suite_mod._REGISTRY, "identities", boom)
    rep = run_suite(SuiteSpec(checks=("identities",)))
    assert not rep.all_match
    assert rep.records[0].error.startswith("RuntimeError")


def test_single_check_run_is_green():
    rep = run_suite(SuiteSpec(family="dirac", checks=("psi",)))
    assert rep.all_match
    assert {r.check for r in rep.records} == {"psi"}


def test_flags_are_warnings_not_failures():
    rep = run_suite(SuiteSpec(family="signature",
                              checks=("interior", "theorem57")))
    assert rep.all_match
    assert rep.flag_count > 0
    assert exit_code(rep) == 0


def test_golden_file_regression():
    rep = run_suite(SuiteSpec())
    assert render_report(rep, "json") == GOLDEN.read_text()

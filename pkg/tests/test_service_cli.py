"""HTTP service endpoints and the command-line front end."""

import json

import pytest
from fastapi.testclient import TestClient

from wresverify.cli import main
from wresverify.service import app
from wresverify.suite import CHECK_NAMES, SCHEMA_VERSION

client = TestClient(app)


def test_health():
    r = client.get("/health")
    assert r.status_code == 200 and r.text == "ok"


def test_checks_endpoint():
    r = client.get("/checks")
    assert r.status_code == 200
    body = r.json()
    assert body["version"] == SCHEMA_VERSION
    assert body["checks"] == list(CHECK_NAMES)
    assert body["defaults"]["oracle_rank"] == 2


def test_verify_with_spec_text():
    r = client.post("/verify", json={
        "spec_text": "family = dirac\nchecks = [identities, psi]\n"})
    assert r.status_code == 200
    body = r.json()
    assert body["summary"]["all_match"] is True
    assert body["exit_code"] == 0
    assert body["spec"]["family"] == "dirac"
    rendered = json.loads(body["rendered"])
    assert rendered["summary"] == body["summary"]


def test_verify_with_fields():
    r = client.post("/verify", json={"family": "signature",
                                     "checks": ["psi"], "output": "md"})
    assert r.status_code == 200
    body = r.json()
    assert body["summary"]["all_match"] is True
    assert body["rendered"].startswith("# Verification report")


def test_verify_rejects_bad_spec_text():
    r = client.post("/verify", json={"spec_text": "famly = dirac"})
    assert r.status_code == 422
    detail = r.json()["detail"]
    assert detail["line"] == 1 and "family" in detail["reason"]


def test_verify_rejects_bad_fields():
    assert client.post("/verify", json={"family": "klein"}).status_code \
        == 422
    assert client.post("/verify",
                       json={"checks": ["nope"]}).status_code == 422
    assert client.post("/verify",
                       json={"oracle_rank": 0}).status_code == 422


def test_cli_list_checks(capsys):
    assert main(["--list-checks"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == list(CHECK_NAMES)


def test_cli_in_process_run(capsys):
    code = main(["--family", "dirac", "--only", "identities,psi",
                 "--format", "json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["summary"]["all_match"] is True
    assert doc["spec"]["checks"] == ["identities", "psi"]


def test_cli_markdown(capsys):
    assert main(["--family", "dirac", "--only", "psi",
                 "--format", "md"]) == 0
    assert capsys.readouterr().out.startswith("# Verification report")


def test_cli_spec_file(tmp_path, capsys):
    f = tmp_path / "spec.txt"
    f.write_text("family = dirac\nchecks = [psi]\noutput = json\n")
    assert main(["--spec", str(f)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["spec"]["family"] == "dirac"


def test_cli_usage_errors(capsys):
    assert main(["--only", "bogus"]) == 2
    assert "unknown check" in capsys.readouterr().err
    assert main(["--spec", "/nonexistent/path"]) == 2
    f_err = capsys.readouterr().err
    assert "cannot read" in f_err
    assert main(["--seed", "-4"]) == 2


def test_cli_spec_file_parse_error(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("family = diracc\n")
    assert main(["--spec", str(f)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_cli_server_mode(monkeypatch, capsys):
    # route the thin client through the in-process test app
    import httpx

    def fake_post(url, json=None, timeout=None):
        assert url.endswith("/verify")
        return client.post("/verify", json=json)

    monkeypatch.setattr(httpx, "post", fake_post)
    code = main(["--server", "http://example.test", "--family", "dirac",
                 "--only", "psi"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["summary"]["all_match"] is True


def test_cli_server_unreachable(capsys):
    code = main(["--server", "http://127.0.0.1:1", "--only", "identities"])
    assert code == 2
    assert "cannot reach" in capsys.readouterr().err

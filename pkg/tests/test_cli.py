"""CLI surface: subcommands, formats, exit codes (0 ok / 1 fail / 2 usage)."""

import json

import pytest

from goeritz.cli import main
from goeritz.verify import save_certificate


def test_validate_generators(capsys):
    assert main(["validate-generators", "--selftest", "50", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "accepted sign: -1" in out
    assert "validate-generators: ok" in out


def test_validate_json(capsys):
    assert main(["validate-generators", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"]
    assert payload["library"]["accepted_sign"] == -1


def test_apply(capsys):
    assert main(["apply", "T_a1", "b1"]) == 0
    assert capsys.readouterr().out.strip() == "b1 a1"
    assert main(["apply", "D_omega^2 D_omega^-2", "a1 b1"]) == 0
    assert capsys.readouterr().out.strip() == "a1 b1"
    assert main(["apply", "T_a1^-1 T_a1", "b1"]) == 0
    assert capsys.readouterr().out.strip() == "b1"
    # the empty expression is the identity mapping class
    assert main(["apply", "", "a1"]) == 0
    assert capsys.readouterr().out.strip() == "a1"


def test_validate_inject_broken(capsys):
    assert main(["validate-generators", "--inject-broken", "T_a1"]) == 1
    assert "FAIL" in capsys.readouterr().out
    assert main(["validate-generators", "--inject-broken", "T_zz"]) == 2


def test_apply_parse_errors(capsys):
    assert main(["apply", "D_unknown", "a1"]) == 2
    assert main(["apply", "T_a1", "z9"]) == 2


def test_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["discover", "D_sigma"])
    assert e.value.code == 2


def test_discover_spin(capsys):
    assert main(["discover", "D_nu", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["candidates"]) == 5
    assert payload["profile"]["name"] == "D_nu"


def test_check_and_lemma_against_certificate(tmp_path, capsys, verdict):
    cert_path = tmp_path / "cert.json"
    save_certificate(verdict["cert"], str(cert_path))

    assert main(["check", str(cert_path)]) == 0
    assert "check: ok" in capsys.readouterr().out

    assert main(["verify-lemma", "--cert", str(cert_path)]) == 0
    out = capsys.readouterr().out
    assert "lemma: ok" in out

    # apply can name the discovered generators once a certificate exists
    assert main(["apply", "D_theta", "a2", "--cert", str(cert_path)]) == 0
    assert capsys.readouterr().out.strip() == "b1 a1^-1 b1^-1 a2"


def test_verify_theorem_writes_certificate(tmp_path, capsys):
    # the full pipeline through the CLI: --out holds the certificate,
    # the summary stays on stdout
    cert_path = tmp_path / "cert.json"
    assert main(["verify-theorem", "--out", str(cert_path)]) == 0
    out = capsys.readouterr().out
    assert "final word:" in out
    assert "certificate written to" in out
    with open(cert_path) as fh:
        cert = json.load(fh)
    assert cert["format"].startswith("goeritz-certificate/")
    assert cert["theorem"]["final_word"].split()
    assert main(["check", str(cert_path)]) == 0
    assert "check: ok" in capsys.readouterr().out


def test_check_tampered_certificate(tmp_path, capsys, verdict):
    bad = json.loads(json.dumps(verdict["cert"]))
    lines = bad["models"]["D_nu"]["images"].splitlines()
    lines[3] = lines[3] + " a1"
    bad["models"]["D_nu"]["images"] = "\n".join(lines)
    p = tmp_path / "tampered.json"
    with open(p, "w") as fh:
        json.dump(bad, fh)
    assert main(["check", str(p)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_missing_certificate_is_usage_error():
    assert main(["check", "/no/such/file.json"]) == 2

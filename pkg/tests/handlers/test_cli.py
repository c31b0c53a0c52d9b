# tests/handlers/test_cli.py

import json

import pytest

from catalog.behaviors import constant_behavior
from catalog.scenarios import bell_scenario
import cli
from cli import config_from_args, build_parser, main
from exceptions import CertificateError
from models import CheckTest, Command, Convention, DeriveOperation
from scenario.serialization import behavior_to_payload, canonical_json, scenario_to_payload


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def _write(path, data):
    path.write_text(canonical_json(data))
    return str(path)


def _constant_bell_document(tmp_path):
    s = bell_scenario(3)
    return _write(
        tmp_path / "constant.json",
        {
            "scenario": scenario_to_payload(s).model_dump(mode="json"),
            "behavior": behavior_to_payload(constant_behavior(s)).model_dump(mode="json"),
        },
    )


def test_generate_scenario(capsys):
    code, data = run(capsys, "generate", "ncycle:4")
    assert code == 0
    assert data["measurements"] == ["1", "2", "3", "4"]
    assert len(data["contexts"]) == 4
    assert data["outcomes"] == [-1, 1]


def test_output_is_byte_stable(capsys):
    main(["generate", "i3322-ext"])
    first = capsys.readouterr().out
    main(["generate", "i3322-ext"])
    assert capsys.readouterr().out == first


def test_generate_writes_to_out(tmp_path, capsys):
    out = tmp_path / "box.json"
    assert main(["generate", "pr-box:4", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    data = json.loads(out.read_text())
    assert set(data) == {"scenario", "behavior"}
    assert data["behavior"]["1,2"] == {"-1,-1": "1/2", "1,1": "1/2"}


def test_generated_behavior_feeds_back_into_check(tmp_path, capsys):
    out = tmp_path / "box.json"
    main(["generate", "pr-box:4", "--out", str(out)])
    code, verdict = run(capsys, "check", "--scenario", str(out), "--behavior", str(out))
    assert code == 3
    assert verdict["test"] == "ncycle"
    assert verdict["status"] == "extended_contextual"
    assert (verdict["value"], verdict["threshold"]) == ("8/1", "6/1")


def test_check_with_the_oracle(capsys):
    code, verdict = run(
        capsys, "check", "--scenario", "ncycle:3", "--behavior", "pr-box:3", "--test", "oracle"
    )
    assert code == 3
    assert verdict["test"] == "oracle"
    assert "farkas" in verdict["certificate"]


def test_check_peres_mermin(capsys):
    code, verdict = run(
        capsys, "check", "--scenario", "peres-mermin", "--behavior", "pm-quantum", "--test", "pm"
    )
    assert code == 3
    assert (verdict["value"], verdict["threshold"]) == ("6/1", "4/1")


def test_check_lifts_base_inequalities(tmp_path, capsys):
    doc = _constant_bell_document(tmp_path)
    code, verdict = run(
        capsys, "check", "--scenario", doc, "--behavior", doc, "--test", "ineq", "--ineq", "i3322"
    )
    assert code == 0
    assert verdict["status"] == "undecided"
    assert (verdict["value"], verdict["threshold"]) == ("10/1", "14/1")


@pytest.mark.parametrize(
    "argv, error",
    [
        (["check", "--scenario", "ncycle:5", "--behavior", "pr-box:4"], "SelectorError"),
        (["check", "--scenario", "ncycle:4", "--behavior", "i3322"], "SelectorError"),
        (["generate", "ncycle:2"], "SelectorError"),
        (["derive", "--ineq", "chained:2", "--op", "contract"], "DerivationError"),
        (["derive", "--ineq", "chained:2"], "DerivationError"),
    ],
)
def test_invalid_input_exits_with_2(capsys, argv, error):
    code, report = run(capsys, *argv)
    assert code == 2
    assert report["success"] is False
    assert report["errorType"] == error


def test_validate(tmp_path, capsys):
    doc = _constant_bell_document(tmp_path)
    code, report = run(capsys, "validate", "--scenario", doc, "--behavior", doc)
    assert code == 0
    assert report["valid"] is True

    data = json.loads(open(doc).read())
    data["behavior"]["A1,B1"] = {"1,1": "1/2"}
    broken = _write(tmp_path / "broken.json", data)
    code, report = run(capsys, "validate", "--scenario", broken, "--behavior", broken)
    assert code == 2
    assert report["valid"] is False


def test_derive_extend(capsys):
    code, data = run(capsys, "derive", "--ineq", "i3322", "--op", "extend", "--scenario", "bell:3")
    assert code == 0
    assert data["bound"] == "14/1"
    assert data["trace"][-1] == "extend:couplings=10:+10/1"


def test_derive_chain_through_files(tmp_path, capsys):
    zo = tmp_path / "zo.json"
    assert main(["derive", "--ineq", "chained:2", "--to-zo", "--out", str(zo)]) == 0
    data = json.loads(zo.read_text())
    assert data["convention"] == "zo"
    assert data["bound"] == "0/1"

    code, data = run(
        capsys, "derive", "--ineq", str(zo), "--op", "contract", "--edge", "A1|B1", "--verify"
    )
    assert code == 0
    assert "A1+B1" in data["graph"]["vertices"]
    assert data["trace"][-1].startswith("contract:")


def test_verify_rejects_unsound_results(tmp_path, capsys):
    main(["generate", "chained:2"])
    data = json.loads(capsys.readouterr().out)
    data["bound"] = "1/1"
    path = _write(tmp_path / "tight.json", data)
    code, report = run(capsys, "derive", "--ineq", path, "--to-zo", "--verify")
    assert code == 2
    assert report["errorType"] == "DerivationError"
    assert "not valid" in report["errorMessage"]


def test_config_from_args(monkeypatch):
    monkeypatch.setenv("CONTEXTCUT_LIMIT", "12")
    parser = build_parser()

    config = config_from_args(parser.parse_args(["check", "--scenario", "s", "--behavior", "b"]))
    assert config.test is None
    assert config.limits.vertices == 12

    config = config_from_args(
        parser.parse_args(
            ["check", "--scenario", "s", "--behavior", "b", "--test", "ineq:x.json", "--limit-vertices", "9"]
        )
    )
    assert config.test == CheckTest.INEQ
    assert config.inequality == "x.json"
    assert config.limits.vertices == 9

    config = config_from_args(parser.parse_args(["derive", "--ineq", "i3322", "--to-pm1"]))
    assert config.operation == DeriveOperation.CONVERT
    assert config.params["to"] == Convention.PM1.value


def test_certificate_failures_are_not_input_errors(monkeypatch, capsys):
    def broken_check(config):
        raise CertificateError("Simplex returned an invalid Farkas certificate")

    monkeypatch.setitem(cli.HANDLERS, Command.CHECK, broken_check)
    code, report = run(capsys, "check", "--scenario", "ncycle:4", "--behavior", "pr-box:4")
    assert code == 4
    assert report["errorType"] == "CertificateError"

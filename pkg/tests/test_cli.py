"""Command-line interface: exit codes, JSON schema conformance, determinism."""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import pytest

from groupchar.cli import main

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "docs" / "report-v1.schema.json")
    .read_text())

HEIS3 = '{"type":"gn","p":3,"n":1}'
S3 = '{"type":"named","name":"s3"}'
C6 = '{"type":"cyclic","n":6}'


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_text_output(capsys):
    code, out, err = _run(capsys, "table", "--group", S3)
    assert code == 0 and err == ""
    assert "s3" in out and "classes" in out
    assert "primitive" in out  # legend for the root-of-unity symbol


def test_table_decimal_annotation(capsys):
    code, out, _ = _run(capsys, "table", "--group", HEIS3, "--decimal")
    assert code == 0
    assert "approximate" in out


def test_table_json_is_schema_valid(capsys):
    code, out, _ = _run(capsys, "table", "--group", S3, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["schema"] == "report-v1"
    assert doc["command"] == "table"
    assert doc["group"]["order"] == 6
    degrees = sorted(ch["degree"] for ch in doc["payload"]["irreducibles"])
    assert degrees == [1, 1, 2]


def test_check_exit_codes(capsys):
    assert _run(capsys, "check", "gvz", "--group", HEIS3)[0] == 0
    code, out, _ = _run(capsys, "check", "gvz", "--group", S3)
    assert code == 1
    assert "witness" in out
    assert _run(capsys, "check", "two-degree", "--group", S3)[0] == 0
    assert _run(capsys, "check", "two-degree", "--group", C6)[0] == 1
    assert _run(capsys, "check", "gcp", "--group", HEIS3,
                "--normal", "center")[0] == 0
    assert _run(capsys, "check", "gcp", "--group",
                '{"type":"named","name":"c3wrc3"}', "--normal", "center")[0] == 1


def test_check_json_schema_and_normal_options(capsys):
    for normal in ("center", "derived", "[3]"):  # element 3 generates the centre
        code, out, _ = _run(capsys, "check", "gcp", "--group", HEIS3,
                            "--normal", normal, "--format", "json")
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMA)
        assert doc["payload"]["kind"] == "gcp"
        assert doc["payload"]["result"]["holds"] is (code == 0)
        assert doc["passed"] is (code == 0)


def test_bad_normal_subgroup_option(capsys):
    assert _run(capsys, "check", "gcp", "--group", HEIS3,
                "--normal", "not json")[0] == 2
    assert _run(capsys, "check", "gcp", "--group", HEIS3,
                "--normal", "[999]")[0] == 2
    # a non-normal subgroup (a transposition in s3) is an input error too
    code, _, err = _run(capsys, "check", "gcp", "--group", S3, "--normal", "[2]")
    assert code == 2 and "error:" in err


def test_verify_exit_codes(capsys):
    assert _run(capsys, "verify", "thm1.1", "--group", HEIS3)[0] == 0
    assert _run(capsys, "verify", "thm1.2", "--group", S3)[0] == 0
    assert _run(capsys, "verify", "all", "--group", HEIS3)[0] == 0
    code, _, err = _run(capsys, "verify", "prop2.11", "--group", HEIS3)
    assert code == 4 and "hypothesis not met" in err
    code, _, err = _run(capsys, "verify", "thm1.1", "--group", C6)
    assert code == 4


def test_verify_json_is_schema_valid(capsys):
    code, out, _ = _run(capsys, "verify", "all", "--group", HEIS3,
                        "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    claims = [r["claim"] for r in doc["payload"]["reports"]]
    assert claims == ["thm1.1", "thm1.2", "lemmas", "prop2.11", "centres"]
    census = doc["payload"]["reports"][-1]
    assert census["nonlinear_total"] == 2


def test_verify_text_mentions_statuses(capsys):
    code, out, _ = _run(capsys, "verify", "lemmas", "--group", S3)
    assert code == 0
    assert "[pass]" in out and "[skip]" in out


def test_invalid_group_specs(capsys):
    assert _run(capsys, "table", "--group", "{not json")[0] == 2
    assert _run(capsys, "table", "--group", '{"type":"nope"}')[0] == 2
    assert _run(capsys, "table", "--group", "@/no/such/file.json")[0] == 2
    code, _, err = _run(capsys, "table")
    assert code == 2 and "error:" in err


def test_max_order_resource_limit(capsys):
    code, _, err = _run(capsys, "table", "--group", HEIS3, "--max-order", "10")
    assert code == 3 and "resource limit" in err


def test_abelian_gvz_is_hypothesis_failure(capsys):
    code, _, err = _run(capsys, "check", "gvz", "--group", C6)
    assert code == 4 and "hypothesis" in err


def test_argparse_rejects_unknown_claim(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm7.7", "--group", HEIS3])
    assert exc.value.code == 2


def test_gen_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "spec.json"
    code, _, _ = _run(capsys, "gen", "gn", "-p", "3", "-n", "1",
                      "--out", str(out_file))
    assert code == 0
    assert json.loads(out_file.read_text()) == {"type": "gn", "p": 3, "n": 1}
    code, out, _ = _run(capsys, "check", "gvz", "--group", f"@{out_file}")
    assert code == 0
    # stdout when no --out is given
    code, out, _ = _run(capsys, "gen", "gn", "-p", "5", "-n", "1")
    assert code == 0 and json.loads(out) == {"type": "gn", "p": 5, "n": 1}
    assert _run(capsys, "gen", "gn", "-p", "4", "-n", "1")[0] == 2
    assert _run(capsys, "gen", "gn", "-p", "3", "-n", "0")[0] == 2


def test_json_output_is_deterministic(capsys):
    first = _run(capsys, "verify", "all", "--group", HEIS3, "--format", "json")
    second = _run(capsys, "verify", "all", "--group", HEIS3, "--format", "json")
    assert first == second
    one = _run(capsys, "table", "--group", S3, "--format", "json",
               "--parallel", "2")
    two = _run(capsys, "table", "--group", S3, "--format", "json")
    assert one == two

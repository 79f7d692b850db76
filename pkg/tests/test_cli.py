"""Command line behaviour: exit codes, report envelopes, determinism."""

import json
from importlib import resources

import pytest

from quadred import __version__
from quadred.cli import main

Y5_FIXTURE = str(resources.files("quadred").joinpath("data/y_c4_r62.json"))
M3_FIXTURE = str(resources.files("quadred").joinpath("data/c4_with_plane.json"))


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def _run_json(capsys, argv):
    code, out = _run(capsys, argv)
    return code, json.loads(out)


def test_invariants_scene(capsys):
    code, doc = _run_json(capsys, ["invariants", "GM21_F"])
    assert code == 0
    assert doc["version"] == __version__
    assert doc["seed"] == 1
    assert doc["prime"] == 10007
    rep = doc["report"]
    assert rep["ok"] is True
    assert rep["computed"]["chi_O"] == 7
    assert rep["computed"]["euler"] == 68
    assert rep["computed"]["K2"] == 16
    assert rep["expected"]["chi_T"] == -38


def test_unknown_scene_is_usage_error(capsys):
    code = main(["invariants", "bogus"])
    assert code == 64


def test_missing_command_is_usage_error(capsys):
    assert main([]) == 64


def test_unknown_command_is_usage_error(capsys):
    assert main(["nonsense"]) == 64


def test_nodes_family(capsys):
    code, doc = _run_json(capsys, ["nodes", "--family", "C4",
                                   "--seed", "3", "--prime", "31991"])
    assert code == 0
    assert doc["report"]["report"]["total"] == 16
    assert doc["report"]["ok"] is True


def test_nodes_unknown_family(capsys):
    assert main(["nodes", "--family", "Banana"]) == 64


def test_nodes_requires_one_source(capsys):
    assert main(["nodes"]) == 64
    assert main(["nodes", "--family", "C4", "--form", M3_FIXTURE]) == 64


def test_composite_prime_rejected(capsys):
    assert main(["nodes", "--family", "C4", "--prime", "10006"]) == 64


def test_prime_bounds(capsys):
    assert main(["nodes", "--family", "C4", "--prime", "2"]) == 64
    assert main(["nodes", "--family", "C4", "--prime", str(1 << 62)]) == 64


def test_single_prime_commands_reject_two(capsys):
    assert main(["nodes", "--family", "C4",
                 "--prime", "10007", "--prime", "31991"]) == 64


def test_verify_all_rejects_small_prime(capsys):
    assert main(["verify-all", "--prime", "3"]) == 64


def test_unreadable_form_file_is_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("not json{")
    assert main(["nodes", "--form", str(bad)]) == 65
    assert main(["reduce", "--form", str(bad), "--direction", "0"]) == 65


def test_schema_violation_is_parse_error(tmp_path, capsys):
    bad = tmp_path / "weird.json"
    bad.write_text(json.dumps({"kind": "Banana"}))
    assert main(["nodes", "--form", str(bad)]) == 65


def test_non_isotropic_direction_is_math_error(capsys):
    assert main(["reduce", "--form", Y5_FIXTURE, "--direction", "1"]) == 2


def test_direction_out_of_range_is_usage_error(capsys):
    assert main(["reduce", "--form", Y5_FIXTURE, "--direction", "9"]) == 64


def test_reduce_fixture_reproduces_partner(tmp_path, capsys):
    out = tmp_path / "red.json"
    code, doc = _run_json(capsys, ["reduce", "--form", Y5_FIXTURE,
                                   "--direction", "4", "--out", str(out)])
    assert code == 0
    assert doc["report"]["global"] is True
    assert doc["report"]["pivot_slot"] == 3
    assert json.loads(out.read_text()) == json.loads(open(M3_FIXTURE).read())


def test_discriminant_family_degree(capsys):
    code, doc = _run_json(capsys, ["discriminant", "--family", "GM21",
                                   "--seed", "2"])
    assert code == 0
    assert doc["report"]["degree"] == 4
    assert doc["report"]["expected_degree"] == 4
    assert doc["report"]["compatible"] is True


def test_discriminant_form_file(capsys):
    code, doc = _run_json(capsys, ["discriminant", "--form", M3_FIXTURE])
    assert code == 0
    assert doc["report"]["degree"] == 5
    assert doc["report"]["expected_degree"] is None


def test_demo_pair_unknown(capsys):
    assert main(["demo-pair", "nope"]) == 64


def test_demo_pair_c4(capsys):
    code, doc = _run_json(capsys, ["demo-pair", "c4-r62", "--seed", "1"])
    assert code == 0
    rep = doc["report"]
    assert rep["ok"] is True
    assert rep["nodes"]["report"]["total"] == 16
    assert rep["invariance"]["ok"] is True


def test_reports_are_deterministic(capsys):
    code1, doc1 = _run_json(capsys, ["nodes", "--family", "GM21", "--seed", "4"])
    code2, doc2 = _run_json(capsys, ["nodes", "--family", "GM21", "--seed", "4"])
    assert code1 == code2 == 0
    doc1.pop("wall_time_ms")
    doc2.pop("wall_time_ms")
    assert doc1 == doc2


def test_text_format_is_flat_same_data(capsys):
    code, out = _run(capsys, ["invariants", "C4_R62_F", "--format", "text"])
    assert code == 0
    lines = dict(line.split(" = ") for line in out.strip().split("\n"))
    assert lines["report.computed.chi_O"] == "6"
    assert lines["report.computed.euler"] == "62"
    assert lines["report.ok"] == "true"
    # same keys as the JSON document, just flattened
    assert lines["command"] == '"invariants"'


def test_out_writes_report_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out = _run(capsys, ["invariants", "GM20_F", "--out", str(path)])
    assert code == 0
    assert out == ""
    doc = json.loads(path.read_text())
    assert doc["report"]["computed"]["K2"] == 48


def test_seed_must_fit_in_u64(capsys):
    assert main(["nodes", "--family", "C4", "--seed", str(1 << 64)]) == 64
    assert main(["nodes", "--family", "C4", "--seed", "-1"]) == 64

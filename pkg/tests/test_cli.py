import io
import json

import pytest

from gblocks import config
from gblocks.cli import EXIT_FAIL, EXIT_FILE, EXIT_OK, EXIT_USAGE, run_cli
from tests.conftest import category_document, category_path, cover_path, label_path


def run(*argv):
    out = io.StringIO()
    code = run_cli([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_validate_passes():
    code, text = run("validate", category_path("ising_z2"))
    assert code == EXIT_OK
    assert "ising_z2: PASS" in text
    assert "[pass] pentagon" in text


def test_validate_json_is_deterministic():
    first = run("validate", category_path("vec_s3"), "--json")
    second = run("validate", category_path("vec_s3"), "--json")
    assert first == second
    payload = json.loads(first[1])
    assert payload["passed"] is True
    assert payload["subject"] == "vec_s3"


def test_dim_prints_two():
    code, text = run("dim", category_path("ising_z2"), cover_path("four_sigma"), label_path("sigma4"))
    assert code == EXIT_OK
    assert text.splitlines()[0] == "2"


def test_dim_json_factorization():
    code, text = run("dim", category_path("vec_s3"), cover_path("s3_pair"), label_path("s3_pair"), "--json")
    payload = json.loads(text)
    assert code == EXIT_OK
    assert payload["dim"] == 1
    assert payload["factorization"][0]["total"] == 1


def test_map_applies_script(tmp_path):
    script = tmp_path / "script.json"
    script.write_text(json.dumps({"moves": [{"kind": "F", "cut": 0}, {"kind": "Z", "block": 0}]}))
    code, text = run(
        "map", category_path("ising_z2"), cover_path("four_sigma"), label_path("sigma4"), script, "--json"
    )
    payload = json.loads(text)
    assert code == EXIT_OK
    assert payload["moves"] == ["F0", "Z0"]
    assert len(payload["matrix"]) == 2
    assert len(payload["target_cover"]["blocks"]) == 1


def test_bad_move_script_fails(tmp_path):
    script = tmp_path / "script.json"
    script.write_text(json.dumps({"moves": [{"kind": "B", "block": 0}, {"kind": "B", "block": 0}, {"kind": "F", "cut": 0}]}))
    code, _ = run("map", category_path("ising_z2"), cover_path("four_sigma"), label_path("sigma4"), script)
    assert code == EXIT_FAIL


def test_paths_and_relations():
    code, text = run(
        "paths", category_path("vec_s3"), cover_path("s3_pair"), label_path("s3_pair"), "--depth", "1", "--json"
    )
    assert code == EXIT_OK
    assert json.loads(text)["details"]["depth"] == 1
    code, _ = run("relations", category_path("fibonacci"), "--bound", "3", "--max-blocks", "2")
    assert code == EXIT_OK


def test_ms_check_and_roundtrip():
    assert run("ms-check", category_path("fibonacci"), "--bound", "3")[0] == EXIT_OK
    assert run("roundtrip", category_path("vec_s3"))[0] == EXIT_OK


def test_broken_category_exits_one(tmp_path):
    doc = category_document("ising_z2")
    doc["theta"]["sigma"] = {"5": 1}
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    code, text = run("validate", broken)
    assert code == EXIT_FAIL
    assert "[fail] ribbon" in text


def test_invalid_document_exits_one(tmp_path, capsys):
    doc = category_document("ising_z2")
    doc["labels"][1]["degree"] = "1"
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    code, _ = run("validate", broken)
    assert code == EXIT_FAIL
    assert "fusion-grading" in capsys.readouterr().err


def test_missing_file_exits_three(tmp_path):
    assert run("validate", tmp_path / "absent.json")[0] == EXIT_FILE
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    assert run("validate", garbage)[0] == EXIT_FILE


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["ms-check"], ["ms-check", "x.json", "--bound", "0"]])
def test_usage_errors_exit_two(argv):
    assert run(*argv)[0] == EXIT_USAGE


def test_conductor_limit_flag(monkeypatch):
    monkeypatch.setattr(config, "CONDUCTOR_LIMIT", config.CONDUCTOR_LIMIT)
    code, _ = run("validate", category_path("ising_z2"), "--conductor-limit", "8")
    assert code == EXIT_FAIL

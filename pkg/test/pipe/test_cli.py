import json
import pytest
import kiselman.rewrite.completion as completion
from kiselman.pipe.cli import main


def run(capsys, *args):
    with pytest.raises(SystemExit) as e:
        main(list(args) + ["--quiet"])
    return e.value.code, capsys.readouterr().out


def test_elements(capsys):
    code, out = run(capsys, "elements", "-n", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 2
    assert payload["elements"] == [[], [1]]


def test_idempotents_csv(capsys):
    code, out = run(capsys, "elements", "-n", "2", "--idempotents-only", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,word,display"
    assert [line.split(",")[1] for line in lines[1:]] == ["e", "1", "2", "2.1"]


def test_idempotents_table_has_count(capsys):
    code, out = run(capsys, "elements", "-n", "3", "--idempotents-only", "--format", "table")
    assert code == 0
    assert out.splitlines()[-1] == "count: 8"


@pytest.mark.parametrize("method", ["monotone", "brute"])
def test_endos(capsys, method):
    code, out = run(capsys, "endos", "-n", "2", "--method", method)
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == payload["dn_count"] == payload["mn_count"] == 15


def test_endos_guard(capsys):
    code, _ = run(capsys, "endos", "-n", "5")
    assert code == 3


def test_count(capsys):
    code, out = run(capsys, "count", "-m", "2", "-n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["m,n,closed,brute,agree", "2,2,15,15,agree"]


def test_count_json_uses_decimal_strings(capsys):
    code, out = run(capsys, "count", "-m", "3", "-n", "1")
    assert code == 0
    assert json.loads(out) == {"rows": [{"m": 3, "n": 1, "closed": "8", "brute": "8", "agree": True}], "agree": True}


def test_count_without_formula(capsys):
    code, _ = run(capsys, "count", "-m", "1", "-n", "3")
    assert code == 2
    code, out = run(capsys, "count", "-m", "1", "-n", "3", "--brute-only", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "1,3,,8,agree"


def test_count_guard(capsys):
    code, _ = run(capsys, "count", "-m", "5", "-n", "5", "--max-bits", "20")
    assert code == 3


def test_count_grid(capsys):
    code, out = run(capsys, "count", "--grid", "--max-bits", "10")
    assert code == 0
    payload = json.loads(out)
    assert payload["agree"] and len(payload["rows"]) == 5 + 3 + 2 + 2


def test_verify_is_deterministic(capsys):
    args = ("verify", "-n", "2", "--suite", "units", "--suite", "core", "--no-timestamp")
    code, first = run(capsys, *args)
    assert code == 0
    _, second = run(capsys, *args)
    assert first == second
    payload = json.loads(first)
    assert payload["passed"] and "generated_at" not in payload
    assert [r["suite"] for r in payload["reports"]] == ["units", "core"]


def test_verify_timestamp(capsys):
    code, out = run(capsys, "verify", "-n", "1", "--suite", "units")
    assert code == 0
    assert "generated_at" in json.loads(out)


def test_export_dn_table(capsys):
    code, out = run(capsys, "export", "-n", "2", "--what", "dn-table")
    assert code == 0
    table = json.loads(out)["table"]
    assert len(table) == 15 and all(len(row) == 15 for row in table)


def test_export_kn_table_to_file(capsys, tmp_path):
    path = tmp_path / "out" / "k1.json"
    code, out = run(capsys, "export", "-n", "1", "--what", "kn-table", "-o", str(path))
    assert code == 0 and out == ""
    payload = json.loads(path.read_text())
    assert payload["elements"] == [[], [1]]
    assert payload["table"] == [[0, 1], [1, 1]]


def test_export_endos_csv(capsys):
    code, out = run(capsys, "export", "-n", "2", "--what", "endos", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,images,sequence,matrix"
    assert len(lines) == 16


@pytest.mark.parametrize("what", ["elements", "dn", "mn", "rules"])
def test_export_listings(capsys, what):
    code, out = run(capsys, "export", "-n", "2", "--what", what)
    assert code == 0
    json.loads(out)


def test_env_guard(capsys, monkeypatch):
    monkeypatch.setenv("KISELMAN_MAX_ELEMENTS", "3")
    code, _ = run(capsys, "elements", "-n", "2")
    assert code == 3


def test_bad_guard(capsys):
    code, _ = run(capsys, "elements", "-n", "2", "--max-rules", "0")
    assert code == 2


def test_completion_failure_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(completion, "critical_pairs", lambda rs: [((1, 1), (1,), (1, 1))])
    # an unused rule cap keeps the cached semigroups out of the way
    code, out = run(capsys, "elements", "-n", "1", "--max-rules", "777")
    assert code == 1
    assert out == ""

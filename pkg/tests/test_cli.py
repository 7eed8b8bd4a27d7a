import json

import pytest

from adjvar.cli import main, run_checks


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_single_group_json(capsys):
    code, out = run(capsys, "--group", "G2")
    assert code == 0
    payload = json.loads(out)
    assert payload["meta"]["groups"] == ["G2"]
    assert payload["results"]
    for r in payload["results"]:
        assert set(r) == {"check_id", "group", "expected", "actual",
                          "status", "paper_anchor"}
        assert r["status"] == "pass"


def test_suite_selection(capsys):
    code, out = run(capsys, "--group", "B3", "--suite", "roots")
    assert code == 0
    ids = {r["check_id"] for r in json.loads(out)["results"]}
    assert ids == {"roots.count", "roots.type", "roots.highest-long"}


def test_markdown_format(capsys):
    code, out = run(capsys, "--group", "G2", "--suite", "polytope",
                    "--format", "markdown")
    assert code == 0
    assert out.startswith("| check_id | group |")
    assert "| pass |" in out


def test_byte_stable_output(capsys):
    _, out1 = run(capsys, "--group", "B3", "--suite", "fixedpoints")
    _, out2 = run(capsys, "--group", "B3", "--suite", "fixedpoints")
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out = run(capsys, "--group", "G2", "--suite", "roots",
                    "--out", str(path))
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["results"]


def test_unknown_group_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--group", "Q5"])
    assert exc.value.code == 2


def test_unknown_suite_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--group", "G2", "--suite", "nope"])
    assert exc.value.code == 2


def test_out_of_range_rank_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--group", "B9"])
    assert exc.value.code == 2


def test_rank_override_admits_b9():
    results = run_checks(["B9"], ["roots"], seed=1)
    assert all(r.status == "pass" for r in results)


def test_env_seed_overrides_flag(capsys, monkeypatch):
    monkeypatch.setenv("ADJC_SEED", "123")
    _, out_env = run(capsys, "--group", "G2", "--suite", "bb", "--seed", "7")
    monkeypatch.delenv("ADJC_SEED")
    _, out_flag = run(capsys, "--group", "G2", "--suite", "bb", "--seed", "123")
    assert json.loads(out_env)["meta"]["seed"] == 123
    assert out_env == out_flag


def test_results_sorted():
    results = run_checks(["G2", "B3"], ["roots", "polytope"], seed=1)
    keys = [(r.check_id, r.group) for r in results]
    assert keys == sorted(keys)

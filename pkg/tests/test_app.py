import json

import pandas as pd
import pytest

from app import main


@pytest.fixture
def env_file(tmp_path):
    path = tmp_path / "empty.env"
    path.write_text("", encoding="utf-8")
    return str(path)


def test_gamma_canon(capsys, env_file):
    assert main(["gamma", "canon", "12", "s^11 x s", "--env-file", env_file]) == 0
    first_line = capsys.readouterr().out.splitlines()[0]
    assert first_line == "(12; 0,0,0,0,0,0,0,0,0,0,0,1)"


def test_gamma_canon_json(capsys, env_file):
    assert main(["gamma", "canon", "12", "s^12", "--format", "json", "--env-file", env_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["shift"] == 12
    assert payload["exps"] == [0] * 12


def test_gamma_cmp(capsys, env_file):
    assert main(["gamma", "cmp", "12", "x", "s", "--env-file", env_file]) == 0
    assert " > " in capsys.readouterr().out


def test_fold_with_queries(capsys, tmp_path, env_file):
    queries = tmp_path / "queries.txt"
    queries.write_text("a   # generator\nb\n\n", encoding="utf-8")
    assert main(["fold", "--gens", "a^2; a^3", "--queries", str(queries), "--env-file", env_file]) == 0
    out = capsys.readouterr().out
    assert "Rank: 1" in out
    assert "a: member = " in out
    assert "b: not a member" in out


def test_run_json(capsys, scenario_path, env_file):
    code = main(["run", scenario_path("polycyclic_gamma.scn"), "--format", "json", "--env-file", env_file])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["format"] == "hnnlab-report/1"
    assert payload["verdict"] == "NOT-LEFT-ORDERABLE"
    assert payload["exit_code"] == 0


def test_run_text_with_exports(tmp_path, scenario_path, env_file):
    output = tmp_path / "reports" / "klein.txt"
    table = tmp_path / "reports" / "klein.csv"
    code = main(["run", scenario_path("klein_bottle.scn"), "--output", str(output), "--csv", str(table),
                 "--env-file", env_file])
    assert code == 0
    text = output.read_text(encoding="utf-8")
    assert "Verdict: INCONCLUSIVE" in text
    assert "Exit code: 0" in text
    assert len(pd.read_csv(table)) == 4


def test_run_tampered_exits_one(scenario_path, env_file):
    assert main(["run", scenario_path("free_rank2_hnn_tampered.scn"), "--env-file", env_file]) == 1


def test_input_errors_exit_three(tmp_path, env_file):
    assert main(["run", str(tmp_path / "missing.scn"), "--env-file", env_file]) == 3
    assert main(["run", str(tmp_path / "missing.scn"), "--depth", "0", "--env-file", env_file]) == 3
    assert main(["verify", "--n", "11", "--env-file", env_file]) == 3
    assert main(["gamma", "canon", "12", "s^", "--env-file", env_file]) == 3
    assert main(["fold", "--gens", "a^2", "--queries", str(tmp_path / "none.txt"), "--env-file", env_file]) == 3

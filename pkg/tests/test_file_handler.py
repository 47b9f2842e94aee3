import json

import pandas as pd
import pytest

from utils.exceptions import ScenarioError
from utils.file_handler import FileHandler, report_to_json


@pytest.fixture
def handler():
    return FileHandler()


def _error(handler, text):
    with pytest.raises(ScenarioError) as info:
        handler.parse_scenario(text, "bad.scn")
    return info.value


def test_minimal_scenario(handler):
    scenario = handler.parse_scenario("name = z   # comment\ngroup = cyclic a\n\nelement a = a\n")
    assert scenario.name == "z"
    assert scenario.group_kind == "cyclic"
    assert scenario.group_args == ("a",)
    label, entry = scenario.elements[0]
    assert label == "a"
    assert (entry.text, entry.line, entry.column) == ("a", 4, 13)
    assert scenario.mode == "bfs" and scenario.depth is None and scenario.expect is None
    assert not scenario.is_hnn


def test_hnn_words_keep_their_columns(handler):
    scenario = handler.parse_scenario("name = h\ngroup = free a b\nA = a b ; b a\nB = a ; b\n")
    assert [(w.text, w.column) for w in scenario.a_words] == [("a b", 5), ("b a", 11)]
    assert [w.text for w in scenario.b_words] == ["a", "b"]
    assert scenario.is_hnn
    assert scenario.stable == "t"


def test_repeated_keys(handler):
    text = ("name = r\ngroup = cyclic a\nelement a = a\nelement b = a^2\n"
            "witness +,- = 0 0 1\nidentity = a a^-1\nnontrivial = a\nnontrivial = a^2\n")
    scenario = handler.parse_scenario(text)
    assert [label for label, _ in scenario.elements] == ["a", "b"]
    assert scenario.witnesses[0][0] == "+,-"
    assert len(scenario.identities) == 1
    assert len(scenario.nontrivials) == 2


def test_unknown_key_location(handler):
    error = _error(handler, "name = x\ngroup = free a b\n  foo = 1\n")
    assert (error.line, error.column) == (3, 3)
    assert str(error).startswith("bad.scn:3:3: unknown key")


def test_bad_group_location(handler):
    error = _error(handler, "name = x\ngroup = bogus\n")
    assert (error.line, error.column) == (2, 9)


def test_bad_depth_location(handler):
    error = _error(handler, "name = x\ngroup = cyclic a\ndepth = zero\n")
    assert (error.line, error.column) == (3, 9)
    error = _error(handler, "name = x\ngroup = cyclic a\ndepth = 0\n")
    assert "at least 1" in str(error)


def test_line_without_equals(handler):
    error = _error(handler, "name = x\n  group free\n")
    assert (error.line, error.column) == (2, 3)


@pytest.mark.parametrize("text, message", [
    ("group = free a\n", "missing required key 'name'"),
    ("name = x\nname = y\ngroup = free a\n", "duplicate key"),
    ("name = x\ngroup = polycyclic\nA = t\nB = t\n", "cannot be an HNN base"),
    ("name = x\ngroup = free a b\nA = a\n", "A and B must be given together"),
    ("name = x\ngroup = free a b\nA = a ; b\nB = a\n", "A has 2 generators, B has 1"),
    ("name = x\ngroup = free a\nmode = construct\n", "construct mode needs an HNN extension"),
    ("name = x\ngroup = free a\nmode = dfs\n", "mode must be one of"),
    ("name = x\ngroup = free a\nexpect = ORDERABLE\n", "expect must be one of"),
    ("name = x\ngroup = free a\nelement = a\n", "element needs a label"),
    ("name = x\ngroup = free a\nelement g = a\nelement g = a^2\n", "duplicate element 'g'"),
    ("name = x\ngroup = gamma\n", "group gamma takes 1 argument(s)"),
    ("name = x\ngroup = polycyclic 3\n", "group polycyclic takes 0 argument(s)"),
    ("name x = y\ngroup = free a\n", "takes no label"),
])
def test_scenario_errors(handler, text, message):
    assert message in str(_error(handler, text))


def test_missing_file(handler, tmp_path):
    with pytest.raises(ScenarioError) as info:
        handler.read_scenario(str(tmp_path / "absent.scn"))
    assert "file not found" in str(info.value)


def test_read_shipped_scenario(handler, scenario_path):
    scenario = handler.read_scenario(scenario_path("free_rank2_hnn.scn"))
    assert scenario.mode == "construct"
    assert scenario.expect == "NOT-LEFT-ORDERABLE"
    assert len(scenario.a_words) == 8


def test_exports(handler, tmp_path):
    report = {"verdict": "INCONCLUSIVE", "elements": ["a"], "name": "ℤ"}
    json_path = tmp_path / "out" / "report.json"
    assert handler.export_report_json(report, str(json_path))
    assert json.loads(json_path.read_text(encoding="utf-8")) == report
    assert report_to_json(report).index('"elements"') < report_to_json(report).index('"verdict"')

    frame = pd.DataFrame([{"signs": "+", "status": "exhausted"}])
    csv_path = tmp_path / "out" / "table.csv"
    assert handler.export_assignments_csv(frame, str(csv_path))
    assert list(pd.read_csv(csv_path)["status"]) == ["exhausted"]

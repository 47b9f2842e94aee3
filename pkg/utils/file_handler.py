"""
HNN Order Lab - File Handler
Scenario files in, report files out

Scenario files are `key = value` lines; `#` starts a comment. See
docs/SCENARIO_FORMAT.md for the full grammar.
"""

import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from .exceptions import ScenarioError

logger = logging.getLogger(__name__)

GROUP_KINDS = {
    "free": (1, None),
    "gamma": (1, 1),
    "polycyclic": (0, 0),
    "cyclic": (1, 1),
    "unipotent": (1, 1),
}
HNN_KINDS = ("free", "gamma", "cyclic")
SCENARIO_MODES = ("bfs", "verify", "construct")
VERDICTS = ("NOT-LEFT-ORDERABLE", "INCONCLUSIVE", "CHECKS-ONLY")
SINGLE_KEYS = ("name", "group", "stable", "A", "B", "depth", "mode", "expect")
REPEATED_KEYS = ("element", "witness", "identity", "nontrivial")


@dataclass(frozen=True)
class ScenarioEntry:
    """A value with the position it was read from (1-based line and column)"""

    text: str
    line: int
    column: int


@dataclass
class Scenario:
    path: str
    name: str
    group_kind: str
    group_args: Tuple[str, ...]
    stable: str = "t"
    a_words: List[ScenarioEntry] = field(default_factory=list)
    b_words: List[ScenarioEntry] = field(default_factory=list)
    elements: List[Tuple[str, ScenarioEntry]] = field(default_factory=list)
    depth: Optional[int] = None
    mode: str = "bfs"
    expect: Optional[str] = None
    witnesses: List[Tuple[str, ScenarioEntry]] = field(default_factory=list)
    identities: List[ScenarioEntry] = field(default_factory=list)
    nontrivials: List[ScenarioEntry] = field(default_factory=list)

    @property
    def is_hnn(self) -> bool:
        return bool(self.a_words)

    def error(self, message: str, entry: Optional[ScenarioEntry] = None, offset: int = 0) -> ScenarioError:
        if entry is None:
            return ScenarioError(message, self.path)
        return ScenarioError(message, self.path, entry.line, entry.column + offset)


def _split_words(entry: ScenarioEntry) -> List[ScenarioEntry]:
    """Split `w1 ; w2 ; ...` keeping the column of every part"""
    parts = []
    start = 0
    for piece in entry.text.split(";"):
        stripped = piece.strip()
        if stripped:
            column = entry.column + start + (len(piece) - len(piece.lstrip()))
            parts.append(ScenarioEntry(stripped, entry.line, column))
        start += len(piece) + 1
    return parts


class FileHandler:
    """Load scenario files and export reports"""

    def __init__(self):
        self.supported_formats = [".scn", ".txt"]

    def read_scenario(self, file_path: str) -> Scenario:
        """
        Parse a scenario file

        Raises:
            ScenarioError: missing file, unknown key, bad value; carries
                path, line and column
        """
        if not os.path.exists(file_path):
            raise ScenarioError("file not found", file_path)
        with open(file_path, "r", encoding="utf-8") as file:
            text = file.read()
        scenario = self.parse_scenario(text, file_path)
        logger.info(f"✅ Loaded scenario {scenario.name} from {file_path}")
        return scenario

    def parse_scenario(self, text: str, path: str = "<scenario>") -> Scenario:
        values: Dict[str, ScenarioEntry] = {}
        repeated: Dict[str, List[Tuple[str, ScenarioEntry]]] = {key: [] for key in REPEATED_KEYS}
        for number, raw in enumerate(text.splitlines(), 1):
            content = raw.split("#", 1)[0]
            if not content.strip():
                continue
            if "=" not in content:
                raise ScenarioError("expected `key = value`", path, number, len(content) - len(content.lstrip()) + 1)
            left, right = content.split("=", 1)
            column = len(left) + 2 + (len(right) - len(right.lstrip()))
            entry = ScenarioEntry(right.strip(), number, column)
            head = left.split()
            key_column = len(left) - len(left.lstrip()) + 1
            if not head:
                raise ScenarioError("missing key", path, number, key_column)
            key, label = head[0], " ".join(head[1:])
            if key in SINGLE_KEYS:
                if label:
                    raise ScenarioError(f"key {key!r} takes no label", path, number, key_column)
                if key in values:
                    raise ScenarioError(f"duplicate key {key!r}", path, number, key_column)
                values[key] = entry
            elif key in REPEATED_KEYS:
                if key in ("element", "witness") and not label:
                    raise ScenarioError(f"{key} needs a label before '='", path, number, key_column)
                repeated[key].append((label, entry))
            else:
                raise ScenarioError(f"unknown key {key!r}", path, number, key_column)

        for required in ("name", "group"):
            if required not in values:
                raise ScenarioError(f"missing required key {required!r}", path)
        group_entry = values["group"]
        tokens = group_entry.text.split()
        if not tokens or tokens[0] not in GROUP_KINDS:
            raise ScenarioError(f"group must be one of {', '.join(GROUP_KINDS)}", path,
                                group_entry.line, group_entry.column)
        kind, args = tokens[0], tuple(tokens[1:])
        low, high = GROUP_KINDS[kind]
        if len(args) < low or (high is not None and len(args) > high):
            raise ScenarioError(f"group {kind} takes {low if high == low else f'at least {low}'} "
                                f"argument(s), got {len(args)}", path, group_entry.line, group_entry.column)

        scenario = Scenario(path=path, name=values["name"].text, group_kind=kind, group_args=args)
        if "stable" in values:
            scenario.stable = values["stable"].text
        if "A" in values or "B" in values:
            if kind not in HNN_KINDS:
                entry = values.get("A") or values.get("B")
                raise scenario.error(f"group {kind} cannot be an HNN base", entry)
            if "A" not in values or "B" not in values:
                raise scenario.error("A and B must be given together", values.get("A") or values.get("B"))
            scenario.a_words = _split_words(values["A"])
            scenario.b_words = _split_words(values["B"])
            if len(scenario.a_words) != len(scenario.b_words):
                raise scenario.error(f"A has {len(scenario.a_words)} generators, B has "
                                     f"{len(scenario.b_words)}; φ pairs them by position", values["B"])
            if not scenario.a_words:
                raise scenario.error("A needs at least one generator", values["A"])
        if "depth" in values:
            entry = values["depth"]
            try:
                scenario.depth = int(entry.text)
            except ValueError:
                raise scenario.error(f"depth must be an integer, got {entry.text!r}", entry) from None
            if scenario.depth < 1:
                raise scenario.error("depth must be at least 1", entry)
        if "mode" in values:
            entry = values["mode"]
            if entry.text not in SCENARIO_MODES:
                raise scenario.error(f"mode must be one of {', '.join(SCENARIO_MODES)}", entry)
            scenario.mode = entry.text
        if scenario.mode == "construct" and not scenario.is_hnn:
            raise scenario.error("construct mode needs an HNN extension (A and B)", values.get("mode"))
        if "expect" in values:
            entry = values["expect"]
            if entry.text not in VERDICTS:
                raise scenario.error(f"expect must be one of {', '.join(VERDICTS)}", entry)
            scenario.expect = entry.text

        names = set()
        for label, entry in repeated["element"]:
            if label in names:
                raise scenario.error(f"duplicate element {label!r}", entry)
            names.add(label)
            scenario.elements.append((label, entry))
        scenario.witnesses = repeated["witness"]
        scenario.identities = [entry for _, entry in repeated["identity"]]
        scenario.nontrivials = [entry for _, entry in repeated["nontrivial"]]
        return scenario

    def export_report_json(self, report: Dict[str, Any], output_path: str) -> bool:
        """Write a report dict with sorted keys"""
        try:
            directory = os.path.dirname(output_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(output_path, "w", encoding="utf-8") as file:
                file.write(report_to_json(report))
            logger.info(f"✅ Report exported to {output_path}")
            return True
        except OSError as e:
            logger.error(f"❌ Error exporting report: {e}")
            return False

    def export_assignments_csv(self, frame: pd.DataFrame, output_path: str) -> bool:
        """Write the per-assignment table"""
        try:
            directory = os.path.dirname(output_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            frame.to_csv(output_path, index=False)
            logger.info(f"✅ Assignment table exported to {output_path}")
            return True
        except OSError as e:
            logger.error(f"❌ Error exporting assignment table: {e}")
            return False


def report_to_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

"""
HNN Order Lab - Report View
Text and JSON rendering of scenario reports and claim runs
"""

from typing import Any, Dict, Iterable, List, Tuple

import pandas as pd

from utils.cone_search import ONE_SIDED_NOTE
from utils.file_handler import report_to_json

RULE = "=" * 72
MARKS = {True: "PASS", False: "FAIL"}


def _checks_frame(checks: Dict[str, Dict[str, Any]]) -> pd.DataFrame:
    rows = [{"check": label, "result": MARKS[entry["passes"]], "reason": entry["reason"]}
            for label, entry in checks.items()]
    return pd.DataFrame(rows, columns=["check", "result", "reason"])


def _block(title: str, frame: pd.DataFrame) -> List[str]:
    if frame.empty:
        return [title, "  (none)"]
    return [title, frame.to_string(index=False)]


def render_scenario_text(report) -> str:
    """Human-readable scenario report; same bytes for the same input"""
    lines = [RULE, f"Scenario: {report.name}", f"Group:    {report.group}", RULE]
    lines += _block("Group checks", _checks_frame(report.checks))
    if report.cone is not None:
        cone = report.cone
        lines += ["", f"Elements: {', '.join(cone.names)}",
                  f"Mode: {cone.mode}   Depth: {cone.depth}"]
        frame = cone.to_frame().fillna("-")
        lines += _block("Sign assignments", frame)
        counts = ", ".join(f"{status} {count}" for status, count in cone.counts().items())
        lines += ["", f"Counts: {counts}", f"Note: {ONE_SIDED_NOTE}"]
    lines += ["", f"Verdict: {report.verdict}"]
    if report.expect is not None:
        lines.append(f"Expected: {report.expect}")
    lines.append(f"Exit code: {report.exit_code}")
    return "\n".join(lines) + "\n"


def render_claims_text(result: Dict[str, Any]) -> str:
    lines = [RULE, f"Claim suite (n={result['n']}, seed={result['seed']}, depth={result['depth']}, "
                   f"samples={result['samples']})", RULE]
    rows = []
    for label, entry in result["claims"].items():
        mark = "INFO" if entry.get("reported_only") else MARKS[entry["passes"]]
        rows.append({"claim": label, "result": mark, "reason": entry["reason"]})
    frame = pd.DataFrame(rows, columns=["claim", "result", "reason"])
    lines.append(frame.to_string(index=False))
    summary = result["summary"]
    lines += ["", f"Passed: {summary['passed']}   Failed: {summary['failed']}"]
    for label in summary["failing"]:
        lines.append(f"  failing: {label}")
    return "\n".join(lines) + "\n"


def render_fold_text(graph, queries: Iterable[Tuple[str, bool, str]]) -> str:
    """Rank line, then one `word: member|not a member [= coords]` line per query"""
    lines = [f"Generators: {', '.join(str(g) for g in graph.generators)}",
             f"Rank: {graph.rank()}   Vertices: {len(graph.vertices)}   Edges: {len(graph.edges)}"]
    for text, member, coords in queries:
        lines.append(f"{text}: member = {coords}" if member else f"{text}: not a member")
    return "\n".join(lines) + "\n"


def render(payload: Dict[str, Any], text: str, fmt: str) -> str:
    """Pick the JSON or text form of an already-rendered report"""
    return report_to_json(payload) if fmt == "json" else text

"""
HNN Order Lab - Scenario Runner
Load a scenario, run its group checks and its cone search, grade the verdict

Exit codes: 0 verdict as expected, 1 a check or witness failed,
2 verdict differs from the expected one. Input errors raise
ScenarioError; the CLI maps them to 3.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .certificates import conjugate_elements, construct_conjugate_witnesses
from .cone_search import FAILED, CHECKS_ONLY, ConeReport, ElementList, SignAssignment, all_assignments, cone_refute
from .exceptions import HnnLabError, ScenarioError, WordSyntaxError
from .file_handler import FileHandler, Scenario, ScenarioEntry
from .gamma_group import GAMMA_ALPHABET
from .groups import CyclicGroup, CyclicSubgroup, FreeGroup, GammaGroup, PolycyclicGroup, UnipotentGroup
from .hnn import HnnExtension, free_extension, gamma_extension
from .words import Alphabet, Word, parse_syllables

logger = logging.getLogger(__name__)

REPORT_FORMAT = "hnnlab-report/1"

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_VERDICT_MISMATCH = 2
EXIT_INPUT_ERROR = 3


@dataclass
class ScenarioReport:
    name: str
    group: str
    checks: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    cone: Optional[ConeReport] = None
    expect: Optional[str] = None

    @property
    def verdict(self) -> str:
        return self.cone.verdict if self.cone is not None else CHECKS_ONLY

    @property
    def exit_code(self) -> int:
        failed_checks = any(not c["passes"] for c in self.checks.values())
        failed_witness = self.cone is not None and any(r.status == FAILED for r in self.cone.results)
        if failed_checks or failed_witness:
            return EXIT_VERIFICATION_FAILED
        if self.expect is not None and self.expect != self.verdict:
            return EXIT_VERDICT_MISMATCH
        return EXIT_OK

    def to_dict(self) -> Dict[str, Any]:
        return {
            "format": REPORT_FORMAT,
            "scenario": self.name,
            "group": self.group,
            "checks": self.checks,
            "cone": self.cone.to_dict() if self.cone is not None else None,
            "verdict": self.verdict,
            "expect": self.expect,
            "exit_code": self.exit_code,
        }


def _criterion(passes: bool, reason: str, **details) -> Dict[str, Any]:
    return {"passes": bool(passes), "reason": reason, "details": details}


def _parse_in(scenario: Scenario, entry: ScenarioEntry, parse):
    """Run a parser on an entry, turning word errors into located scenario errors"""
    try:
        return parse(entry.text)
    except WordSyntaxError as e:
        raise scenario.error(str(e), entry, offset=max(e.column - 1, 0)) from e
    except (HnnLabError, ValueError) as e:
        raise scenario.error(str(e), entry) from e


class _Context:
    """Group backend and generator words of one scenario"""

    def __init__(self, scenario: Scenario):
        self.scenario = scenario
        self.base = None
        self.group = None
        self.extension: Optional[HnnExtension] = None
        self.a_words: List[Word] = []
        self.b_words: List[Word] = []
        self.checks: Dict[str, Dict[str, Any]] = {}
        self._build()

    def _build(self):
        scenario = self.scenario
        kind, args = scenario.group_kind, scenario.group_args
        try:
            if kind == "free":
                self.base = FreeGroup(Alphabet(args))
            elif kind == "gamma":
                self.base = GammaGroup(int(args[0]))
                if self.base.n < 2:
                    raise ValueError(f"gamma modulus must be at least 2, got {self.base.n}")
            elif kind == "cyclic":
                self.base = CyclicGroup(args[0])
            elif kind == "polycyclic":
                self.base = PolycyclicGroup()
            else:
                self.base = UnipotentGroup(int(args[0]))
        except (HnnLabError, ValueError) as e:
            raise scenario.error(f"invalid group: {e}") from e
        self.group = self.base
        if scenario.is_hnn:
            self._build_extension()

    def _word_alphabet(self) -> Alphabet:
        if isinstance(self.base, FreeGroup):
            return self.base.alphabet
        if isinstance(self.base, GammaGroup):
            return GAMMA_ALPHABET
        return self.base.alphabet

    def _build_extension(self):
        scenario = self.scenario
        alphabet = self._word_alphabet()
        self.a_words = [_parse_in(scenario, e, alphabet.parse) for e in scenario.a_words]
        self.b_words = [_parse_in(scenario, e, alphabet.parse) for e in scenario.b_words]
        for entry, word in zip(scenario.a_words + scenario.b_words, self.a_words + self.b_words):
            if word.is_identity:
                raise scenario.error("subgroup generator is the identity", entry)
        name = scenario.name
        try:
            if isinstance(self.base, FreeGroup):
                self.extension = free_extension(alphabet, self.a_words, self.b_words, scenario.stable, name)
                for label, graph in (("A", self.extension.a_oracle), ("B", self.extension.b_oracle)):
                    self.checks[f"rank of {label}"] = _criterion(
                        graph.rank() == len(graph.generators), f"rank {graph.rank()}",
                        rank=graph.rank(), generators=len(graph.generators),
                        vertices=len(graph.vertices), edges=len(graph.edges))
            elif isinstance(self.base, GammaGroup):
                a = [self.base.evaluate(w.named_syllables()) for w in self.a_words]
                b = [self.base.evaluate(w.named_syllables()) for w in self.b_words]
                self.extension = gamma_extension(self.base.n, a, b, scenario.stable, name)
                for label, basis in (("A", self.extension.a_oracle), ("B", self.extension.b_oracle)):
                    self.checks[f"lattice rank of {label}"] = _criterion(
                        basis.independent, f"rank {basis.rank}", rank=basis.rank,
                        canonical_forms=[str(g) for g in basis.generators])
            else:
                if len(self.a_words) != 1:
                    raise ScenarioError("cyclic bases take exactly one generator in A and B")
                m = self.base.evaluate(self.a_words[0].named_syllables())
                n = self.base.evaluate(self.b_words[0].named_syllables())
                self.extension = HnnExtension(self.base, CyclicSubgroup(m), CyclicSubgroup(n), scenario.stable, name)
                stable, letter = scenario.stable, self.base.letter
                relator = self.extension.parse(f"{stable} {letter}^{m} {stable}^-1 {letter}^{-n}")
                self.checks["defining relation"] = _criterion(
                    self.extension.is_identity(relator),
                    f"{stable} {letter}^{m} {stable}^-1 = {letter}^{n}", m=m, n=n)
        except HnnLabError as e:
            raise scenario.error(f"invalid HNN data: {e}", scenario.a_words[0]) from e
        self.group = self.extension

    def element_list(self) -> Optional[ElementList]:
        scenario = self.scenario
        if not scenario.elements:
            if scenario.mode == "construct":
                return conjugate_elements(self.extension)
            return None
        names = [name for name, _ in scenario.elements]
        values = [_parse_in(scenario, entry, self.group.parse) for _, entry in scenario.elements]
        try:
            elements = ElementList(self.group, names, values)
        except HnnLabError as e:
            raise scenario.error(str(e), scenario.elements[0][1]) from e
        if scenario.mode == "construct":
            expected = conjugate_elements(self.extension)
            same = len(expected) == len(elements) and all(
                self.group.key(g) == self.group.key(h) for g, h in zip(expected.elements, elements.elements))
            if not same:
                raise scenario.error("construct mode needs the list [letters..., t letter t^-1...] "
                                     f"in alphabet order ({', '.join(expected.names)})", scenario.elements[0][1])
        return elements

    def witnesses(self, elements: ElementList) -> Dict[SignAssignment, Tuple[int, ...]]:
        scenario = self.scenario
        provided: Dict[SignAssignment, Tuple[int, ...]] = {}
        for label, entry in scenario.witnesses:
            try:
                assignment = SignAssignment.parse(label)
            except HnnLabError as e:
                raise scenario.error(str(e), entry) from e
            if len(assignment) != len(elements):
                raise scenario.error(f"assignment {label} has {len(assignment)} signs for "
                                     f"{len(elements)} elements", entry)
            if assignment in provided:
                raise scenario.error(f"duplicate witness for {label}", entry)
            indices: List[int] = []
            for name, exp in _parse_in(scenario, entry, parse_syllables):
                if name not in elements.names:
                    raise scenario.error(f"unknown element {name!r} in witness", entry)
                if exp < 1:
                    raise scenario.error(f"witness repeats {name} {exp} times; signs come from the assignment", entry)
                indices += [elements.index(name)] * exp
            provided[assignment] = tuple(indices)
        return provided


def run_scenario(path: str, depth: Optional[int] = None, threads: int = 1, default_depth: int = 6,
                 handler: Optional[FileHandler] = None) -> ScenarioReport:
    """
    Execute one scenario file

    Args:
        path: scenario file
        depth: overrides the scenario depth
        threads: worker threads for the cone search
        default_depth: used when neither the flag nor the file sets a depth

    Raises:
        ScenarioError: unreadable or invalid input (exit code 3)
    """
    handler = handler or FileHandler()
    scenario = handler.read_scenario(path)
    context = _Context(scenario)
    group_text = " ".join((scenario.group_kind,) + scenario.group_args)
    report = ScenarioReport(scenario.name, group_text, dict(context.checks), expect=scenario.expect)

    for i, entry in enumerate(scenario.identities, 1):
        element = _parse_in(scenario, entry, context.group.parse)
        report.checks[f"identity {i}: {entry.text}"] = _criterion(
            context.group.is_identity(element), "equals 1" if context.group.is_identity(element) else "not 1")
    for i, entry in enumerate(scenario.nontrivials, 1):
        element = _parse_in(scenario, entry, context.group.parse)
        trivial = context.group.is_identity(element)
        report.checks[f"nontrivial {i}: {entry.text}"] = _criterion(
            not trivial, "equals 1" if trivial else "not 1")

    elements = context.element_list()
    if elements is not None:
        search_depth = depth or scenario.depth or default_depth
        provided = context.witnesses(elements)
        try:
            if scenario.mode == "construct":
                if provided:
                    raise scenario.error("construct mode builds its own witnesses; drop the witness lines")
                constructed = construct_conjugate_witnesses(context.a_words, context.b_words)
                unmatched = [a for a in all_assignments(len(elements)) if a not in constructed]
                report.checks["constructed assignments"] = _criterion(
                    True, f"{len(constructed)} of {len(constructed) + len(unmatched)} assignments constructed",
                    searched=[str(a) for a in unmatched])
                report.cone = cone_refute(elements, search_depth, mode="bfs", provided=constructed,
                                          threads=threads, source="constructed", reported_only=unmatched)
            else:
                report.cone = cone_refute(elements, search_depth, mode=scenario.mode, provided=provided,
                                          threads=threads)
        except ScenarioError:
            raise
        except HnnLabError as e:
            raise scenario.error(str(e)) from e

    status = "✅" if report.exit_code == EXIT_OK else "❌"
    logger.info(f"{status} {scenario.name}: {report.verdict} (exit {report.exit_code})")
    return report

"""
HNN Order Lab - Cone Search Module
Refuting left-orderability one sign assignment at a time

For a list g_1..g_k of nonidentity elements and signs ε, a product of
the g_i^{ε_i} (repetitions allowed) equal to 1 shows that no left order
makes every g_i^{ε_i} positive. A table of such witnesses for all 2^k
assignments shows the group is not left-orderable. An exhausted search
shows nothing.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import pandas as pd

from .exceptions import ConeSearchError

logger = logging.getLogger(__name__)

REFUTED = "NOT-LEFT-ORDERABLE"
INCONCLUSIVE = "INCONCLUSIVE"
CHECKS_ONLY = "CHECKS-ONLY"

VERIFIED = "verified"
EXHAUSTED = "exhausted"
FAILED = "failed"
MISSING = "missing"

MODES = ("bfs", "verify")
ONE_SIDED_NOTE = ("an exhausted search is not evidence of left-orderability; "
                  "only verified witnesses carry information")


@dataclass(frozen=True)
class SignAssignment:
    """ε ∈ {±1}^k"""

    signs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if not self.signs or any(s not in (1, -1) for s in self.signs):
            raise ConeSearchError(f"sign assignment must be a nonempty ±1 vector, got {self.signs}")

    def __len__(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return ",".join("+" if s > 0 else "-" for s in self.signs)

    def negated(self) -> "SignAssignment":
        return SignAssignment(tuple(-s for s in self.signs))

    @classmethod
    def parse(cls, text: str) -> "SignAssignment":
        signs = []
        for token in text.replace(" ", "").split(","):
            if token in ("+", "+1", "1"):
                signs.append(1)
            elif token in ("-", "-1"):
                signs.append(-1)
            else:
                raise ConeSearchError(f"invalid sign {token!r} in {text!r}")
        return cls(tuple(signs))


def all_assignments(k: int) -> List[SignAssignment]:
    """Canonical order: itertools.product((1, -1), repeat=k)"""
    return [SignAssignment(signs) for signs in itertools.product((1, -1), repeat=k)]


@dataclass(frozen=True)
class WitnessCertificate:
    """Index sequence into the element list; each index used with its assigned sign"""

    assignment: SignAssignment
    product: Tuple[int, ...]
    verified: bool
    source: str = "search"

    @property
    def length(self) -> int:
        return len(self.product)

    def describe(self, names: Sequence[str]) -> str:
        parts = []
        for i in self.product:
            parts.append(names[i] if self.assignment.signs[i] > 0 else f"{names[i]}^-1")
        return " ".join(parts)


@dataclass
class ElementList:
    """Named nonidentity elements of one group backend"""

    group: Any
    names: Tuple[str, ...]
    elements: Tuple[Any, ...]

    def __post_init__(self):
        self.names = tuple(self.names)
        self.elements = tuple(self.elements)
        if not self.elements:
            raise ConeSearchError("element list is empty")
        if len(self.names) != len(self.elements):
            raise ConeSearchError(f"{len(self.names)} names for {len(self.elements)} elements")
        if len(set(self.names)) != len(self.names):
            raise ConeSearchError(f"duplicate element names in {self.names}")
        for name, element in zip(self.names, self.elements):
            if self.group.is_identity(element):
                raise ConeSearchError(f"element {name} is the identity")

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ConeSearchError(f"unknown element {name!r}") from None

    def signed(self, assignment: SignAssignment) -> List[Any]:
        if len(assignment) != len(self):
            raise ConeSearchError(f"assignment of length {len(assignment)} for {len(self)} elements")
        return [g if s > 0 else self.group.inv(g) for g, s in zip(self.elements, assignment.signs)]


@dataclass(frozen=True)
class AssignmentResult:
    assignment: SignAssignment
    status: str
    witness: Optional[WitnessCertificate] = None
    explored: int = 0
    reported_only: bool = False
    note: str = ""


@dataclass
class ConeReport:
    names: Tuple[str, ...]
    depth: int
    mode: str
    results: List[AssignmentResult] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if not self.results:
            return CHECKS_ONLY
        if all(r.status == VERIFIED for r in self.results):
            return REFUTED
        return INCONCLUSIVE

    @property
    def certificates(self) -> List[WitnessCertificate]:
        return [r.witness for r in self.results if r.status == VERIFIED]

    def counts(self) -> Dict[str, int]:
        counts = {status: 0 for status in (VERIFIED, EXHAUSTED, FAILED, MISSING)}
        for result in self.results:
            counts[result.status] += 1
        return counts

    def result_for(self, assignment: Union[SignAssignment, Sequence[int]]) -> AssignmentResult:
        if not isinstance(assignment, SignAssignment):
            assignment = SignAssignment(tuple(assignment))
        for result in self.results:
            if result.assignment == assignment:
                return result
        raise KeyError(str(assignment))

    def _row(self, result: AssignmentResult) -> Dict[str, Any]:
        witness = result.witness
        return {
            "signs": str(result.assignment),
            "status": result.status,
            "length": witness.length if witness else None,
            "witness": list(witness.product) if witness else None,
            "witness_text": witness.describe(self.names) if witness else None,
            "verified": bool(witness and witness.verified),
            "source": witness.source if witness else None,
            "explored": result.explored,
            "reported_only": result.reported_only,
            "note": result.note,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            "elements": list(self.names),
            "depth": self.depth,
            "mode": self.mode,
            "verdict": self.verdict,
            "counts": self.counts(),
            "note": ONE_SIDED_NOTE,
            "assignments": [self._row(r) for r in self.results],
        }

    def to_frame(self) -> pd.DataFrame:
        columns = ["signs", "status", "length", "witness_text", "source", "explored", "reported_only"]
        return pd.DataFrame([self._row(r) for r in self.results], columns=columns)


def verify_witness(elements: ElementList, assignment: SignAssignment, product: Sequence[int],
                   source: str = "provided") -> WitnessCertificate:
    """
    Replay a product through the word problem

    Raises:
        ConeSearchError: empty product or an index outside the list
    """
    product = tuple(int(i) for i in product)
    if not product:
        raise ConeSearchError(f"empty witness for assignment {assignment}")
    for i in product:
        if not 0 <= i < len(elements):
            raise ConeSearchError(f"witness index {i} outside the element list")
    group = elements.group
    signed = elements.signed(assignment)
    value = group.identity()
    for i in product:
        value = group.mul(value, signed[i])
    return WitnessCertificate(assignment, product, bool(group.is_identity(value)), source)


def search_assignment(elements: ElementList, assignment: SignAssignment, depth: int) -> AssignmentResult:
    """Breadth-first search over right products, pruning repeated canonical keys"""
    group = elements.group
    signed = elements.signed(assignment)
    start = group.identity()
    visited = {group.key(start)}
    frontier: List[Tuple[Any, Tuple[int, ...]]] = [(start, ())]
    for _ in range(depth):
        next_frontier = []
        for value, path in frontier:
            for i, g in enumerate(signed):
                product = group.mul(value, g)
                if group.is_identity(product):
                    witness = WitnessCertificate(assignment, path + (i,), True, "search")
                    return AssignmentResult(assignment, VERIFIED, witness, explored=len(visited))
                key = group.key(product)
                if key in visited:
                    continue
                visited.add(key)
                next_frontier.append((product, path + (i,)))
        frontier = next_frontier
        if not frontier:
            break
    return AssignmentResult(assignment, EXHAUSTED, None, explored=len(visited),
                            note=f"no witness up to length {depth}")


def _evaluate(elements: ElementList, assignment: SignAssignment, depth: int, mode: str,
              provided: Optional[Sequence[int]], source: str, reported_only: bool) -> AssignmentResult:
    if provided is not None:
        witness = verify_witness(elements, assignment, provided, source)
        if witness.verified:
            return AssignmentResult(assignment, VERIFIED, witness, reported_only=reported_only)
        logger.warning(f"❌ Witness for {assignment} does not evaluate to the identity")
        return AssignmentResult(assignment, FAILED, witness, reported_only=reported_only,
                                note="witness does not evaluate to the identity")
    if mode == "verify":
        return AssignmentResult(assignment, MISSING, None, reported_only=reported_only,
                                note="no witness provided")
    result = search_assignment(elements, assignment, depth)
    if reported_only:
        result = AssignmentResult(result.assignment, result.status, result.witness,
                                  result.explored, True, result.note)
    return result


def _normalize_provided(provided: Optional[Mapping], k: int) -> Dict[SignAssignment, Tuple[int, ...]]:
    normalized: Dict[SignAssignment, Tuple[int, ...]] = {}
    for assignment, product in (provided or {}).items():
        if not isinstance(assignment, SignAssignment):
            assignment = SignAssignment(tuple(assignment))
        if len(assignment) != k:
            raise ConeSearchError(f"witness for {assignment} has {len(assignment)} signs, expected {k}")
        normalized[assignment] = tuple(product)
    return normalized


def cone_refute(elements: ElementList, depth: int, mode: str = "bfs",
                provided: Optional[Mapping] = None, threads: int = 1, source: str = "provided",
                reported_only: Sequence = ()) -> ConeReport:
    """
    Look for an identity product under every sign assignment

    Args:
        elements: the element list (group backend attached)
        depth: maximum product length for the search
        mode: "bfs" searches where no witness is given, "verify" only checks witnesses
        provided: assignment -> index sequence, checked before any search
        threads: worker threads; the report does not depend on it
        source: label recorded on provided witnesses
        reported_only: assignments whose outcome is recorded without a claim

    Returns:
        ConeReport in canonical assignment order
    """
    if mode not in MODES:
        raise ConeSearchError(f"unknown mode {mode!r}; expected one of {MODES}")
    if depth < 1:
        raise ConeSearchError(f"depth must be at least 1, got {depth}")
    k = len(elements)
    witnesses = _normalize_provided(provided, k)
    flagged = {a if isinstance(a, SignAssignment) else SignAssignment(tuple(a)) for a in reported_only}
    assignments = all_assignments(k)
    logger.info(f"🔍 Checking {len(assignments)} sign assignments over {', '.join(elements.names)} "
                f"(mode {mode}, depth {depth}, threads {threads})")

    def job(assignment: SignAssignment) -> AssignmentResult:
        return _evaluate(elements, assignment, depth, mode, witnesses.get(assignment), source,
                         assignment in flagged)

    results: List[Optional[AssignmentResult]] = [None] * len(assignments)
    if threads <= 1:
        for position, assignment in enumerate(assignments):
            results[position] = job(assignment)
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            futures = {executor.submit(job, a): position for position, a in enumerate(assignments)}
            for future in as_completed(futures):
                results[futures[future]] = future.result()

    report = ConeReport(elements.names, depth, mode, list(results))
    logger.info(f"📊 {report.counts()} -> {report.verdict}")
    return report

"""
HNN Order Lab - Certificate Builders
Witness tables for the three non-left-orderable constructions

Conjugate lists have the shape [l_1..l_r, t l_1 t⁻¹..t l_r t⁻¹] where l_i
are the base letters. If W is a generator of A (or its inverse) spelled
positively in the signs of the conjugates, then t W t⁻¹ = φ(W), and the
product (t W t⁻¹)·φ(W)⁻¹ = 1 is a witness whenever φ(W)⁻¹ is spelled
positively in the signs of the base letters.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from .cone_search import ConeReport, ElementList, SignAssignment, VERIFIED, all_assignments, cone_refute
from .exceptions import CertificationError, HnnLabError
from .gamma_group import f_family_words, g_family_words, gamma_eval
from .groups import PolycyclicGroup
from .heisenberg import GElement
from .hnn import HnnExtension, free_extension, gamma_extension
from .words import Alphabet, Word, invert, is_positive_word, sign_pattern

logger = logging.getLogger(__name__)

FREE_ALPHABET = Alphabet(("a", "b"))
# signs of (a, b) in u_1..u_8 and v_1..v_8
U_PATTERNS = ((1, 1),) * 4 + ((1, -1),) * 4
V_PATTERNS = ((1, 1), (1, -1), (-1, 1), (-1, -1)) * 2
DEFAULT_SEQUENCE = tuple(range(1, 9))

POLYCYCLIC_NAMES = ("t", "y", "tu", "tw")
POLYCYCLIC_ELEMENTS = (
    GElement(1, 0, 0, 0),   # t
    GElement(0, 0, 1, 0),   # y
    GElement(1, 2, 0, 0),   # t x^2
    GElement(1, -2, 0, 0),  # t x^-2
)


def free_hnn_words(p: Sequence[int], q: Sequence[int], r: Sequence[int],
                   s: Sequence[int]) -> Tuple[Tuple[Word, ...], Tuple[Word, ...]]:
    """u_i = a^{±p_i} b^{±q_i} and v_i = a^{±r_i} b^{±s_i} with the fixed sign patterns"""
    u = tuple(FREE_ALPHABET.word([("a", ea * p_i), ("b", eb * q_i)])
              for (ea, eb), p_i, q_i in zip(U_PATTERNS, p, q))
    v = tuple(FREE_ALPHABET.word([("a", ea * r_i), ("b", eb * s_i)])
              for (ea, eb), r_i, s_i in zip(V_PATTERNS, r, s))
    return u, v


def conjugate_names(letters: Sequence[str], stable: str = "t") -> Tuple[str, ...]:
    return tuple(letters) + tuple(f"{stable}{letter}" for letter in letters)


def conjugate_elements(extension: HnnExtension) -> ElementList:
    """[l_1..l_r, t l_1 t⁻¹..t l_r t⁻¹] for the base letters of the extension"""
    letters = tuple(extension.base.letters)
    elements = [extension.parse(letter) for letter in letters]
    elements += [extension.parse(f"{extension.stable} {letter} {extension.stable}^-1") for letter in letters]
    return ElementList(extension, conjugate_names(letters, extension.stable), elements)


def _signed_subset(alphabet: Alphabet, signs: Sequence[int]) -> List[Tuple[str, int]]:
    return list(zip(alphabet.names, signs))


def _letter_indices(w: Word, offset: int) -> List[int]:
    return [offset + gen for gen, _ in w.letters()]


def construct_conjugate_witnesses(a_words: Sequence[Word],
                                  b_words: Sequence[Word]) -> Dict[SignAssignment, Tuple[int, ...]]:
    """
    Pattern-selection witnesses over the conjugate list of the words' alphabet

    Generators are tried in order, each as A_j then A_j⁻¹; assignments no
    pair covers are left out of the result.
    """
    alphabet = a_words[0].alphabet
    r = len(alphabet)
    witnesses: Dict[SignAssignment, Tuple[int, ...]] = {}
    for assignment in all_assignments(2 * r):
        base_subset = _signed_subset(alphabet, assignment.signs[:r])
        conj_subset = _signed_subset(alphabet, assignment.signs[r:])
        for a_word, b_word in zip(a_words, b_words):
            chosen = None
            for w, v in ((a_word, invert(b_word)), (invert(a_word), b_word)):
                if is_positive_word(w, conj_subset) and is_positive_word(v, base_subset):
                    chosen = _letter_indices(w, r) + _letter_indices(v, 0)
                    break
            if chosen is not None:
                witnesses[assignment] = tuple(chosen)
                break
    return witnesses


def sign_pattern_table(words: Sequence[Word], prefix: str) -> Dict[str, Optional[str]]:
    """Sign pattern of each word, e.g. {'v1': '+,+', 'v2': '+,-'}; None when mixed"""
    table = {}
    for i, w in enumerate(words, 1):
        pattern = sign_pattern(w)
        table[f"{prefix}{i}"] = None if pattern is None else ",".join("+" if e > 0 else "-" for e in pattern)
    return table


def _require_all_verified(report: ConeReport, label: str, only: Optional[Sequence[SignAssignment]] = None):
    for result in report.results:
        if only is not None and result.assignment not in only:
            continue
        if result.status != VERIFIED:
            raise CertificationError(f"{label}: constructed witness for {result.assignment} "
                                     f"is {result.status}")


def certify_free_hnn(p: Sequence[int] = DEFAULT_SEQUENCE, q: Sequence[int] = DEFAULT_SEQUENCE,
                     r: Sequence[int] = DEFAULT_SEQUENCE, s: Sequence[int] = DEFAULT_SEQUENCE,
                     threads: int = 1) -> ConeReport:
    """
    Witnesses for all 16 assignments over {a, b, tat⁻¹, tbt⁻¹} in the
    HNN extension of F(a, b) pairing u_i with v_i

    Raises:
        CertificationError: non-increasing sequences, rank deficiency or
            a constructed witness that fails the word problem
    """
    for label, sequence in (("p", p), ("q", q), ("r", r), ("s", s)):
        if len(sequence) != 8:
            raise CertificationError(f"sequence {label} needs 8 entries, got {len(sequence)}")
        if sequence[0] < 1 or any(b <= a for a, b in zip(sequence, sequence[1:])):
            raise CertificationError(f"sequence {label} must be positive and strictly increasing: {list(sequence)}")
    u, v = free_hnn_words(p, q, r, s)
    try:
        extension = free_extension(FREE_ALPHABET, u, v, name="free-hnn")
    except HnnLabError as e:
        raise CertificationError(f"free-hnn: {e}") from e
    logger.info(f"✅ Subgroups A and B both have rank {extension.a_oracle.rank()}")

    witnesses = construct_conjugate_witnesses(u, v)
    if len(witnesses) != 16:
        raise CertificationError(f"free-hnn: only {len(witnesses)} of 16 assignments have a construction")
    elements = conjugate_elements(extension)
    depth = max(len(w) for w in witnesses.values())
    report = cone_refute(elements, depth, mode="verify", provided=witnesses, threads=threads,
                         source="constructed")
    _require_all_verified(report, "free-hnn")
    return report


def gamma_hnn_extension(n: int) -> HnnExtension:
    a_elements = [gamma_eval(n, w) for w in f_family_words(n)]
    b_elements = [gamma_eval(n, w) for w in g_family_words(n)]
    return gamma_extension(n, a_elements, b_elements, name=f"gamma-hnn({n})")


def certify_gamma_hnn(n: int = 12, depth: int = 6, threads: int = 1) -> ConeReport:
    """
    Witnesses over {s, x, tst⁻¹, txt⁻¹} in the HNN extension of Γₙ pairing
    f_j with g_j. The 8 assignments giving the conjugates one common sign
    are constructed; the other 8 are searched to `depth` and only reported.
    """
    if n < 12:
        raise CertificationError(f"gamma-hnn needs n >= 12, got {n}")
    try:
        extension = gamma_hnn_extension(n)
    except HnnLabError as e:
        raise CertificationError(f"gamma-hnn: {e}") from e
    f_words, g_words = f_family_words(n), g_family_words(n)
    witnesses = construct_conjugate_witnesses(f_words, g_words)
    unmixed = [a for a in all_assignments(4) if a.signs[2] == a.signs[3]]
    if sorted(witnesses, key=str) != sorted(unmixed, key=str):
        raise CertificationError(f"gamma-hnn: constructions cover {len(witnesses)} assignments, expected the 8 unmixed ones")
    mixed = [a for a in all_assignments(4) if a not in witnesses]
    report = cone_refute(conjugate_elements(extension), depth, mode="bfs", provided=witnesses,
                         threads=threads, source="constructed", reported_only=mixed)
    _require_all_verified(report, "gamma-hnn", only=unmixed)
    found = sum(1 for a in mixed if report.result_for(a).status == VERIFIED)
    logger.info(f"📊 gamma-hnn: 8/8 constructed, {found}/8 mixed assignments found by search")
    return report


def polycyclic_elements() -> ElementList:
    return ElementList(PolycyclicGroup(), POLYCYCLIC_NAMES, POLYCYCLIC_ELEMENTS)


def certify_polycyclic_example(depth: int = 6, threads: int = 1) -> ConeReport:
    """Search over {t, y, tx², tx⁻²} in Γ = ⟨t, x², y⟩ ≤ G"""
    if depth < 6:
        logger.warning(f"⚠️ Depth {depth} is below 6; some assignments need witnesses of length 6")
    return cone_refute(polycyclic_elements(), depth, mode="bfs", threads=threads)

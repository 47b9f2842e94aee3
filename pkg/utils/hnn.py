"""
HNN Order Lab - HNN Extension Module
HNN extensions (G, A, B, t, φ) and Britton reduction

φ is never tabulated: φ(a) = B.evaluate(A.coords(a)) with the coordinate
word re-spelled over B's symbols, so generator i of A maps to generator
i of B. An extension is itself a group backend (see utils.groups), so
cone search runs over it unchanged.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, List, Sequence, Tuple

from .exceptions import BrittonError, ExtensionMismatchError, NotAMemberError
from .gamma_group import GammaElement
from .groups import CyclicGroup, CyclicSubgroup, FreeGroup, GammaGroup
from .lattice import lattice_build
from .stallings import build_subgroup_graph
from .words import NAME_PATTERN, Word, parse_syllables

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HnnWord:
    """b₀ t^{ε₁} b₁ ... t^{ε_k} b_k"""

    bases: Tuple[Any, ...]
    signs: Tuple[int, ...]
    extension: Any = field(default=None, compare=False, repr=False, hash=False)
    reduced: bool = field(default=False, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if len(self.bases) != len(self.signs) + 1:
            raise ValueError(f"{len(self.signs)} stable letters need {len(self.signs) + 1} base elements")
        if any(sign not in (1, -1) for sign in self.signs):
            raise ValueError(f"stable letter exponents must be ±1, got {self.signs}")

    @property
    def t_length(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return self.extension.format(self) if self.extension is not None else repr(self)

    def __mul__(self, other: "HnnWord") -> "HnnWord":
        return hnn_mul(self, other)


class HnnExtension:
    """
    ⟨G, t | t a t⁻¹ = φ(a), a ∈ A⟩ over a base backend and two subgroup oracles

    Oracles provide contains, coords (Word over their symbols), evaluate
    and generators; A and B are paired generator by generator.
    """

    def __init__(self, base, a_oracle, b_oracle, stable: str = "t", name: str = ""):
        if len(a_oracle.generators) != len(b_oracle.generators):
            raise ExtensionMismatchError(
                f"A has {len(a_oracle.generators)} generators, B has {len(b_oracle.generators)}")
        if not NAME_PATTERN.fullmatch(stable):
            raise ExtensionMismatchError(f"invalid stable letter {stable!r}")
        if stable in base.letters:
            raise ExtensionMismatchError(f"stable letter {stable!r} clashes with a base generator")
        self.base = base
        self.a_oracle = a_oracle
        self.b_oracle = b_oracle
        self.stable = stable
        self.letters = tuple(base.letters) + (stable,)
        self.name = name or f"hnn({base.name})"

    def __repr__(self) -> str:
        return f"HnnExtension({self.name}, stable={self.stable!r}, pairs={len(self.a_oracle.generators)})"

    def _transfer(self, element, source, target):
        coords = source.coords(element)
        return target.evaluate(Word(target.symbols, coords.syllables))

    def phi(self, a):
        """φ(a) for a ∈ A"""
        return self._transfer(a, self.a_oracle, self.b_oracle)

    def phi_inverse(self, b):
        """φ⁻¹(b) for b ∈ B"""
        return self._transfer(b, self.b_oracle, self.a_oracle)

    # group protocol

    def word(self, bases: Sequence[Any], signs: Sequence[int], reduced: bool = False) -> HnnWord:
        return HnnWord(tuple(bases), tuple(signs), self, reduced)

    def from_base(self, element) -> HnnWord:
        return self.word((element,), (), reduced=True)

    def identity(self) -> HnnWord:
        return self.from_base(self.base.identity())

    def stable_letter(self, sign: int = 1) -> HnnWord:
        unit = self.base.identity()
        return self.word((unit, unit), (sign,), reduced=True)

    def _check(self, w: HnnWord):
        if w.extension is not self:
            raise ExtensionMismatchError(f"word does not belong to {self}")

    def _absorb(self, bases: List[Any], signs: List[int], tail_signs: Sequence[int], tail_bases: Sequence[Any]):
        """Push t^ε b pairs onto a pinch-free stack, collapsing pinches as they appear"""
        base = self.base
        for sign, element in zip(tail_signs, tail_bases):
            if signs and signs[-1] == -sign:
                middle = bases[-1]
                oracle = self.a_oracle if signs[-1] == 1 else self.b_oracle
                if oracle.contains(middle):
                    try:
                        image = self.phi(middle) if signs[-1] == 1 else self.phi_inverse(middle)
                    except NotAMemberError as e:
                        raise BrittonError(f"oracle accepted {base.format(middle)} but has no coordinates: {e}") from e
                    signs.pop()
                    bases.pop()
                    bases[-1] = base.mul(base.mul(bases[-1], image), element)
                    continue
            signs.append(sign)
            bases.append(element)

    def britton_reduce(self, w: HnnWord) -> HnnWord:
        """Remove pinches t·a·t⁻¹ (a ∈ A) and t⁻¹·b·t (b ∈ B), leftmost first"""
        self._check(w)
        if w.reduced:
            return w
        bases: List[Any] = [w.bases[0]]
        signs: List[int] = []
        self._absorb(bases, signs, w.signs, w.bases[1:])
        return self.word(bases, signs, reduced=True)

    def mul(self, w1: HnnWord, w2: HnnWord) -> HnnWord:
        self._check(w2)
        left = self.britton_reduce(w1)
        bases = list(left.bases)
        signs = list(left.signs)
        bases[-1] = self.base.mul(bases[-1], w2.bases[0])
        self._absorb(bases, signs, w2.signs, w2.bases[1:])
        return self.word(bases, signs, reduced=True)

    def inv(self, w: HnnWord) -> HnnWord:
        self._check(w)
        bases = tuple(self.base.inv(b) for b in reversed(w.bases))
        signs = tuple(-s for s in reversed(w.signs))
        return self.britton_reduce(self.word(bases, signs))

    def is_identity(self, w: HnnWord) -> bool:
        reduced = self.britton_reduce(w)
        return not reduced.signs and self.base.is_identity(reduced.bases[0])

    def key(self, w: HnnWord) -> Any:
        reduced = self.britton_reduce(w)
        return tuple(self.base.key(b) for b in reduced.bases), reduced.signs

    def parse(self, text: str, line: int = 0) -> HnnWord:
        """Base letters and the stable letter interleaved, e.g. `t a^2 t^-1 b`"""
        bases: List[Any] = []
        signs: List[int] = []
        chunk: List[Tuple[str, int]] = []
        for name, exp in parse_syllables(text, line=line):
            if name != self.stable:
                chunk.append((name, exp))
                continue
            for _ in range(abs(exp)):
                bases.append(self.base.evaluate(chunk))
                signs.append(1 if exp > 0 else -1)
                chunk = []
        bases.append(self.base.evaluate(chunk))
        return self.britton_reduce(self.word(bases, signs))

    def format(self, w: HnnWord) -> str:
        parts = []
        for i, element in enumerate(w.bases):
            if not self.base.is_identity(element):
                parts.append(self.base.format(element))
            if i < len(w.signs):
                parts.append(self.stable if w.signs[i] == 1 else f"{self.stable}^-1")
        return " ".join(parts) if parts else "1"


def britton_reduce(w: HnnWord) -> HnnWord:
    return w.extension.britton_reduce(w)


def hnn_is_identity(w: HnnWord) -> bool:
    return w.extension.is_identity(w)


def hnn_mul(w1: HnnWord, w2: HnnWord) -> HnnWord:
    if w1.extension is not w2.extension:
        raise ExtensionMismatchError("cannot multiply words of different extensions")
    return w1.extension.mul(w1, w2)


def hnn_inv(w: HnnWord) -> HnnWord:
    return w.extension.inv(w)


def free_extension(alphabet, a_words: Sequence[Word], b_words: Sequence[Word], stable: str = "t",
                   name: str = "") -> HnnExtension:
    """HNN extension of a free group over Stallings oracles for A and B"""
    a_graph = build_subgroup_graph(a_words, symbol_prefix="U")
    b_graph = build_subgroup_graph(b_words, symbol_prefix="V")
    for label, graph in (("A", a_graph), ("B", b_graph)):
        if graph.rank() != len(graph.generators):
            raise ExtensionMismatchError(
                f"{label} has rank {graph.rank()} but {len(graph.generators)} generators; "
                f"pairing generators would not define an isomorphism")
    logger.debug(f"📊 Free extension: rank A = {a_graph.rank()}, rank B = {b_graph.rank()}")
    return HnnExtension(FreeGroup(alphabet), a_graph, b_graph, stable, name)


def gamma_extension(n: int, a_elements: Sequence[GammaElement], b_elements: Sequence[GammaElement],
                    stable: str = "t", name: str = "") -> HnnExtension:
    """HNN extension of Γₙ over lattice oracles for A and B"""
    a_basis = lattice_build(a_elements, symbol_prefix="F")
    b_basis = lattice_build(b_elements, symbol_prefix="G")
    for label, basis in (("A", a_basis), ("B", b_basis)):
        if not basis.independent:
            raise ExtensionMismatchError(
                f"{label} has rank {basis.rank} but {len(basis.generators)} generators")
    return HnnExtension(GammaGroup(n), a_basis, b_basis, stable, name)


def cyclic_extension(m: int, n: int, letter: str = "a", stable: str = "t", name: str = "") -> HnnExtension:
    """⟨stable, letter | stable·letter^m·stable⁻¹ = letter^n⟩"""
    return HnnExtension(CyclicGroup(letter), CyclicSubgroup(m), CyclicSubgroup(n), stable,
                        name or f"⟨{stable}, {letter} | {stable} {letter}^{m} {stable}^-1 = {letter}^{n}⟩")

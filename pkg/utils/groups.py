"""
HNN Order Lab - Group Backends
Uniform adapters over the concrete groups

Every backend exposes: name, identity(), mul(a, b), inv(a),
is_identity(a), key(a) (hashable, equal keys mean equal elements),
parse(text, line), format(a). Backends usable as HNN bases also provide
letters and evaluate(syllables) for raw (name, exponent) runs.
"""

import logging
from typing import Any, Iterable, Tuple

from .exceptions import AlphabetError, NotAMemberError, SizeMismatchError
from .gamma_group import GAMMA_ALPHABET, GammaElement, gamma_eval, gamma_identity, gamma_inv, gamma_mul
from .heisenberg import G_LETTERS, GElement, IDENTITY, g_eval, g_inv, g_mul
from .unipotent import UnipotentMatrix, parse_matrix, u_identity, u_inv, u_mul
from .words import Alphabet, Word, invert, multiply, parse_syllables, reduce_word

logger = logging.getLogger(__name__)

RawSyllables = Iterable[Tuple[str, int]]


class FreeGroup:
    """Free group on an alphabet; elements are reduced Words"""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.letters = alphabet.names
        self.name = f"free{alphabet}"

    def identity(self) -> Word:
        return self.alphabet.identity()

    def mul(self, a: Word, b: Word) -> Word:
        return multiply(a, b)

    def inv(self, a: Word) -> Word:
        return invert(a)

    def is_identity(self, a: Word) -> bool:
        return a.is_identity

    def key(self, a: Word) -> Any:
        return a.syllables

    def evaluate(self, syllables: RawSyllables) -> Word:
        return reduce_word(self.alphabet, syllables)

    def parse(self, text: str, line: int = 0) -> Word:
        return self.alphabet.parse(text, line=line)

    def format(self, a: Word) -> str:
        return str(a)


class GammaGroup:
    """Γₙ with canonical-form elements"""

    letters = GAMMA_ALPHABET.names

    def __init__(self, n: int):
        self.n = n
        self.name = f"gamma{n}"

    def identity(self) -> GammaElement:
        return gamma_identity(self.n)

    def mul(self, a: GammaElement, b: GammaElement) -> GammaElement:
        return gamma_mul(a, b)

    def inv(self, a: GammaElement) -> GammaElement:
        return gamma_inv(a)

    def is_identity(self, a: GammaElement) -> bool:
        return a.is_identity

    def key(self, a: GammaElement) -> Any:
        return a.vector()

    def evaluate(self, syllables: RawSyllables) -> GammaElement:
        return gamma_eval(self.n, list(syllables))

    def parse(self, text: str, line: int = 0) -> GammaElement:
        return gamma_eval(self.n, parse_syllables(text, line=line))

    def format(self, a: GammaElement) -> str:
        """Spell the canonical form as s^i x_0^{p_0} ... with x_k = s^k x s^-k"""
        raw = [("s", a.shift)]
        for k, p in enumerate(a.exps):
            if p:
                raw += [("s", k), ("x", p), ("s", -k)]
        return str(reduce_word(GAMMA_ALPHABET, raw))


class CyclicGroup:
    """ℤ written multiplicatively on one letter; elements are integers"""

    def __init__(self, letter: str = "a"):
        self.alphabet = Alphabet((letter,))
        self.letter = letter
        self.letters = (letter,)
        self.name = f"cyclic({letter})"

    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return a + b

    def inv(self, a: int) -> int:
        return -a

    def is_identity(self, a: int) -> bool:
        return a == 0

    def key(self, a: int) -> Any:
        return a

    def evaluate(self, syllables: RawSyllables) -> int:
        total = 0
        for name, exp in syllables:
            if name != self.letter:
                raise AlphabetError(f"generator {name!r} is not {self.letter!r}")
            total += exp
        return total

    def parse(self, text: str, line: int = 0) -> int:
        return self.evaluate(parse_syllables(text, line=line))

    def format(self, a: int) -> str:
        return str(self.alphabet.generator(self.letter, a))


class CyclicSubgroup:
    """Subgroup ⟨a^generator⟩ of a cyclic group; coordinates over C1"""

    def __init__(self, generator: int, symbol_prefix: str = "C"):
        if generator == 0:
            raise ValueError("cyclic subgroup generator must be nonzero")
        self.generator = generator
        self.generators = (generator,)
        self.symbols = Alphabet((f"{symbol_prefix}1",))

    def contains(self, a: int) -> bool:
        return a % self.generator == 0

    def coords(self, a: int) -> Word:
        if not self.contains(a):
            raise NotAMemberError(f"{a} is not a multiple of {self.generator}")
        return reduce_word(self.symbols, [(0, a // self.generator)])

    def evaluate(self, coords: Word) -> int:
        return sum(e for _, e in coords.syllables) * self.generator


class PolycyclicGroup:
    """G = ⟨t, x, y, z⟩ with normal-form elements"""

    letters = G_LETTERS
    name = "polycyclic"

    def identity(self) -> GElement:
        return IDENTITY

    def mul(self, a: GElement, b: GElement) -> GElement:
        return g_mul(a, b)

    def inv(self, a: GElement) -> GElement:
        return g_inv(a)

    def is_identity(self, a: GElement) -> bool:
        return a.is_identity

    def key(self, a: GElement) -> Any:
        return a.tbit, a.m, a.q, a.r

    def evaluate(self, syllables: RawSyllables) -> GElement:
        return g_eval(list(syllables))

    def parse(self, text: str, line: int = 0) -> GElement:
        return g_eval(parse_syllables(text, line=line))

    def format(self, a: GElement) -> str:
        return str(a)


class UnipotentGroup:
    """Uₘ over the rationals; elements are written as matrix literals"""

    def __init__(self, m: int):
        self.m = m
        self.name = f"unipotent{m}"

    def identity(self) -> UnipotentMatrix:
        return u_identity(self.m)

    def mul(self, a: UnipotentMatrix, b: UnipotentMatrix) -> UnipotentMatrix:
        return u_mul(a, b)

    def inv(self, a: UnipotentMatrix) -> UnipotentMatrix:
        return u_inv(a)

    def is_identity(self, a: UnipotentMatrix) -> bool:
        return a.is_identity

    def key(self, a: UnipotentMatrix) -> Any:
        return a.key()

    def parse(self, text: str, line: int = 0) -> UnipotentMatrix:
        matrix = parse_matrix(text)
        if matrix.m != self.m:
            raise SizeMismatchError(f"expected a {self.m}×{self.m} matrix, got {matrix.m}×{matrix.m}")
        return matrix

    def format(self, a: UnipotentMatrix) -> str:
        return f"[{a}]"

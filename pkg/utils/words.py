"""
HNN Order Lab - Word Core Module
Freely reduced words over named alphabets

Words are stored as syllables (generator index, nonzero exponent) so that
large powers such as a^{p_8} cost one entry. Text form: `a^3 b^-2`, the
identity prints as `1`, parentheses group factors: `s^4 (x s)^8`.
"""

import logging
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .exceptions import AlphabetError, WordSyntaxError

logger = logging.getLogger(__name__)

NAME_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT_PATTERN = re.compile(r"[+-]?\d+")

Syllable = Tuple[int, int]
RawSyllable = Tuple[Union[str, int], int]
SignedGenerator = Tuple[str, int]


@dataclass(frozen=True)
class Alphabet:
    """Ordered list of distinct generator names"""

    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise AlphabetError("alphabet needs at least one generator")
        for name in names:
            if not isinstance(name, str) or not NAME_PATTERN.fullmatch(name):
                raise AlphabetError(f"invalid generator name: {name!r}")
        if len(set(names)) != len(names):
            raise AlphabetError(f"duplicate generator names in {names}")

    def __len__(self) -> int:
        return len(self.names)

    def __str__(self) -> str:
        return "{" + ", ".join(self.names) + "}"

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlphabetError(f"generator {name!r} not in alphabet {self}") from None

    def identity(self) -> "Word":
        return Word(self, ())

    def generator(self, name: str, exponent: int = 1) -> "Word":
        return reduce_word(self, [(name, exponent)])

    def word(self, raw: Iterable[RawSyllable]) -> "Word":
        return reduce_word(self, raw)

    def parse(self, text: str, line: int = 0) -> "Word":
        return reduce_word(self, parse_syllables(text, line=line))


@dataclass(frozen=True)
class Word:
    """Freely reduced word; syllables never repeat a generator back to back"""

    alphabet: Alphabet
    syllables: Tuple[Syllable, ...]

    def __str__(self) -> str:
        return format_syllables((self.alphabet.names[g], e) for g, e in self.syllables)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    @property
    def length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def letters(self) -> Iterator[Tuple[int, int]]:
        """Expand syllables into single letters (generator index, ±1)"""
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step

    def named_syllables(self) -> List[Tuple[str, int]]:
        return [(self.alphabet.names[g], e) for g, e in self.syllables]


def reduce_word(alphabet: Alphabet, raw: Iterable[RawSyllable]) -> Word:
    """Freely reduce a raw syllable sequence"""
    stack: List[List[int]] = []
    for gen, exp in raw:
        index = alphabet.index(gen) if isinstance(gen, str) else int(gen)
        if not 0 <= index < len(alphabet):
            raise AlphabetError(f"generator index {index} outside alphabet {alphabet}")
        exp = int(exp)
        if exp == 0:
            continue
        if stack and stack[-1][0] == index:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([index, exp])
    return Word(alphabet, tuple((g, e) for g, e in stack))


def multiply(w1: Word, w2: Word) -> Word:
    if w1.alphabet != w2.alphabet:
        raise AlphabetError(f"cannot multiply words over {w1.alphabet} and {w2.alphabet}")
    return reduce_word(w1.alphabet, w1.syllables + w2.syllables)


def invert(w: Word) -> Word:
    return Word(w.alphabet, tuple((g, -e) for g, e in reversed(w.syllables)))


def repeat_mul(element, k: int, mul, identity):
    """element^k for k >= 0 by square and multiply"""
    result = identity
    base = element
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def power(w: Word, k: int) -> Word:
    if k < 0:
        return power(invert(w), -k)
    return repeat_mul(w, k, multiply, w.alphabet.identity())


def _normalize_subset(subset: Iterable[Union[SignedGenerator, str]]) -> set:
    signed = set()
    for item in subset:
        if isinstance(item, str):
            syllables = parse_syllables(item)
            if len(syllables) != 1 or abs(syllables[0][1]) != 1:
                raise AlphabetError(f"not a signed generator: {item!r}")
            item = (syllables[0][0], syllables[0][1])
        name, sign = item
        if sign not in (1, -1):
            raise AlphabetError(f"sign must be ±1, got {sign}")
        signed.add((name, sign))
    for name, sign in signed:
        if (name, -sign) in signed:
            raise AlphabetError(f"subset contains both {name} and {name}^-1")
    return signed


def is_positive_word(w: Word, subset: Iterable[Union[SignedGenerator, str]]) -> bool:
    """
    True iff w is nonempty and every syllable is a positive power of a
    subset member; ("x", -1) or "x^-1" matches negative powers of x.
    """
    signed = _normalize_subset(subset)
    if w.is_identity:
        return False
    for g, e in w.syllables:
        if (w.alphabet.names[g], 1 if e > 0 else -1) not in signed:
            return False
    return True


def sign_pattern(w: Word) -> Optional[Tuple[int, ...]]:
    """
    Sign of each generator in w, one entry per alphabet generator (0 when
    absent), or None when a generator appears with both signs.
    """
    pattern = [0] * len(w.alphabet)
    for g, e in w.syllables:
        sign = 1 if e > 0 else -1
        if pattern[g] == -sign:
            return None
        pattern[g] = sign
    return tuple(pattern)


def substitute(w: Word, images: Sequence, mul, identity, inv):
    """Evaluate w with generator i sent to images[i] in some group"""
    result = identity
    for g, e in w.syllables:
        image = images[g] if e > 0 else inv(images[g])
        result = mul(result, repeat_mul(image, abs(e), mul, identity))
    return result


def random_word(alphabet: Alphabet, rng: np.random.Generator, max_syllables: int = 20,
                max_exponent: int = 5) -> Word:
    """Random reduced word with at most max_syllables syllables"""
    count = int(rng.integers(0, max_syllables + 1))
    raw = []
    for _ in range(count):
        exponent = int(rng.integers(1, max_exponent + 1)) * int(rng.choice((-1, 1)))
        raw.append((int(rng.integers(0, len(alphabet))), exponent))
    return reduce_word(alphabet, raw)


def format_syllables(syllables: Iterable[Tuple[str, int]]) -> str:
    parts = []
    for name, exp in syllables:
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " ".join(parts) if parts else "1"


class _WordParser:
    """Recursive descent over: word := factor* ; factor := (NAME | 1 | '(' word ')') ['^' INT]"""

    def __init__(self, text: str, line: int = 0):
        self.text = text
        self.pos = 0
        self.line = line

    def error(self, message: str) -> WordSyntaxError:
        return WordSyntaxError(message, self.text, column=self.pos + 1, line=self.line)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse(self) -> List[Tuple[str, int]]:
        items = self.sequence()
        self.skip()
        if self.pos < len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return items

    def sequence(self) -> List[Tuple[str, int]]:
        items: List[Tuple[str, int]] = []
        while True:
            self.skip()
            if self.pos >= len(self.text) or self.text[self.pos] == ")":
                return items
            items.extend(self.factor())

    def factor(self) -> List[Tuple[str, int]]:
        ch = self.text[self.pos]
        if ch == "(":
            self.pos += 1
            base = self.sequence()
            self.skip()
            if self.pos >= len(self.text) or self.text[self.pos] != ")":
                raise self.error("missing ')'")
            self.pos += 1
        else:
            match = NAME_PATTERN.match(self.text, self.pos)
            if match:
                self.pos = match.end()
                base = [(match.group(), 1)]
            elif ch == "1" and not self.text[self.pos + 1:self.pos + 2].isdigit():
                self.pos += 1
                base = []
            else:
                raise self.error(f"unexpected {ch!r}")
        return _power_syllables(base, self.exponent())

    def exponent(self) -> int:
        self.skip()
        if self.pos >= len(self.text) or self.text[self.pos] != "^":
            return 1
        self.pos += 1
        self.skip()
        braced = self.text[self.pos:self.pos + 1] == "{"
        if braced:
            self.pos += 1
        match = _INT_PATTERN.match(self.text, self.pos)
        if not match:
            raise self.error("exponent must be an integer")
        self.pos = match.end()
        if braced:
            if self.text[self.pos:self.pos + 1] != "}":
                raise self.error("missing '}'")
            self.pos += 1
        return int(match.group())


def _power_syllables(base: List[Tuple[str, int]], k: int) -> List[Tuple[str, int]]:
    if len(base) == 1:
        name, exp = base[0]
        return [(name, exp * k)] if k else []
    if k < 0:
        base = [(name, -exp) for name, exp in reversed(base)]
        k = -k
    return base * k


def parse_syllables(text: str, line: int = 0) -> List[Tuple[str, int]]:
    """Parse word text into raw (name, exponent) syllables, groups expanded"""
    return _WordParser(text, line).parse()

"""
HNN Order Lab - Gamma Group Module
Exact arithmetic in Γₙ = ⟨s, x | [sⁿ, x] = 1, [x, sⁱxs⁻ⁱ] = 1⟩ ≅ ℤ ⋉ ℤⁿ

An element is kept in canonical form s^i x_0^{p_0} ... x_{n-1}^{p_{n-1}}
with x_k = s^k x s^{-k}. Conjugation by s^{-j} shifts coordinates
cyclically, so (i, p)(j, q) = (i + j, roll(p, -j) + q).
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from .exceptions import AlphabetError, ModulusMismatchError
from .words import Alphabet, Word, parse_syllables

logger = logging.getLogger(__name__)

GAMMA_ALPHABET = Alphabet(("s", "x"))


@dataclass(frozen=True)
class GammaElement:
    """Canonical form (shift; exps) of an element of Γₙ"""

    n: int
    shift: int
    exps: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"modulus must be at least 2, got {self.n}")
        exps = tuple(int(p) for p in self.exps)
        if len(exps) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(exps)}")
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "shift", int(self.shift))

    def __str__(self) -> str:
        return f"({self.shift}; {','.join(str(p) for p in self.exps)})"

    def __mul__(self, other: "GammaElement") -> "GammaElement":
        return gamma_mul(self, other)

    @property
    def is_identity(self) -> bool:
        return self.shift == 0 and not any(self.exps)

    def vector(self) -> Tuple[int, ...]:
        """(shift ‖ exps) coordinates used by the lattice oracle"""
        return (self.shift,) + self.exps


def gamma_identity(n: int) -> GammaElement:
    return GammaElement(n, 0, (0,) * n)


def gamma_s(n: int) -> GammaElement:
    return GammaElement(n, 1, (0,) * n)


def gamma_x(n: int, index: int = 0) -> GammaElement:
    """x_index = s^index x s^-index"""
    exps = [0] * n
    exps[index % n] = 1
    return GammaElement(n, 0, tuple(exps))


def basis_vector(n: int, *indices: int) -> Tuple[int, ...]:
    exps = [0] * n
    for index in indices:
        exps[index % n] += 1
    return tuple(exps)


def _check_modulus(g: GammaElement, h: GammaElement):
    if g.n != h.n:
        raise ModulusMismatchError(f"cannot combine elements of Γ_{g.n} and Γ_{h.n}")


def _roll(exps: Sequence[int], offset: int) -> np.ndarray:
    return np.roll(np.asarray(exps, dtype=object), offset)


def gamma_mul(g: GammaElement, h: GammaElement) -> GammaElement:
    _check_modulus(g, h)
    exps = _roll(g.exps, -h.shift) + np.asarray(h.exps, dtype=object)
    return GammaElement(g.n, g.shift + h.shift, tuple(exps))


def gamma_inv(g: GammaElement) -> GammaElement:
    exps = -_roll(g.exps, g.shift)
    return GammaElement(g.n, -g.shift, tuple(exps))


def gamma_pow(g: GammaElement, k: int) -> GammaElement:
    """g^k = (ki, Σ_{j<k} roll(p, -j·i)); negative k goes through the inverse"""
    if k < 0:
        return gamma_pow(gamma_inv(g), -k)
    # roll(p, -j·i) repeats with period n / gcd(i, n)
    period = g.n // math.gcd(g.shift % g.n, g.n)
    cycles, rest = divmod(k, period)
    head = np.zeros(g.n, dtype=object)
    for j in range(rest):
        head = head + _roll(g.exps, -j * g.shift)
    total = head
    if cycles:
        cycle = head
        for j in range(rest, period):
            cycle = cycle + _roll(g.exps, -j * g.shift)
        total = cycle * cycles + head
    return GammaElement(g.n, g.shift * k, tuple(total))


def gamma_eval(n: int, w: Union[Word, str, Iterable[Tuple[str, int]]]) -> GammaElement:
    """Canonical form of a word over {s, x}"""
    if isinstance(w, Word):
        if set(w.alphabet.names) != {"s", "x"}:
            raise AlphabetError(f"Γ_n words must be over {{s, x}}, got {w.alphabet}")
        syllables = w.named_syllables()
    elif isinstance(w, str):
        syllables = parse_syllables(w)
    else:
        syllables = list(w)
    result = gamma_identity(n)
    s, x = gamma_s(n), gamma_x(n)
    for name, exp in syllables:
        if name == "s":
            letter = s
        elif name == "x":
            letter = x
        else:
            raise AlphabetError(f"generator {name!r} is not s or x")
        result = gamma_mul(result, gamma_pow(letter, exp))
    return result


def sigma(g: GammaElement) -> int:
    """Σ(g) = shift + sum of exponents; a homomorphism Γₙ → ℤ"""
    return g.shift + sum(g.exps)


def gamma_positive(g: GammaElement) -> bool:
    """
    Positive cone of the explicit left order: exponent sum > 0, or sum 0
    and shift > 0, or both 0 and the lowest-index nonzero exponent > 0.
    """
    total = sum(g.exps)
    if total != 0:
        return total > 0
    if g.shift != 0:
        return g.shift > 0
    for p in g.exps:
        if p:
            return p > 0
    return False


def gamma_compare(g: GammaElement, h: GammaElement) -> int:
    """-1, 0 or 1 for g < h, g = h, g > h with g < h iff g⁻¹h is positive"""
    _check_modulus(g, h)
    quotient = gamma_mul(gamma_inv(g), h)
    if quotient.is_identity:
        return 0
    return -1 if gamma_positive(quotient) else 1


def commutator(g: GammaElement, h: GammaElement) -> GammaElement:
    """[g, h] = g⁻¹h⁻¹gh"""
    return gamma_mul(gamma_mul(gamma_inv(g), gamma_inv(h)), gamma_mul(g, h))


def defining_relators(n: int) -> dict:
    """Canonical forms of the defining relators, keyed by their text"""
    relators = {f"[s^{n}, x]": f"s^{-n} x^-1 s^{n} x"}
    for i in range(1, n):
        relators[f"[x, s^{i} x s^-{i}]"] = f"x^-1 s^{i} x^-1 s^-{i} x s^{i} x s^-{i}"
    return {label: gamma_eval(n, text) for label, text in relators.items()}


def f_family_words(n: int) -> Tuple[Word, ...]:
    """f_1..f_4: s^{n-1}xs, s^{n-2}(xs)^2, s^{n-4}(xs)^4, s^{n-8}(xs)^8"""
    return tuple(GAMMA_ALPHABET.parse(f"s^{n - k} (x s)^{k}") for k in (1, 2, 4, 8))


def g_family_words(n: int) -> Tuple[Word, ...]:
    """g_1..g_4: s^{n-1}xs, s^{n-2}(x⁻¹s)^2, s^{4-n}(xs⁻¹)^4, s^{8-n}(x⁻¹s⁻¹)^8"""
    return (
        GAMMA_ALPHABET.parse(f"s^{n - 1} x s"),
        GAMMA_ALPHABET.parse(f"s^{n - 2} (x^-1 s)^2"),
        GAMMA_ALPHABET.parse(f"s^{4 - n} (x s^-1)^4"),
        GAMMA_ALPHABET.parse(f"s^{8 - n} (x^-1 s^-1)^8"),
    )


def random_gamma_element(n: int, rng: np.random.Generator, shift_bound: int = 30,
                         exp_bound: int = 5) -> GammaElement:
    shift = int(rng.integers(-shift_bound, shift_bound + 1))
    exps = tuple(int(p) for p in rng.integers(-exp_bound, exp_bound + 1, size=n))
    return GammaElement(n, shift, exps)

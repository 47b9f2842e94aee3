"""
HNN Order Lab - Polycyclic Heisenberg Module
Normal forms in G = ⟨t, x, y, z | [x,y] = z, z central, t² = z, txt⁻¹ = x⁻¹, tyt⁻¹ = y⁻¹⟩

Elements are t^δ x^m y^q z^r with δ ∈ {0, 1}. The commutator convention
is [x, y] = x⁻¹y⁻¹xy = z, so xy = yxz and y^q x^m = x^m y^q z^{-qm}.
Γ = ⟨t, x², y⟩ is the set of elements with m even; H₀ = ⟨x², y, z⟩ is
its intersection with the Heisenberg group H = ⟨x, y, z⟩.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Tuple, Union

from .exceptions import CertificationError
from .unipotent import UnipotentMatrix
from .words import format_syllables, parse_syllables, repeat_mul

logger = logging.getLogger(__name__)

G_LETTERS = ("t", "x", "y", "z")


@dataclass(frozen=True)
class GElement:
    """t^tbit x^m y^q z^r"""

    tbit: int
    m: int
    q: int
    r: int

    def __post_init__(self):
        if self.tbit not in (0, 1):
            raise ValueError(f"tbit must be 0 or 1, got {self.tbit}")

    def __mul__(self, other: "GElement") -> "GElement":
        return g_mul(self, other)

    def __str__(self) -> str:
        return format_syllables(
            (name, exp) for name, exp in zip(G_LETTERS, (self.tbit, self.m, self.q, self.r)) if exp
        )

    @property
    def is_identity(self) -> bool:
        return self == IDENTITY

    def in_gamma(self) -> bool:
        return self.m % 2 == 0

    def in_h0(self) -> bool:
        return self.tbit == 0 and self.m % 2 == 0


IDENTITY = GElement(0, 0, 0, 0)
T = GElement(1, 0, 0, 0)
X = GElement(0, 1, 0, 0)
Y = GElement(0, 0, 1, 0)
Z = GElement(0, 0, 0, 1)
_LETTER_ELEMENTS = dict(zip(G_LETTERS, (T, X, Y, Z)))


def _h_mul(a: Tuple[int, int, int], b: Tuple[int, int, int]) -> Tuple[int, int, int]:
    m, q, r = a
    m2, q2, r2 = b
    return m + m2, q + q2, r + r2 - q * m2


def _alpha(h: Tuple[int, int, int]) -> Tuple[int, int, int]:
    """Conjugation by t: x -> x⁻¹, y -> y⁻¹, z fixed"""
    m, q, r = h
    return -m, -q, r


def g_mul(g1: GElement, g2: GElement) -> GElement:
    """t^δ h · t^δ' h' = t^{δ+δ'} α^{δ'}(h) h' with t² folded into z"""
    h1 = (g1.m, g1.q, g1.r)
    if g2.tbit:
        h1 = _alpha(h1)
    m, q, r = _h_mul(h1, (g2.m, g2.q, g2.r))
    tbit = g1.tbit + g2.tbit
    if tbit == 2:
        tbit, r = 0, r + 1
    return GElement(tbit, m, q, r)


def g_inv(g: GElement) -> GElement:
    h_inv = (-g.m, -g.q, -g.r - g.q * g.m)
    if not g.tbit:
        return GElement(0, *h_inv)
    # (t h)⁻¹ = h⁻¹ t⁻¹ = h⁻¹ t z⁻¹ = t α(h⁻¹) z⁻¹
    m, q, r = _alpha(h_inv)
    return GElement(1, m, q, r - 1)


def g_pow(g: GElement, k: int) -> GElement:
    if k < 0:
        return g_pow(g_inv(g), -k)
    return repeat_mul(g, k, g_mul, IDENTITY)


def g_eval(text_or_syllables: Union[str, Iterable[Tuple[str, int]]]) -> GElement:
    """Evaluate a word over {t, x, y, z}"""
    syllables = (parse_syllables(text_or_syllables) if isinstance(text_or_syllables, str)
                 else text_or_syllables)
    result = IDENTITY
    for name, exp in syllables:
        if name not in _LETTER_ELEMENTS:
            raise ValueError(f"generator {name!r} is not one of {', '.join(G_LETTERS)}")
        result = g_mul(result, g_pow(_LETTER_ELEMENTS[name], exp))
    return result


def g_commutator(a: GElement, b: GElement) -> GElement:
    """[a, b] = a⁻¹b⁻¹ab"""
    return g_mul(g_mul(g_inv(a), g_inv(b)), g_mul(a, b))


def g_square_exponent(n: int, m: int) -> int:
    """
    Exponent e with (t x^n y^m)² = z^e, namely mn + 1

    Raises:
        CertificationError: the normal-form product disagrees with mn + 1
    """
    element = GElement(1, n, m, 0)
    square = g_mul(element, element)
    expected = m * n + 1
    if square != GElement(0, 0, 0, expected):
        raise CertificationError(f"(t x^{n} y^{m})^2 = {square}, expected z^{expected}")
    return expected


def g_is_torsion_free_sample(bound: int) -> Dict[str, Any]:
    """
    Check g^k ≠ 1 for every nonidentity Γ-element with |m|, |q|, |r| ≤ bound
    and 1 ≤ k ≤ 2·bound.
    """
    if bound < 1:
        raise ValueError(f"bound must be at least 1, got {bound}")
    violations = []
    checked = 0
    values = range(-bound, bound + 1)
    for tbit in (0, 1):
        for m in (v for v in values if v % 2 == 0):
            for q in values:
                for r in values:
                    g = GElement(tbit, m, q, r)
                    if g.is_identity:
                        continue
                    checked += 1
                    power = IDENTITY
                    for k in range(1, 2 * bound + 1):
                        power = g_mul(power, g)
                        if power.is_identity:
                            violations.append({"element": str(g), "k": k})
                            break
    if violations:
        logger.warning(f"⚠️ Torsion found in {len(violations)} sampled elements")
    return {
        "passes": not violations,
        "reason": "no torsion in sample" if not violations else f"{len(violations)} torsion elements",
        "details": {"bound": bound, "checked": checked, "violations": violations},
    }


def heisenberg_matrix(g: GElement) -> UnipotentMatrix:
    """x -> I+E12, y -> I+E23, z -> I+E13; defined on H only"""
    if g.tbit:
        raise ValueError(f"{g} is not in the Heisenberg subgroup")
    return UnipotentMatrix([[1, g.m, g.m * g.q + g.r], [0, 1, g.q], [0, 0, 1]])

"""
HNN Order Lab - Unipotent Order Module
Exact upper unitriangular matrices and their bi-order

The default order looks at the first superdiagonal (j - i = k) holding a
nonzero entry and takes the sign of its topmost nonzero entry. The
alternative "antidiagonal" rule scans A - I by increasing i + j; it is
kept for empirical comparison only.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, Sequence, Tuple, Union

import numpy as np

from .exceptions import SizeMismatchError
from .words import repeat_mul

logger = logging.getLogger(__name__)

MIN_SIZE = 2
MAX_SIZE = 12
RULES = ("lcs", "antidiagonal")

Entry = Union[int, Fraction, str]


class UnipotentMatrix:
    """m×m upper unitriangular matrix with Fraction entries"""

    __slots__ = ("_array",)

    def __init__(self, rows: Union[np.ndarray, Sequence[Sequence[Entry]]]):
        array = np.array([[Fraction(a) for a in row] for row in rows], dtype=object)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise SizeMismatchError(f"matrix must be square, got shape {array.shape}")
        m = array.shape[0]
        if not MIN_SIZE <= m <= MAX_SIZE:
            raise SizeMismatchError(f"size {m} outside {MIN_SIZE}..{MAX_SIZE}")
        for i in range(m):
            if array[i, i] != 1:
                raise ValueError(f"diagonal entry ({i + 1},{i + 1}) is {array[i, i]}, expected 1")
            for j in range(i):
                if array[i, j] != 0:
                    raise ValueError(f"entry ({i + 1},{j + 1}) below the diagonal is nonzero")
        self._array = array

    @classmethod
    def _trusted(cls, array: np.ndarray) -> "UnipotentMatrix":
        """Wrap a product or inverse of valid matrices without re-checking it"""
        matrix = cls.__new__(cls)
        matrix._array = array
        return matrix

    @property
    def m(self) -> int:
        return self._array.shape[0]

    @property
    def array(self) -> np.ndarray:
        return self._array.copy()

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        return self._array[index]

    def upper_entries(self) -> Iterator[Tuple[int, int, Fraction]]:
        m = self.m
        for i in range(m):
            for j in range(i + 1, m):
                yield i, j, self._array[i, j]

    def key(self) -> Tuple[Fraction, ...]:
        return tuple(value for _, _, value in self.upper_entries())

    @property
    def is_identity(self) -> bool:
        return not any(self.key())

    def __eq__(self, other) -> bool:
        return isinstance(other, UnipotentMatrix) and self.m == other.m and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.m, self.key()))

    def __mul__(self, other: "UnipotentMatrix") -> "UnipotentMatrix":
        return u_mul(self, other)

    def __str__(self) -> str:
        return "; ".join(" ".join(str(a) for a in row) for row in self._array)

    def __repr__(self) -> str:
        return f"UnipotentMatrix('{self}')"


def u_identity(m: int) -> UnipotentMatrix:
    return UnipotentMatrix(np.identity(m, dtype=int).tolist())


def u_elementary(m: int, i: int, j: int, value: Entry = 1) -> UnipotentMatrix:
    """I + value·E_ij with 1-based i < j"""
    if not 1 <= i < j <= m:
        raise ValueError(f"E_{i}{j} is not strictly upper triangular in size {m}")
    rows = np.identity(m, dtype=int).tolist()
    rows[i - 1][j - 1] = Fraction(value)
    return UnipotentMatrix(rows)


def parse_matrix(text: str) -> UnipotentMatrix:
    """Rows separated by ';', entries by whitespace, rationals as p/q"""
    rows = [row.split() for row in text.strip().strip("[]").split(";")]
    try:
        return UnipotentMatrix([[Fraction(entry) for entry in row] for row in rows])
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"invalid matrix literal {text!r}: {e}") from None


def _check_size(A: UnipotentMatrix, B: UnipotentMatrix):
    if A.m != B.m:
        raise SizeMismatchError(f"cannot combine {A.m}×{A.m} and {B.m}×{B.m} matrices")


def u_mul(A: UnipotentMatrix, B: UnipotentMatrix) -> UnipotentMatrix:
    _check_size(A, B)
    return UnipotentMatrix._trusted(A._array.dot(B._array))


def u_inv(A: UnipotentMatrix) -> UnipotentMatrix:
    """Back substitution: X[i, j] = -Σ_{i<k<=j} A[i, k]·X[k, j]"""
    m = A.m
    a = A._array
    x = np.identity(m, dtype=int).astype(object) * Fraction(1)
    for j in range(1, m):
        for i in range(j - 1, -1, -1):
            x[i, j] = -sum((a[i, k] * x[k, j] for k in range(i + 1, j + 1)), Fraction(0))
    return UnipotentMatrix._trusted(x)


def u_pow(A: UnipotentMatrix, k: int) -> UnipotentMatrix:
    if k < 0:
        return u_pow(u_inv(A), -k)
    return repeat_mul(A, k, u_mul, u_identity(A.m))


def u_positive(A: UnipotentMatrix, rule: str = "lcs") -> bool:
    """Sign of the leading entry; False for the identity"""
    m = A.m
    if rule == "lcs":
        for k in range(1, m):
            for i in range(m - k):
                value = A[i, i + k]
                if value:
                    return value > 0
        return False
    if rule == "antidiagonal":
        for total in range(1, 2 * m - 2):
            for i in range(m):
                j = total - i
                if i < j < m and A[i, j]:
                    return A[i, j] > 0
        return False
    raise ValueError(f"unknown order rule {rule!r}; expected one of {RULES}")


def u_compare(A: UnipotentMatrix, B: UnipotentMatrix, rule: str = "lcs") -> int:
    """-1, 0 or 1; A < B iff A⁻¹B is positive"""
    _check_size(A, B)
    quotient = u_mul(u_inv(A), B)
    if quotient.is_identity:
        return 0
    return -1 if u_positive(quotient, rule) else 1


def random_unipotent(m: int, rng: np.random.Generator, bound: int = 9) -> UnipotentMatrix:
    rows = np.identity(m, dtype=int).tolist()
    for i in range(m):
        for j in range(i + 1, m):
            rows[i][j] = int(rng.integers(-bound, bound + 1))
    return UnipotentMatrix(rows)


def rule_statistics(rule: str, m: int, samples: int, rng: np.random.Generator,
                    bound: int = 9) -> Dict[str, int]:
    """
    Count order-axiom violations of a positivity rule on random pairs

    Only the default rule is a proven bi-order; the numbers reported for
    other rules are observations, not claims.
    """
    stats = {"samples": samples, "closure_failures": 0, "trichotomy_failures": 0,
             "conjugation_failures": 0}
    for _ in range(samples):
        A = random_unipotent(m, rng, bound)
        B = random_unipotent(m, rng, bound)
        C = random_unipotent(m, rng, bound)
        if not A.is_identity:
            if u_positive(A, rule) == u_positive(u_inv(A), rule):
                stats["trichotomy_failures"] += 1
            conjugate = u_mul(u_mul(C, A), u_inv(C))
            if u_positive(A, rule) != u_positive(conjugate, rule):
                stats["conjugation_failures"] += 1
        if u_positive(A, rule) and u_positive(B, rule) and not u_positive(u_mul(A, B), rule):
            stats["closure_failures"] += 1
    logger.debug(f"📊 Rule {rule} on U_{m}: {stats}")
    return stats

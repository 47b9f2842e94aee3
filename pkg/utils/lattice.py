"""
HNN Order Lab - Lattice Oracle Module
Free abelian subgroups of Γₙ inside the centralizer s^{nℤ} × ℤⁿ

On elements whose shift is a multiple of n the map g -> (shift ‖ exps)
is an injective homomorphism into ℤ^{1+n}, so subgroup membership and
coordinates reduce to integer linear algebra on a Hermite normal form.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix

from .exceptions import LatticeError, NonCommutingError, NotAMemberError
from .gamma_group import GammaElement, commutator, gamma_identity, gamma_inv, gamma_mul
from .words import Alphabet, Word, reduce_word, substitute

logger = logging.getLogger(__name__)


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """g, x, y with x*a + y*b = g >= 0"""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _combine(rows: List[List[int]], p: int, i: int, x: int, y: int, u: int, v: int):
    """(row_p, row_i) <- (x·row_p + y·row_i, u·row_p + v·row_i)"""
    rp, ri = rows[p], rows[i]
    rows[p] = [x * a + y * b for a, b in zip(rp, ri)]
    rows[i] = [u * a + v * b for a, b in zip(rp, ri)]


def hermite_normal_form(rows: Sequence[Sequence[int]]):
    """
    Row-style Hermite normal form with a unimodular transform

    Returns:
        (H, U, pivots) with U·rows = H, H in echelon form, positive pivots
        and entries above each pivot reduced into [0, pivot).
    """
    k = len(rows)
    width = len(rows[0]) if rows else 0
    H = [[int(a) for a in row] for row in rows]
    U = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    pivots: List[int] = []
    top = 0
    for col in range(width):
        if top >= k:
            break
        for i in range(top + 1, k):
            b = H[i][col]
            if b == 0:
                continue
            a = H[top][col]
            g, x, y = _xgcd(a, b)
            _combine(H, top, i, x, y, -b // g, a // g)
            _combine(U, top, i, x, y, -b // g, a // g)
        pivot = H[top][col]
        if pivot == 0:
            continue
        if pivot < 0:
            H[top] = [-a for a in H[top]]
            U[top] = [-a for a in U[top]]
            pivot = -pivot
        for i in range(top):
            q = H[i][col] // pivot
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[top])]
                U[i] = [a - q * b for a, b in zip(U[i], U[top])]
        pivots.append(col)
        top += 1
    return H, U, pivots


class LatticeBasis:
    """
    Subgroup of Γₙ generated by pairwise commuting elements with shifts in nℤ

    Implements the subgroup-oracle protocol used by HNN extensions:
    contains, coords (word over F1..Fk), evaluate and generators.
    """

    def __init__(self, generators: Sequence[GammaElement], symbol_prefix: str = "F"):
        self.generators = tuple(generators)
        self.n = self.generators[0].n
        self.rows = tuple(g.vector() for g in self.generators)
        self.symbols = Alphabet(tuple(f"{symbol_prefix}{i}" for i in range(1, len(self.generators) + 1)))
        H, U, pivots = hermite_normal_form(self.rows)
        self.hnf = tuple(tuple(row) for row in H[:len(pivots)])
        self.transform = tuple(tuple(row) for row in U[:len(pivots)])
        self.pivots = tuple(pivots)
        self.rational_rank = int(Matrix([list(row) for row in self.rows]).rank())
        if self.rational_rank != len(pivots):
            raise LatticeError(f"echelon rank {len(pivots)} disagrees with rational rank {self.rational_rank}")

    def __repr__(self) -> str:
        return f"LatticeBasis(n={self.n}, generators={len(self.generators)}, rank={self.rational_rank})"

    @property
    def rank(self) -> int:
        return self.rational_rank

    @property
    def independent(self) -> bool:
        return self.rational_rank == len(self.generators)

    def _solve(self, g: GammaElement) -> Optional[Tuple[int, ...]]:
        if g.n != self.n:
            return None
        residual = list(g.vector())
        coefficients = []
        for row, col in zip(self.hnf, self.pivots):
            if residual[col] % row[col]:
                return None
            c = residual[col] // row[col]
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
            coefficients.append(c)
        if any(residual):
            return None
        coords = [0] * len(self.generators)
        for c, transform_row in zip(coefficients, self.transform):
            for j, u in enumerate(transform_row):
                coords[j] += c * u
        return tuple(coords)

    def contains(self, g: GammaElement) -> bool:
        return self._solve(g) is not None

    def integer_coords(self, g: GammaElement) -> Tuple[int, ...]:
        coords = self._solve(g)
        if coords is None:
            raise NotAMemberError(f"{g} is not in the lattice subgroup")
        return coords

    def coords(self, g: GammaElement) -> Word:
        return reduce_word(self.symbols, enumerate(self.integer_coords(g)))

    def evaluate(self, coords: Word) -> GammaElement:
        return substitute(coords, self.generators, gamma_mul, gamma_identity(self.n), gamma_inv)


def lattice_build(generators: Sequence[GammaElement], symbol_prefix: str = "F") -> LatticeBasis:
    """
    Validate and build the lattice oracle

    Raises:
        LatticeError: empty list, mixed moduli or a shift outside nℤ
        NonCommutingError: a pair of generators (0-based positions) fails to commute
    """
    if not generators:
        raise LatticeError("at least one generator is required")
    n = generators[0].n
    for g in generators:
        if g.n != n:
            raise LatticeError(f"mixed moduli {n} and {g.n}")
    for i in range(len(generators)):
        for j in range(i + 1, len(generators)):
            if not commutator(generators[i], generators[j]).is_identity:
                raise NonCommutingError((i, j))
    for i, g in enumerate(generators):
        if g.shift % n:
            raise LatticeError(f"generator {i} has shift {g.shift}, not a multiple of {n}")
    basis = LatticeBasis(generators, symbol_prefix)
    logger.debug(f"📊 Built {basis}")
    return basis


def lattice_contains(basis: LatticeBasis, g: GammaElement) -> bool:
    return basis.contains(g)


def lattice_coords(basis: LatticeBasis, g: GammaElement) -> Tuple[int, ...]:
    return basis.integer_coords(g)

"""The pairing between the Yangian and its dual, Gram matrices and the universal R-matrix.

The value of ``<T^(r_1)_{i_1 j_1} ... T^(r_m)_{i_m j_m}, T^(-s_1)_{k_1 l_1} ... T^(-s_n)_{k_n l_n}>``
is a coefficient of the ordered product of the R-matrices
``R_{a,m+b}(u_a - v_b) = 1 - sum_e u_a^-e v_b^(e-1) P_{a,m+b}``.
Factors with distinct ``a`` and distinct ``b`` commute, so the product can be
grouped into blocks ``b = 1..n``, each block running over ``a = 1..m``.
Expanding, every factor contributes either 1 or ``-u_a^-e v_b^(e-1) P``.
A choice survives when

* the exponents e chosen in row ``a`` add up to ``r_a``,
* the exponents ``e - 1`` chosen in block ``b`` add up to ``s_b - 1``,
* every block with ``s_b = 1`` uses at least one factor (the constant term
  of ``T*(v)`` is ``delta + T^(-1)``, so the identity part is subtracted),
* the chosen transpositions, applied right to left to the column multi-index
  ``(j_1..j_m, l_1..l_n)``, produce the row multi-index ``(i_1..i_m, k_1..k_n)``.

Each surviving choice contributes ``(-1)^(number of chosen factors)``.
:func:`pair_monomials` sums these contributions with a dynamic programme
that walks the factors from the last one to the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .algebra import (
    DUAL,
    ONE,
    AlgElement,
    Word,
    basis_enumerate,
    transpose_partner,
)
from .errors import IncompatibleError, TruncationError
from .hopf import TensorElement, delta

# ----------------------------------------------------------------------
# pairing of words


def _split(x: Word, z: Word) -> tuple[tuple, tuple]:
    if any(g[0] <= 0 for g in x):
        raise ValueError("first argument must be a word in Yangian generators")
    if any(g[0] >= 0 for g in z):
        raise ValueError("second argument must be a word in dual generators")
    return x, tuple((-g[0], g[1], g[2]) for g in z)


@lru_cache(maxsize=None)
def _pair(x: Word, z: Word, require_block: bool) -> Fraction:
    x, zs = _split(x, z)
    m, n = len(x), len(zs)
    if sum(g[0] for g in x) < sum(g[0] for g in zs):
        return Fraction(0)
    if m == 0 or n == 0:
        return Fraction(1) if m == 0 and n == 0 else Fraction(0)
    rows = tuple(g[1] for g in x) + tuple(g[1] for g in zs)
    cols = tuple(g[2] for g in x) + tuple(g[2] for g in zs)
    r = tuple(g[0] for g in x)
    # State: (multi-index after the transpositions applied so far,
    #         remaining row budgets, remaining budget of the current block,
    #         whether the current block used a factor).
    states: dict[tuple, int] = {(cols, r, zs[n - 1][0] - 1, False): 1}
    for b in range(n - 1, -1, -1):
        for a in range(m - 1, -1, -1):
            nxt: dict[tuple, int] = {}
            for (idx, rem, budget, used), coeff in states.items():
                key = (idx, rem, budget, used)
                nxt[key] = nxt.get(key, 0) + coeff
                if rem[a] == 0:
                    continue
                swapped = list(idx)
                swapped[a], swapped[m + b] = swapped[m + b], swapped[a]
                swapped_t = tuple(swapped)
                for e in range(1, min(rem[a], budget + 1) + 1):
                    new_rem = rem[:a] + (rem[a] - e,) + rem[a + 1:]
                    key = (swapped_t, new_rem, budget - (e - 1), True)
                    nxt[key] = nxt.get(key, 0) - coeff
            states = nxt
        # close block b: its tensor slot is never touched again
        closed: dict[tuple, int] = {}
        for (idx, rem, budget, used), coeff in states.items():
            if budget != 0 or idx[m + b] != rows[m + b]:
                continue
            if require_block and zs[b][0] == 1 and not used:
                continue
            nb = zs[b - 1][0] - 1 if b > 0 else 0
            key = (idx, rem, nb, False)
            closed[key] = closed.get(key, 0) + coeff
        states = closed
    total = 0
    for (idx, rem, _, _), coeff in states.items():
        if idx == rows and not any(rem):
            total += coeff
    return Fraction(total)


def pair_monomials(x: Sequence, z: Sequence) -> Fraction:
    """Pairing of a word in Yangian generators with a word in dual generators.

    Words need not be in normal order; factor order matters.
    """
    return _pair(tuple(tuple(g) for g in x), tuple(tuple(g) for g in z), True)


def pair_with_constant_terms(x: Sequence, z: Sequence) -> Fraction:
    """Pairing of ``x`` with ``z`` where every ``T^(-1)_kl`` of ``z`` is read as ``delta_kl + T^(-1)_kl``.

    This is the raw coefficient of the R-matrix product without the
    inclusion-exclusion step; it cross-checks :func:`pair_monomials`.
    """
    return _pair(tuple(tuple(g) for g in x), tuple(tuple(g) for g in z), False)


def pair_elements(x: AlgElement, z: AlgElement) -> Fraction:
    """Bilinear extension of the pairing.

    ``z`` must be truncated no lower than the degree of ``x``: the pairing of
    ``x`` with anything of larger dual degree vanishes, so nothing is lost.
    """
    if x.n != z.n:
        raise IncompatibleError(f"N mismatch: {x.n} vs {z.n}")
    if x.has_negative():
        raise ValueError("first argument must lie in the Yangian")
    if z.has_positive():
        raise ValueError("second argument must lie in the dual Yangian")
    if z.trunc is not None and x and x.max_degree() > z.trunc:
        raise TruncationError(
            f"dual truncation D={z.trunc} is below the degree {x.max_degree()} of the Yangian argument"
        )
    total = Fraction(0)
    for wx, cx in x.terms.items():
        for wz, cz in z.terms.items():
            total += cx * cz * pair_monomials(wx, wz)
    return total


def pair_tensors(x: TensorElement, z: TensorElement) -> Fraction:
    """``<X1 (x) X2, Z1 (x) Z2> = <X1, Z1> <X2, Z2>`` extended bilinearly."""
    if x.arity != z.arity:
        raise IncompatibleError("tensor arities differ")
    total = Fraction(0)
    for kx, cx in x.terms.items():
        for kz, cz in z.terms.items():
            value = cx * cz
            for wx, wz in zip(kx, kz):
                value *= pair_monomials(wx, wz)
                if not value:
                    break
            total += value
    return total


def duality_check(x: AlgElement, y: AlgElement, z: AlgElement, w: AlgElement) -> tuple[bool, dict]:
    """Check ``<X, ZW> = <Delta X, Z (x) W>`` and ``<XY, Z> = <X (x) Y, Delta Z>``.

    The left sides multiply in the algebras and pair words; the right sides
    take coproducts and pair tensor factors.
    """
    for e in (z, w):
        if e.trunc is None:
            raise TruncationError("dual arguments need a finite truncation")
    zw = z * w
    first_lhs = pair_elements(x, zw)
    first_rhs = pair_tensors(delta(x, "Y"), TensorElement.of(z, w))
    xy = x * y
    if xy and xy.max_degree() > z.trunc:
        raise TruncationError("truncation of Z is below the degree of XY")
    second_lhs = pair_elements(xy, z)
    second_rhs = pair_tensors(TensorElement.of(x, y), delta(z, "dual"))
    values = {
        "coproduct_of_X": (first_lhs, first_rhs),
        "coproduct_of_Z": (second_lhs, second_rhs),
    }
    return first_lhs == first_rhs and second_lhs == second_rhs, values


# ----------------------------------------------------------------------
# exact linear algebra on small rational matrices


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(map(Fraction, r)) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        pivot = next((i for i in range(rk, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        p = rows[rk][col]
        for i in range(len(rows)):
            if i != rk and rows[i][col]:
                f = rows[i][col] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def is_lower_triangular(matrix: Sequence[Sequence[Fraction]]) -> bool:
    return all(not matrix[i][j] for i in range(len(matrix)) for j in range(i + 1, len(matrix[i])))


def lower_triangular_inverse(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Inverse of an invertible lower triangular matrix by forward substitution."""
    size = len(matrix)
    if not is_lower_triangular(matrix):
        raise ValueError("matrix is not lower triangular")
    inv = [[Fraction(0)] * size for _ in range(size)]
    for j in range(size):
        if not matrix[j][j]:
            raise ZeroDivisionError("singular triangular matrix")
        inv[j][j] = 1 / Fraction(matrix[j][j])
        for i in range(j + 1, size):
            acc = sum((matrix[i][k] * inv[k][j] for k in range(j, i)), Fraction(0))
            inv[i][j] = -acc / matrix[i][i]
    return inv


def diagonal_formula(word: Word) -> Fraction:
    """(-1)^m times the product of the factorials of the generator multiplicities."""
    value = Fraction((-1) ** len(word))
    counts: dict = {}
    for g in word:
        counts[g] = counts.get(g, 0) + 1
    for c in counts.values():
        value *= factorial(c)
    return value


# ----------------------------------------------------------------------
# Gram matrices and dual systems


@dataclass(frozen=True)
class GramTable:
    degree: int
    n: int
    rows: tuple[Word, ...]
    cols: tuple[Word, ...]
    values: tuple[tuple[Fraction, ...], ...]
    inverse: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def is_lower_triangular(self) -> bool:
        return is_lower_triangular(self.values)

    def diagonal_matches(self) -> bool:
        return all(self.values[p][p] == diagonal_formula(w) for p, w in enumerate(self.rows))

    def rank(self) -> int:
        return rank(self.values)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "N": self.n,
            "rows": [[list(g) for g in w] for w in self.rows],
            "cols": [[list(g) for g in w] for w in self.cols],
            "values": [[str(v) for v in row] for row in self.values],
            "inverse": [[str(v) for v in row] for row in self.inverse],
        }


@lru_cache(maxsize=None)
def gram_matrix(s: int, n: int) -> GramTable:
    """Pairings of degree-s Yangian basis words with their index-transposed dual partners.

    Rows are ordered as in :func:`basis_enumerate`; column q holds the dual
    partner of row q.  The matrix is lower triangular with diagonal
    ``(-1)^m g! h! ...``; both facts are asserted.
    """
    rows = tuple(basis_enumerate("Y", s, n))
    cols = tuple(transpose_partner(w) for w in rows)
    values = tuple(tuple(pair_monomials(x, z) for z in cols) for x in rows)
    if not is_lower_triangular(values):
        raise AssertionError(f"Gram matrix of degree {s} is not lower triangular")
    for p, w in enumerate(rows):
        if values[p][p] != diagonal_formula(w):
            raise AssertionError(f"Gram diagonal mismatch at {w}")
    inverse = tuple(tuple(r) for r in lower_triangular_inverse(values))
    return GramTable(s, n, rows, cols, values, inverse)


@dataclass(frozen=True)
class DualSystem:
    D: int
    n: int
    pairs: tuple[tuple[Word, AlgElement], ...]

    def biorthogonality_residual(self) -> list[tuple[int, int, Fraction]]:
        """Entries of ``<X_r, X'_s> - delta_rs`` that are nonzero."""
        bad = []
        for r, (x, _) in enumerate(self.pairs):
            xe = AlgElement._raw(self.n, {x: ONE}, None, "Y", True)
            for s, (_, xd) in enumerate(self.pairs):
                v = pair_elements(xe, xd) - (1 if r == s else 0)
                if v:
                    bad.append((r, s, v))
        return bad

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "N": self.n,
            "pairs": [
                {"mono": [list(g) for g in x], "dual": xd.to_json()} for x, xd in self.pairs
            ],
        }


@lru_cache(maxsize=None)
def dual_system(D: int, n: int) -> DualSystem:
    """Dual elements of every Yangian basis word of degree at most D.

    The pairing is not graded: a word of degree s pairs with dual words of
    every dual degree up to s.  Ordering all basis words by degree makes the
    full pairing matrix lower triangular with the Gram matrices on the
    diagonal blocks; its inverse G gives ``X'_s = sum_q G[q][s] Z_q`` where
    ``Z_q`` is the dual partner of the q-th basis word.
    """
    if D < 0:
        raise ValueError("degree cutoff must be nonnegative")
    rows: list[Word] = []
    for s in range(D + 1):
        rows.extend(gram_matrix(s, n).rows)
    cols = [transpose_partner(w) for w in rows]
    full = [[pair_monomials(x, z) for z in cols] for x in rows]
    inv = lower_triangular_inverse(full)
    pairs = []
    for s, x in enumerate(rows):
        terms = {cols[q]: inv[q][s] for q in range(s, len(rows)) if inv[q][s]}
        pairs.append((x, AlgElement._raw(n, terms, D, DUAL, True)))
    return DualSystem(D, n, tuple(pairs))


def universal_r(D: int, n: int) -> TensorElement:
    """Truncated universal R-matrix ``sum_s X'_s (x) X_s`` over basis words of degree at most D.

    The first factor is in the dual Yangian, the second in the Yangian.
    """
    system = dual_system(D, n)
    terms: dict[tuple[Word, Word], Fraction] = {}
    for x, xd in system.pairs:
        for z, c in xd.terms.items():
            key = (z, x)
            terms[key] = terms.get(key, 0) + c
    return TensorElement._raw(n, 2, {k: c for k, c in terms.items() if c}, D)


def degree_mismatch_violations(max_degree: int, n: int) -> list[tuple[Word, Word]]:
    """Basis pairs with deg x < dual degree z whose pairing is nonzero (expected: none)."""
    bad = []
    ys = {s: basis_enumerate("Y", s, n) for s in range(max_degree + 1)}
    ds = {s: basis_enumerate("dual", s, n) for s in range(max_degree + 1)}
    for s in range(max_degree + 1):
        for t in range(s + 1, max_degree + 1):
            for x in ys[s]:
                for z in ds[t]:
                    if pair_monomials(x, z):
                        bad.append((x, z))
    return bad


__all__ = [
    "DualSystem",
    "GramTable",
    "diagonal_formula",
    "dual_system",
    "duality_check",
    "gram_matrix",
    "degree_mismatch_violations",
    "lower_triangular_inverse",
    "pair_elements",
    "pair_monomials",
    "pair_tensors",
    "pair_with_constant_terms",
    "rank",
    "universal_r",
]

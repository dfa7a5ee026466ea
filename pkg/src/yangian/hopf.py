"""Coproducts, counit, antipodes and the central series.

Tensor products of algebra elements are stored as :class:`TensorElement`
combinations of tuples of normal words.  When any factor lives in the dual
Yangian the combination is truncated by *total* dual degree: the coproduct of a
dual generator of degree r has pieces of total degree r and r + 1, so a
per-factor cutoff would not be preserved by the coproduct while the total one
is.

Matrix-valued generating series are :class:`MatrixSeries` objects: one
variable, coefficient matrices of :class:`AlgElement` entries.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Any, Callable, Iterable, Mapping, Sequence

from .algebra import (
    DUAL,
    DY,
    ONE,
    Y,
    AlgElement,
    Word,
    check_gen,
    dual_degree,
    final_bound,
    format_word,
    relation_words,
    word_sort_key,
    _nf_word,
)
from .errors import IncompatibleError, TruncationError
from .series import ASC, DESC, PolySeries, Var, as_rational, is_scalar

Key = tuple[Word, ...]

SIDES = ("Y", "dual", "dual_opposite")


# ----------------------------------------------------------------------
# tensor elements


class TensorElement:
    """A finite combination of tensor products of normal words."""

    __slots__ = ("n", "arity", "terms", "trunc")

    def __init__(self, n: int, arity: int, terms: Mapping[Key, Any] | None = None, trunc: int | None = None):
        clean: dict[Key, Fraction] = {}
        for key, c in (terms or {}).items():
            if len(key) != arity:
                raise ValueError(f"term {key} does not have {arity} factors")
            key = tuple(tuple(check_gen(g, n) for g in w) for w in key)
            c = as_rational(c)
            if c and (trunc is None or sum(dual_degree(w) for w in key) <= trunc):
                clean[key] = c
        self.n, self.arity, self.terms, self.trunc = n, arity, clean, trunc

    @classmethod
    def _raw(cls, n: int, arity: int, terms: dict, trunc: int | None) -> "TensorElement":
        obj = cls.__new__(cls)
        obj.n, obj.arity, obj.terms, obj.trunc = n, arity, terms, trunc
        return obj

    @classmethod
    def unit(cls, n: int, arity: int, trunc: int | None = None) -> "TensorElement":
        return cls._raw(n, arity, {((),) * arity: ONE}, trunc)

    @classmethod
    def of(cls, *factors: AlgElement) -> "TensorElement":
        """Tensor product of algebra elements."""
        if not factors:
            raise ValueError("need at least one factor")
        n = factors[0].n
        D = None
        for f in factors:
            if f.n != n:
                raise IncompatibleError("N mismatch among tensor factors")
            if f.trunc is not None:
                D = f.trunc if D is None else min(D, f.trunc)
        terms: dict[Key, Fraction] = {}
        for combo in product(*(f.terms.items() for f in factors)):
            key = tuple(w for w, _ in combo)
            if D is not None and sum(dual_degree(w) for w in key) > D:
                continue
            c = ONE
            for _, x in combo:
                c *= x
            terms[key] = terms.get(key, 0) + c
        return cls._raw(n, len(factors), {k: c for k, c in terms.items() if c}, D)

    # arithmetic -------------------------------------------------------
    def _check(self, other: "TensorElement") -> int | None:
        if other.n != self.n or other.arity != self.arity:
            raise IncompatibleError("tensor operands differ in N or arity")
        if self.trunc is None:
            return other.trunc
        if other.trunc is None:
            return self.trunc
        return min(self.trunc, other.trunc)

    def _kept(self, key: Key, D: int | None) -> bool:
        return D is None or sum(dual_degree(w) for w in key) <= D

    def __add__(self, other: "TensorElement") -> "TensorElement":
        D = self._check(other)
        out = {k: c for k, c in self.terms.items() if self._kept(k, D)}
        for k, c in other.terms.items():
            if self._kept(k, D):
                out[k] = out.get(k, 0) + c
        return TensorElement._raw(self.n, self.arity, {k: c for k, c in out.items() if c}, D)

    def __neg__(self) -> "TensorElement":
        return TensorElement._raw(self.n, self.arity, {k: -c for k, c in self.terms.items()}, self.trunc)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, c: Any) -> "TensorElement":
        c = as_rational(c)
        return TensorElement._raw(
            self.n, self.arity, {k: c * x for k, x in self.terms.items()} if c else {}, self.trunc
        )

    def __rmul__(self, c: Any) -> "TensorElement":
        if is_scalar(c):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other: Any) -> "TensorElement":
        if is_scalar(other):
            return self.scale(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        D = self._check(other)
        out: dict[Key, Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                words = [a + b for a, b in zip(ka, kb)]
                if D is not None:
                    for w in words:
                        if any(g[0] > 0 for g in w) and any(g[0] < 0 for g in w):
                            raise TruncationError(
                                "truncated tensor factors must not mix Yangian and dual generators"
                            )
                    bounds = [final_bound(w) for w in words]
                    total = sum(bounds)
                    if total > D:
                        continue
                    slot_caps = [D - total + b for b in bounds]
                else:
                    slot_caps = [None] * len(words)
                expansions = []
                for w, cap in zip(words, slot_caps):
                    terms, _ = _nf_word(self.n, w, cap, True)
                    expansions.append(terms)
                c = ca * cb
                for combo in product(*expansions):
                    key = tuple(w for w, _ in combo)
                    if D is not None and sum(dual_degree(w) for w in key) > D:
                        continue
                    x = c
                    for _, d in combo:
                        x *= d
                    out[key] = out.get(key, 0) + x
        return TensorElement._raw(self.n, self.arity, {k: c for k, c in out.items() if c}, D)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.n == other.n and self.arity == other.arity and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def truncate(self, D: int) -> "TensorElement":
        D = D if self.trunc is None else min(D, self.trunc)
        return TensorElement._raw(
            self.n, self.arity, {k: c for k, c in self.terms.items() if self._kept(k, D)}, D
        )

    # structure maps ---------------------------------------------------
    def flip(self) -> "TensorElement":
        if self.arity != 2:
            raise ValueError("flip needs two tensor factors")
        return TensorElement._raw(self.n, 2, {(b, a): c for (a, b), c in self.terms.items()}, self.trunc)

    def counit_slot(self, slot: int) -> "TensorElement":
        """Apply the counit to factor ``slot`` (0-based)."""
        out: dict[Key, Fraction] = {}
        for key, c in self.terms.items():
            if key[slot] == ():
                rest = key[:slot] + key[slot + 1:]
                out[rest] = out.get(rest, 0) + c
        return TensorElement._raw(self.n, self.arity - 1, {k: c for k, c in out.items() if c}, self.trunc)

    def expand_slot(self, slot: int, side: str) -> "TensorElement":
        """Apply the coproduct of ``side`` to factor ``slot``."""
        out = TensorElement._raw(self.n, self.arity + 1, {}, self.trunc)
        for key, c in self.terms.items():
            d = delta_word(key[slot], self.n, side, self.trunc)
            pieces = {}
            for dk, dc in d.terms.items():
                full = key[:slot] + dk + key[slot + 1:]
                pieces[full] = dc * c
            out = out + TensorElement._raw(self.n, self.arity + 1, pieces, self.trunc)
        return out

    def contract(self, slot_maps: Sequence[Callable[[Word], AlgElement] | None] | None = None,
                 D: int | None = None) -> AlgElement:
        """Multiply the factors together, optionally mapping each factor first.

        ``slot_maps[k]`` sends a word in factor k to an algebra element; ``None``
        keeps the word as it is.
        """
        maps = list(slot_maps) if slot_maps is not None else [None] * self.arity
        D = self.trunc if D is None else D
        total = AlgElement.scalar(self.n, 0, D, DUAL if D is not None else Y)
        for key, c in self.terms.items():
            term = AlgElement.scalar(self.n, c, D, total.tag)
            for w, f in zip(key, maps):
                factor = f(w) if f is not None else AlgElement._raw(self.n, {w: ONE}, D, _tag_of(w), True)
                term = term * factor
            total = total + term
        return total

    # presentation -----------------------------------------------------
    def items(self):
        return sorted(self.terms.items(), key=lambda t: [word_sort_key(w) for w in t[0]])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.items():
            body = " (x) ".join(format_word(w) if w else "1" for w in key)
            parts.append(f"{'-' if c < 0 else '+'} {abs(c)}*[{body}]" if abs(c) != 1 else f"{'-' if c < 0 else '+'} [{body}]")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else s

    def __repr__(self) -> str:
        return f"TensorElement(N={self.n}, arity={self.arity}, D={self.trunc}: {self})"

    def to_json(self) -> dict:
        terms = []
        for key, c in self.items():
            entry: dict[str, Any] = {"coeff": str(c)}
            if self.arity == 2:
                entry["monoL"] = [list(g) for g in key[0]]
                entry["monoR"] = [list(g) for g in key[1]]
            else:
                entry["monos"] = [[list(g) for g in w] for w in key]
            terms.append(entry)
        return {"N": self.n, "arity": self.arity, "D": self.trunc, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "TensorElement":
        arity = int(data.get("arity", 2))
        terms: dict[Key, Fraction] = {}
        for t in data["terms"]:
            if "monos" in t:
                key = tuple(tuple(tuple(g) for g in w) for w in t["monos"])
            else:
                key = (tuple(tuple(g) for g in t["monoL"]), tuple(tuple(g) for g in t["monoR"]))
            terms[key] = terms.get(key, 0) + as_rational(t["coeff"])
        return cls(int(data["N"]), arity, terms, data.get("D"))


def _tag_of(word: Word) -> str:
    pos = any(g[0] > 0 for g in word)
    neg = any(g[0] < 0 for g in word)
    return DY if pos and neg else DUAL if neg else Y


# ----------------------------------------------------------------------
# coproducts and counit


@lru_cache(maxsize=None)
def _delta_gen(g: tuple[int, int, int], n: int, side: str, D: int | None) -> TensorElement:
    level, i, j = g
    terms: dict[Key, Fraction] = {}

    def add(a: Word, b: Word, c: int = 1) -> None:
        key = (a, b)
        terms[key] = terms.get(key, 0) + c

    if side == "Y":
        if level < 0:
            raise IncompatibleError("the Yangian coproduct applies to positive levels only")
        add(((level, i, j),), ())
        add((), ((level, i, j),))
        for p in range(1, level):
            for k in range(1, n + 1):
                add(((p, i, k),), ((level - p, k, j),))
    else:
        if level > 0:
            raise IncompatibleError("the dual coproduct applies to negative levels only")
        r = -level
        add(((level, i, j),), ())
        add((), ((level, i, j),))
        for s in range(1, r + 1):
            for k in range(1, n + 1):
                add(((-s, i, k),), ((s - r - 1, k, j),))
    t = TensorElement(n, 2, terms, D)
    return t.flip() if side == "dual_opposite" else t


def delta_word(word: Word, n: int, side: str, D: int | None = None) -> TensorElement:
    result = TensorElement.unit(n, 2, D)
    for g in word:
        result = result * _delta_gen(g, n, side, D)
    return result


def delta(x: AlgElement, side: str = "Y") -> TensorElement:
    """Coproduct of an element of the Yangian or of the dual Yangian.

    ``side`` is ``Y``, ``dual`` or ``dual_opposite`` (the flipped dual
    coproduct used on the dual block of the double).
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    if x.has_positive() and x.has_negative():
        raise IncompatibleError(
            "coproduct of a mixed element: apply the Yangian and dual coproducts per block"
        )
    if side == "Y" and x.has_negative():
        raise IncompatibleError("Yangian coproduct applied to a dual element")
    if side != "Y" and x.has_positive():
        raise IncompatibleError("dual coproduct applied to a Yangian element")
    D = x.trunc if side != "Y" else None
    out = TensorElement._raw(x.n, 2, {}, D)
    for w, c in x.terms.items():
        out = out + delta_word(w, x.n, side, D).scale(c)
    return out


def counit(x: AlgElement) -> Fraction:
    return x.counit()


def coassociativity_residual(x: AlgElement, side: str = "Y") -> TensorElement:
    d = delta(x, side)
    return d.expand_slot(0, side) - d.expand_slot(1, side)


# ----------------------------------------------------------------------
# matrix series


Matrix = tuple[tuple[AlgElement, ...], ...]


def _zero(n: int, D: int | None, tag: str) -> AlgElement:
    return AlgElement.scalar(n, 0, D, tag)


def _mat_mul(a: Matrix, b: Matrix, n: int, D: int | None, tag: str) -> Matrix:
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = _zero(n, D, tag)
            for k in range(n):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def _mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_scale(a: Matrix, c: Any) -> Matrix:
    return tuple(tuple(x.scale(c) for x in row) for row in a)


def _mat_is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


class MatrixSeries:
    """An N x N matrix whose entries are series in one variable.

    ``coeffs[p]`` is the matrix of coefficients at ``var**p`` (``var**-p`` for
    a descending variable), for p = 0 .. var.order.
    """

    __slots__ = ("n", "var", "coeffs", "trunc", "tag")

    def __init__(self, n: int, var: Var, coeffs: Sequence[Matrix], trunc: int | None = None, tag: str = Y):
        if len(coeffs) != var.order + 1:
            raise ValueError("need one coefficient matrix per power 0..order")
        self.n, self.var, self.coeffs, self.trunc, self.tag = n, var, tuple(coeffs), trunc, tag

    def zero_matrix(self) -> Matrix:
        z = _zero(self.n, self.trunc, self.tag)
        return tuple(tuple(z for _ in range(self.n)) for _ in range(self.n))

    def identity_matrix(self) -> Matrix:
        return tuple(
            tuple(AlgElement.scalar(self.n, 1 if i == j else 0, self.trunc, self.tag) for j in range(self.n))
            for i in range(self.n)
        )

    def coeff(self, p: int) -> Matrix:
        if p > self.var.order:
            raise TruncationError(f"power {p} beyond order {self.var.order}")
        return self.coeffs[p]

    def entry(self, i: int, j: int) -> PolySeries:
        """Entry (i, j), 1-based, as a series with algebra coefficients."""
        return PolySeries._raw(
            (self.var,), {(p,): m[i - 1][j - 1] for p, m in enumerate(self.coeffs) if m[i - 1][j - 1]}
        )

    def _compatible(self, other: "MatrixSeries") -> Var:
        if other.n != self.n or other.var.name != self.var.name or other.var.direction != self.var.direction:
            raise IncompatibleError("matrix series differ in N or variable")
        return self.var if self.var.order <= other.var.order else other.var

    def __mul__(self, other: "MatrixSeries") -> "MatrixSeries":
        var = self._compatible(other)
        tag = self.tag if self.tag == other.tag else DY
        D = self.trunc if self.trunc is not None else other.trunc
        out = []
        for p in range(var.order + 1):
            acc = self.zero_matrix()
            for a in range(p + 1):
                acc = _mat_add(acc, _mat_mul(self.coeffs[a], other.coeffs[p - a], self.n, D, tag))
            out.append(acc)
        return MatrixSeries(self.n, var, out, D, tag)

    def inverse(self) -> "MatrixSeries":
        """Two-sided inverse by recursion on powers.

        The constant matrix must be the identity plus a part that the dual
        truncation makes nilpotent.
        """
        n, D, tag = self.n, self.trunc, self.tag
        ident = self.identity_matrix()
        x = _mat_add(ident, _mat_scale(self.coeffs[0], -1))
        inv0 = ident
        power = ident
        steps = 0
        while True:
            power = _mat_mul(power, x, n, D, tag)
            if _mat_is_zero(power):
                break
            steps += 1
            if D is None or steps > D:
                raise TruncationError("constant matrix is not invertible within the truncation")
            inv0 = _mat_add(inv0, power)
        out = [inv0]
        for p in range(1, self.var.order + 1):
            acc = self.zero_matrix()
            for q in range(1, p + 1):
                acc = _mat_add(acc, _mat_mul(self.coeffs[q], out[p - q], n, D, tag))
            out.append(_mat_scale(_mat_mul(inv0, acc, n, D, tag), -1))
        return MatrixSeries(n, self.var, out, D, tag)

    def shift(self, c: Any, *, bounded: bool = False) -> "MatrixSeries":
        """Substitute ``var -> var + c`` entrywise (see :meth:`PolySeries.shift`)."""
        c = as_rational(c)
        K = self.var.order
        if self.var.direction == ASC and not bounded:
            raise TruncationError("shifting an ascending variable needs a certified bound")
        out = [self.zero_matrix() for _ in range(K + 1)]
        for r, m in enumerate(self.coeffs):
            if _mat_is_zero(m):
                continue
            if self.var.direction == DESC:
                pieces = [(0, ONE)] if r == 0 else [
                    (r + k, Fraction((-1) ** k * comb(r + k - 1, k)) * c**k) for k in range(K - r + 1)
                ]
            else:
                pieces = [(k, Fraction(comb(r, k)) * c ** (r - k)) for k in range(r + 1)]
            for p, w in pieces:
                out[p] = _mat_add(out[p], _mat_scale(m, w))
        return MatrixSeries(self.n, self.var, out, self.trunc, self.tag)

    def to_json(self) -> dict:
        return {
            "N": self.n,
            "var": {"name": self.var.name, "direction": self.var.direction, "order": self.var.order},
            "D": self.trunc,
            "coeffs": [
                [[x.to_json()["terms"] for x in row] for row in m] for m in self.coeffs
            ],
        }


def t_series(n: int, K: int, name: str = "u") -> MatrixSeries:
    """T(u) = 1 + sum_r T^(r) u^-r truncated at u^-K."""
    var = Var(name, DESC, K)
    coeffs = []
    for r in range(K + 1):
        if r == 0:
            coeffs.append(tuple(tuple(AlgElement.scalar(n, int(i == j)) for j in range(1, n + 1)) for i in range(1, n + 1)))
        else:
            coeffs.append(tuple(tuple(AlgElement.gen(r, i, j, n) for j in range(1, n + 1)) for i in range(1, n + 1)))
    return MatrixSeries(n, var, coeffs)


def t_dual_series(n: int, D: int, K: int | None = None, name: str = "v") -> MatrixSeries:
    """T*(v) = 1 + sum_r T^(-r) v^(r-1), with dual truncation D.

    The coefficient of v^p has dual degree p + 1, so every coefficient past
    v^(D-1) vanishes in the truncation; ``K`` defaults to that last power.
    """
    if D < 0:
        raise ValueError("dual truncation must be nonnegative")
    K = max(D - 1, 0) if K is None else K
    var = Var(name, ASC, K)
    coeffs = []
    for p in range(K + 1):
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                x = AlgElement.gen(-(p + 1), i, j, n, D)
                if p == 0 and i == j:
                    x = x + 1
                row.append(x)
            rows.append(tuple(row))
        coeffs.append(tuple(rows))
    return MatrixSeries(n, var, coeffs, D, DUAL)


# ----------------------------------------------------------------------
# antipodes


@lru_cache(maxsize=None)
def _antipode_y_matrices(n: int, r: int) -> tuple[Matrix, ...]:
    """Coefficients of T(u)^-1 up to u^-r; entry (i, j) at u^-p is S(T^(p)_ij)."""
    if r == 0:
        return (t_series(n, 0).coeffs[0],)
    prev = _antipode_y_matrices(n, r - 1)
    acc = None
    for p in range(1, r + 1):
        tp = tuple(tuple(AlgElement.gen(p, i, j, n) for j in range(1, n + 1)) for i in range(1, n + 1))
        term = _mat_mul(tp, prev[r - p], n, None, Y)
        acc = term if acc is None else _mat_add(acc, term)
    return prev + (_mat_scale(acc, -1),)


@lru_cache(maxsize=None)
def _antipode_dual_matrices(n: int, D: int) -> tuple[Matrix, ...]:
    """Coefficients of T*(v)^-1 up to v^(D-1)."""
    tstar = t_dual_series(n, D, max(D - 1, 0))
    return tstar.inverse().coeffs


def antipode_Y(n: int, K: int) -> MatrixSeries:
    """The matrix T(u)^-1 to order u^-K.

    Its (i, j) entry has coefficient S(T^(r)_ij) at u^-r; the transpose of
    this matrix is the matrix whose (i, j) entry is S(T_ji(u)).
    """
    if K < 0:
        raise ValueError("order must be nonnegative")
    return MatrixSeries(n, Var("u", DESC, K), _antipode_y_matrices(n, K))


def antipode_dual(n: int, D: int | None, K: int | None = None) -> MatrixSeries:
    """The matrix T*(v)^-1 in the dual Yangian truncated at dual degree D."""
    if D is None:
        raise TruncationError("the dual antipode needs a finite dual truncation")
    full = MatrixSeries(n, Var("v", ASC, max(D - 1, 0)), _antipode_dual_matrices(n, D), D, DUAL)
    K = full.var.order if K is None else K
    if K <= full.var.order:
        return MatrixSeries(n, Var("v", ASC, K), full.coeffs[: K + 1], D, DUAL)
    pad = [full.zero_matrix() for _ in range(K - full.var.order)]
    return MatrixSeries(n, Var("v", ASC, K), list(full.coeffs) + pad, D, DUAL)


@lru_cache(maxsize=None)
def antipode_gen(g: tuple[int, int, int], n: int, D: int | None = None) -> AlgElement:
    level, i, j = check_gen(g, n)
    if level > 0:
        return _antipode_y_matrices(n, level)[level][i - 1][j - 1]
    if D is None:
        raise TruncationError("the dual antipode needs a finite dual truncation")
    r = -level
    if r > D:
        return AlgElement._raw(n, {}, D, DUAL, False)
    x = _antipode_dual_matrices(n, D)[r - 1][i - 1][j - 1]
    return x - 1 if r == 1 and i == j else x


def antipode_word(word: Word, n: int, D: int | None = None) -> AlgElement:
    tag = _tag_of(word)
    if tag == DY:
        raise IncompatibleError("antipode applies to the Yangian or to the dual Yangian, not to mixed words")
    result = AlgElement.scalar(n, 1, D if tag == DUAL else None, tag)
    for g in reversed(word):
        result = result * antipode_gen(g, n, D if g[0] < 0 else None)
    return result


def antipode(x: AlgElement, D: int | None = None) -> AlgElement:
    """The antipode extended as an anti-automorphism."""
    D = x.trunc if D is None else D
    out = AlgElement.scalar(x.n, 0, D if x.has_negative() else None, x.tag)
    for w, c in x.terms.items():
        out = out + antipode_word(w, x.n, D).scale(c)
    return out


def antipode_axiom_residuals(x: AlgElement, side: str = "Y") -> tuple[AlgElement, AlgElement]:
    """``m(S (x) id)Delta(x) - eps(x)`` and ``m(id (x) S)Delta(x) - eps(x)``."""
    d = delta(x, side)
    D = d.trunc
    s = lambda w: antipode_word(w, x.n, D)  # noqa: E731
    left = d.contract([s, None], D) - counit(x)
    right = d.contract([None, s], D) - counit(x)
    return left, right


# ----------------------------------------------------------------------
# automorphisms and anti-automorphisms of the Yangian

# Each map is given by the images of the generators; ``anti`` maps reverse
# products.


def _shift_image(g: tuple[int, int, int], n: int, c: Fraction) -> AlgElement:
    # (u - c)^-k = sum_m C(k+m-1, m) c^m u^-(k+m)
    r, i, j = g
    out = AlgElement.scalar(n, 0)
    for k in range(1, r + 1):
        coeff = comb(r - 1, r - k) * c ** (r - k)
        if coeff:
            out = out + AlgElement.gen(k, i, j, n).scale(coeff)
    return out


YANGIAN_MAPS: dict[str, tuple[bool, Callable[[tuple[int, int, int], int, Fraction], AlgElement]]] = {
    "shift": (False, _shift_image),
    "sign": (True, lambda g, n, c: AlgElement.gen(*g, n).scale((-1) ** g[0])),
    "transpose": (True, lambda g, n, c: AlgElement.gen(g[0], g[2], g[1], n)),
    "sign_transpose": (False, lambda g, n, c: AlgElement.gen(g[0], g[2], g[1], n).scale((-1) ** g[0])),
}


def _map_words(combo: Iterable[tuple[Word, Any]], name: str, n: int, c: Any) -> AlgElement:
    if name not in YANGIAN_MAPS:
        raise ValueError(f"unknown map {name!r}; choose from {', '.join(YANGIAN_MAPS)}")
    anti, image = YANGIAN_MAPS[name]
    c = as_rational(c)
    out = AlgElement.scalar(n, 0)
    for word, coeff in combo:
        if any(g[0] < 0 for g in word):
            raise IncompatibleError("these maps are defined on the Yangian only")
        term = AlgElement.scalar(n, 1)
        for g in reversed(word) if anti else word:
            term = term * image(g, n, c)
        out = out + term.scale(as_rational(coeff))
    return out


def yangian_map(x: AlgElement, name: str, c: Any = 0) -> AlgElement:
    """Apply one of the maps of the Yangian to ``x``.

    ``shift``           ``T(u) -> T(u - c)``, an automorphism
    ``sign``            ``T(u) -> T(-u)``, an anti-automorphism
    ``transpose``       ``T(u) -> T^t(u)``, an anti-automorphism
    ``sign_transpose``  ``T(u) -> T^t(-u)``, the automorphism composed of the two
    """
    return _map_words(x.terms.items(), name, x.n, c)


def yangian_map_residuals(name: str, n: int, max_level: int, c: Any = 0) -> list[tuple[tuple[int, ...], AlgElement]]:
    """Relation instances with levels up to ``max_level`` whose image is not zero (expected: none)."""
    bad = []
    for r, s in product(range(1, max_level + 1), repeat=2):
        for i, j, k, l in product(range(1, n + 1), repeat=4):
            x, y = (r, i, j), (s, k, l)
            combo = [((x, y), 1), ((y, x), -1)] + [(w, -v) for w, v in relation_words("Y", r, s, i, j, k, l, n)]
            image = _map_words(combo, name, n, c)
            if image:
                bad.append(((r, s, i, j, k, l), image))
    return bad


# ----------------------------------------------------------------------
# central series


def _z_from(tplus: MatrixSeries, tinv: MatrixSeries, i: int, j: int) -> list[AlgElement]:
    """Coefficients of sum_k A_ki B_jk for matrix series A, B."""
    n = tplus.n
    K = min(tplus.var.order, tinv.var.order)
    out = []
    for p in range(K + 1):
        acc = _zero(n, tplus.trunc, tplus.tag)
        for a in range(p + 1):
            ma, mb = tplus.coeffs[a], tinv.coeffs[p - a]
            for k in range(n):
                if ma[k][i - 1] and mb[j - 1][k]:
                    acc = acc + ma[k][i - 1] * mb[j - 1][k]
        out.append(acc)
    return out


def z_matrix_entry(n: int, K: int, i: int, j: int) -> list[AlgElement]:
    """Coefficients of sum_k T_ki(u+N) (T^-1)_jk(u) up to u^-K."""
    t = t_series(n, K)
    return _z_from(t.shift(n), t.inverse(), i, j)


def z_series(n: int, K: int) -> list[AlgElement]:
    """Z^(0), ..., Z^(K): the coefficients of Z(u) at u^0 .. u^-K."""
    if K < 0:
        raise ValueError("order must be nonnegative")
    return z_matrix_entry(n, K, 1, 1)


def z_series_poly(n: int, K: int) -> PolySeries:
    coeffs = z_series(n, K)
    return PolySeries._raw((Var("u", DESC, K),), {(p,): c for p, c in enumerate(coeffs) if c})


def s_square_check(n: int, K: int) -> tuple[bool, dict]:
    """Compare S(S(T^(r)_ij)) with the u^-r coefficient of Z(u)^-1 T_ij(u+N).

    Returns ``(ok, residuals)`` where residuals maps (r, i, j) to the nonzero
    differences.
    """
    if K < 1:
        raise ValueError("order must be at least 1")
    zinv = z_series_poly(n, K).invert()
    tplus = t_series(n, K).shift(n)
    residuals = {}
    for r in range(1, K + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                lhs = antipode(antipode_gen((r, i, j), n))
                rhs = (zinv * tplus.entry(i, j)).coeff((r,))
                rhs = rhs if isinstance(rhs, AlgElement) else AlgElement.scalar(n, rhs)
                diff = lhs - rhs
                if diff:
                    residuals[(r, i, j)] = diff
    return not residuals, residuals


def z_circ_entry(n: int, D: int, K: int, i: int, j: int) -> list[AlgElement]:
    """Coefficients of sum_k T*_ki(v-N) (T*^-1)_jk(v) at v^0 .. v^K, truncated at D."""
    K_full = max(K, D - 1, 0)
    t = t_dual_series(n, D, K_full)
    # Every coefficient of T*(v) past v^(D-1) vanishes at this truncation, so
    # the re-expansion of v -> v - N is exact.
    coeffs = _z_from(t.shift(-n, bounded=True), t.inverse(), i, j)
    return coeffs[: K + 1]


def z_circ_series(n: int, D: int | None, K: int) -> PolySeries:
    """Z°(v) up to v^K with coefficients in the dual Yangian truncated at D."""
    if D is None:
        raise TruncationError("Z°(v) needs a finite dual truncation")
    coeffs = z_circ_entry(n, D, K, 1, 1)
    return PolySeries._raw((Var("v", ASC, K),), {(p,): c for p, c in enumerate(coeffs) if c})


def z_circ_stabilization(n: int, K: int, D_max: int) -> dict[int, dict]:
    """Watch each coefficient of Z°(v) as the truncation grows.

    For every power q <= K, records the truncations D in 1..D_max at which
    the coefficient gained new terms, and confirms that lowering the
    truncation of each result reproduces the previous one.  A coefficient
    reported as ``stable_from = None`` kept changing up to ``D_max``.
    """
    report: dict[int, dict] = {}
    previous: list[AlgElement] | None = None
    changes: dict[int, list[int]] = {q: [] for q in range(K + 1)}
    consistent = True
    for D in range(1, D_max + 1):
        current = z_circ_entry(n, D, K, 1, 1)
        for q in range(K + 1):
            if previous is None:
                if current[q] != (1 if q == 0 else 0):
                    changes[q].append(D)
                continue
            if current[q].truncate(D - 1) != previous[q]:
                consistent = False
            if current[q] != previous[q]:
                changes[q].append(D)
        previous = current
    for q in range(K + 1):
        last = changes[q][-1] if changes[q] else 0
        report[q] = {
            "changed_at": changes[q],
            "stable_from": None if last == D_max else max(last, 1),
            "consistent": consistent,
        }
    return report

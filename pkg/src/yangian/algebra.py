"""Generators, words and normal forms for the Yangian, its dual and the double.

A generator is a triple ``(level, i, j)``.  Positive levels are the Yangian
generators ``T^(r)_ij``; negative levels ``-s`` are the dual generators
``T^(-s)_ij``.  Level 0 stands for the Kronecker delta and is never stored.

Normal order puts every dual generator before every Yangian generator; inside
each block generators are sorted by ``(|level|, i, j)``.  Rewriting swaps the
leftmost adjacent pair that violates this order, replacing ``xy`` by
``yx + [x, y]`` with the commutator taken from the closed-form relation of the
matching family:

``Y``      ``[T^(r)_ij, T^(s)_kl]``    (both levels positive)
``dual``   ``[T^(-r)_ij, T^(-s)_kl]``  (both levels negative)
``cross``  ``[T^(r)_ij, T^(-s)_kl]``   (positive before negative)

Dual-degree truncation
----------------------
Swapping two dual generators produces words of larger dual degree, without
end, so elements touching the dual side carry a cutoff ``D`` and every normal
word whose dual degree exceeds ``D`` is discarded.  Inside the dual Yangian
this is the quotient by an ideal.  In the double Yangian it is not: a cross
swap can lower the dual degree.  Rewriting therefore drops an intermediate word
only when a lower bound on the dual degree of everything it can still produce
exceeds ``D``.  That bound is the dual degree minus the levels of the
positive generators that still have a dual generator somewhere to their right;
each rewriting step can only raise it.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .errors import IncompatibleError, TruncationError
from .series import as_rational, is_scalar

Gen = tuple[int, int, int]
Word = tuple[Gen, ...]

Y, DUAL, DY = "Y", "Y*", "DY"
TAGS = (Y, DUAL, DY)
FAMILIES = ("Y", "dual", "cross")

ONE = Fraction(1)

if sys.getrecursionlimit() < 10000:
    sys.setrecursionlimit(10000)


# ----------------------------------------------------------------------
# words


def gen_key(g: Gen) -> tuple[bool, int, int, int]:
    return (g[0] > 0, abs(g[0]), g[1], g[2])


def check_gen(g: Sequence[int], n: int) -> Gen:
    level, i, j = (int(x) for x in g)
    if level == 0:
        raise ValueError("level 0 is the Kronecker delta, not a generator")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"generator indices ({i}, {j}) out of range 1..{n}")
    return (level, i, j)


def is_normal(word: Word) -> bool:
    return all(gen_key(a) <= gen_key(b) for a, b in zip(word, word[1:]))


def sort_word(word: Iterable[Gen]) -> Word:
    return tuple(sorted(word, key=gen_key))


def dual_degree(word: Word) -> int:
    return -sum(g[0] for g in word if g[0] < 0)


def degree(word: Word) -> int:
    """Level sum of a pure Yangian word."""
    if any(g[0] < 0 for g in word):
        raise ValueError("deg is defined only on Yangian words")
    return sum(g[0] for g in word)


def degree_prime(word: Word) -> int:
    """The Z-valued degree: r - 1 for T^(r), -s for T^(-s)."""
    return sum(g[0] - 1 if g[0] > 0 else g[0] for g in word)


def final_bound(word: Word) -> int:
    """Lower bound on the dual degree of every normal word ``word`` rewrites to."""
    bound = 0
    neg_seen = False
    for level, _, _ in reversed(word):
        if level < 0:
            bound -= level
            neg_seen = True
        elif neg_seen:
            bound -= level
    return bound


def word_tag(word: Word) -> str | None:
    pos = any(g[0] > 0 for g in word)
    neg = any(g[0] < 0 for g in word)
    if pos and neg:
        return DY
    if neg:
        return DUAL
    if pos:
        return Y
    return None


def transpose_partner(word: Word) -> Word:
    """The dual word pairing with a Yangian basis word on the diagonal."""
    return sort_word((-level, j, i) for level, i, j in word)


def format_word(word: Word) -> str:
    return "*".join(f"T[{l},{i},{j}]" for l, i, j in word)


# ----------------------------------------------------------------------
# relations


def _add_term(acc: dict[Word, Fraction], coeff: int, *factors: tuple[int, int, int]) -> None:
    word = []
    for level, i, j in factors:
        if level == 0:
            if i != j:
                return
        else:
            word.append((level, i, j))
    w = tuple(word)
    c = acc.get(w, 0) + coeff
    if c:
        acc[w] = Fraction(c)
    else:
        acc.pop(w, None)


@lru_cache(maxsize=None)
def _relation_words(family: str, r: int, s: int, i: int, j: int, k: int, l: int, n: int) -> tuple:
    acc: dict[Word, Fraction] = {}
    if family == "Y":
        for a in range(1, min(r, s) + 1):
            _add_term(acc, 1, (a - 1, k, j), (r + s - a, i, l))
            _add_term(acc, -1, (r + s - a, k, j), (a - 1, i, l))
    elif family == "dual":
        if k == j:
            _add_term(acc, 1, (-(r + s), i, l))
        if i == l:
            _add_term(acc, -1, (-(r + s), k, j))
        for b in range(1, s + 1):
            _add_term(acc, 1, (b - r - s - 1, i, l), (-b, k, j))
            _add_term(acc, -1, (-b, i, l), (b - r - s - 1, k, j))
    elif family == "cross":
        for a in range(max(1, r - s + 1), r + 1):
            if j == k:
                if a == r - s + 1:
                    _add_term(acc, 1, (r - s, i, l))
                for m in range(1, n + 1):
                    _add_term(acc, 1, (a - 1, i, m), (r - s - a, m, l))
            if i == l:
                if a == r - s + 1:
                    _add_term(acc, -1, (r - s, k, j))
                for m in range(1, n + 1):
                    _add_term(acc, -1, (r - s - a, k, m), (a - 1, m, j))
    else:
        raise ValueError(f"unknown relation family {family!r}")
    return tuple(sorted(acc.items()))


def relation_words(
    family: str, r: int, s: int, i: int, j: int, k: int, l: int, n: int
) -> list[tuple[Word, Fraction]]:
    """Closed-form commutator of a generator pair as raw words.

    ``Y``: ``[T^(r)_ij, T^(s)_kl]``; ``dual``: ``[T^(-r)_ij, T^(-s)_kl]``;
    ``cross``: ``[T^(r)_ij, T^(-s)_kl]``.  All of r, s are positive and every
    level-0 factor has already been replaced by a Kronecker delta.
    """
    if r < 1 or s < 1:
        raise ValueError("relation levels must be positive")
    for x in (i, j, k, l):
        if not 1 <= x <= n:
            raise ValueError(f"index {x} out of range 1..{n}")
    return list(_relation_words(family, r, s, i, j, k, l, n))


def _swap_commutator(n: int, x: Gen, y: Gen) -> tuple:
    """[x, y] for an adjacent pair x y that is out of normal order."""
    if x[0] > 0 and y[0] > 0:
        return _relation_words("Y", x[0], y[0], x[1], x[2], y[1], y[2], n)
    if x[0] < 0 and y[0] < 0:
        return _relation_words("dual", -x[0], -y[0], x[1], x[2], y[1], y[2], n)
    if x[0] > 0 > y[0]:
        return _relation_words("cross", x[0], -y[0], x[1], x[2], y[1], y[2], n)
    raise AssertionError("a dual generator before a Yangian one is already ordered")


def _find_inversion(word: Word, leftmost: bool) -> int:
    rng = range(len(word) - 1) if leftmost else range(len(word) - 2, -1, -1)
    for p in rng:
        if gen_key(word[p]) > gen_key(word[p + 1]):
            return p
    return -1


@lru_cache(maxsize=None)
def _nf_word(n: int, word: Word, D: int | None, leftmost: bool) -> tuple[tuple, bool]:
    if D is not None and final_bound(word) > D:
        return (), True
    p = _find_inversion(word, leftmost)
    if p < 0:
        return ((word, ONE),), False
    x, y = word[p], word[p + 1]
    if D is None and x[0] < 0 and y[0] < 0:
        raise TruncationError(
            "reordering dual generators needs a finite dual-degree truncation D"
        )
    pre, post = word[:p], word[p + 2:]
    acc: dict[Word, Fraction] = {}
    dropped = False
    pieces = [((y, x), ONE)] + [(w, c) for w, c in _swap_commutator(n, x, y)]
    for w, c in pieces:
        terms, lost = _nf_word(n, pre + w + post, D, leftmost)
        dropped = dropped or lost
        for v, d in terms:
            acc[v] = acc.get(v, 0) + c * d
    return tuple((v, d) for v, d in acc.items() if d), dropped


def clear_caches() -> None:
    _nf_word.cache_clear()
    _relation_words.cache_clear()


# ----------------------------------------------------------------------
# elements


def _min_trunc(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class AlgElement:
    """A finite combination of normal words with exact rational coefficients.

    ``trunc`` is the dual-degree cutoff ``D`` (``None`` for no cutoff).
    ``exact`` is False once some word was discarded by the cutoff; products
    in the double Yangian refuse inexact operands whenever a cross swap could
    move discarded words back below the cutoff.
    """

    __slots__ = ("n", "terms", "trunc", "tag", "exact")

    def __init__(
        self,
        n: int,
        terms: Mapping[Word, Any] | None = None,
        trunc: int | None = None,
        tag: str | None = None,
        exact: bool = True,
    ):
        if n < 1:
            raise ValueError("N must be at least 1")
        if trunc is not None and trunc < 0:
            raise ValueError("dual truncation must be nonnegative")
        clean: dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            w = tuple(check_gen(g, n) for g in w)
            if not is_normal(w):
                raise ValueError(f"word {format_word(w)} is not in normal order")
            c = as_rational(c)
            if trunc is not None and dual_degree(w) > trunc:
                exact = False
                continue
            if c:
                clean[w] = c
        self.n = n
        self.terms = clean
        self.trunc = trunc
        self.tag = tag if tag is not None else _content_tag(clean)
        if self.tag not in TAGS:
            raise ValueError(f"tag must be one of {TAGS}")
        self.exact = exact

    @classmethod
    def _raw(cls, n: int, terms: dict, trunc: int | None, tag: str, exact: bool) -> "AlgElement":
        obj = cls.__new__(cls)
        obj.n, obj.terms, obj.trunc, obj.tag, obj.exact = n, terms, trunc, tag, exact
        return obj

    # constructors -----------------------------------------------------
    @classmethod
    def scalar(cls, n: int, c: Any = 1, trunc: int | None = None, tag: str = Y) -> "AlgElement":
        c = as_rational(c)
        return cls._raw(n, {(): c} if c else {}, trunc, tag, True)

    @classmethod
    def gen(cls, level: int, i: int, j: int, n: int, trunc: int | None = None) -> "AlgElement":
        g = check_gen((level, i, j), n)
        tag = Y if level > 0 else DUAL
        if trunc is not None and -level > trunc:
            return cls._raw(n, {}, trunc, tag, False)
        return cls._raw(n, {(g,): ONE}, trunc, tag, True)

    # queries ----------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda t: word_sort_key(t[0])))

    def words(self) -> list[Word]:
        return [w for w, _ in self.items()]

    def coeff(self, word: Iterable[Sequence[int]]) -> Fraction:
        return self.terms.get(tuple(tuple(g) for g in word), Fraction(0))

    def as_scalar(self) -> Fraction | None:
        if all(w == () for w in self.terms):
            return self.terms.get((), Fraction(0))
        return None

    def counit(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def has_positive(self) -> bool:
        return any(g[0] > 0 for w in self.terms for g in w)

    def has_negative(self) -> bool:
        return any(g[0] < 0 for w in self.terms for g in w)

    def max_degree(self) -> int:
        return max((degree(w) for w in self.terms), default=0)

    def max_dual_degree(self) -> int:
        return max((dual_degree(w) for w in self.terms), default=0)

    # arithmetic -------------------------------------------------------
    def _coerce(self, other: Any) -> "AlgElement":
        if isinstance(other, AlgElement):
            if other.n != self.n:
                raise IncompatibleError(f"N mismatch: {self.n} vs {other.n}")
            return other
        if is_scalar(other):
            return AlgElement.scalar(self.n, other, self.trunc, self.tag)
        raise TypeError(f"cannot combine AlgElement with {type(other).__name__}")

    def __add__(self, other: Any) -> "AlgElement":
        if not isinstance(other, (AlgElement, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        D = _min_trunc(self.trunc, other.trunc)
        exact = self.exact and other.exact
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        clean = {}
        for w, c in out.items():
            if not c:
                continue
            if D is not None and dual_degree(w) > D:
                exact = False
                continue
            clean[w] = c
        return AlgElement._raw(self.n, clean, D, _merge_tags(self, other), exact)

    __radd__ = __add__

    def __neg__(self) -> "AlgElement":
        return AlgElement._raw(self.n, {w: -c for w, c in self.terms.items()}, self.trunc, self.tag, self.exact)

    def __sub__(self, other: Any) -> "AlgElement":
        if not isinstance(other, (AlgElement, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "AlgElement":
        return self._coerce(other) + (-self)

    def scale(self, c: Any) -> "AlgElement":
        c = as_rational(c)
        if not c:
            return AlgElement._raw(self.n, {}, self.trunc, self.tag, self.exact)
        return AlgElement._raw(self.n, {w: c * x for w, x in self.terms.items()}, self.trunc, self.tag, self.exact)

    def __mul__(self, other: Any) -> "AlgElement":
        if isinstance(other, AlgElement):
            return multiply(self, other)
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> "AlgElement":
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "AlgElement":
        result = AlgElement.scalar(self.n, 1, self.trunc, self.tag)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlgElement):
            return self.n == other.n and self.terms == other.terms
        if is_scalar(other):
            return self.terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def truncate(self, D: int) -> "AlgElement":
        """Project to a lower cutoff."""
        D = D if self.trunc is None else min(D, self.trunc)
        kept = {w: c for w, c in self.terms.items() if dual_degree(w) <= D}
        return AlgElement._raw(self.n, kept, D, self.tag, self.exact and len(kept) == len(self.terms))

    def with_trunc(self, D: int | None) -> "AlgElement":
        if D is None:
            if self.trunc is not None and self.has_negative():
                raise TruncationError("cannot remove the cutoff of a truncated element")
            return AlgElement._raw(self.n, self.terms, None, self.tag, self.exact)
        return self.truncate(D) if self.trunc is not None and D <= self.trunc else AlgElement._raw(
            self.n, {w: c for w, c in self.terms.items() if dual_degree(w) <= D}, D, self.tag,
            self.exact and all(dual_degree(w) <= D for w in self.terms))

    def filter(self, pred) -> "AlgElement":
        return AlgElement._raw(self.n, {w: c for w, c in self.terms.items() if pred(w)}, self.trunc, self.tag, self.exact)

    # presentation -----------------------------------------------------
    def __str__(self) -> str:
        return format_element(self.terms)

    def __repr__(self) -> str:
        return f"AlgElement(N={self.n}, D={self.trunc}, tag={self.tag}: {self})"

    def to_json(self) -> dict:
        return {
            "N": self.n,
            "D": self.trunc,
            "tag": self.tag,
            "terms": [{"coeff": str(c), "mono": [list(g) for g in w]} for w, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "AlgElement":
        n = int(data["N"])
        D = data.get("D")
        combo = {}
        for t in data["terms"]:
            w = tuple(check_gen(g, n) for g in t["mono"])
            combo[w] = combo.get(w, 0) + as_rational(t["coeff"])
        return normal_form(combo, n, None if D is None else int(D), tag=data.get("tag"))


def word_sort_key(word: Word) -> tuple:
    return (len(word), [gen_key(g) for g in word])


def format_element(terms: Mapping[Word, Fraction]) -> str:
    if not terms:
        return "0"
    pieces = []
    for w in sorted(terms, key=word_sort_key):
        c = terms[w]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not w:
            body = str(a)
        elif a == 1:
            body = format_word(w)
        else:
            body = f"{a}*{format_word(w)}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _content_tag(terms: Mapping[Word, Any]) -> str:
    pos = any(g[0] > 0 for w in terms for g in w)
    neg = any(g[0] < 0 for w in terms for g in w)
    return DY if pos and neg else DUAL if neg else Y


def _merge_tags(x: AlgElement, y: AlgElement) -> str:
    if x.tag == y.tag:
        return x.tag
    if not x.has_positive() and not x.has_negative():
        return y.tag
    if not y.has_positive() and not y.has_negative():
        return x.tag
    return DY


# ----------------------------------------------------------------------
# normal forms and products

RawCombination = Mapping[Word, Any] | Iterable[tuple[Any, Word]]


def _iter_raw(raw: RawCombination) -> Iterator[tuple[Word, Fraction]]:
    if isinstance(raw, Mapping):
        for w, c in raw.items():
            yield tuple(tuple(g) for g in w), as_rational(c)
    else:
        for c, w in raw:
            yield tuple(tuple(g) for g in w), as_rational(c)


def normal_form(
    raw: RawCombination,
    n: int,
    D: int | None = None,
    tag: str | None = None,
    strategy: str = "leftmost",
) -> AlgElement:
    """Rewrite a combination of arbitrary words into normal order.

    ``raw`` is a mapping word -> coefficient or an iterable of
    ``(coefficient, word)`` pairs.  ``strategy`` picks the leftmost or the
    rightmost out-of-order pair at every step.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError("strategy must be 'leftmost' or 'rightmost'")
    if D is not None and D < 0:
        raise ValueError("dual truncation must be nonnegative")
    leftmost = strategy == "leftmost"
    acc: dict[Word, Fraction] = {}
    dropped = False
    content: set[str] = set()
    for w, c in _iter_raw(raw):
        w = tuple(check_gen(g, n) for g in w)
        t = word_tag(w)
        if t:
            content.add(t)
        if not c:
            continue
        terms, lost = _nf_word(n, w, D, leftmost)
        dropped = dropped or lost
        for v, d in terms:
            acc[v] = acc.get(v, 0) + c * d
    clean = {w: c for w, c in acc.items() if c}
    if tag is None:
        tag = DY if DY in content or len(content) > 1 else (content.pop() if content else Y)
    return AlgElement._raw(n, clean, D, tag, not dropped)


def multiply(x: AlgElement, y: AlgElement) -> AlgElement:
    """Product ``x y`` in normal form.

    Both cutoffs must agree when both are finite.  In the double Yangian the
    product is refused when discarded words of one operand could reach the
    kept range through cross swaps.
    """
    if x.n != y.n:
        raise IncompatibleError(f"N mismatch: {x.n} vs {y.n}")
    if x.trunc is not None and y.trunc is not None and x.trunc != y.trunc:
        raise TruncationError(f"truncation mismatch: D={x.trunc} vs D={y.trunc}")
    D = x.trunc if x.trunc is not None else y.trunc
    tag = _merge_tags(x, y)
    if tag == DY:
        if (not x.exact and x.tag == DY and y.has_negative()) or (not y.exact and x.has_positive()):
            raise TruncationError(
                "product in the double Yangian is not determined by truncated operands; "
                "multiply untruncated words instead"
            )
    acc: dict[Word, Fraction] = {}
    dropped = False
    for wx, cx in x.terms.items():
        for wy, cy in y.terms.items():
            terms, lost = _nf_word(x.n, wx + wy, D, True)
            dropped = dropped or lost
            c = cx * cy
            for v, d in terms:
                acc[v] = acc.get(v, 0) + c * d
    clean = {w: c for w, c in acc.items() if c}
    return AlgElement._raw(x.n, clean, D, tag, x.exact and y.exact and not dropped)


def commutator(x: AlgElement, y: AlgElement) -> AlgElement:
    return x * y - y * x


def product_of(factors: Sequence[AlgElement], n: int, D: int | None = None, tag: str = Y) -> AlgElement:
    result = AlgElement.scalar(n, 1, D, tag)
    for f in factors:
        result = result * f
    return result


def rel_rhs(
    family: str, r: int, s: int, i: int, j: int, k: int, l: int, n: int, D: int | None = None
) -> AlgElement:
    """Normalized right-hand side of the commutator relation of ``family``."""
    raw = relation_words(family, r, s, i, j, k, l, n)
    tag = {"Y": Y, "dual": DUAL, "cross": DY}[family]
    return normal_form({w: c for w, c in raw}, n, D, tag=tag)


def generator_word(level: int, i: int, j: int) -> Word:
    """Word of ``T^(level)_ij``; level 0 is the delta and yields ``None`` off the diagonal."""
    if level == 0:
        return () if i == j else None  # type: ignore[return-value]
    return ((level, i, j),)


def commutator_equiv_check(r: int, s: int, i: int, j: int, k: int, l: int, n: int) -> bool:
    """Compare the two presentations of the Yangian relations.

    Checks ``[T^(r+1)_ij, T^(s)_kl] - [T^(r)_ij, T^(s+1)_kl]`` (each bracket
    from the closed form) against ``T^(r)_kj T^(s)_il - T^(s)_kj T^(r)_il``,
    with ``T^(0)`` the delta.  Here r, s >= 0.
    """

    def bracket(a: int, b: int) -> AlgElement:
        if a == 0 or b == 0:
            return AlgElement.scalar(n, 0)
        return rel_rhs("Y", a, b, i, j, k, l, n)

    lhs = bracket(r + 1, s) - bracket(r, s + 1)
    raw: dict[Word, Fraction] = {}
    for sign, (p, q) in ((1, (r, s)), (-1, (s, r))):
        w1 = generator_word(p, k, j)
        w2 = generator_word(q, i, l)
        if w1 is None or w2 is None:
            continue
        raw[w1 + w2] = raw.get(w1 + w2, 0) + sign
    rhs = normal_form(raw, n)
    return lhs == rhs


# ----------------------------------------------------------------------
# filtrations


def filtration_degree(word: Word, filtration: str) -> int:
    if filtration == "deg":
        return degree(word)
    if filtration == "deg_prime":
        return degree_prime(word)
    raise ValueError("filtration must be 'deg' or 'deg_prime'")


def homogeneous_part(x: AlgElement, filtration: str, d: int) -> AlgElement:
    return x.filter(lambda w: filtration_degree(w, filtration) == d)


def graded_leading(x: AlgElement, filtration: str) -> tuple[int, AlgElement]:
    """Top filtration degree of ``x`` and the part of ``x`` in that degree."""
    if not x:
        raise ValueError("the zero element has no leading part")
    top = max(filtration_degree(w, filtration) for w in x.terms)
    return top, homogeneous_part(x, filtration, top)


# ----------------------------------------------------------------------
# bases


def partitions(s: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``s`` as non-increasing tuples."""
    if largest is None:
        largest = s
    if s == 0:
        yield ()
        return
    for first in range(min(s, largest), 0, -1):
        for rest in partitions(s - first, first):
            yield (first,) + rest


def inverse_lex_key(partition: Sequence[int]) -> tuple[int, ...]:
    """Sort key comparing partitions from their smallest parts upward."""
    return tuple(reversed(partition))


def basis_enumerate(side: str, s: int, n: int) -> list[Word]:
    """Normal words of degree ``s`` built from multisets of generator triples.

    Partitions are taken in inverse lexicographic order; words sharing a
    partition are ordered by their generator keys.
    """
    if side not in ("Y", "dual"):
        raise ValueError("side must be 'Y' or 'dual'")
    if s < 0:
        raise ValueError("degree must be nonnegative")
    sign = 1 if side == "Y" else -1
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    out: list[Word] = []
    for part in sorted(partitions(s), key=inverse_lex_key):
        values = sorted(set(part))
        choices = [
            list(combinations_with_replacement(pairs, part.count(r))) for r in values
        ]
        words = []
        for pick in product(*choices):
            gens = [(sign * r, i, j) for r, group in zip(values, pick) for i, j in group]
            words.append(sort_word(gens))
        words.sort(key=lambda w: [gen_key(g) for g in w])
        out.extend(words)
    return out


def basis_up_to(side: str, D: int, n: int) -> list[Word]:
    return [w for s in range(D + 1) for w in basis_enumerate(side, s, n)]

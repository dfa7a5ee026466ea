"""Matrix representations of the Yangian, its dual and the double.

Two one-parameter families act on ``C^N``:

``rho``    ``T^(r)_ij -> -c^(r-1) e_ji`` and ``T^(-s)_ij -> -c^(-s) e_ji``
``sigma``  ``T^(r)_ij ->  c^(r-1) e_ij`` and ``T^(-s)_ij ->  c^(-s) e_ij``
``sigma_double``  ``T^(r)_ij -> c^(r-1) e_ij`` and ``T^(-s)_ij -> (c-N)^(-s) e_ij``

``rho`` respects all three relation families.  ``sigma`` respects the
Yangian relations and the dual relations separately, but not the cross
relations of the double; shifting its dual parameter by N repairs that,
which is what ``sigma_double`` does.

Historical names for the same maps are accepted as aliases: ``rho_c`` and
``rho_star_u`` for ``rho``; ``sigma_c`` and ``sigma_dual_c`` for ``sigma``.
A parameter is either a rational number or the name of a formal variable.
A formal variable is ascending (powers ``c^k``) on Yangian generators and
descending (powers ``u^-k``) on dual generators.

Tensor products of n representations go through the iterated coproduct.  On
the dual block of the double Yangian the opposite coproduct is used.

The evaluation maps of the current algebras send ``E_ij z^s`` to
``c^s e_ij``; their tensor products use the primitive coproduct.

The evaluation homomorphism sends Y(gl_N) onto U(gl_N), and
``E_ij -> T^(1)_ij`` embeds U(gl_N) back into Y(gl_N).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .algebra import DY, AlgElement, Word, degree_prime, homogeneous_part, normal_form, relation_words
from .errors import IncompatibleError
from .series import ASC, DESC, PolySeries, Var, as_rational
from .tensor import TensorOperator

KIND_ALIASES = {
    "rho": "rho",
    "rho_c": "rho",
    "rho_star_u": "rho",
    "sigma": "sigma",
    "sigma_c": "sigma",
    "sigma_dual_c": "sigma",
    "sigma_double": "sigma_double",
    "eval": "eval",
    "current_eval_c": "eval",
    "laurent_eval_c": "eval",
}
NONZERO_KINDS = ("sigma_dual_c", "laurent_eval_c")


@dataclass(frozen=True)
class RepSpec:
    """One tensor factor: a representation kind with its parameter.

    ``param`` is a :class:`Fraction` or a variable name; ``order`` is the
    truncation order used for a formal parameter.
    """

    kind: str
    param: Fraction | str
    n: int
    order: int = 4
    label: str = field(default="", compare=False)

    @classmethod
    def make(cls, kind: str, param: Any, n: int, order: int = 4) -> "RepSpec":
        if kind not in KIND_ALIASES:
            raise ValueError(f"unknown representation kind {kind!r}; choose from {sorted(KIND_ALIASES)}")
        if n < 1:
            raise ValueError("N must be at least 1")
        if isinstance(param, str) and param.isidentifier():
            p: Fraction | str = param
        else:
            p = as_rational(param)
            if kind in NONZERO_KINDS and p == 0:
                raise ZeroDivisionError(f"{kind} needs a nonzero parameter")
        return cls(KIND_ALIASES[kind], p, n, order, kind)

    @property
    def symbolic(self) -> bool:
        return isinstance(self.param, str)

    def power(self, k: int) -> Fraction | PolySeries:
        """The parameter raised to ``k`` (a series for a formal parameter)."""
        if self.symbolic:
            if k >= 0:
                return PolySeries.monomial(Var(self.param, ASC, self.order), k)
            return PolySeries.monomial(Var(self.param, DESC, self.order), -k)
        if k < 0 and self.param == 0:
            raise ZeroDivisionError("negative power of a zero parameter")
        return self.param**k

    def shifted_power(self, k: int) -> Fraction | PolySeries:
        """``(param - N)^k`` for k < 0."""
        if self.symbolic:
            var = Var(self.param, DESC, self.order)
            return PolySeries.monomial(var, -k).shift(self.param, -self.n)
        base = self.param - self.n
        if base == 0:
            raise ZeroDivisionError(f"parameter {self.param} equals N, a pole of the dual block")
        return base**k

    def to_json(self) -> dict:
        return {"kind": self.label or self.kind, "c": str(self.param), "N": self.n}

    @classmethod
    def from_json(cls, data: Mapping) -> "RepSpec":
        return cls.make(data["kind"], data.get("c", data.get("param")), int(data["N"]), int(data.get("order", 4)))


def _unit(n: int, i: int, j: int, coeff: Any) -> TensorOperator:
    return TensorOperator._raw(n, 1, {((i,), (j,)): coeff} if coeff else {})


@lru_cache(maxsize=None)
def gen_image(spec: RepSpec, level: int, i: int, j: int) -> TensorOperator:
    """Image of one generator in a single representation."""
    if spec.kind == "eval":
        raise IncompatibleError("evaluation maps act on current-algebra words; use current_eval")
    k = level - 1 if level > 0 else level
    if spec.kind == "sigma_double" and level < 0:
        return _unit(spec.n, i, j, spec.shifted_power(level))
    c = spec.power(k)
    if spec.kind == "rho":
        return _unit(spec.n, j, i, -c)
    return _unit(spec.n, i, j, c)


def _identity(n: int, arity: int) -> TensorOperator:
    return TensorOperator.identity(n, arity)


@lru_cache(maxsize=None)
def _series_image(specs: tuple[RepSpec, ...], sign: int, q: int, i: int, j: int, opposite: bool) -> TensorOperator:
    """Image of a coefficient of T_ij(u) (sign > 0) or T*_ij(v) (sign < 0).

    For sign > 0, ``q`` is the level (q = 0 is the delta).  For sign < 0,
    ``q`` is the power of v: the coefficient is ``delta + T^(-1)`` at q = 0
    and ``T^(-q-1)`` otherwise.
    """
    n = specs[0].n
    first = specs[0]

    def single(p: int, a: int, b: int) -> TensorOperator:
        if sign > 0:
            if p == 0:
                return _identity(n, 1) if a == b else TensorOperator.zero(n, 1)
            return gen_image(first, p, a, b)
        img = gen_image(first, -(p + 1), a, b)
        return img + _identity(n, 1) if p == 0 and a == b else img

    if len(specs) == 1:
        return single(q, i, j)
    rest = specs[1:]
    total = TensorOperator.zero(n, len(specs))
    for p in range(q + 1):
        for k in range(1, n + 1):
            if opposite:
                left = single(p, k, j)
                right = _series_image(rest, sign, q - p, i, k, opposite)
            else:
                left = single(p, i, k)
                right = _series_image(rest, sign, q - p, k, j, opposite)
            if left and right:
                total = total + left.kron(right)
    return total


def generator_image(
    specs: Sequence[RepSpec], level: int, i: int, j: int, dual_opposite: bool = False
) -> TensorOperator:
    """Image of ``T^(level)_ij`` in the tensor product of ``specs``."""
    specs = tuple(specs)
    if level > 0:
        return _series_image(specs, 1, level, i, j, False)
    img = _series_image(specs, -1, -level - 1, i, j, dual_opposite)
    if level == -1 and i == j:
        img = img - _identity(specs[0].n, len(specs))
    return img


def _check_specs(specs: Sequence[RepSpec], n: int) -> None:
    if not specs:
        raise ValueError("need at least one representation")
    for s in specs:
        if s.n != n:
            raise IncompatibleError(f"representation has N={s.n}, element has N={n}")


def word_image(word: Word, specs: Sequence[RepSpec], dual_opposite: bool = False) -> TensorOperator:
    n = specs[0].n
    result = _identity(n, len(specs))
    for level, i, j in word:
        result = result * generator_image(specs, level, i, j, dual_opposite)
    return result


def rep_apply(x: AlgElement, specs: Sequence[RepSpec], dual_opposite: bool | None = None) -> TensorOperator:
    """Image of ``x`` under the tensor product of ``specs``.

    ``dual_opposite`` chooses the opposite coproduct on dual generators; by
    default it is used exactly when ``x`` is tagged as a double Yangian element.
    """
    specs = tuple(specs)
    _check_specs(specs, x.n)
    if dual_opposite is None:
        dual_opposite = x.tag == DY
    total = TensorOperator.zero(x.n, len(specs))
    for w, c in x.terms.items():
        total = total + word_image(w, specs, dual_opposite).scale(c)
    return total


def raw_image(combo: Iterable[tuple[Word, Any]], specs: Sequence[RepSpec], dual_opposite: bool = False) -> TensorOperator:
    """Image of a combination of words taken as written (no normal ordering)."""
    specs = tuple(specs)
    total = TensorOperator.zero(specs[0].n, len(specs))
    for w, c in combo:
        total = total + word_image(w, specs, dual_opposite).scale(as_rational(c))
    return total


# ----------------------------------------------------------------------
# relation checks


def relation_instances(family: str, max_level: int, n: int) -> Iterator[tuple[int, int, int, int, int, int]]:
    rng = range(1, n + 1)
    for r in range(1, max_level + 1):
        for s in range(1, max_level + 1):
            for i in rng:
                for j in rng:
                    for k in rng:
                        for l in rng:
                            yield r, s, i, j, k, l


def relation_residual(
    family: str, r: int, s: int, i: int, j: int, k: int, l: int,
    specs: Sequence[RepSpec], dual_opposite: bool = True,
) -> TensorOperator:
    """Image of ``[x, y] - (closed-form right side)`` for one relation instance."""
    n = specs[0].n
    if family == "Y":
        x, y = (r, i, j), (s, k, l)
    elif family == "dual":
        x, y = (-r, i, j), (-s, k, l)
    elif family == "cross":
        x, y = (r, i, j), (-s, k, l)
    else:
        raise ValueError(f"unknown relation family {family!r}")
    lhs = [((x, y), 1), ((y, x), -1)]
    rhs = [(w, -c) for w, c in relation_words(family, r, s, i, j, k, l, n)]
    return raw_image(lhs + rhs, specs, dual_opposite)


def rep_relation_check(
    specs: Sequence[RepSpec], family: str, max_level: int, dual_opposite: bool = True
) -> tuple[bool, list]:
    """Check every relation instance of ``family`` with levels up to ``max_level``.

    Returns the verdict and the failing instances with their residuals.
    """
    specs = tuple(specs)
    failures = []
    for inst in relation_instances(family, max_level, specs[0].n):
        res = relation_residual(family, *inst, specs, dual_opposite)
        if res:
            failures.append((inst, res))
    return not failures, failures


# ----------------------------------------------------------------------
# current algebras

CurrentWord = tuple[tuple[int, int, int], ...]  # factors (i, j, s) for E_ij z^s


def current_eval(x: Mapping[CurrentWord, Any], params: Sequence[Any], n: int, order: int = 4) -> TensorOperator:
    """Evaluation of a current-algebra element on a tensor product.

    ``x`` maps words of factors ``(i, j, s)`` (meaning ``E_ij z^s``) to
    coefficients.  ``E_ij z^s`` acts as ``sum_k c_k^s e_ij`` on slot k.
    """
    specs = [RepSpec.make("eval", p, n, order) for p in params]
    arity = len(specs)
    total = TensorOperator.zero(n, arity)
    for word, coeff in x.items():
        op = _identity(n, arity)
        for i, j, s in word:
            gen = TensorOperator.zero(n, arity)
            for slot, spec in enumerate(specs, start=1):
                c = spec.power(s)
                gen = gen + _unit(n, i, j, c).embed((slot,), arity)
            op = op * gen
        total = total + op.scale(as_rational(coeff))
    return total


def current_level(s: int) -> int:
    """The generator level whose graded image is ``z^s``."""
    return s + 1 if s >= 0 else s


def graded_image(x: AlgElement) -> dict[CurrentWord, Fraction]:
    """Send ``T^(r)_ij`` to ``E_ij z^(r-1)`` and ``T^(-r)_ij`` to ``E_ij z^-r`` word by word."""
    out: dict[CurrentWord, Fraction] = {}
    for w, c in x.terms.items():
        key = tuple((i, j, level - 1 if level > 0 else level) for level, i, j in w)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def current_bracket(a: tuple[int, int, int], b: tuple[int, int, int]) -> dict[tuple[int, int, int], int]:
    """``[E_ij z^p, E_kl z^q] = delta_kj E_il z^(p+q) - delta_il E_kj z^(p+q)``."""
    (i, j, p), (k, l, q) = a, b
    out: dict[tuple[int, int, int], int] = {}
    if k == j:
        out[(i, l, p + q)] = out.get((i, l, p + q), 0) + 1
    if i == l:
        out[(k, j, p + q)] = out.get((k, j, p + q), 0) - 1
    return {key: v for key, v in out.items() if v}


# ----------------------------------------------------------------------
# U(gl_N) inside and below the Yangian

# U(gl_N) words use the current-word format with every power s = 0.


def _evaluate_words(combo: Iterable[tuple[Word, Any]], transposed: bool) -> dict[CurrentWord, Fraction]:
    out: dict[CurrentWord, Fraction] = {}
    for word, coeff in combo:
        if any(level < 0 for level, _, _ in word):
            raise IncompatibleError("the evaluation homomorphism is defined on the Yangian only")
        if any(level > 1 for level, _, _ in word):
            continue
        sign = (-1) ** len(word) if transposed else 1
        key = tuple((j, i, 0) if transposed else (i, j, 0) for _, i, j in word)
        out[key] = out.get(key, 0) + sign * as_rational(coeff)
    return {k: v for k, v in out.items() if v}


def evaluation_image(x: AlgElement, transposed: bool = False) -> dict[CurrentWord, Fraction]:
    """Image of ``x`` under ``T_ij(u) -> delta_ij + E_ij u^-1`` in U(gl_N).

    With ``transposed`` the map is ``T_ij(u) -> delta_ij - E_ji u^-1``.  Levels
    above 1 go to zero.  The result is a combination of U(gl_N) words in the
    order they were written.
    """
    return _evaluate_words(x.terms.items(), transposed)


def gl_embedding(x: Mapping[CurrentWord, Any], n: int) -> AlgElement:
    """Image of a U(gl_N) combination under ``E_ij -> T^(1)_ij``, in normal form."""
    combo: dict[Word, Fraction] = {}
    for word, coeff in x.items():
        if any(s != 0 for _, _, s in word):
            raise ValueError("U(gl_N) words carry no powers of z")
        w = tuple((1, i, j) for i, j, _ in word)
        combo[w] = combo.get(w, 0) + as_rational(coeff)
    return normal_form(combo, n)


def evaluation_relation_check(n: int, max_level: int, transposed: bool = False) -> tuple[bool, list]:
    """Check that every Yangian relation with levels up to ``max_level`` evaluates to zero.

    Equality in U(gl_N) is decided after :func:`gl_embedding`, which is
    injective.  Returns the verdict and the failing instances.
    """
    failures = []
    for r, s, i, j, k, l in relation_instances("Y", max_level, n):
        x, y = (r, i, j), (s, k, l)
        combo = [((x, y), 1), ((y, x), -1)]
        combo += [(w, -c) for w, c in relation_words("Y", r, s, i, j, k, l, n)]
        residual = gl_embedding(_evaluate_words(combo, transposed), n)
        if residual:
            failures.append(((r, s, i, j, k, l), residual))
    return not failures, failures


# ----------------------------------------------------------------------
# separation


def parameter_sequence() -> Iterator[Fraction]:
    """1, -1, 2, 1/2, 3, -2, 1/3, -1/2, 4, ...: distinct nonzero rationals."""
    seen: set[Fraction] = set()
    k = 1
    while True:
        for c in (Fraction(k), Fraction(-k), Fraction(1, k + 1), Fraction(-1, k + 1)):
            if c not in seen:
                seen.add(c)
                yield c
        k += 1


def _first_params(count: int) -> list[Fraction]:
    out = []
    for c in parameter_sequence():
        out.append(c)
        if len(out) == count:
            return out
    return out


@dataclass(frozen=True)
class Witness:
    n: int
    params: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "params": [str(p) for p in self.params]}


def separation_search(
    x: AlgElement,
    n_max: int,
    trials: Sequence[Sequence[Any]] | None = None,
    window: int = 2,
    random_trials: int = 0,
    seed: int = 0,
) -> Witness | None:
    """Find a tensor product of ``sigma`` representations on which ``x`` acts nontrivially.

    Elements of the double Yangian use ``sigma_double``; parameter tuples
    hitting its pole are skipped.

    For each n up to ``n_max`` the parameters are ordered n-tuples of distinct
    values drawn from the first ``n + window`` entries of
    :func:`parameter_sequence`, then ``random_trials`` seeded random tuples.
    Explicit ``trials`` are tried first.  Returns ``None`` when nothing
    separates ``x``; that says only that ``n_max`` or the trial set was too
    small.
    """
    if not x:
        raise ValueError("separation search needs a nonzero element")
    dual_opposite = x.tag == DY
    kind = "sigma_double" if x.has_positive() and x.has_negative() else "sigma"

    def separates(params: Sequence[Any]) -> bool:
        specs = tuple(RepSpec.make(kind, c, x.n) for c in params)
        try:
            return bool(rep_apply(x, specs, dual_opposite))
        except ZeroDivisionError:
            return False

    for params in trials or ():
        if separates(params):
            return Witness(len(params), tuple(as_rational(c) for c in params))
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        pool = _first_params(n + window)
        for params in permutations(pool, n):
            if separates(params):
                return Witness(n, tuple(params))
        for _ in range(random_trials):
            params = tuple(Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 9)) for _ in range(n))
            if separates(params):
                return Witness(n, params)
    return None


def leading_coefficient_check(x: AlgElement, n: int) -> tuple[bool, TensorOperator]:
    """Compare the top-degree part of ``sigma_{c_1..c_n}(x)`` with the evaluation of its graded image.

    The parameters are formal ascending variables ``c1..cn``.  Returns the
    verdict and the difference of the two operators.
    """
    if not x:
        raise ValueError("zero element has no leading part")
    if x.has_negative():
        raise ValueError("leading-coefficient check applies to Yangian elements")
    d = max(degree_prime(w) for w in x.terms)
    order = max(d, 0)
    names = [f"c{k}" for k in range(1, n + 1)]
    specs = tuple(RepSpec.make("sigma", name, x.n, order) for name in names)
    image = rep_apply(x, specs)

    def top(c: Any) -> Any:
        if isinstance(c, PolySeries):
            return c.homogeneous(d)
        return c if d == 0 else Fraction(0)

    lead = image.map_coeffs(top)
    graded = graded_image(homogeneous_part(x, "deg_prime", d))
    expected = current_eval(graded, names, x.n, order)
    diff = lead - expected
    return not diff, diff

"""Exact rationals and truncated multivariate formal series.

Every variable carries a direction.  An *ascending* variable ``v`` stores
powers ``v**0 .. v**K``; a *descending* variable ``u`` stores powers
``u**0, u**-1, .. u**-K``.  Exponents are kept as nonnegative integers in
both cases, so the tuple ``(2,)`` means ``u**-2`` for a descending ``u``.

Coefficients are exact: :class:`fractions.Fraction`, or any ring element that
supports ``+``, ``-``, ``*`` and truthiness (the algebra elements of this
package are used that way for matrix-valued generating series).  Products
keep the factor order, so noncommutative coefficients are fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Any, Callable, Iterable, Mapping

from .errors import IncompatibleError, TruncationError

ASC = "asc"
DESC = "desc"


def as_rational(x: Any) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings.  Floats are rejected."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        text = x.strip()
        try:
            if "/" in text:
                p, q = text.split("/")
                return Fraction(int(p), int(q))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {x!r}") from exc
    raise TypeError(f"not an exact rational: {x!r} ({type(x).__name__})")


def is_scalar(x: Any) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True, order=True)
class Var:
    """A series variable: name, direction and truncation order K."""

    name: str
    direction: str = DESC
    order: int = 0

    def __post_init__(self) -> None:
        if self.direction not in (ASC, DESC):
            raise ValueError(f"direction must be {ASC!r} or {DESC!r}")
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        if not self.name:
            raise ValueError("variable name must be nonempty")

    def with_order(self, order: int) -> "Var":
        return Var(self.name, self.direction, order)


Exps = tuple[int, ...]


class PolySeries:
    """A truncated series in named variables, stored sparsely.

    ``vars`` is sorted by name.  ``terms`` maps exponent tuples (aligned with
    ``vars``) to nonzero coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[Var] = (), terms: Mapping[Exps, Any] | None = None):
        vs = tuple(sorted(vars, key=lambda v: v.name))
        names = [v.name for v in vs]
        if len(set(names)) != len(names):
            raise IncompatibleError(f"duplicate variable names: {names}")
        clean: dict[Exps, Any] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vs):
                raise ValueError(f"exponent {exps} does not match variables {names}")
            for e, v in zip(exps, vs):
                if e < 0:
                    raise ValueError(f"negative stored exponent {exps}")
                if e > v.order:
                    raise TruncationError(f"exponent {e} of {v.name} exceeds order {v.order}")
            if is_scalar(c):
                c = Fraction(c)
            if c:
                clean[exps] = c
        self.vars = vs
        self.terms = clean

    @classmethod
    def _raw(cls, vars: tuple[Var, ...], terms: dict[Exps, Any]) -> "PolySeries":
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        return obj

    # constructors -----------------------------------------------------
    @classmethod
    def constant(cls, value: Any, vars: Iterable[Var] = ()) -> "PolySeries":
        vs = tuple(sorted(vars, key=lambda v: v.name))
        value = Fraction(value) if is_scalar(value) else value
        return cls._raw(vs, {(0,) * len(vs): value} if value else {})

    @classmethod
    def monomial(cls, var: Var, power: int = 1, coeff: Any = 1) -> "PolySeries":
        """``coeff * var**power`` (``var**-power`` for a descending variable)."""
        coeff = Fraction(coeff) if is_scalar(coeff) else coeff
        if power > var.order or not coeff:
            return cls._raw((var,), {})
        return cls._raw((var,), {(power,): coeff})

    # basic queries ----------------------------------------------------
    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.vars)

    def var(self, name: str) -> Var:
        for v in self.vars:
            if v.name == name:
                return v
        raise KeyError(name)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_term(self) -> Any:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def _exps_of(self, exponents: Mapping[str, int] | Iterable[int]) -> Exps:
        if isinstance(exponents, Mapping):
            unknown = set(exponents) - set(self.names)
            if unknown:
                raise KeyError(f"unknown variables {sorted(unknown)}")
            return tuple(int(exponents.get(v.name, 0)) for v in self.vars)
        exps = tuple(int(e) for e in exponents)
        if len(exps) != len(self.vars):
            raise ValueError("exponent tuple does not match the variables")
        return exps

    def coeff(self, exponents: Mapping[str, int] | Iterable[int] = ()) -> Any:
        """Coefficient at the given exponents; raises beyond the truncation."""
        exps = self._exps_of(exponents)
        for e, v in zip(exps, self.vars):
            if e < 0:
                raise ValueError("exponents are stored as nonnegative integers")
            if e > v.order:
                raise TruncationError(
                    f"coefficient at {v.name} exponent {e} is beyond truncation order {v.order}"
                )
        return self.terms.get(exps, Fraction(0))

    # alignment --------------------------------------------------------
    def _align(self, other: "PolySeries") -> tuple[tuple[Var, ...], dict, dict]:
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        merged: dict[str, Var] = {}
        for v in self.vars + other.vars:
            w = merged.get(v.name)
            if w is None:
                merged[v.name] = v
            elif w.direction != v.direction:
                raise IncompatibleError(f"variable {v.name} used with both directions")
            elif v.order < w.order:
                merged[v.name] = v
        vs = tuple(sorted(merged.values(), key=lambda v: v.name))
        return vs, _remap(self, vs), _remap(other, vs)

    def _lift(self, other: Any) -> "PolySeries":
        if isinstance(other, PolySeries):
            return other
        return PolySeries.constant(other, self.vars)

    # arithmetic -------------------------------------------------------
    def __add__(self, other: Any) -> "PolySeries":
        other = self._lift(other)
        vs, a, b = self._align(other)
        out = dict(a)
        for e, c in b.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return PolySeries._raw(vs, out)

    def __radd__(self, other: Any) -> "PolySeries":
        return self._lift(other) + self

    def __neg__(self) -> "PolySeries":
        return PolySeries._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> "PolySeries":
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> "PolySeries":
        return self._lift(other) + (-self)

    def __mul__(self, other: Any) -> "PolySeries":
        if not isinstance(other, PolySeries):
            return self.map_coeffs(lambda c: c * other)
        vs, a, b = self._align(other)
        orders = tuple(v.order for v in vs)
        out: dict[Exps, Any] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                if any(x > k for x, k in zip(e, orders)):
                    continue
                p = c1 * c2
                if e in out:
                    out[e] = out[e] + p
                else:
                    out[e] = p
        return PolySeries._raw(vs, {e: c for e, c in out.items() if c})

    def __rmul__(self, other: Any) -> "PolySeries":
        if isinstance(other, PolySeries):
            return other * self
        return self.map_coeffs(lambda c: other * c)

    def __pow__(self, k: int) -> "PolySeries":
        if k < 0:
            return self.invert() ** (-k)
        result = PolySeries.constant(1, self.vars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolySeries):
            if is_scalar(other):
                return self.terms == ({(0,) * len(self.vars): Fraction(other)} if other else {})
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def map_coeffs(self, f: Callable[[Any], Any]) -> "PolySeries":
        out = {}
        for e, c in self.terms.items():
            d = f(c)
            if d:
                out[e] = d
        return PolySeries._raw(self.vars, out)

    # series operations ------------------------------------------------
    def invert(self) -> "PolySeries":
        """Multiplicative inverse by finite geometric expansion.

        The constant term must be a nonzero rational, or a ring element that
        is a scalar multiple of the unit (``as_scalar()`` returning it).
        """
        a0 = self.constant_term()
        scalar = a0 if is_scalar(a0) else getattr(a0, "as_scalar", lambda: None)()
        if not scalar:
            raise ZeroDivisionError("series has no invertible constant term")
        inv0 = 1 / Fraction(scalar)
        one = PolySeries.constant(1, self.vars)
        x = one - self * inv0
        total = sum(v.order for v in self.vars)
        acc = one
        power = one
        for _ in range(total):
            power = power * x
            if not power:
                break
            acc = acc + power
        return acc * inv0

    def shift(self, name: str, c: Any, *, bounded: bool = False) -> "PolySeries":
        """Substitute ``x -> x + c`` in the variable ``name``.

        For a descending variable each ``x**-r`` is re-expanded as
        ``sum_k binom(-r, k) c**k x**(-r-k)``; this is exact within the
        truncation.  For an ascending variable the coefficient of ``x**k``
        gathers contributions of every higher power, so the caller must assert
        through ``bounded=True`` that no coefficient above the truncation
        order is significant.
        """
        c = as_rational(c)
        idx = self.names.index(name)
        var = self.vars[idx]
        if c == 0:
            return self
        if var.direction == ASC and not bounded:
            raise TruncationError(
                f"shifting ascending variable {name} needs a certified bound on higher coefficients"
            )
        out: dict[Exps, Any] = {}
        for e, coef in self.terms.items():
            r = e[idx]
            if var.direction == DESC:
                if r == 0:
                    pieces = [(0, Fraction(1))]
                else:
                    pieces = [
                        (r + k, Fraction((-1) ** k * comb(r + k - 1, k)) * c**k)
                        for k in range(var.order - r + 1)
                    ]
            else:
                pieces = [(k, Fraction(comb(r, k)) * c ** (r - k)) for k in range(r + 1)]
            for new, w in pieces:
                key = e[:idx] + (new,) + e[idx + 1:]
                term = coef * w
                out[key] = out[key] + term if key in out else term
        return PolySeries._raw(self.vars, {e: x for e, x in out.items() if x})

    def truncate(self, **orders: int) -> "PolySeries":
        """Lower the truncation order of some variables."""
        vs = tuple(
            v.with_order(min(v.order, orders[v.name])) if v.name in orders else v for v in self.vars
        )
        return PolySeries._raw(vs, _remap(self, vs))

    def homogeneous(self, total: int) -> "PolySeries":
        """Terms whose exponents sum to ``total``."""
        return PolySeries._raw(self.vars, {e: c for e, c in self.terms.items() if sum(e) == total})

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero series has no degree")
        return max(sum(e) for e in self.terms)

    # presentation ------------------------------------------------------
    def __repr__(self) -> str:
        return f"PolySeries({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = []
            for x, v in zip(e, self.vars):
                if x:
                    p = -x if v.direction == DESC else x
                    mono.append(v.name if p == 1 else f"{v.name}^{p}")
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(mono))
            elif cs == "-1":
                parts.append("-" + "*".join(mono))
            else:
                parts.append(f"({cs})*" + "*".join(mono) if not is_scalar(c) else f"{cs}*" + "*".join(mono))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self, coeff_to_json: Callable[[Any], Any] | None = None) -> dict:
        enc = coeff_to_json or (lambda c: str(c))
        return {
            "vars": [{"name": v.name, "dir": v.direction, "K": v.order} for v in self.vars],
            "terms": [
                {"exp": list(e), "coeff": enc(self.terms[e])} for e in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping, coeff_from_json: Callable[[Any], Any] | None = None) -> "PolySeries":
        dec = coeff_from_json or as_rational
        vs = [Var(d["name"], d["dir"], int(d["K"])) for d in data["vars"]]
        order = sorted(range(len(vs)), key=lambda i: vs[i].name)
        terms = {}
        for t in data["terms"]:
            exp = [int(x) for x in t["exp"]]
            terms[tuple(exp[i] for i in order)] = dec(t["coeff"])
        return cls(vs, terms)


def _remap(s: PolySeries, vs: tuple[Var, ...]) -> dict[Exps, Any]:
    """Terms of ``s`` re-indexed to the variable tuple ``vs``, truncated."""
    pos = {v.name: i for i, v in enumerate(s.vars)}
    idx = [pos.get(v.name) for v in vs]
    orders = [v.order for v in vs]
    out = {}
    for e, c in s.terms.items():
        new = tuple(e[i] if i is not None else 0 for i in idx)
        if all(x <= k for x, k in zip(new, orders)):
            out[new] = c
    return out


def series_arith(a: PolySeries, b: Any, op: str) -> PolySeries:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scalar_mul`` (``b`` a scalar)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scalar_mul":
        return a * as_rational(b)
    raise ValueError(f"unknown series operation {op!r}")


def series_invert(a: PolySeries) -> PolySeries:
    return a.invert()


def series_shift(a: PolySeries, var: str, c: Any, *, bounded: bool = False) -> PolySeries:
    return a.shift(var, c, bounded=bounded)


def coeff_extract(a: PolySeries, exponents: Mapping[str, int] | Iterable[int]) -> Any:
    return a.coeff(exponents)

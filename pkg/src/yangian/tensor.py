"""Sparse operators on tensor powers of C^N.

An operator of arity k is a map from pairs (row, col) of index tuples in
``{1..N}^k`` to coefficients.  Coefficients are Fractions or
:class:`~yangian.series.PolySeries`; the matrix unit ``e_ij`` has a single
entry 1 at (i, j).  Slots are numbered from 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Iterable, Mapping, Sequence

from .errors import IncompatibleError, TruncationError
from .series import ASC, DESC, PolySeries, Var, as_rational, is_scalar

Index = tuple[int, ...]
Key = tuple[Index, Index]


def _is_zero(c: Any) -> bool:
    return not c


class TensorOperator:
    __slots__ = ("n", "arity", "entries")

    def __init__(self, n: int, arity: int, entries: Mapping[Key, Any] | None = None):
        if n < 1:
            raise ValueError("N must be at least 1")
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        clean: dict[Key, Any] = {}
        for (row, col), c in (entries or {}).items():
            row, col = tuple(row), tuple(col)
            if len(row) != arity or len(col) != arity:
                raise ValueError(f"index length must equal arity {arity}")
            if any(not 1 <= x <= n for x in row + col):
                raise ValueError(f"index out of range 1..{n}: {row}, {col}")
            if is_scalar(c):
                c = Fraction(c)
            if c:
                clean[(row, col)] = c
        self.n = n
        self.arity = arity
        self.entries = clean

    @classmethod
    def _raw(cls, n: int, arity: int, entries: dict[Key, Any]) -> "TensorOperator":
        obj = cls.__new__(cls)
        obj.n, obj.arity, obj.entries = n, arity, entries
        return obj

    @classmethod
    def identity(cls, n: int, arity: int, coeff: Any = 1) -> "TensorOperator":
        coeff = Fraction(coeff) if is_scalar(coeff) else coeff
        ents = {(idx, idx): coeff for idx in product(range(1, n + 1), repeat=arity)} if coeff else {}
        return cls._raw(n, arity, ents)

    @classmethod
    def zero(cls, n: int, arity: int) -> "TensorOperator":
        return cls._raw(n, arity, {})

    # ------------------------------------------------------------------
    def _check(self, other: "TensorOperator") -> None:
        if self.n != other.n:
            raise IncompatibleError(f"N mismatch: {self.n} vs {other.n}")
        if self.arity != other.arity:
            raise IncompatibleError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __bool__(self) -> bool:
        return bool(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        if (self.n, self.arity) != (other.n, other.arity):
            return False
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._check(other)
        out = dict(self.entries)
        for k, c in other.entries.items():
            if k in out:
                s = out[k] + c
                if _is_zero(s):
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = c
        return TensorOperator._raw(self.n, self.arity, out)

    def __neg__(self) -> "TensorOperator":
        return TensorOperator._raw(self.n, self.arity, {k: -c for k, c in self.entries.items()})

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        return self + (-other)

    def scale(self, s: Any) -> "TensorOperator":
        out = {}
        for k, c in self.entries.items():
            d = c * s
            if not _is_zero(d):
                out[k] = d
        return TensorOperator._raw(self.n, self.arity, out)

    def __mul__(self, other: Any) -> "TensorOperator":
        if isinstance(other, TensorOperator):
            return op_product(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "TensorOperator":
        out = {}
        for k, c in self.entries.items():
            d = other * c
            if not _is_zero(d):
                out[k] = d
        return TensorOperator._raw(self.n, self.arity, out)

    __matmul__ = __mul__

    def map_coeffs(self, f: Callable[[Any], Any]) -> "TensorOperator":
        out = {}
        for k, c in self.entries.items():
            d = f(c)
            if not _is_zero(d):
                out[k] = d
        return TensorOperator._raw(self.n, self.arity, out)

    def entry(self, row: Sequence[int], col: Sequence[int]) -> Any:
        return self.entries.get((tuple(row), tuple(col)), Fraction(0))

    def coeff_at(self, exponents: Mapping[str, int]) -> "TensorOperator":
        """Rational operator of the series coefficients at ``exponents``."""

        def pick(c: Any) -> Any:
            if isinstance(c, PolySeries):
                return c.coeff({k: v for k, v in exponents.items() if k in c.names})
            if any(exponents.values()):
                return Fraction(0)
            return c

        return self.map_coeffs(pick)

    def kron(self, other: "TensorOperator") -> "TensorOperator":
        """Tensor product, ``self`` on the first slots and ``other`` after."""
        if self.n != other.n:
            raise IncompatibleError("N mismatch in tensor product")
        out = {}
        for (r1, c1), a in self.entries.items():
            for (r2, c2), b in other.entries.items():
                p = a * b
                if not _is_zero(p):
                    out[(r1 + r2, c1 + c2)] = p
        return TensorOperator._raw(self.n, self.arity + other.arity, out)

    def embed(self, positions: Sequence[int], arity: int) -> "TensorOperator":
        """Place this operator on the given slots of a larger tensor power."""
        positions = [p - 1 for p in positions]
        if len(positions) != self.arity or len(set(positions)) != len(positions):
            raise ValueError("need one distinct position per slot")
        if any(not 0 <= p < arity for p in positions):
            raise ValueError(f"position out of range 1..{arity}")
        rest = [p for p in range(arity) if p not in positions]
        out = {}
        for other in product(range(1, self.n + 1), repeat=len(rest)):
            for (r, c), v in self.entries.items():
                row = [0] * arity
                col = [0] * arity
                for p, x, y in zip(positions, r, c):
                    row[p], col[p] = x, y
                for p, x in zip(rest, other):
                    row[p] = col[p] = x
                out[(tuple(row), tuple(col))] = v
        return TensorOperator._raw(self.n, arity, out)

    def partial_transpose(self, a: int) -> "TensorOperator":
        if not 1 <= a <= self.arity:
            raise ValueError(f"position {a} out of range 1..{self.arity}")
        i = a - 1
        out = {}
        for (r, c), v in self.entries.items():
            r2 = r[:i] + (c[i],) + r[i + 1:]
            c2 = c[:i] + (r[i],) + c[i + 1:]
            out[(r2, c2)] = v
        return TensorOperator._raw(self.n, self.arity, out)

    def transpose(self) -> "TensorOperator":
        return TensorOperator._raw(self.n, self.arity, {(c, r): v for (r, c), v in self.entries.items()})

    def act(self, vector: Mapping[Index, Any]) -> dict[Index, Any]:
        """Apply to a vector given as {index tuple: coefficient}."""
        out: dict[Index, Any] = {}
        for (r, c), v in self.entries.items():
            if c in vector:
                term = v * vector[c]
                out[r] = out[r] + term if r in out else term
        return {k: x for k, x in out.items() if not _is_zero(x)}

    def __repr__(self) -> str:
        return f"TensorOperator(N={self.n}, arity={self.arity}, {len(self.entries)} entries)"

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        lines = []
        for (r, c) in sorted(self.entries):
            lines.append(f"{list(r)} {list(c)}: {self.entries[(r, c)]}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        def enc(c: Any) -> Any:
            return c.to_json() if isinstance(c, PolySeries) else str(c)

        return {
            "N": self.n,
            "arity": self.arity,
            "entries": [
                {"row": list(r), "col": list(c), "coeff": enc(self.entries[(r, c)])}
                for (r, c) in sorted(self.entries)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TensorOperator":
        def dec(c: Any) -> Any:
            return PolySeries.from_json(c) if isinstance(c, Mapping) else as_rational(c)

        ents = {(tuple(e["row"]), tuple(e["col"])): dec(e["coeff"]) for e in data["entries"]}
        return cls(int(data["N"]), int(data["arity"]), ents)


def op_product(x: TensorOperator, y: TensorOperator) -> TensorOperator:
    """Sparse matrix product ``x y`` (``y`` acts first)."""
    x._check(y)
    by_row: dict[Index, list[tuple[Index, Any]]] = {}
    for (r, c), v in y.entries.items():
        by_row.setdefault(r, []).append((c, v))
    out: dict[Key, Any] = {}
    for (r, m), a in x.entries.items():
        for c, b in by_row.get(m, ()):
            p = a * b
            key = (r, c)
            out[key] = out[key] + p if key in out else p
    return TensorOperator._raw(x.n, x.arity, {k: v for k, v in out.items() if not _is_zero(v)})


def op_chain(ops: Iterable[TensorOperator], n: int, arity: int) -> TensorOperator:
    result = TensorOperator.identity(n, arity)
    for op in ops:
        result = op_product(result, op)
    return result


# ----------------------------------------------------------------------
# named operators


def build_basic(
    kind: str,
    n: int,
    arity: int,
    a: int | None = None,
    b: int | None = None,
    i: int | None = None,
    j: int | None = None,
) -> TensorOperator:
    """``unit``; ``P``/``Q`` acting on slots (a, b); ``e`` = e_ij on slot a."""
    if kind == "unit":
        return TensorOperator.identity(n, arity)
    if kind in ("P", "Q"):
        if a is None or b is None or a == b:
            raise ValueError(f"{kind} needs two distinct slots")
        for p in (a, b):
            if not 1 <= p <= arity:
                raise ValueError(f"position {p} out of range 1..{arity}")
        small = {}
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                if kind == "P":
                    small[((x, y), (y, x))] = Fraction(1)
                else:
                    small[((x, x), (y, y))] = Fraction(1)
        return TensorOperator._raw(n, 2, small).embed((a, b), arity)
    if kind == "e":
        if a is None or i is None or j is None:
            raise ValueError("e needs a slot and indices i, j")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"indices out of range 1..{n}")
        if not 1 <= a <= arity:
            raise ValueError(f"position {a} out of range 1..{arity}")
        return TensorOperator._raw(n, 1, {((i,), (j,)): Fraction(1)}).embed((a,), arity)
    raise ValueError(f"unknown operator kind {kind!r}")


def matrix_unit(n: int, i: int, j: int) -> TensorOperator:
    return build_basic("e", n, 1, a=1, i=i, j=j)


@dataclass(frozen=True)
class Affine:
    """The affine form ``sum coeff*var + const`` used as a spectral argument."""

    terms: tuple[tuple[Var, Fraction], ...] = ()
    const: Fraction = Fraction(0)

    @classmethod
    def of(cls, *terms: tuple[Var, Any], const: Any = 0) -> "Affine":
        return cls(tuple((v, as_rational(c)) for v, c in terms if as_rational(c) != 0), as_rational(const))

    def __add__(self, c: Any) -> "Affine":
        return Affine(self.terms, self.const + as_rational(c))

    def __sub__(self, c: Any) -> "Affine":
        return Affine(self.terms, self.const - as_rational(c))

    @property
    def vars(self) -> tuple[Var, ...]:
        return tuple(v for v, _ in self.terms)


def reciprocal(arg: Affine) -> PolySeries:
    """Expand ``1/arg`` as a series in the declared variables.

    With a descending variable ``u`` of coefficient ``alpha`` the expansion is
    in powers of ``u**-1``; otherwise the constant part must be nonzero and the
    series is in the ascending variables.
    """
    vs = arg.vars
    desc = [(v, c) for v, c in arg.terms if v.direction == DESC]
    if len(desc) > 1:
        raise IncompatibleError("at most one descending variable may appear in an argument")
    rest = PolySeries.constant(arg.const, vs)
    for v, c in arg.terms:
        if v.direction == ASC:
            rest = rest + PolySeries.monomial(v, 1, c)
    if desc:
        u, alpha = desc[0]
        t = PolySeries.monomial(u, 1)
        y = rest * t * (-1 / alpha)
        acc = PolySeries.constant(1, vs)
        power = acc
        while True:
            power = power * y
            if not power:
                break
            acc = acc + power
        return t * acc * (1 / alpha)
    if arg.const == 0:
        raise ZeroDivisionError("argument has a pole: zero constant part and no descending variable")
    return rest.invert()


@dataclass(frozen=True)
class RMatrixSpec:
    """``kind`` is ``R`` (1 - P/x), ``Rt`` (1 - Q/x) or ``Rt_inv`` (1 + Q/(x - N))."""

    kind: str
    argument: Affine = field(default_factory=Affine)


def build_r(spec: RMatrixSpec, a: int, b: int, arity: int, n: int) -> TensorOperator:
    if not (1 <= a < b <= arity):
        raise ValueError(f"need 1 <= a < b <= arity, got a={a}, b={b}, arity={arity}")
    arg = spec.argument
    if spec.kind == "R":
        op, sign = build_basic("P", n, arity, a, b), -1
    elif spec.kind == "Rt":
        op, sign = build_basic("Q", n, arity, a, b), -1
    elif spec.kind == "Rt_inv":
        op, sign = build_basic("Q", n, arity, a, b), 1
        arg = arg - n
        if not any(v.direction == DESC for v in arg.vars) and arg.const == 0:
            raise ZeroDivisionError("inverse of R^t evaluated at its pole x = N")
    else:
        raise ValueError(f"unknown R-matrix kind {spec.kind!r}")
    rec = reciprocal(arg) * sign
    vs = arg.vars
    one = TensorOperator.identity(n, arity, PolySeries.constant(1, vs))
    return one + op.map_coeffs(lambda c: rec * c)


def ybe_check(n: int) -> tuple[bool, TensorOperator]:
    """Polynomial Yang-Baxter identity on three copies of C^N.

    ``(u + P12)(u + v + P13)(v + P23) = (v + P23)(u + v + P13)(u + P12)``.
    Returns the verdict and the exact residual (left side minus right side).
    """
    u = Var("u", ASC, 3)
    v = Var("v", ASC, 3)
    su = PolySeries.monomial(u)
    sv = PolySeries.monomial(v)
    one = TensorOperator.identity(n, 3)

    def lin(s: PolySeries, a: int, b: int) -> TensorOperator:
        return one.map_coeffs(lambda c: s * c) + build_basic("P", n, 3, a, b).map_coeffs(
            lambda c: PolySeries.constant(c, (u, v))
        )

    l12, l13, l23 = lin(su, 1, 2), lin(su + sv, 1, 3), lin(sv, 2, 3)
    lhs = l12 * l13 * l23
    rhs = l23 * l13 * l12
    residual = lhs - rhs
    return residual.is_zero(), residual


__all__ = [
    "Affine",
    "RMatrixSpec",
    "TensorOperator",
    "TruncationError",
    "build_basic",
    "build_r",
    "matrix_unit",
    "op_chain",
    "op_product",
    "reciprocal",
    "ybe_check",
]

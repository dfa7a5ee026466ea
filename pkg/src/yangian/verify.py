"""Verification suites.

Every check returns a list of :class:`CheckResult` records with an exact
residual or a short summary.  The command-line ``check`` subcommand and the
acceptance tests call the same functions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from .algebra import (
    AlgElement,
    Word,
    basis_enumerate,
    commutator,
    commutator_equiv_check,
    degree_prime,
    homogeneous_part,
    graded_leading,
    normal_form,
    rel_rhs,
)
from .hopf import (
    TensorElement,
    antipode_axiom_residuals,
    antipode_word,
    coassociativity_residual,
    delta,
    s_square_check,
    z_series,
)
from .pairing import (
    dual_system,
    duality_check,
    gram_matrix,
    degree_mismatch_violations,
    pair_monomials,
    universal_r,
)
from .reps import (
    RepSpec,
    current_bracket,
    current_level,
    leading_coefficient_check,
    rep_relation_check,
    separation_search,
    word_image,
)
from .series import ASC, DESC, Var
from .tensor import Affine, RMatrixSpec, TensorOperator, build_basic, build_r, ybe_check


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}{tail}"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _summary(name: str, failures: list, total: int) -> CheckResult:
    if failures:
        shown = "; ".join(str(f) for f in failures[:3])
        return CheckResult(name, False, f"{len(failures)}/{total} failed: {shown}")
    return CheckResult(name, True, f"{total} instances, residual 0")


# ----------------------------------------------------------------------
# random elements


def random_word(rng: random.Random, n: int, sign: int, max_degree: int, max_len: int = 3) -> Word:
    """A word of generators of one sign whose level sum is at most ``max_degree``."""
    word = []
    total = 0
    length = rng.randint(0, max_len)
    for _ in range(length):
        room = max_degree - total
        if room < 1:
            break
        r = rng.randint(1, min(room, 3))
        word.append((sign * r, rng.randint(1, n), rng.randint(1, n)))
        total += r
    return tuple(word)


def random_element(
    rng: random.Random, n: int, sign: int, max_degree: int, D: int | None = None, terms: int = 2
) -> AlgElement:
    raw: dict[Word, Fraction] = {}
    for _ in range(rng.randint(1, terms)):
        w = random_word(rng, n, sign, max_degree)
        raw[w] = raw.get(w, 0) + Fraction(rng.choice([1, -1, 2, -3]), rng.choice([1, 1, 2, 3]))
    return normal_form(raw, n, D)


def random_mixed_word(rng: random.Random, n: int, max_len: int, max_level: int = 3) -> Word:
    length = rng.randint(1, max_len)
    return tuple(
        (rng.choice([1, -1]) * rng.randint(1, max_level), rng.randint(1, n), rng.randint(1, n))
        for _ in range(length)
    )


# ----------------------------------------------------------------------
# R-matrix calculus


def check_yang_baxter(ns=(1, 2, 3, 4)) -> list[CheckResult]:
    out = []
    for n in ns:
        ok, residual = ybe_check(n)
        out.append(CheckResult(f"yang-baxter N={n}", ok, "residual 0" if ok else str(residual)))
    return out


def check_operator_identities(ns=(1, 2, 3, 4)) -> list[CheckResult]:
    out = []
    for n in ns:
        p = build_basic("P", n, 2, 1, 2)
        q = build_basic("Q", n, 2, 1, 2)
        one = TensorOperator.identity(n, 2)
        ok = p * p == one and q * q == q.scale(n) and q == p.partial_transpose(1)
        out.append(CheckResult(f"P^2=1, Q^2=NQ, Q=P^t1 N={n}", ok))
    return out


# ----------------------------------------------------------------------
# relations, bases and the pairing


def check_relation_equivalence(n: int = 2, max_level: int = 3) -> list[CheckResult]:
    failures = []
    total = 0
    for r in range(max_level + 1):
        for s in range(max_level + 1):
            for i, j, k, l in product(range(1, n + 1), repeat=4):
                total += 1
                if not commutator_equiv_check(r, s, i, j, k, l, n):
                    failures.append((r, s, i, j, k, l))
    return [_summary(f"defining relations vs closed-form commutators N={n}, r,s<={max_level}", failures, total)]


def check_gram_pbw(n: int = 2, max_degree: int = 4) -> list[CheckResult]:
    out = []
    for s in range(max_degree + 1):
        try:
            g = gram_matrix(s, n)
        except AssertionError as exc:
            out.append(CheckResult(f"Gram degree {s} N={n}", False, str(exc)))
            continue
        count = len(basis_enumerate("Y", s, n))
        ok = g.is_lower_triangular() and g.diagonal_matches() and g.rank() == count == g.size
        out.append(
            CheckResult(
                f"Gram degree {s} N={n}: lower triangular, diagonal (-1)^m*prod(mult!), rank = {count}",
                ok,
                f"size {g.size}, rank {g.rank()}",
            )
        )
    return out


def check_pairing_values(n: int = 2, max_level: int = 4, max_degree: int = 4) -> list[CheckResult]:
    out = [CheckResult("<1,1> = 1", pair_monomials((), ()) == 1)]
    failures = []
    total = 0
    for r in range(1, max_level + 1):
        for s in range(1, max_level + 1):
            for i, j, k, l in product(range(1, n + 1), repeat=4):
                total += 1
                expected = -1 if (r == s and i == l and j == k) else 0
                got = pair_monomials(((r, i, j),), ((-s, k, l),))
                if got != expected:
                    failures.append(((r, i, j), (-s, k, l), got))
    out.append(_summary(f"<T^(r)_ij, T^(-s)_kl> = -d_rs d_il d_jk, r,s<={max_level}", failures, total))
    bad = degree_mismatch_violations(max_degree, n)
    out.append(
        CheckResult(f"vanishing when deg x < dual deg z, degrees <= {max_degree}", not bad, f"{len(bad)} violations")
    )
    return out


# ----------------------------------------------------------------------
# Hopf structure


def _generators(n: int, max_level: int, sign: int) -> list[tuple[int, int, int]]:
    return [(sign * r, i, j) for r in range(1, max_level + 1) for i in range(1, n + 1) for j in range(1, n + 1)]


def check_hopf_axioms(n: int = 2, max_level: int = 3, D: int = 5) -> list[CheckResult]:
    out = []
    for sign, side, label in ((1, "Y", "Yangian"), (-1, "dual", "dual Yangian")):
        coassoc, counit_fail, anti_fail = [], [], []
        gens = _generators(n, max_level, sign)
        for g in gens:
            x = AlgElement.gen(*g, n, D if sign < 0 else None)
            if coassociativity_residual(x, side):
                coassoc.append(g)
            d = delta(x, side)
            left = d.counit_slot(0)
            right = d.counit_slot(1)
            target = TensorElement._raw(n, 1, {(w,): c for w, c in x.terms.items()}, d.trunc)
            if left != target or right != target:
                counit_fail.append(g)
            a, b = antipode_axiom_residuals(x, side)
            if a or b:
                anti_fail.append((g, str(a), str(b)))
        suffix = f"{label}, levels <= {max_level}, N={n}" + (f", D={D}" if sign < 0 else "")
        out.append(_summary(f"coassociativity ({suffix})", coassoc, len(gens)))
        out.append(_summary(f"counit axioms ({suffix})", counit_fail, len(gens)))
        out.append(_summary(f"antipode axioms ({suffix})", anti_fail, len(gens)))
    return out


def check_antipode_square(n: int = 2, K: int = 3) -> list[CheckResult]:
    ok, residuals = s_square_check(n, K)
    detail = "residual 0" if ok else "; ".join(f"{k}: {v}" for k, v in list(residuals.items())[:3])
    return [CheckResult(f"S^2(T^(r)_ij) = [u^-r] Z(u)^-1 T_ij(u+N), r<={K}, N={n}", ok, detail)]


def check_central_series(n: int = 2, r_max: int = 4, s_max: int = 3, D: int = 5, grouplike_order: int = 4) -> list[CheckResult]:
    K = max(r_max, grouplike_order)
    z = z_series(n, K)
    out = [CheckResult("Z^(1) = 0", not z[1], str(z[1]))]
    fail_y, fail_dy = [], []
    total = 0
    for r in range(2, r_max + 1):
        for s in range(1, s_max + 1):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    total += 1
                    c = commutator(z[r], AlgElement.gen(s, i, j, n))
                    if c:
                        fail_y.append((r, s, i, j, str(c)))
                    t = AlgElement.gen(-s, i, j, n, D)
                    c = z[r].with_trunc(D) * t - t * z[r].with_trunc(D)
                    if c:
                        fail_dy.append((r, -s, i, j, str(c)))
    out.append(_summary(f"[Z^(r), T^(s)_ij] = 0 in the Yangian, r<={r_max}, s<={s_max}", fail_y, total))
    out.append(_summary(f"[Z^(r), T^(-s)_ij] = 0 in the double, D={D}", fail_dy, total))
    lead_fail = []
    for r in range(2, r_max + 1):
        deg, lead = graded_leading(z[r], "deg_prime")
        expected = normal_form({((r - 1, i, i),): 1 - r for i in range(1, n + 1)}, n)
        if deg != r - 2 or lead != expected:
            lead_fail.append((r, deg, str(lead)))
    out.append(_summary("deg'-leading part of Z^(r) = (1-r) sum_i T^(r-1)_ii", lead_fail, r_max - 1))
    group_fail = []
    for r in range(1, grouplike_order + 1):
        lhs = delta(z[r], "Y")
        rhs = TensorElement._raw(n, 2, {}, None)
        for a in range(r + 1):
            rhs = rhs + TensorElement.of(z[a], z[r - a])
        if lhs != rhs:
            group_fail.append((r, str(lhs - rhs)))
    out.append(_summary(f"Delta(Z(u)) = Z(u) (x) Z(u) to order u^-{grouplike_order}", group_fail, grouplike_order))
    return out


# ----------------------------------------------------------------------
# universal R-matrix


def check_universal_r(n: int = 2, D: int = 4) -> list[CheckResult]:
    ur = universal_r(D, n)
    out = []
    system = dual_system(D, n)
    bad = system.biorthogonality_residual()
    out.append(CheckResult(f"dual system biorthogonal, degrees <= {D}", not bad, f"{len(system.pairs)} pairs"))
    eps = ur.counit_slot(1)
    out.append(CheckResult("(id (x) counit)(R_D) = 1", eps == TensorElement.unit(n, 1, D), str(eps)))

    u_spec = RepSpec.make("rho_star_u", "u", n, D)
    v_spec = RepSpec.make("rho_c", "v", n, D)
    # (rho*_u (x) id)(R_D): collect the Yangian coefficient of every matrix entry and power of u
    collected: dict[tuple[int, int, int], dict[Word, Fraction]] = {}
    for (zd, x), c in ur.terms.items():
        img = word_image(zd, [u_spec])
        for ((row,), (col,)), coeff in img.entries.items():
            terms = coeff.terms if hasattr(coeff, "terms") else {(0,): coeff}
            for (p,), a in terms.items():
                slot = collected.setdefault((row, col, p), {})
                slot[x] = slot.get(x, 0) + a * c
    expected: dict[tuple[int, int, int], dict[Word, Fraction]] = {}
    for i in range(1, n + 1):
        expected[(i, i, 0)] = {(): Fraction(1)}
        for j in range(1, n + 1):
            for p in range(1, D + 1):
                expected[(i, j, p)] = {((p, i, j),): Fraction(1)}
    clean = {k: {w: c for w, c in v.items() if c} for k, v in collected.items()}
    clean = {k: v for k, v in clean.items() if v}
    out.append(CheckResult(f"(rho*_u (x) id)(R_D) = T(u) mod u^-{D + 1}", clean == expected))

    total = TensorOperator.zero(n, 2)
    anti = TensorOperator.zero(n, 2)
    for (zd, x), c in ur.terms.items():
        left = word_image(zd, [u_spec])
        total = total + left.kron(word_image(x, [v_spec])).scale(c)
        sx = antipode_word(x, n)
        right = TensorOperator.zero(n, 1)
        for w, a in sx.terms.items():
            right = right + word_image(w, [v_spec]).scale(a)
        anti = anti + left.kron(right).scale(c)
    u = Var("u", DESC, D)
    v = Var("v", ASC, D)
    r_op = build_r(RMatrixSpec("R", Affine.of((u, 1), (v, -1))), 1, 2, 2, n)
    out.append(CheckResult(f"(rho*_u (x) rho_v)(R_D) = R(u-v) mod u^-{D + 1}", total == r_op))
    ident = TensorOperator.identity(n, 2)
    out.append(
        CheckResult(f"(rho*_u (x) rho_v)((id (x) S)R_D) * R(u-v) = 1 mod u^-{D + 1}", anti * r_op == ident)
    )
    return out


# ----------------------------------------------------------------------
# bialgebra duality


def check_bialgebra_duality(n: int = 2, samples: int = 100, seed: int = 0, max_degree: int = 3) -> list[CheckResult]:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        x = random_element(rng, n, 1, max_degree)
        room = max_degree - (x.max_degree() if x else 0)
        y = random_element(rng, n, 1, room)
        z = random_element(rng, n, -1, max_degree, max_degree)
        w = random_element(rng, n, -1, max_degree, max_degree)
        ok, values = duality_check(x, y, z, w)
        if not ok:
            failures.append((str(x), str(y), str(z), str(w), values))
    return [_summary(f"<X,ZW> = <Delta X, Z(x)W> and <XY,Z> = <X(x)Y, Delta Z>, seed {seed}", failures, samples)]


# ----------------------------------------------------------------------
# double Yangian


def check_double_yangian(
    n: int = 2, samples: int = 200, seed: int = 0, D: int = 5, max_len: int = 5, max_level: int = 3
) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    failures = []
    for _ in range(samples):
        w = random_mixed_word(rng, n, max_len)
        a = normal_form({w: 1}, n, D, strategy="leftmost")
        b = normal_form({w: 1}, n, D, strategy="rightmost")
        if a != b:
            failures.append((w, str(a - b)))
    out.append(_summary(f"rewriting confluence on random words, length <= {max_len}, D={D}, seed {seed}", failures, samples))

    for family, signs in (("Y", (1, 1)), ("dual", (-1, -1)), ("cross", (1, -1))):
        bad = []
        total = 0
        for r in range(1, max_level + 1):
            for s in range(1, max_level + 1):
                for i, j, k, l in product(range(1, n + 1), repeat=4):
                    total += 1
                    x = (signs[0] * r, i, j)
                    y = (signs[1] * s, k, l)
                    bracket = rel_rhs(family, r, s, i, j, k, l, n, D)
                    top = degree_prime((x, y))
                    if any(degree_prime(wd) > top for wd in bracket.terms):
                        bad.append((x, y, "terms above deg'(x) + deg'(y)"))
                        continue
                    got = homogeneous_part(bracket, "deg_prime", top)
                    zx = (i, j, x[0] - 1 if x[0] > 0 else x[0])
                    zy = (k, l, y[0] - 1 if y[0] > 0 else y[0])
                    expected = normal_form(
                        {((current_level(p), a, b),): c for (a, b, p), c in current_bracket(zx, zy).items()}, n, D
                    )
                    if got != expected:
                        bad.append((x, y, str(got), str(expected)))
        out.append(_summary(f"graded {family} brackets match the current-algebra bracket", bad, total))

    def rep_check(label: str, specs: list[RepSpec], family: str, level: int) -> CheckResult:
        ok, fails = rep_relation_check(specs, family, level)
        detail = "residual 0" if ok else f"{len(fails)} failing, first {fails[0][0]}"
        return CheckResult(f"{label}: {family} relations, levels <= {level}", ok, detail)

    rho = [RepSpec.make("rho_c", 2, n)]
    sigma = [RepSpec.make("sigma_c", 2, n)]
    sigma_double = [RepSpec.make("sigma_double", 3, n)]
    rho_u = [RepSpec.make("rho_star_u", "u", n, max_level + 1)]
    for family in ("Y", "dual", "cross"):
        out.append(rep_check("rho_c, c=2", rho, family, max_level))
    out.append(rep_check("sigma_c, c=2", sigma, "Y", max_level))
    out.append(rep_check("sigma_c, c=2", sigma, "dual", max_level))
    out.append(rep_check("sigma_double, c=3", sigma_double, "cross", max_level))
    out.append(rep_check("rho*_u formal u", rho_u, "dual", max_level))
    pair_rho = [RepSpec.make("rho_c", 2, n), RepSpec.make("rho_c", Fraction(-1, 2), n)]
    pair_sigma = [RepSpec.make("sigma_double", 3, n), RepSpec.make("sigma_double", -1, n)]
    out.append(rep_check("rho_2 (x) rho_-1/2", pair_rho, "cross", 2))
    out.append(rep_check("sigma_double_3 (x) sigma_double_-1", pair_sigma, "cross", 2))
    return out


# ----------------------------------------------------------------------
# separation


def random_deg_prime_element(rng: random.Random, n: int, max_deg_prime: int = 3) -> AlgElement:
    """A nonzero Yangian element whose words have deg' at most ``max_deg_prime``."""
    while True:
        raw: dict[Word, Fraction] = {}
        for _ in range(rng.randint(1, 3)):
            length = rng.randint(1, 3)
            budget = max_deg_prime
            word = []
            for _ in range(length):
                r = rng.randint(1, budget + 1)
                word.append((r, rng.randint(1, n), rng.randint(1, n)))
                budget -= r - 1
            w = tuple(word)
            raw[w] = raw.get(w, 0) + Fraction(rng.choice([1, -1, 2, -1, 3]), rng.choice([1, 2]))
        x = normal_form(raw, n)
        if x:
            return x


def check_separation(n: int = 2, samples: int = 20, seed: int = 0, n_max: int = 4, lead_n: int = 2) -> list[CheckResult]:
    rng = random.Random(seed)
    missing, lead_bad = [], []
    widths = []
    for _ in range(samples):
        x = random_deg_prime_element(rng, n)
        witness = separation_search(x, n_max)
        if witness is None:
            missing.append(str(x))
        else:
            widths.append(witness.n)
        ok, _ = leading_coefficient_check(x, lead_n)
        if not ok:
            lead_bad.append(str(x))
    out = [
        CheckResult(
            f"separation witness with n <= {n_max} for {samples} random elements, seed {seed}",
            not missing,
            f"witness sizes {sorted(widths)}" if not missing else f"no witness for {missing[:2]}",
        ),
        _summary(f"top-degree part of sigma_(c1..c{lead_n})(x) = evaluation of the graded image", lead_bad, samples),
    ]
    return out


# ----------------------------------------------------------------------
# suites

Check = Callable[..., list[CheckResult]]


def run_suite(name: str, n: int | None = None, D: int | None = None, K: int | None = None, seed: int = 0) -> list[CheckResult]:
    """Run a named suite.  ``None`` settings fall back to each check's default."""

    def kw(**pairs):
        return {k: v for k, v in pairs.items() if v is not None}

    if name == "ybe":
        ns = (n,) if n is not None else (1, 2, 3, 4)
        return check_yang_baxter(ns) + check_operator_identities(ns)
    if name == "pbw":
        return (
            check_relation_equivalence(**kw(n=n))
            + check_gram_pbw(**kw(n=n))
            + check_pairing_values(**kw(n=n))
            + check_separation(**kw(n=n), seed=seed)
        )
    if name == "hopf":
        return check_hopf_axioms(**kw(n=n, D=D)) + check_antipode_square(**kw(n=n, K=K))
    if name == "center":
        return check_central_series(**kw(n=n, D=D))
    if name == "duality":
        return check_bialgebra_duality(**kw(n=n), seed=seed)
    if name == "rprops":
        return check_universal_r(**kw(n=n, D=D))
    if name == "double":
        return check_double_yangian(**kw(n=n, D=D), seed=seed)
    if name == "all":
        out: list[CheckResult] = []
        for suite in SUITES:
            if suite != "all":
                out.extend(run_suite(suite, n, D, K, seed))
        return out
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


SUITES = ("ybe", "pbw", "hopf", "center", "duality", "rprops", "double", "all")

from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import sympy_pairing
from yangian.algebra import AlgElement, basis_enumerate, normal_form
from yangian.errors import TruncationError
from yangian.hopf import counit
from yangian.pairing import (
    diagonal_formula,
    dual_system,
    duality_check,
    gram_matrix,
    degree_mismatch_violations,
    pair_elements,
    pair_monomials,
    pair_with_constant_terms,
    universal_r,
)
from yangian.verify import check_universal_r

N = 2

pos_gen = st.tuples(st.integers(1, 2), st.integers(1, N), st.integers(1, N))
neg_gen = st.tuples(st.integers(-2, -1), st.integers(1, N), st.integers(1, N))


def gen(level, i, j, D=None):
    return AlgElement.gen(level, i, j, N, D)


# ----------------------------------------------------------------------
# values


def test_unit_pairing():
    assert pair_monomials((), ()) == 1


def test_generator_pairing():
    for r, s in product(range(1, 5), repeat=2):
        for i, j, k, l in product(range(1, N + 1), repeat=4):
            expected = -1 if (r == s and i == l and j == k) else 0
            assert pair_monomials(((r, i, j),), ((-s, k, l),)) == expected


def test_square_diagonal_entry():
    assert pair_monomials(((1, 1, 1), (1, 1, 1)), ((-1, 1, 1), (-1, 1, 1))) == 2


def test_two_block_value_matches_oracle():
    x, z = ((2, 1, 2),), ((-1, 1, 1), (-1, 2, 1))
    assert pair_monomials(x, z) == sympy_pairing(x, z, N) == 1


@settings(max_examples=30)
@given(st.lists(pos_gen, min_size=1, max_size=2), st.lists(neg_gen, min_size=1, max_size=2))
def test_pairing_matches_sympy_expansion(x, z):
    x, z = tuple(x), tuple(z)
    assert pair_monomials(x, z) == sympy_pairing(x, z, N)


@given(st.lists(pos_gen, min_size=1, max_size=3), st.lists(neg_gen, min_size=1, max_size=3))
def test_inclusion_exclusion_against_constant_terms(x, z):
    # pairing with T*(v) read as delta + T^(-1) expands into pairings with sub-words
    x, z = tuple(x), tuple(z)
    ones = [b for b, g in enumerate(z) if g[0] == -1]
    expected = Fraction(0)
    for size in range(len(ones) + 1):
        for dropped in combinations(ones, size):
            if all(z[b][1] == z[b][2] for b in dropped):
                kept = tuple(g for b, g in enumerate(z) if b not in dropped)
                expected += pair_monomials(x, kept) if kept else 0
    assert pair_with_constant_terms(x, z) == expected


@given(st.lists(pos_gen, max_size=3), st.sampled_from(basis_enumerate("dual", 3, N)))
def test_pairing_respects_yangian_relations(x, z):
    x = tuple(x)
    nf = normal_form({x: 1}, N)
    assert pair_monomials(x, z) == sum((c * pair_monomials(w, z) for w, c in nf.items()), Fraction(0))


@given(st.sampled_from(basis_enumerate("Y", 3, N) + basis_enumerate("Y", 4, N)), st.lists(neg_gen, max_size=3))
def test_pairing_respects_dual_relations(x, z):
    z = tuple(z)
    nf = normal_form({z: 1}, N, 4)
    assert pair_monomials(x, z) == sum((c * pair_monomials(x, w) for w, c in nf.items()), Fraction(0))


def test_pairing_with_units():
    x = gen(1, 1, 2) * gen(2, 2, 1) + 3
    z = gen(-1, 1, 1, 3) * gen(-1, 2, 2, 3) + 7
    assert pair_elements(x, AlgElement.scalar(N, 1, 3)) == counit(x)
    assert pair_elements(AlgElement.scalar(N, 1), z) == counit(z)
    assert pair_elements(gen(1, 1, 2), AlgElement.scalar(N, 1, 1)) == 0


@given(st.lists(pos_gen, max_size=2), st.lists(neg_gen, max_size=2), st.fractions(-3, 3, max_denominator=3))
def test_bilinearity(x, z, c):
    xe = normal_form({tuple(x): 1}, N)
    ze = normal_form({tuple(z): 1}, N, 4)
    assert pair_elements(xe.scale(c), ze) == c * pair_elements(xe, ze)
    assert pair_elements(xe + xe, ze) == 2 * pair_elements(xe, ze)


def test_insufficient_truncation():
    with pytest.raises(TruncationError):
        pair_elements(gen(3, 1, 1), gen(-1, 1, 1, 2))


def test_vanishing_below_dual_degree():
    assert degree_mismatch_violations(3, N) == []


# ----------------------------------------------------------------------
# Gram matrices and dual systems


def test_gram_small_degrees():
    assert gram_matrix(0, N).values == ((1,),)
    g1 = gram_matrix(1, N)
    assert g1.values == tuple(tuple(Fraction(-1) if p == q else Fraction(0) for q in range(4)) for p in range(4))
    g2 = gram_matrix(2, N)
    assert g2.size == 14 and g2.is_lower_triangular() and g2.rank() == 14


@pytest.mark.parametrize("s", [0, 1, 2, 3, 4])
def test_gram_is_nondegenerate(s):
    g = gram_matrix(s, N)
    assert g.is_lower_triangular() and g.diagonal_matches() and g.rank() == g.size
    assert g.size == len(basis_enumerate("Y", s, N))


def test_diagonal_formula():
    assert diagonal_formula(((1, 1, 1), (1, 1, 1))) == 2
    assert diagonal_formula(((1, 1, 1), (1, 1, 1), (2, 1, 2))) == -2
    assert diagonal_formula(()) == 1


def test_gram_inverse():
    g = gram_matrix(2, N)
    size = g.size
    for p in range(size):
        for q in range(size):
            value = sum(g.values[p][t] * g.inverse[t][q] for t in range(size))
            assert value == (1 if p == q else 0)


def test_dual_system_degree_one():
    system = dual_system(1, N)
    assert system.pairs[0] == ((), AlgElement.scalar(N, 1, 1))
    for x, xd in system.pairs[1:]:
        (_, i, j), = x
        assert xd == -gen(-1, j, i, 1)


def test_dual_system_biorthogonal():
    system = dual_system(2, N)
    assert len(system.pairs) == 1 + 4 + 14
    assert system.biorthogonality_residual() == []


def test_universal_r_low_degree():
    ur = universal_r(1, N)
    assert ur.terms[((), ())] == 1
    for i, j in product(range(1, N + 1), repeat=2):
        assert ur.terms[(((-1, j, i),), ((1, i, j),))] == -1
    assert all(r.passed for r in check_universal_r(N, 2)), check_universal_r(N, 2)


# ----------------------------------------------------------------------
# bialgebra duality


def test_duality_examples():
    D = 3
    x = gen(2, 1, 1)
    z = w = gen(-1, 1, 1, D)
    ok, values = duality_check(x, AlgElement.scalar(N, 1), z, w)
    assert ok, values
    ok, _ = duality_check(AlgElement.scalar(N, 1), AlgElement.scalar(N, 1), AlgElement.scalar(N, 1, D), z)
    assert ok


@given(st.lists(pos_gen, max_size=2), st.lists(pos_gen, max_size=1), st.lists(neg_gen, max_size=2), st.lists(neg_gen, max_size=1))
def test_duality_on_words(a, b, c, d):
    D = 6
    x = normal_form({tuple(a): 1}, N)
    y = normal_form({tuple(b): 1}, N)
    z = normal_form({tuple(c): 1}, N, D)
    w = normal_form({tuple(d): 1}, N, D)
    ok, values = duality_check(x, y, z, w)
    assert ok, values


def _rank(rows):
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(len(rows[0]) if rows else 0):
        pivot = next((p for p in range(rank, len(rows)) if rows[p][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for p in range(len(rows)):
            if p != rank and rows[p][col]:
                f = rows[p][col] / rows[rank][col]
                rows[p] = [a - f * b for a, b in zip(rows[p], rows[rank])]
        rank += 1
    return rank


@pytest.mark.parametrize("s", [1, 2, 3])
def test_reversed_generator_order_is_also_a_basis(s):
    # monomials written in the opposite order of generators pair nondegenerately
    # with the dual basis, so they are a basis of the degree-s part as well
    reversed_words = [tuple(reversed(w)) for w in basis_enumerate("Y", s, N)]
    duals = basis_enumerate("dual", s, N)
    lower = [w for t in range(s) for w in basis_enumerate("dual", t, N)]
    gram = [[Fraction(pair_monomials(x, z)) for z in duals + lower] for x in reversed_words]
    assert _rank(gram) == len(reversed_words) == len(duals)

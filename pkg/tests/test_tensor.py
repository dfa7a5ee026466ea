from fractions import Fraction

import pytest

from oracles import sympy_pq_identities, sympy_yang_baxter_residual
from yangian.series import ASC, DESC, PolySeries, Var
from yangian.tensor import (
    Affine,
    RMatrixSpec,
    TensorOperator,
    build_basic,
    build_r,
    matrix_unit,
    reciprocal,
    ybe_check,
)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_yang_baxter_exact(n):
    ok, residual = ybe_check(n)
    assert ok and residual.is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_yang_baxter_sympy_oracle(n):
    assert sympy_yang_baxter_residual(n).is_zero_matrix


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_p_q_identities(n):
    p = build_basic("P", n, 2, 1, 2)
    q = build_basic("Q", n, 2, 1, 2)
    one = TensorOperator.identity(n, 2)
    assert p * p == one
    assert q * q == q.scale(n)
    assert q == p.partial_transpose(1)
    assert sympy_pq_identities(n) == (True, True, True)


def test_matrix_unit_products():
    n = 3
    e12, e23, e13 = matrix_unit(n, 1, 2), matrix_unit(n, 2, 3), matrix_unit(n, 1, 3)
    assert e12 * e23 == e13
    assert e23 * e12 == TensorOperator.zero(n, 1)


def test_r_matrix_unitarity():
    # R(u) R(-u) = 1 - 1/u^2
    n, K = 2, 6
    u = Var("u", DESC, K)
    r_plus = build_r(RMatrixSpec("R", Affine.of((u, 1))), 1, 2, 2, n)
    r_minus = build_r(RMatrixSpec("R", Affine.of((u, -1))), 1, 2, 2, n)
    expected = TensorOperator.identity(n, 2, PolySeries.constant(1, (u,)) - PolySeries.monomial(u, 2))
    assert r_plus * r_minus == expected


def test_transposed_r_inverse():
    # R^t(u) R^t(u)^-1 = 1 with R^t(u)^-1 = 1 + Q/(u - N)
    n, K = 3, 6
    u = Var("u", DESC, K)
    arg = Affine.of((u, 1))
    rt = build_r(RMatrixSpec("Rt", arg), 1, 2, 2, n)
    rt_inv = build_r(RMatrixSpec("Rt_inv", arg), 1, 2, 2, n)
    assert rt * rt_inv == TensorOperator.identity(n, 2, PolySeries.constant(1, (u,)))


def test_reciprocal_of_difference():
    K = 4
    u, v = Var("u", DESC, K), Var("v", ASC, K)
    s = reciprocal(Affine.of((u, 1), (v, -1)))
    # 1/(u - v) = sum_p u^-(p+1) v^p
    assert s == PolySeries((u, v), {(p + 1, p): 1 for p in range(K)})


def test_kron_and_embed_agree():
    n = 2
    a = matrix_unit(n, 1, 2)
    b = matrix_unit(n, 2, 2)
    assert a.kron(b) == a.embed((1,), 2) * b.embed((2,), 2)
    assert b.kron(a) == a.embed((2,), 2) * b.embed((1,), 2)


def test_json_round_trip():
    op = build_basic("Q", 2, 2, 1, 2).scale(Fraction(-3, 2))
    assert TensorOperator.from_json(op.to_json()) == op


def test_bad_slots_rejected():
    with pytest.raises(ValueError):
        build_basic("P", 2, 2, 1, 1)
    with pytest.raises(ValueError):
        build_basic("e", 2, 1, a=1, i=3, j=1)

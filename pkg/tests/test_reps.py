from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from yangian.algebra import AlgElement, normal_form
from yangian.errors import IncompatibleError
from yangian.hopf import z_series
from yangian.reps import (
    RepSpec,
    Witness,
    current_eval,
    evaluation_image,
    evaluation_relation_check,
    gen_image,
    gl_embedding,
    leading_coefficient_check,
    parameter_sequence,
    rep_apply,
    rep_relation_check,
    separation_search,
)
from yangian.series import DESC, PolySeries, Var
from yangian.tensor import TensorOperator, matrix_unit

N = 2


def gen(level, i, j, D=None):
    return AlgElement.gen(level, i, j, N, D)


def spec(kind, param, order=4):
    return RepSpec.make(kind, param, N, order)


# ----------------------------------------------------------------------
# images


def test_rho_image():
    assert rep_apply(gen(2, 1, 2), [spec("rho_c", 3)]) == matrix_unit(N, 2, 1).scale(-3)


def test_sigma_pair_image():
    one = TensorOperator.identity(N, 1)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            e = matrix_unit(N, i, j)
            image = rep_apply(gen(1, i, j), [spec("sigma_c", 2), spec("sigma_c", Fraction(1, 3))])
            assert image == e.kron(one) + one.kron(e)


def test_rho_star_u_image():
    u = Var("u", DESC, 4)
    image = rep_apply(gen(-1, 1, 1, 2), [spec("rho_star_u", "u")])
    assert image == matrix_unit(N, 1, 1).map_coeffs(lambda c: PolySeries.monomial(u, 1) * (-c))


def test_sigma_dual_block():
    assert gen_image(spec("sigma_dual_c", 2), -2, 1, 2) == matrix_unit(N, 1, 2).scale(Fraction(1, 4))
    assert gen_image(spec("sigma_double", 3), -2, 1, 2) == matrix_unit(N, 1, 2)


def test_parameter_errors():
    with pytest.raises(ZeroDivisionError):
        spec("sigma_dual_c", 0)
    with pytest.raises(ZeroDivisionError):
        rep_apply(gen(-1, 1, 1, 2), [spec("sigma_double", N)])
    with pytest.raises(ValueError):
        spec("nonsense", 1)
    with pytest.raises(IncompatibleError):
        gen_image(spec("current_eval_c", 1), 1, 1, 1)


def test_spec_json():
    s = spec("sigma_c", 2)
    assert s.to_json() == {"kind": "sigma_c", "c": "2", "N": 2}
    assert RepSpec.from_json({"kind": "sigma", "c": "2", "N": 2}) == s
    assert Witness(2, (Fraction(1), Fraction(-1))).to_json() == {"n": 2, "params": ["1", "-1"]}


# ----------------------------------------------------------------------
# relations


@pytest.mark.parametrize("family", ["Y", "dual", "cross"])
def test_rho_satisfies_every_family(family):
    ok, failures = rep_relation_check([spec("rho_c", 2)], family, 3)
    assert ok, failures[:2]


@pytest.mark.parametrize("family", ["Y", "dual"])
def test_sigma_satisfies_single_block_families(family):
    ok, failures = rep_relation_check([spec("sigma_c", 2)], family, 3)
    assert ok, failures[:2]


def test_sigma_with_unshifted_dual_block_breaks_cross_relations():
    # T^(-r) -> c^-r e_ij together with T^(r) -> c^(r-1) e_ij is not a
    # representation of the double: the cross relations need the dual block
    # at c - N.
    ok, failures = rep_relation_check([spec("sigma_c", 2)], "cross", 2)
    assert not ok and failures


@pytest.mark.parametrize("c", [3, Fraction(-1, 2), 5])
def test_sigma_double_satisfies_every_family(c):
    for family in ("Y", "dual", "cross"):
        ok, failures = rep_relation_check([spec("sigma_double", c)], family, 3)
        assert ok, (family, failures[:2])


def test_symbolic_rho_star_on_dual_relations():
    ok, failures = rep_relation_check([spec("rho_star_u", "u", 5)], "dual", 3)
    assert ok, failures[:2]


def test_tensor_products_on_cross_relations():
    for specs in (
        [spec("rho_c", 2), spec("rho_c", Fraction(-1, 2))],
        [spec("sigma_double", 3), spec("sigma_double", -1)],
    ):
        ok, failures = rep_relation_check(specs, "cross", 2)
        assert ok, failures[:2]


pos_gen = st.tuples(st.integers(1, 3), st.integers(1, N), st.integers(1, N))
neg_gen = st.tuples(st.integers(-3, -1), st.integers(1, N), st.integers(1, N))
params = st.sampled_from([Fraction(1), Fraction(-1), Fraction(3), Fraction(1, 2)])


@given(pos_gen, pos_gen, params, st.sampled_from(["rho_c", "sigma_c"]))
def test_homomorphism_yangian(g, h, c, kind):
    specs = [spec(kind, c), spec(kind, c + 1)]
    x, y = gen(*g), gen(*h)
    assert rep_apply(x * y, specs) == rep_apply(x, specs) * rep_apply(y, specs)


@given(neg_gen, neg_gen, params, st.sampled_from(["rho_c", "sigma_dual_c"]))
def test_homomorphism_dual(g, h, c, kind):
    D = 6
    specs = [spec(kind, c)]
    x, y = gen(*g, D), gen(*h, D)
    assert rep_apply(x * y, specs) == rep_apply(x, specs) * rep_apply(y, specs)


@given(pos_gen, neg_gen, params)
def test_homomorphism_double(g, h, c):
    D = 6
    specs = [spec("sigma_double", c + 4)]
    x, y = gen(*g), gen(*h, D)
    assert rep_apply(x * y, specs) == rep_apply(x, specs) * rep_apply(y, specs)


@given(neg_gen, neg_gen)
def test_homomorphism_symbolic_dual(g, h):
    D = 6
    specs = [spec("rho_star_u", "u", 6)]
    x, y = gen(*g, D), gen(*h, D)
    assert rep_apply(x * y, specs) == rep_apply(x, specs) * rep_apply(y, specs)


# ----------------------------------------------------------------------
# U(gl_N) and the evaluation homomorphism


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("transposed", [False, True])
def test_evaluation_respects_relations(n, transposed):
    ok, failures = evaluation_relation_check(n, 3, transposed)
    assert ok, failures[:2]


def test_embedding_then_evaluation_is_identity():
    words = {((1, 2, 0),): 1, ((1, 2, 0), (2, 1, 0), (1, 1, 0)): Fraction(2, 3), (): 5}
    back = evaluation_image(gl_embedding(words, N))
    assert gl_embedding(back, N) == gl_embedding(words, N)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            assert evaluation_image(gl_embedding({((i, j, 0),): 1}, N)) == {((i, j, 0),): 1}


def test_evaluation_examples():
    assert evaluation_image(gen(1, 1, 2)) == {((1, 2, 0),): 1}
    assert evaluation_image(gen(1, 1, 2), transposed=True) == {((2, 1, 0),): -1}
    assert evaluation_image(gen(2, 1, 2)) == {}
    with pytest.raises(IncompatibleError):
        evaluation_image(gen(-1, 1, 1, 2))
    with pytest.raises(ValueError):
        gl_embedding({((1, 1, 1),): 1}, N)


@given(st.lists(pos_gen, max_size=3), st.booleans())
def test_evaluation_agrees_with_parameter_zero(word, transposed):
    # pulling the defining representation back through the evaluation map
    # gives sigma_0, and through its transposed version gives rho_0
    x = normal_form({tuple(word): 1}, N)
    kind = "rho_c" if transposed else "sigma_c"
    assert current_eval(evaluation_image(x, transposed), [1], N) == rep_apply(x, [spec(kind, 0)])


# ----------------------------------------------------------------------
# current algebras and separation


def test_current_eval_examples():
    assert current_eval({((1, 2, 2),): 1}, [2], N) == matrix_unit(N, 1, 2).scale(4)
    for c in (1, 2, Fraction(-1, 3)):
        assert current_eval({((1, 1, 0),): 1}, [c], N) == matrix_unit(N, 1, 1)
    with pytest.raises(ZeroDivisionError):
        current_eval({((1, 1, -1),): 1}, [0], N)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_graded_correspondence(r):
    for c in (2, Fraction(-1, 2)):
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                assert rep_apply(gen(r, i, j), [spec("sigma_c", c)]) == current_eval({((i, j, r - 1),): 1}, [c], N)


def test_parameter_sequence_is_distinct_and_nonzero():
    seq = parameter_sequence()
    first = [next(seq) for _ in range(40)]
    assert len(set(first)) == 40 and 0 not in first


def test_separation_examples():
    w = separation_search(gen(1, 1, 2), 1)
    assert w is not None and w.n == 1
    w = separation_search(z_series(N, 2)[2], 2)
    assert w is not None and w.n <= 2
    with pytest.raises(ValueError):
        separation_search(AlgElement.scalar(N, 0), 2)


def test_separation_of_double_element():
    x = gen(-1, 1, 2, 3) * gen(2, 2, 1)
    w = separation_search(x, 2)
    assert w is not None
    specs = [spec("sigma_double", c) for c in w.params]
    assert rep_apply(x, specs)


def test_element_killed_by_one_factor_needs_two():
    # e_12^2 = 0, while (e_12 (x) 1 + 1 (x) e_12)^2 = 2 e_12 (x) e_12
    x = gen(1, 1, 2) * gen(1, 1, 2)
    for c in (1, 2, Fraction(-1, 3)):
        assert not rep_apply(x, [spec("sigma_c", c)])
    w = separation_search(x, 3)
    assert w is not None and w.n == 2
    assert rep_apply(x, [spec("sigma_c", c) for c in w.params])


@pytest.mark.parametrize(
    "raw",
    [
        {((2, 1, 2), (1, 2, 1)): 1},
        {((3, 1, 1),): 2, ((1, 1, 2), (2, 2, 1)): -1},
        {((1, 1, 1), (1, 2, 2), (2, 1, 2)): 1},
    ],
)
def test_leading_coefficient(raw):
    ok, diff = leading_coefficient_check(normal_form(raw, N), 2)
    assert ok, diff

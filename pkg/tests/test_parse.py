from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from yangian.algebra import AlgElement, commutator, normal_form
from yangian.errors import ParseError
from yangian.hopf import z_series
from yangian.parse import parse_element, parse_raw

N = 2


def gen(level, i, j, D=None):
    return AlgElement.gen(level, i, j, N, D)


def test_generator_and_scalars():
    assert parse_element("T[2,1,2]", N) == gen(2, 1, 2)
    assert parse_element("3/4", N) == AlgElement.scalar(N, Fraction(3, 4))
    assert parse_element("-T[1,1,1] + 2*T[1,2,2]", N) == -gen(1, 1, 1) + gen(1, 2, 2).scale(2)


def test_products_keep_written_order():
    raw = parse_raw("T[1,1,2]*T[1,2,1] - T[1,2,1]*T[1,1,2]", N)
    assert raw == {((1, 1, 2), (1, 2, 1)): 1, ((1, 2, 1), (1, 1, 2)): -1}
    assert parse_element("T[1,1,2]*T[1,2,1] - T[1,2,1]*T[1,1,2]", N) == gen(1, 1, 1) - gen(1, 2, 2)


def test_parentheses_distribute():
    x = parse_element("(T[1,1,1] + 1) * (T[1,1,1] - 1)", N)
    assert x == gen(1, 1, 1) * gen(1, 1, 1) - 1


def test_dual_and_mixed_generators():
    x = parse_element("T[1,1,2]*T[-1,2,1]", N, D=3)
    assert x == gen(1, 1, 2) * gen(-1, 2, 1, 3)


def test_central_coefficient():
    assert parse_element("Z[2]", N) == z_series(N, 2)[2]
    assert not commutator(parse_element("Z[3]", N), gen(2, 1, 2))


@pytest.mark.parametrize(
    "text,pos",
    [
        ("T[0,1,1]", 2),
        ("T[1,3,1]", 4),
        ("T[1,1,1", 7),
        ("T[1,1,1] +", 10),
        ("2 $ 3", 2),
        ("1/0", 2),
        ("(T[1,1,1]", 9),
        ("T[1,1,1] T[1,1,1]", 9),
    ],
)
def test_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_element(text, N)
    assert info.value.pos == pos
    assert str(info.value).splitlines()[-1] == "  " + " " * pos + "^"


def test_empty_expression():
    with pytest.raises(ParseError, match="empty expression"):
        parse_element("   ", N)


level = st.integers(1, 3) | st.integers(-3, -1)
gens = st.tuples(level, st.integers(1, N), st.integers(1, N))
coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool)
combos = st.dictionaries(st.lists(gens, max_size=3).map(tuple), coeffs, min_size=1, max_size=3)


@given(combos)
def test_printed_form_parses_back(raw):
    D = 4
    x = normal_form(raw, N, D)
    assert parse_element(str(x), N, D) == x


@given(combos)
def test_json_round_trip(raw):
    x = normal_form(raw, N, 4)
    assert AlgElement.from_json(x.to_json()) == x

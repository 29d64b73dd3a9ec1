"""Expression parsing, rendering, and JSON serialization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from postlie.exprs import (lincomb_from_json, lincomb_to_json, parse_lincomb,
                           parse_reg_lincomb, parse_tensor,
                           reg_lincomb_from_json, reg_lincomb_to_json,
                           render_lincomb, render_tensor, tensor_from_json,
                           tensor_to_json)
from postlie.forest import ForestSyntaxError, forests_up_to, parse_forest
from postlie.lincomb import LinComb, tensor_of
from postlie.regstruct import enumerate_reg_trees


def test_parse_basic_sum():
    x = parse_lincomb("2*[a] - 1/3*[b] + [a][b]")
    assert x.coeff(parse_forest("[a]")) == 2
    assert x.coeff(parse_forest("[b]")) == Fraction(-1, 3)
    assert x.coeff(parse_forest("[a][b]")) == 1


def test_parse_constant_and_parens():
    x = parse_lincomb("3*(1/2*[a] + [b])")
    assert x == parse_lincomb("3/2*[a] + 3*[b]")
    assert parse_lincomb("2").coeff(parse_forest("")) == 2


def test_infix_shuffle():
    assert parse_lincomb("[a] sh [b]") == parse_lincomb("[a][b] + [b][a]")


def test_parse_tensor_terms():
    t = parse_tensor("[a] (x) [b] + 1 (x) [a][b]")
    b = lambda s: LinComb.basis(parse_forest(s))
    assert t == tensor_of(b("[a]"), b("[b]")) + tensor_of(b(""), b("[a][b]"))


def test_render_parse_round_trip_tensor():
    t = parse_tensor("[a] (x) [b] - 2*[b] (x) [a][a]")
    assert parse_tensor(render_tensor(t)) == t


def test_error_positions():
    with pytest.raises(ForestSyntaxError) as e:
        parse_lincomb("2**[a]")
    assert e.value.position == 2
    with pytest.raises(ForestSyntaxError) as e:
        parse_tensor("[a] (x) [b] + [c]")
    assert "arity" in str(e.value)
    with pytest.raises(ForestSyntaxError) as e:
        parse_tensor("([a] (x) [b])")
    assert "parentheses" in str(e.value)


def test_alphabet_violation_keeps_position():
    with pytest.raises(ForestSyntaxError) as e:
        parse_lincomb("[a][z]", ("a", "b"))
    assert e.value.position == 4
    assert str(e.value).count("at position") == 1


def test_reg_parsing():
    x = parse_reg_lincomb("[o{1}] + 2*[o{0}[o{0}]{0}]")
    assert len(x) == 2
    assert reg_lincomb_from_json(reg_lincomb_to_json(x)) == x
    # shuffle has no meaning on decorated words
    with pytest.raises(ForestSyntaxError):
        parse_reg_lincomb("[o{1}] sh [o{0}]")


def test_json_round_trips():
    x = parse_lincomb("1/2*[a[b]] - [b][a]")
    assert lincomb_from_json(lincomb_to_json(x)) == x
    t = parse_tensor("[a] (x) [b][b]")
    assert tensor_from_json(tensor_to_json(t)) == t


coeffs_st = st.fractions(min_value=-4, max_value=4, max_denominator=6)
forests_st = st.sampled_from(tuple(forests_up_to(3, ("a", "b"))))


@given(st.lists(st.tuples(forests_st, coeffs_st), max_size=5))
@settings(max_examples=60, deadline=None)
def test_render_parse_round_trip_random(terms):
    x = LinComb.from_terms(terms)
    assert parse_lincomb(render_lincomb(x)) == x


reg_trees_st = st.sampled_from(
    [t for n in range(3) for t in enumerate_reg_trees(n, 1)])


@given(st.lists(st.tuples(reg_trees_st, coeffs_st), max_size=4))
@settings(max_examples=40, deadline=None)
def test_reg_render_parse_round_trip_random(terms):
    x = LinComb.from_terms(terms)
    assert parse_reg_lincomb(render_lincomb(x)) == x

"""Planar trees and ordered forests: construction, order, parsing."""

import pytest

from postlie.forest import (FOREST_ONE, ForestSyntaxError, b_minus, b_plus,
                            compare, enumerate_forests, enumerate_trees,
                            forest, forest_from_json, forest_to_json, leaf,
                            parse_forest, render_forest, single, tree, word)


def test_unit_forest():
    assert FOREST_ONE.is_empty
    assert FOREST_ONE.degree == 0
    assert FOREST_ONE.text == "1"
    assert parse_forest("1") is FOREST_ONE


def test_interning():
    a = parse_forest("[a[b][c]]")
    b = single(tree("a", (leaf("b"), leaf("c"))))
    assert a is b


def test_child_order_matters():
    assert parse_forest("[a[b][c]]") is not parse_forest("[a[c][b]]")


def test_bplus_bminus_inverse():
    f = parse_forest("[a][b[c]]")
    t = b_plus(f, "r")
    assert render_forest(single(t)) == "[r[a][b[c]]]"
    assert b_minus(t) is f


def test_word_concatenation():
    ab = word(parse_forest("[a]"), parse_forest("[b]"))
    assert ab is parse_forest("[a][b]")
    assert word(FOREST_ONE, ab) is ab


def test_compare_is_graded_then_textual():
    small = parse_forest("[a][b]")
    big = parse_forest("[a][b][c]")
    assert compare(small, big) < 0
    assert compare(parse_forest("[a[b]]"), parse_forest("[a][b]")) < 0
    assert compare(small, small) == 0


def test_parse_rejects_malformed():
    for bad in ("[a", "a]", "[]", "[a]x", "[a[b]"):
        with pytest.raises(ForestSyntaxError):
            parse_forest(bad)


def test_parse_error_carries_position():
    try:
        parse_forest("[a][b")
        raise AssertionError("expected a syntax error")
    except ForestSyntaxError as err:
        assert err.position == 5
        assert "position 5" in str(err)


def test_alphabet_restriction():
    assert parse_forest("[a]", alphabet=("a",)) is parse_forest("[a]")
    with pytest.raises(ForestSyntaxError):
        parse_forest("[b]", alphabet=("a",))


def test_catalan_counts_single_letter():
    # trees of degree n follow the Catalan numbers shifted by one
    assert [len(enumerate_trees(n, ("o",))) for n in range(1, 6)] \
        == [1, 1, 2, 5, 14]
    # forests of degree n follow the Catalan numbers
    assert [len(enumerate_forests(n, ("o",))) for n in range(6)] \
        == [1, 1, 2, 5, 14, 42]


def test_counts_two_letters():
    assert len(enumerate_trees(2, ("a", "b"))) == 4
    assert len(enumerate_forests(2, ("a", "b"))) == 8


def test_enumeration_sorted_and_interned():
    forests = enumerate_forests(3, ("o",))
    keys = [f.sort_key() for f in forests]
    assert keys == sorted(keys)
    assert all(parse_forest(f.text) is f for f in forests)


def test_json_round_trip():
    for f in enumerate_forests(3, ("a", "b")):
        assert forest_from_json(forest_to_json(f)) is f


def test_forest_from_iterable():
    f = forest([tree("a"), tree("b", (leaf("c"),))])
    assert f is parse_forest("[a][b[c]]")

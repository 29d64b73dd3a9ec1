"""Natural growth, primitive projection, and fold decomposition."""

from fractions import Fraction

import pytest

from postlie.forest import FOREST_ONE, forests_up_to, parse_forest
from postlie.growth import (f_decompose, f_recompose, growth_fold,
                            is_primitive, natural_growth, primitive_basis,
                            primitive_degree, primitive_projection)
from postlie.lincomb import LinComb, tensor_of


def b(text):
    return LinComb.basis(parse_forest(text))


def test_growth_on_single_node_target():
    assert natural_growth(b("[a]"), b("[b]")) == b("[b[a]]")
    assert natural_growth(b("[a][b]"), b("[c]")) == b("[c[a][b]]")


def test_growth_averages_over_target_vertices():
    got = natural_growth(b("[a]"), b("[b[c]]"))
    want = (b("[b[a][c]]") + b("[b[c[a]]]") + b("[b[c][a]]")) * Fraction(1, 2)
    assert got == want


def test_growth_fold_is_left_iterated():
    xs = [b("[a]"), b("[b]"), b("[c]")]
    assert growth_fold(xs) == b("[c[b[a]]]")
    assert growth_fold(xs[:1]) == b("[a]")


def test_projection_values():
    assert primitive_projection(b("[a]")) == b("[a]")
    assert primitive_projection(b("[a[b]]")).is_zero
    assert primitive_projection(b("[a][b]")) == b("[a][b]") - b("[b[a]]")


def test_projection_output_is_primitive_and_idempotent():
    for f in forests_up_to(3, ("a",)):
        if f.is_empty:
            continue
        p = primitive_projection(LinComb.basis(f))
        assert is_primitive(p)
        assert primitive_projection(p) == p


def test_primitive_basis_small():
    assert [v for v in primitive_basis(1, ("a", "b"))] == [b("[a]"), b("[b]")]
    (p,) = primitive_basis(2, ("a",))
    assert p == b("[a][a]") - b("[a[a]]")
    assert is_primitive(p)


def test_primitive_degree_counts_fold_level():
    (p,) = primitive_basis(2, ("a",))
    assert primitive_degree(p) == 1
    assert primitive_degree(growth_fold([b("[a]"), b("[b]")])) == 2


def test_fold_decomposition_round_trip():
    x = growth_fold([b("[a]"), b("[b]")]) + b("[a]") * 3
    levels = f_decompose(x)
    assert set(levels) == {1, 2}
    assert levels[2] == tensor_of(b("[a]"), b("[b]"))
    assert f_recompose(levels) == x


def test_fold_decomposition_total():
    # every constant-free element decomposes, not only fold images
    x = b("[a][b]")
    assert f_recompose(f_decompose(x)) == x


def test_fold_decomposition_rejects_constants():
    with pytest.raises(ValueError):
        f_decompose(LinComb.basis(FOREST_ONE) + b("[a]"))

"""Left grafting, the Grossman-Larson product, and its antipode."""

from fractions import Fraction

import pytest

from postlie.forest import FOREST_ONE, parse_forest
from postlie.grafting import (gl_antipode, gl_exp, gl_inverse_product,
                              gl_product, jacobi_bracket, left_graft)
from postlie.lincomb import LinComb, concat, counit


def b(text):
    return LinComb.basis(parse_forest(text))


def test_left_graft_single_targets():
    assert left_graft(b("[a]"), b("[b]")) == b("[b[a]]")
    # one summand per node of the target, attached leftmost
    assert left_graft(b("[a]"), b("[b[c]]")) == b("[b[a][c]]") + b("[b[c[a]]]")


def test_left_graft_forest_acts_as_one_block():
    # a two-tree forest grafts without splitting
    assert left_graft(b("[a][b]"), b("[c]")) == b("[c[a][b]]")


def test_left_graft_unit_laws():
    one = LinComb.basis(FOREST_ONE)
    assert left_graft(one, b("[a]")) == b("[a]")
    assert left_graft(b("[a]"), one).is_zero


def test_gl_product_small():
    assert gl_product(b("[a]"), b("[b]")) == b("[a][b]") + b("[b[a]]")
    one = LinComb.basis(FOREST_ONE)
    assert gl_product(one, b("[a]")) == b("[a]")
    assert gl_product(b("[a]"), one) == b("[a]")


def test_gl_antipode_values():
    assert gl_antipode(b("[a]")) == -b("[a]")
    assert gl_antipode(b("[a][b]")) == b("[b][a]") + b("[a[b]]") + b("[b[a]]")


def test_gl_antipode_is_convolution_inverse():
    from postlie.lincomb import deshuffle

    for text in ("[a]", "[a][b]", "[a[b]]", "[a][b][c]"):
        x = b(text)
        conv = LinComb.zero()
        for (f1, f2), c in deshuffle(x).items():
            conv = conv + gl_product(gl_antipode(LinComb.basis(f1)),
                                     LinComb.basis(f2)) * c
        assert conv.is_zero  # epsilon vanishes away from the unit


def test_gl_inverse_product_recovers_concat():
    for xt, yt in (("[a]", "[b]"), ("[a][b]", "[c]"), ("[a[b]]", "[c][d]")):
        x, y = b(xt), b(yt)
        assert gl_inverse_product(x, y) == concat(x, y)


def test_jacobi_bracket_antisymmetric():
    x, y = b("[a]"), b("[b[c]]")
    assert jacobi_bracket(x, y) == -jacobi_bracket(y, x)
    assert jacobi_bracket(x, x).is_zero


def test_gl_exp_requires_zero_constant_term():
    with pytest.raises(ValueError):
        gl_exp(LinComb.basis(FOREST_ONE), 3)


def test_gl_exp_truncation():
    e = gl_exp(b("[a]"), 2)
    assert e.coeff(FOREST_ONE) == 1
    assert e.coeff(parse_forest("[a]")) == 1
    assert e.coeff(parse_forest("[a][a]")) == Fraction(1, 2)
    assert e.coeff(parse_forest("[a[a]]")) == Fraction(1, 2)
    assert e.max_degree() == 2

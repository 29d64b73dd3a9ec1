"""Deformed layer: decorated trees, word product, graft, bracket, phi."""

from fractions import Fraction
from itertools import product as iproduct

import pytest

from postlie import linalg
from postlie.lincomb import LinComb, Tensor
from postlie.regstruct import (bracket0, deformed_graft, deformed_mkw_coproduct,
                               deformed_mkw_tree, enumerate_reg_trees,
                               enumerate_v_letters, is_v_letter,
                               lower_root_adjacent, parse_reg_tree, phi_reg,
                               phi_reg_inverse, phi_reg_matrix, plant,
                               reg_assoc_product, reg_deshuffle, reg_gl_product,
                               reg_graft, reg_one, reg_raise, reg_tree,
                               reg_tree_from_json, reg_tree_to_json, x_power)

L = LinComb.basis

ONE = reg_one(1)
X = x_power((1,))
X2 = x_power((2,))
BULLET = plant((0,), ONE)            # zero-decorated branch over a bare vertex
I1 = plant((1,), ONE)
VTX1 = x_power((1,))
I0V1 = plant((0,), VTX1)


def test_enumeration_counts():
    assert [len(enumerate_reg_trees(n, 1)) for n in range(4)] == [1, 2, 6, 22]


def test_degrees():
    assert (ONE.degree, X.degree, X2.degree, BULLET.degree, I1.degree,
            I0V1.degree) == (0, 1, 2, 1, 2, 2)


def test_parse_render_round_trip():
    t = parse_reg_tree("[o{0}[o{1}]{a=(1)}]")
    assert t is plant((1,), VTX1)
    assert t.text == "[o{0}[o{1}]{1}]"
    for n in range(4):
        for s in enumerate_reg_trees(n, 1):
            assert parse_reg_tree(s.text) is s


def test_parse_two_dimensional():
    t = parse_reg_tree("[o{1,0}[o{0,2}]{0,1}]")
    assert t.dim == 2 and t.degree == 5


def test_json_round_trip():
    for n in range(4):
        for t in enumerate_reg_trees(n, 1):
            assert reg_tree_from_json(reg_tree_to_json(t)) is t


def test_raise_and_lower():
    r = reg_raise(plant((0,), ONE), (1,))
    assert len(r) == 2 and all(c == 1 for _, c in r.items())
    assert reg_raise(ONE, (2,)) == L(X2)
    assert lower_root_adjacent(BULLET, (1,)).is_zero
    assert lower_root_adjacent(I1, (1,)) == L(BULLET)


def test_word_product_oracles():
    assert reg_assoc_product(X, X) == L(X2)
    XI = reg_tree((1,), (((0,), ONE),))
    assert reg_assoc_product(X, BULLET) == L(XI)
    XI1 = reg_tree((1,), (((1,), ONE),))
    assert reg_assoc_product(I1, X) == L(XI1) + L(BULLET)
    merge = reg_tree((0,), (((1,), ONE), ((0,), ONE)))
    assert reg_assoc_product(I1, BULLET) == L(merge)


def test_word_product_associative_and_unital():
    pool = [t for n in range(3) for t in enumerate_reg_trees(n, 1)]
    for a, b, c in iproduct(pool, repeat=3):
        if a.degree + b.degree + c.degree > 4:
            continue
        assert reg_assoc_product(reg_assoc_product(a, b), c) == \
            reg_assoc_product(a, reg_assoc_product(b, c))
    for t in pool:
        assert reg_assoc_product(ONE, t) == L(t) == reg_assoc_product(t, ONE)


def test_graft_oracles():
    assert reg_graft(ONE, I1) == L(I1)
    assert reg_graft(I1, ONE).is_zero
    assert reg_graft(X, X).is_zero
    assert reg_graft(BULLET, X).is_zero
    # grafting a polynomial vertex only raises decorations
    assert reg_graft(X, BULLET) == L(I0V1)


def test_graft_deformation_terms():
    g = reg_graft(I1, I0V1)
    term_hi = plant((0,), reg_tree((1,), (((1,), ONE),)))
    term_lo = plant((0,), reg_tree((0,), (((0,), ONE),)))
    assert g == L(term_hi) + L(term_lo)


def test_graft_zero_decorations_plain_and_leftmost():
    g0 = reg_graft(BULLET, plant((0,), BULLET))
    att_root = plant((0,), reg_tree((0,), (((0,), ONE), ((0,), ONE))))
    att_leaf = plant((0,), plant((0,), plant((0,), ONE)))
    assert g0 == L(att_root) + L(att_leaf)
    sigma = reg_tree((0,), (((0,), ONE),))
    gl = reg_graft(I1, plant((0,), sigma))
    lead = plant((0,), reg_tree((0,), (((1,), ONE), ((0,), ONE))))
    assert gl.coeff(lead) == 1


def test_gl_product_polynomial_sector_commutes():
    assert reg_gl_product(X, X) == L(X2)
    assert reg_gl_product(x_power((1, 0)), x_power((0, 1))) \
        == reg_gl_product(x_power((0, 1)), x_power((1, 0))) \
        == L(x_power((1, 1)))


def test_gl_product_planted_letters_do_not_commute():
    assert reg_gl_product(BULLET, I1) != reg_gl_product(I1, BULLET)


def test_gl_product_displays():
    XI = reg_tree((1,), (((0,), ONE),))
    assert reg_gl_product(X, BULLET) == L(XI) + L(I0V1)
    XI1 = reg_tree((1,), (((1,), ONE),))
    assert reg_gl_product(I1, X) == L(XI1) + L(BULLET)
    assert reg_gl_product(ONE, I1) == L(I1) == reg_gl_product(I1, ONE)


def test_bracket_oracles():
    assert bracket0(X, X).is_zero
    assert bracket0(I1, X) == L(BULLET)
    assert bracket0(X, I1) == -L(BULLET)
    merge = reg_tree((0,), (((1,), ONE), ((0,), ONE)))
    swap = reg_tree((0,), (((0,), ONE), ((1,), ONE)))
    assert bracket0(I1, BULLET) == L(merge) - L(swap)


def test_bracket_is_word_commutator_on_letters():
    letters = [t for n in range(1, 3) for t in enumerate_v_letters(n, 1)]
    for a in letters:
        for b in letters:
            if a.degree + b.degree > 4:
                continue
            assert bracket0(a, b) == \
                reg_assoc_product(a, b) - reg_assoc_product(b, a)


def test_bracket_lowering_identity():
    Ia, Ib = plant((1,), ONE), plant((0,), VTX1)
    Y = bracket0(Ia, Ib)
    lhs = reg_assoc_product(Y, X) - reg_assoc_product(X, Y)
    rhs = bracket0(lower_root_adjacent(Ia, (1,)), Ib) \
        + bracket0(Ia, lower_root_adjacent(Ib, (1,)))
    assert lhs == rhs == lower_root_adjacent(Y, (1,))


def test_validation_errors():
    with pytest.raises(ValueError):
        deformed_graft(X2, BULLET)
    merge = reg_tree((0,), (((1,), ONE), ((0,), ONE)))
    with pytest.raises(ValueError):
        bracket0(merge, X)


def test_post_lie_axioms_on_letters():
    letters = [t for n in range(1, 3) for t in enumerate_v_letters(n, 1)]
    for x, y, z in iproduct(letters, repeat=3):
        if x.degree + y.degree + z.degree > 4:
            continue
        lx, ly, lz = L(x), L(y), L(z)
        a1 = reg_graft(lx, bracket0(ly, lz))
        a2 = (reg_assoc_product(deformed_graft(lx, ly), lz)
              - reg_assoc_product(lz, deformed_graft(lx, ly))
              + reg_assoc_product(ly, deformed_graft(lx, lz))
              - reg_assoc_product(deformed_graft(lx, lz), ly))
        assert a1 == a2
        b1 = reg_graft(bracket0(lx, ly), lz)
        b2 = (reg_graft(lx, deformed_graft(ly, lz))
              - reg_graft(deformed_graft(lx, ly), lz)
              - reg_graft(ly, deformed_graft(lx, lz))
              + reg_graft(deformed_graft(ly, lx), lz))
        assert b1 == b2


def test_deshuffle_binomial_and_coassociativity():
    assert reg_deshuffle(X2) == Tensor.from_terms(2, [
        ((ONE, X2), 1), ((X, X), 2), ((X2, ONE), 1)])
    for n in range(4):
        for t in enumerate_reg_trees(n, 1):
            ds = reg_deshuffle(t)
            assert ds.apply_coproduct(0, reg_deshuffle) == \
                ds.apply_coproduct(1, reg_deshuffle)


def test_dual_coproduct_oracles():
    dm = deformed_mkw_coproduct(BULLET, 4)
    assert dm == Tensor.from_terms(2, [((ONE, BULLET), 1), ((BULLET, ONE), 1)])
    dm2 = deformed_mkw_coproduct(X2, 4)
    assert dm2 == Tensor.from_terms(2, [
        ((ONE, X2), 1), ((X, X), 1), ((X2, ONE), 1)])


def test_dual_coproduct_matches_gl_coefficients():
    for n in range(4):
        for t in enumerate_reg_trees(n, 1):
            dt = deformed_mkw_tree(t)
            for i in range(n + 1):
                for a in enumerate_reg_trees(i, 1):
                    for b in enumerate_reg_trees(n - i, 1):
                        assert reg_gl_product(a, b).coeff(t) == dt.coeff((a, b))


def test_dual_coproduct_overflow_guard():
    with pytest.raises(ValueError):
        deformed_mkw_coproduct(X2, 1)


def test_phi_identity_on_letters_and_unit():
    assert phi_reg(ONE, 3) == L(ONE)
    assert phi_reg(X2, 3) == L(X2)
    for n in range(1, 3):
        for t in enumerate_v_letters(n, 1):
            assert phi_reg(t, 3) == L(t)


def test_phi_round_trips():
    for n in range(4):
        for t in enumerate_reg_trees(n, 1):
            assert phi_reg(phi_reg_inverse(t, 3), 6) == L(t)
            assert phi_reg_inverse(phi_reg(t, 3), 6) == L(t)


def test_phi_matrix_full_rank():
    for n in range(4):
        basis, rows = phi_reg_matrix(n, 1)
        assert linalg.rank([row[:] for row in rows]) == len(basis)


def test_phi_is_filtered_not_graded():
    T = reg_assoc_product(I1, I0V1)
    low = [t for t, _ in phi_reg(T, 6).items() if t.degree < 4]
    assert low


def test_phi_obstruction_fact():
    # the starred commutator of the degree-one generators is a letter,
    # their word-product commutator vanishes, so no identity-on-letters
    # map can be multiplicative for every pair
    comm_star = reg_gl_product(X, BULLET) - reg_gl_product(BULLET, X)
    comm_word = reg_assoc_product(L(X), L(BULLET)) \
        - reg_assoc_product(L(BULLET), L(X))
    assert comm_star == L(I0V1)
    assert comm_word.is_zero


def test_planted_product_has_single_letter_corrections():
    words = [t for n in range(3) for t in enumerate_reg_trees(n, 1)]
    small = [t for n in range(2) for t in enumerate_reg_trees(n, 1)]
    for a in ((0,), (1,)):
        for c in ((0,), (1,)):
            for w1 in words:
                for w2 in small:
                    ya, yb = plant(a, w1), plant(c, w2)
                    corr = reg_graft(ya, yb)
                    assert reg_gl_product(ya, yb) == \
                        reg_assoc_product(L(ya), L(yb)) + corr
                    assert all(is_v_letter(s) for s in corr.support())

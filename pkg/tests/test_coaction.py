"""Grafting coaction, translation maps, and the separation witness."""

from fractions import Fraction

import pytest

from postlie.coaction import (check_translation_vector, compose_vectors,
                              disjointness_witness, graft_duality_failures,
                              rho_graft, shuffle_primitive_failures, translate,
                              verify_cointeraction,
                              verify_cotranslation_cosubstitution)
from postlie.forest import FOREST_ONE, parse_forest
from postlie.lincomb import LinComb, tensor_of


def b(text):
    return LinComb.basis(parse_forest(text))


def exp_word(c, letter, maxdeg):
    out = LinComb.basis(FOREST_ONE)
    coeff, word = Fraction(1), ""
    for n in range(1, maxdeg + 1):
        coeff /= n
        word += f"[{letter}]"
        out = out + b(word) * (coeff * c ** n)
    return out


def test_rho_small_values():
    assert rho_graft(b("[a]")) == tensor_of(LinComb.basis(FOREST_ONE), b("[a]"))
    got = rho_graft(b("[a[b]]"))
    want = tensor_of(LinComb.basis(FOREST_ONE), b("[a[b]]")) \
        + tensor_of(b("[b]"), b("[a]"))
    assert got == want


def test_rho_graft_duality_exhaustive():
    assert graft_duality_failures(3, ("a",)) == []
    assert graft_duality_failures(2, ("a", "b")) == []


def test_translate_empty_vector_is_identity():
    x = b("[o[o]]") + b("[o][o]") * 2
    assert translate({}, x, 3) == x


def test_translate_shifts_letters():
    v = {"o": b("[o]") + b("[o[o]]")}
    assert translate(v, b("[o]"), 3) == b("[o]") * 2 + b("[o[o]]")


def test_translation_vector_validation():
    check_translation_vector({"o": b("[o]")})
    with pytest.raises(ValueError):
        check_translation_vector({"o": LinComb.basis(FOREST_ONE)})
    with pytest.raises(ValueError):
        check_translation_vector({"o": b("[o][o]")})


def test_compose_vectors_matches_composition():
    v = {"o": b("[o]") * Fraction(1, 2) + b("[o[o]]")}
    u = {"o": b("[o]") * Fraction(1, 3)}
    w = compose_vectors(v, u, 3)
    for text in ("[o]", "[o[o]]", "[o][o]"):
        x = b(text)
        assert translate(v, translate(u, x, 3), 3) == translate(w, x, 3)


def test_shuffle_primitive_failures():
    assert shuffle_primitive_failures(b("[a]")) == []
    assert shuffle_primitive_failures(b("[a][a]")) != []


def test_cointeraction_reports_pass():
    rep = verify_cointeraction(3)
    assert rep["ok"] and all(c["status"] == "pass" for c in rep["checks"])
    rep = verify_cotranslation_cosubstitution(3)
    assert rep["ok"]


def test_disjointness_unit_series():
    rep = disjointness_witness(None, LinComb.basis(FOREST_ONE), 3)
    assert rep["ok"] and rep["xi_is_unit"]
    assert "unit" in rep["conclusion"]


def test_disjointness_separating_series():
    rep = disjointness_witness(None, exp_word(Fraction(1), "i", 3), 3)
    assert not rep["xi_is_unit"]
    assert rep["conclusion"] == "actions differ"
    # agreement survives on single vertices, breaks on the chain
    by_name = {c["name"]: c for c in rep["checks"]}
    assert by_name["agree-on-single-vertex"]["status"] == "pass"
    assert by_name["agree-on-two-vertex-chain"]["status"] == "fail"


def test_disjointness_rejects_bad_series():
    with pytest.raises(ValueError):
        disjointness_witness(None, b("[i]"), 3)
    with pytest.raises(ValueError):
        disjointness_witness(None, LinComb.basis(FOREST_ONE) + b("[i]"), 3)

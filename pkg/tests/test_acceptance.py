"""Acceptance gate: one test per deliverable guarantee.

Each test drives the matching verification suite at its contractual
bound and fails with the suite's own witness list, so the -v report
reads as a pass/fail line per guarantee.
"""

import time

from postlie.verify import run_suite


def _ok(rep):
    assert rep["ok"], [c for c in rep["checks"] if c["status"] == "fail"]
    return rep


def test_worked_examples_replay_exactly_under_one_second():
    t0 = time.monotonic()
    rep = run_suite("paper-examples")
    elapsed = time.monotonic() - t0
    _ok(rep)
    assert len(rep["checks"]) >= 16
    assert elapsed < 1.0, f"replay took {elapsed:.2f}s"


def test_hopf_axioms_to_degree_five_within_two_minutes():
    t0 = time.monotonic()
    _ok(run_suite("hopf-axioms", maxdeg=5, alphabet=("o",)))
    _ok(run_suite("hopf-axioms", maxdeg=4, alphabet=("a", "b")))
    assert time.monotonic() - t0 < 120.0


def test_post_lie_axioms_and_action_shift_to_degree_five():
    rep = _ok(run_suite("post-lie-axioms", maxdeg=5))
    names = {c["name"] for c in rep["checks"]}
    assert "product-shifts-action" in names


def test_product_coproduct_dualities_to_degree_five():
    rep = _ok(run_suite("gl-duality", maxdeg=5))
    names = {c["name"] for c in rep["checks"]}
    assert {"gl-product-vs-cut-coproduct", "graft-vs-coaction"} <= names


def test_primitive_projection_growth_and_fold_round_trip():
    _ok(run_suite("primitives", maxdeg=5))
    _ok(run_suite("natural-growth", maxdeg=5))


def test_word_isomorphism_transport_and_chen_identity():
    rep = _ok(run_suite("phi-iso", maxdeg=5))
    names = {c["name"] for c in rep["checks"]}
    assert {"character-transport", "chen-one-letter"} <= names


def test_cointeraction_translation_and_disjointness_witness():
    _ok(run_suite("cointeraction", maxdeg=4))
    _ok(run_suite("cotranslation", maxdeg=4))
    _ok(run_suite("translation", maxdeg=3))
    rep = _ok(run_suite("disjointness", maxdeg=3))
    names = {c["name"] for c in rep["checks"]}
    assert {"full-weight-series-separates", "half-weight-series-separates",
            "unit-series-agreement"} <= names


def test_deformed_layer_axioms_and_word_isomorphism():
    rep = _ok(run_suite("regstruct-postlie", maxdeg=3))
    names = {c["name"] for c in rep["checks"]}
    assert {"polynomial-generators-commute",
            "planar-letters-do-not-commute"} <= names
    _ok(run_suite("regstruct-phi", maxdeg=3))

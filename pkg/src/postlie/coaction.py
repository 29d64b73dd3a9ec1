"""Coaction dual to left grafting, cointeraction checks, translations.

Left grafting consumes its whole left argument: every tree of it gets
attached somewhere, none survives as a concatenation factor.  Dually,
the coaction implemented here is the part of the full coproduct where
nothing is deconcatenated.  On one tree it keeps all admissible cuts
except the one pruning the entire tree; on a longer forest it cuts each
tree separately, shuffles all pruned groups into the left leg and keeps
the trimmed trees concatenated in their original order on the right.

The coproducts dual to the Grossman-Larson and concatenation products,
needed by the interaction axioms, are not given second combinatorial
definitions.  They are obtained by transposing those products degree by
degree through the pairing (`transpose_product`), so each identity is
checked against a single source of truth.

Translations act on the dual side: ``translate`` shifts every vertex
decoration ``i`` by a chosen primitive element and extends over trees by
grafting and over forests by the Grossman-Larson recursion.  The
``disjointness_witness`` report replays the argument showing that a
translation can agree with grafting by a fixed group-like series only
when that series is trivial.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .forest import (FOREST_ONE, OrderedForest, b_minus, b_plus,
                     enumerate_forests, forest, leaf, render_forest, single,
                     tree, word)
from .grafting import gl_forests, gl_product, graft_forests, left_graft
from .lincomb import (LinComb, Tensor, _add_into, deconcat_forest,
                      deshuffle, shuffle_words, tensor_of)
from .mkw import mkw_coproduct_forest

ForestProduct = Callable[[OrderedForest, OrderedForest], LinComb]
ForestCoaction = Callable[[OrderedForest], Tensor]
TranslationVector = Mapping[str, LinComb]

_ONE = LinComb.basis(FOREST_ONE)


# -- the grafting coaction -------------------------------------------------

_RHO: dict[OrderedForest, Tensor] = {}


def rho_forest(f: OrderedForest) -> Tensor:
    """Coaction of a basis forest: pruned groups left, trimmed trees right."""
    got = _RHO.get(f)
    if got is not None:
        return got
    if f.is_empty:
        out = Tensor.basis((FOREST_ONE, FOREST_ONE))
    elif len(f) == 1:
        # all cuts except the one removing the whole tree
        out = mkw_coproduct_forest(f) - Tensor.basis((f, FOREST_ONE))
    else:
        head = rho_forest(single(f.trees[0]))
        rest = rho_forest(forest(f.trees[1:]))
        acc: dict = {}
        for (a1, b1), c1 in head.items():
            for (a2, b2), c2 in rest.items():
                right = word(b1, b2)
                c = c1 * c2
                for a, ca in shuffle_words(a1, a2).items():
                    _add_into(acc, (a, right), c * ca)
        out = Tensor(2, acc)
    _RHO[f] = out
    return out


def rho_graft(x: LinComb | OrderedForest) -> Tensor:
    """Linear extension of `rho_forest`."""
    if isinstance(x, OrderedForest):
        return rho_forest(x)
    acc: dict = {}
    for f, c in x.items():
        for key, c2 in rho_forest(f).items():
            _add_into(acc, key, c * c2)
    return Tensor(2, acc)


def graft_duality_failures(maxdeg: int, alphabet: Iterable[str],
                           rho: ForestCoaction | None = None) -> list[str]:
    """Mismatches between the coaction and the transpose of left grafting.

    An empty list certifies both that the pairing duality holds and that
    the cut-based rule agrees with the rule obtained by transposing the
    grafting product, for all basis forests of degree at most ``maxdeg``.
    """
    rho_fn = rho_forest if rho is None else rho
    letters = tuple(alphabet)
    fails: list[str] = []
    for n in range(1, maxdeg + 1):
        for x in enumerate_forests(n, letters):
            t = rho_fn(x)
            for i in range(0, n + 1):
                for a in enumerate_forests(i, letters):
                    for b in enumerate_forests(n - i, letters):
                        lhs = t.coeff((a, b))
                        rhs = graft_forests(a, b).coeff(x)
                        if lhs != rhs:
                            fails.append(
                                f"<{a.text} (x) {b.text}, rho({x.text})> "
                                f"= {lhs}, but <{a.text} graft {b.text}, "
                                f"{x.text}> = {rhs}")
    return fails


# -- dual coproducts by transposition --------------------------------------

def _letters(f: OrderedForest) -> tuple[str, ...]:
    out: set[str] = set()
    stack = list(f.trees)
    while stack:
        t = stack.pop()
        out.add(t.decoration)
        stack.extend(t.children)
    return tuple(sorted(out))


def transpose_product(f: OrderedForest, product: ForestProduct,
                      alphabet: Iterable[str] | None = None) -> Tensor:
    """Dualize a degree-additive forest product through the pairing.

    Returns the sum of ``a (x) b`` weighted by the coefficient of ``f``
    in ``product(a, b)``.  Restricting the sweep to the decorations of
    ``f`` is exact: the products transposed here neither create nor
    destroy vertices, so mismatched letters pair to zero anyway.
    """
    if f.is_empty:
        return Tensor.basis((FOREST_ONE, FOREST_ONE))
    letters = _letters(f) if alphabet is None else tuple(sorted(set(alphabet)))
    n = f.degree
    acc: dict = {}
    for i in range(0, n + 1):
        for a in enumerate_forests(i, letters):
            for b in enumerate_forests(n - i, letters):
                c = product(a, b).coeff(f)
                if c:
                    _add_into(acc, (a, b), c)
    return Tensor(2, acc)


_DELTA_STAR: dict[OrderedForest, Tensor] = {}


def delta_star_forest(f: OrderedForest) -> Tensor:
    """Coproduct dual to the Grossman-Larson product."""
    got = _DELTA_STAR.get(f)
    if got is None:
        got = _DELTA_STAR[f] = transpose_product(f, gl_forests)
    return got


def _concat_product(a: OrderedForest, b: OrderedForest) -> LinComb:
    return LinComb.basis(word(a, b))


def delta_concat_forest(f: OrderedForest) -> Tensor:
    """Coproduct dual to concatenation, computed by transposition.

    Deconcatenation is the closed form of this transpose; the library
    keeps using the closed form in hot paths and the equality of the two
    is part of the test suite.
    """
    return transpose_product(f, _concat_product)


# -- interaction axioms ----------------------------------------------------

def _mix(t1: Tensor, t2: Tensor,
         left: ForestProduct, right: ForestProduct) -> Tensor:
    """Combine two coaction values legwise by the given leg products."""
    acc: dict = {}
    for (a1, b1), c1 in t1.items():
        for (a2, b2), c2 in t2.items():
            c = c1 * c2
            for a, ca in left(a1, a2).items():
                cca = c * ca
                for b, cb in right(b1, b2).items():
                    _add_into(acc, (a, b), cca * cb)
    return Tensor(2, acc)


def _entry(name: str, rng: str, failures: list[str]) -> dict:
    out: dict = {"name": name, "range": rng,
                 "status": "pass" if not failures else "fail"}
    if failures:
        out["witness"] = failures[0]
        out["failures"] = len(failures)
    return out


def _finish(suite: str, maxdeg: int, letters: tuple[str, ...],
            checks: list[dict]) -> dict:
    return {"suite": suite, "max_degree": maxdeg, "alphabet": list(letters),
            "checks": checks, "ok": all(c["status"] == "pass" for c in checks)}


def verify_cointeraction(maxdeg: int, alphabet: Iterable[str] = ("o",),
                         rho: ForestCoaction | None = None) -> dict:
    """Check the four interaction axioms of the grafting coaction.

    The coaction should fix the unit, be multiplicative for the shuffle
    product leg by leg, leave no residue under the right-leg counit, and
    commute with the deconcatenation coproduct up to a shuffle of the
    outer legs.  All checks sweep basis forests of degree <= ``maxdeg``;
    ``rho`` may be replaced to demonstrate that corruption is detected.
    """
    rho_fn = rho_forest if rho is None else rho
    letters = tuple(alphabet)
    checks: list[dict] = []

    unit_fails: list[str] = []
    if rho_fn(FOREST_ONE) != Tensor.basis((FOREST_ONE, FOREST_ONE)):
        unit_fails.append("rho(1) != 1 (x) 1")
    checks.append(_entry("unit-is-fixed", "degree 0", unit_fails))

    mult_fails: list[str] = []
    for d1 in range(1, maxdeg):
        for d2 in range(d1, maxdeg - d1 + 1):
            for x in enumerate_forests(d1, letters):
                for y in enumerate_forests(d2, letters):
                    lhs = _lin_coaction(shuffle_words(x, y), rho_fn)
                    rhs = _mix(rho_fn(x), rho_fn(y),
                               shuffle_words, shuffle_words)
                    if lhs != rhs:
                        mult_fails.append(f"x={x.text} y={y.text}")
    checks.append(_entry("shuffle-multiplicative",
                         f"degree pairs summing to <= {maxdeg}", mult_fails))

    counit_fails: list[str] = []
    for n in range(1, maxdeg + 1):
        for f in enumerate_forests(n, letters):
            residue: dict = {}
            for (a, b), c in rho_fn(f).items():
                if b.is_empty:
                    _add_into(residue, a, c)
            if residue:
                counit_fails.append(f"right-leg counit residue on {f.text}")
    checks.append(_entry("counit-annihilates", f"degree <= {maxdeg}",
                         counit_fails))

    compat_fails: list[str] = []
    for n in range(0, maxdeg + 1):
        for f in enumerate_forests(n, letters):
            lhs = rho_fn(f).apply_coproduct(1, deconcat_forest)
            rhs = (deconcat_forest(f)
                   .apply_coproduct(0, rho_fn)
                   .apply_coproduct(2, rho_fn)
                   .merge_legs(0, 2, shuffle_words))
            if lhs != rhs:
                compat_fails.append(f.text)
    checks.append(_entry("deconcat-compatible", f"degree <= {maxdeg}",
                         compat_fails))

    return _finish("cointeraction", maxdeg, letters, checks)


def _lin_coaction(x: LinComb, rho_fn: ForestCoaction) -> Tensor:
    acc: dict = {}
    for f, c in x.items():
        for key, c2 in rho_fn(f).items():
            _add_into(acc, key, c * c2)
    return Tensor(2, acc)


def verify_cotranslation_cosubstitution(maxdeg: int,
                                        alphabet: Iterable[str] = ("o",),
                                        rho: ForestCoaction | None = None,
                                        ) -> dict:
    """Check the two ways of iterating the grafting coaction.

    Re-expanding the right leg must agree with first splitting the left
    leg by deconcatenation, coacting on the middle piece and shuffling
    the two left legs back together; it must also agree with splitting
    the left leg by the coproduct dual to the Grossman-Larson product.
    """
    rho_fn = rho_forest if rho is None else rho
    letters = tuple(alphabet)
    trans_fails: list[str] = []
    subst_fails: list[str] = []
    for n in range(0, maxdeg + 1):
        for f in enumerate_forests(n, letters):
            base = rho_fn(f)
            lhs = base.apply_coproduct(1, rho_fn)
            rhs1 = (base.apply_coproduct(0, deconcat_forest)
                    .apply_coproduct(1, rho_fn)
                    .merge_legs(0, 1, shuffle_words))
            rhs2 = base.apply_coproduct(0, delta_star_forest)
            if lhs != rhs1:
                trans_fails.append(f.text)
            if lhs != rhs2:
                subst_fails.append(f.text)
    checks = [
        _entry("translation-identity", f"degree <= {maxdeg}", trans_fails),
        _entry("substitution-identity", f"degree <= {maxdeg}", subst_fails),
    ]
    return _finish("cotranslation-cosubstitution", maxdeg, letters, checks)


# -- translations ----------------------------------------------------------

def shuffle_primitive_failures(x: LinComb) -> list[str]:
    """Nonzero terms of the reduced deshuffle coproduct, rendered."""
    if x.coeff(FOREST_ONE):
        return ["has a constant part"]
    red = deshuffle(x) - tensor_of(x, _ONE) - tensor_of(_ONE, x)
    return [f"{a.text} (x) {b.text}: {c}" for (a, b), c in red.items()]


def check_translation_vector(v: TranslationVector) -> None:
    for key, val in v.items():
        bad = shuffle_primitive_failures(val)
        if bad:
            raise ValueError(
                f"translation term for decoration {key!r} is not "
                f"primitive: {bad[0]}")


def translate(v: TranslationVector, x: LinComb | OrderedForest,
              maxdeg: int) -> LinComb:
    """Shift every decoration ``i`` of ``x`` by ``v[i]``, up to ``maxdeg``.

    Single vertices go to themselves plus their shift.  A tree is peeled
    into its children forest grafted onto its root vertex, and the root
    vertex is shifted.  A forest splits as head times tail through the
    Grossman-Larson product, with the overcounted grafting of the head
    into the tail removed again.  The result is both a morphism for the
    Grossman-Larson product and for concatenation, up to the cutoff.

    Missing decorations shift by zero; every present shift must be
    primitive for the deshuffle coproduct.
    """
    check_translation_vector(v)
    if isinstance(x, OrderedForest):
        x = LinComb.basis(x)
    memo: dict[OrderedForest, LinComb] = {}

    def t_forest(f: OrderedForest) -> LinComb:
        got = memo.get(f)
        if got is not None:
            return got
        if f.is_empty:
            out = _ONE
        elif len(f) == 1:
            t = f.trees[0]
            target = (LinComb.basis(single(leaf(t.decoration)))
                      + v.get(t.decoration, LinComb.zero()))
            out = left_graft(t_lin(LinComb.basis(b_minus(t))),
                             target).truncate(maxdeg)
        else:
            head = single(f.trees[0])
            rest = forest(f.trees[1:])
            out = (gl_product(t_forest(head), t_forest(rest)).truncate(maxdeg)
                   - t_lin(graft_forests(head, rest)))
        memo[f] = out
        return out

    def t_lin(y: LinComb) -> LinComb:
        acc: dict = {}
        for f, c in y.truncate(maxdeg).items():
            for f2, c2 in t_forest(f).items():
                _add_into(acc, f2, c * c2)
        return LinComb(acc).truncate(maxdeg)

    return t_lin(x)


def compose_vectors(v: TranslationVector, u: TranslationVector,
                    maxdeg: int) -> dict[str, LinComb]:
    """The vector of the composite translation: v plus the v-shift of u."""
    out: dict[str, LinComb] = {}
    for key in sorted(set(v) | set(u)):
        shifted = translate(v, u[key], maxdeg) if key in u else LinComb.zero()
        combined = v.get(key, LinComb.zero()) + shifted
        if not combined.is_zero:
            out[key] = combined
    return out


# -- the two coactions meet only trivially ---------------------------------

def _fmt(x: LinComb) -> str:
    if x.is_zero:
        return "0"
    bits = []
    for f, c in sorted(x.items(), key=lambda kv: kv[0].sort_key()):
        bits.append(f"{c}*{render_forest(f)}" if c != 1 else render_forest(f))
    return " + ".join(bits)


def disjointness_witness(v: TranslationVector | None, xi: LinComb,
                         maxdeg: int,
                         letters: tuple[str, str] = ("i", "j")) -> dict:
    """Compare translating with grafting a fixed group-like series.

    Agreement on single vertices forces each shift to be the series,
    minus its constant term, grown onto a new root with the matching
    decoration; the report records that step, then tests the forced
    translation against grafting on the two-vertex chain, where the two
    sides differ unless the series is the unit.  Passing ``v`` checks
    the supplied shifts against the forced ones first; ``v=None`` uses
    the forced shifts directly.
    """
    if xi.coeff(FOREST_ONE) != 1:
        raise ValueError("series must have constant term 1")
    dev = deshuffle(xi) - tensor_of(xi, xi)
    dev = Tensor(2, {k: c for k, c in dev.items()
                     if k[0].degree + k[1].degree <= maxdeg})
    if not dev.is_zero:
        raise ValueError("series is not group-like up to the cutoff")

    i, j = letters
    forced: dict[str, LinComb] = {}
    for d in dict.fromkeys((i, j)):
        forced[d] = LinComb.from_terms(
            (single(b_plus(f, d)), c)
            for f, c in xi.items() if not f.is_empty).truncate(maxdeg)

    checks: list[dict] = []
    used = forced
    if v is not None:
        bad = [d for d in forced
               if v.get(d, LinComb.zero()).truncate(maxdeg) != forced[d]]
        checks.append(_entry(
            "vector-has-forced-form", f"decorations {sorted(forced)}",
            [f"shift for {d!r} differs from the forced one" for d in bad]))
        used = dict(v)

    witness_family = (
        ("single-vertex", single(leaf(i))),
        ("two-vertex-chain", single(tree(i, (leaf(j),)))),
    )
    for name, f in witness_family:
        grafted = left_graft(xi, LinComb.basis(f)).truncate(maxdeg)
        translated = translate(used, LinComb.basis(f), maxdeg)
        diff = grafted - translated
        fails = [] if diff.is_zero else [f"difference {_fmt(diff)}"]
        checks.append(_entry(f"agree-on-{name}", f.text, fails))

    xi_is_unit = xi.truncate(maxdeg) == _ONE
    report = _finish("disjointness", maxdeg, letters, checks)
    report["xi_is_unit"] = xi_is_unit
    report["conclusion"] = (
        "series is the unit; both actions are the identity" if xi_is_unit
        else "actions differ" if not report["ok"]
        else "actions agree below the cutoff; raise it to separate them")
    return report

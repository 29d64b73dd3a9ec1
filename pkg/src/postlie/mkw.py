"""The planar (MKW) Hopf algebra: shuffle product with the cut coproduct.

The coproduct of a tree sums over left-admissible cuts: a set of edges such
that every root-to-leaf path meets at most one cut edge and, at each vertex,
the cut edges form a leftmost prefix of the outgoing edges.  Enumeration is
by recursive descent: at each trunk vertex choose a prefix length ``p``; the
first ``p`` subtrees are pruned whole and the recursion continues into the
remaining children only.  The pruned subtrees cut at one vertex stay
concatenated in their planar order; groups cut at different vertices are
shuffled together.  The tensor ``pruned (x) trunk`` is summed over all cuts,
plus the extreme term ``tree (x) 1``.

Forest coproducts reduce to the tree case by grafting onto a reserved root:
``D(w) = (id (x) B-)(D(B+(w)) - B+(w) (x) 1)``.

This Hopf algebra is the graded dual of the Grossman-Larson one; the
``duality_failures`` sweep checks ``<A * B, x> = <A (x) B, D(x)>`` on graded
pieces and is the main cross-validation between the two modules.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Callable, Iterable

from .forest import (FOREST_ONE, OrderedForest, PlanarTree, b_minus, forest,
                     forests_up_to, single, tree)
from .grafting import gl_forests
from .lincomb import (LinComb, Tensor, _add_into, pairing, shuffle,
                      shuffle_words)

_RESERVED = "\x00"

# (pruned groups, trunk) pairs per tree; groups are forests cut at distinct
# vertices, to be shuffled together.
_CUTS: dict[PlanarTree, tuple[tuple[tuple[OrderedForest, ...], PlanarTree], ...]] = {}


def _cut_configs(t: PlanarTree) -> tuple[tuple[tuple[OrderedForest, ...], PlanarTree], ...]:
    got = _CUTS.get(t)
    if got is not None:
        return got
    kids = t.children
    out: list[tuple[tuple[OrderedForest, ...], PlanarTree]] = []
    for p in range(len(kids) + 1):
        pruned_here = forest(kids[:p])
        combos: list[tuple[list[OrderedForest], list[PlanarTree]]] = [([], [])]
        for child in kids[p:]:
            nxt = []
            for groups, trunk_kids in combos:
                for g2, trunk_child in _cut_configs(child):
                    nxt.append((groups + list(g2), trunk_kids + [trunk_child]))
            combos = nxt
        for groups, trunk_kids in combos:
            all_groups = ([pruned_here] if p else []) + groups
            out.append((tuple(all_groups), tree(t.decoration, trunk_kids)))
    got = tuple(out)
    _CUTS[t] = got
    return got


_COPRODUCT_TREE: dict[PlanarTree, Tensor] = {}


def mkw_coproduct_tree(t: PlanarTree) -> Tensor:
    got = _COPRODUCT_TREE.get(t)
    if got is not None:
        return got
    acc: dict = {}
    for groups, trunk in _cut_configs(t):
        left = LinComb.basis(FOREST_ONE)
        for g in groups:
            left = shuffle(left, LinComb.basis(g))
        for f, c in left.items():
            _add_into(acc, (f, single(trunk)), c)
    _add_into(acc, (single(t), FOREST_ONE), Fraction(1))
    got = Tensor(2, acc)
    _COPRODUCT_TREE[t] = got
    return got


_COPRODUCT: dict[OrderedForest, Tensor] = {}


def mkw_coproduct_forest(f: OrderedForest) -> Tensor:
    got = _COPRODUCT.get(f)
    if got is not None:
        return got
    if f.is_empty:
        out = Tensor.basis((FOREST_ONE, FOREST_ONE))
    elif len(f) == 1:
        out = mkw_coproduct_tree(f.trees[0])
    else:
        big = tree(_RESERVED, f.trees)
        acc: dict = {}
        for (left, right), c in mkw_coproduct_tree(big).items():
            if right.is_empty:
                continue  # the B+(w) (x) 1 term is subtracted
            _add_into(acc, (left, b_minus(right.trees[0])), c)
        out = Tensor(2, acc)
    _COPRODUCT[f] = out
    return out


def mkw_coproduct(x: LinComb | OrderedForest) -> Tensor:
    if isinstance(x, OrderedForest):
        return mkw_coproduct_forest(x)
    acc: dict = {}
    for f, c in x.items():
        for key, c2 in mkw_coproduct_forest(f).items():
            _add_into(acc, key, c * c2)
    return Tensor(2, acc)


_REDUCED: dict[OrderedForest, Tensor] = {}


def reduced_coproduct_forest(f: OrderedForest) -> Tensor:
    """Reduced coproduct of a nonempty basis forest."""
    got = _REDUCED.get(f)
    if got is None:
        if f.is_empty:
            raise ValueError("reduced coproduct of the unit is undefined")
        got = (mkw_coproduct_forest(f)
               - Tensor.basis((f, FOREST_ONE))
               - Tensor.basis((FOREST_ONE, f)))
        _REDUCED[f] = got
    return got


def reduced_coproduct(x: LinComb) -> Tensor:
    """D(x) - x (x) 1 - 1 (x) x; a unit component is dropped with a warning."""
    if x.coeff(FOREST_ONE):
        warnings.warn("reduced coproduct: dropping unit component", stacklevel=2)
        x = x - x.coeff(FOREST_ONE) * LinComb.basis(FOREST_ONE)
    acc: dict = {}
    for f, c in x.items():
        for key, c2 in reduced_coproduct_forest(f).items():
            _add_into(acc, key, c * c2)
    return Tensor(2, acc)


def iterated_reduced(x: LinComb, k: int) -> Tensor:
    """k-fold reduced coproduct, landing in k+1 tensor legs."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = reduced_coproduct(x)
    for _ in range(k - 1):
        out = out.apply_coproduct(0, reduced_coproduct_forest)
    return out


_ANTIPODE: dict[OrderedForest, LinComb] = {}


def _antipode_forest(f: OrderedForest) -> LinComb:
    got = _ANTIPODE.get(f)
    if got is not None:
        return got
    if f.is_empty:
        out = LinComb.basis(FOREST_ONE)
    else:
        acc: dict = {f: Fraction(-1)}
        for (left, right), c in reduced_coproduct_forest(f).items():
            for fl, cl in _antipode_forest(left).items():
                for fs, cs in shuffle_words(fl, right).items():
                    _add_into(acc, fs, -c * cl * cs)
        out = LinComb(acc)
    _ANTIPODE[f] = out
    return out


def mkw_antipode(x: LinComb) -> LinComb:
    """Antipode of the MKW Hopf algebra: S(x) = -x - S(x^(1)) sh x^(2)."""
    acc: dict = {}
    for f, c in x.items():
        for f2, c2 in _antipode_forest(f).items():
            _add_into(acc, f2, c * c2)
    return LinComb(acc)


def duality_failures(maxdeg: int, alphabet: Iterable[str],
                     coproduct: Callable[[OrderedForest], Tensor] | None = None,
                     ) -> list[tuple[OrderedForest, OrderedForest, OrderedForest]]:
    """Witnesses (A, B, x) with <A * B, x> != <A (x) B, D(x)>, graded sweep."""
    cop = coproduct or mkw_coproduct_forest
    alpha = tuple(sorted(set(alphabet)))
    bad = []
    for x in forests_up_to(maxdeg, alpha):
        dx = cop(x)
        n = x.degree
        for a in forests_up_to(n, alpha):
            for b in forests_up_to(n - a.degree, alpha):
                if a.degree + b.degree != n:
                    continue
                lhs = gl_forests(a, b).coeff(x)
                rhs = dx.coeff((a, b))
                if lhs != rhs:
                    bad.append((a, b, x))
    return bad

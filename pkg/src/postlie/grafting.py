"""Left grafting of planar forests and the Grossman-Larson product.

``left_graft`` sums over all ways to attach every root of the left forest to
a vertex of the right one.  Each assignment of roots to target vertices
contributes exactly one term: the grafted subtrees arrive as a leftmost block
at their target, keeping their mutual order, in front of the existing
children.  Two independent implementations are provided: direct multi-target
enumeration (the default, memoized) and the enveloping-algebra recursion

    1 < B = B,   (x . A) < y = x < (A < y) - (x < A) < y,
    A < (B C) = (A_(1) < B)(A_(2) < C),

peeling the leftmost tree of the left word, used as a cross-check.

On top of grafting sit the Grossman-Larson product
``A * B = A_(1) . (A_(2) < B)``, the concatenation antipode, and the
Grossman-Larson antipode with its induced inverse of concatenation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from .forest import FOREST_ONE, OrderedForest, PlanarTree, forest, single, tree, word
from .lincomb import LinComb, _add_into, concat, counit, deshuffle_forest


def _rebuild(t: PlanarTree, idx: int, extra: list[list[PlanarTree]]) -> tuple[PlanarTree, int]:
    # Vertices are numbered in depth-first preorder; grafted blocks go leftmost.
    my = idx
    idx += 1
    kids = []
    for c in t.children:
        nc, idx = _rebuild(c, idx, extra)
        kids.append(nc)
    add = extra[my]
    return tree(t.decoration, add + kids if add else kids), idx


_GRAFT: dict[tuple[OrderedForest, OrderedForest], LinComb] = {}


def graft_forests(w1: OrderedForest, w2: OrderedForest) -> LinComb:
    """Left grafting of basis forests by direct assignment enumeration."""
    got = _GRAFT.get((w1, w2))
    if got is not None:
        return got
    if w1.is_empty:
        out = LinComb.basis(w2)
    elif w2.is_empty:
        out = LinComb.zero()
    else:
        nv = w2.degree
        roots = w1.trees
        acc: dict = {}
        for assign in iproduct(range(nv), repeat=len(roots)):
            extra: list[list[PlanarTree]] = [[] for _ in range(nv)]
            for t, v in zip(roots, assign):
                extra[v].append(t)
            idx = 0
            new_trees = []
            for t in w2.trees:
                nt, idx = _rebuild(t, idx, extra)
                new_trees.append(nt)
            _add_into(acc, forest(new_trees), Fraction(1))
        out = LinComb(acc)
    _GRAFT[(w1, w2)] = out
    return out


def left_graft(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear left grafting (Guin-Oudom extension on both slots)."""
    acc: dict = {}
    for f1, c1 in x.items():
        for f2, c2 in y.items():
            for f3, c3 in graft_forests(f1, f2).items():
                _add_into(acc, f3, c1 * c2 * c3)
    return LinComb(acc)


def _graft_go(a: OrderedForest, y: OrderedForest) -> LinComb:
    # Recursive Guin-Oudom evaluation; intentionally independent of
    # graft_forests so the two can be compared term by term.
    if y.is_empty:
        return LinComb.basis(FOREST_ONE) if a.is_empty else LinComb.zero()
    if len(y) >= 2:
        head, rest = single(y.trees[0]), forest(y.trees[1:])
        acc: dict = {}
        for (a1, a2), c in deshuffle_forest(a).items():
            for f1, c1 in _graft_go(a1, head).items():
                for f2, c2 in _graft_go(a2, rest).items():
                    _add_into(acc, word(f1, f2), c * c1 * c2)
        return LinComb(acc)
    if a.is_empty:
        return LinComb.basis(y)
    if len(a) == 1:
        t1, t2 = a.trees[0], y.trees[0]
        acc = {}
        for v in range(t2.degree):
            extra: list[list[PlanarTree]] = [[] for _ in range(t2.degree)]
            extra[v].append(t1)
            nt, _ = _rebuild(t2, 0, extra)
            _add_into(acc, single(nt), Fraction(1))
        return LinComb(acc)
    x, rest = a.trees[0], forest(a.trees[1:])
    inner = _graft_go(rest, y)
    term1: dict = {}
    for f, c in inner.items():
        for f2, c2 in _graft_go(single(x), f).items():
            _add_into(term1, f2, c * c2)
    xrest = _graft_go(single(x), rest)
    term2: dict = {}
    for f, c in xrest.items():
        for f2, c2 in _graft_go(f, y).items():
            _add_into(term2, f2, c * c2)
    out = dict(term1)
    for k, c in term2.items():
        _add_into(out, k, -c)
    return LinComb(out)


def left_graft_recursive(x: LinComb, y: LinComb) -> LinComb:
    acc: dict = {}
    for f1, c1 in x.items():
        for f2, c2 in y.items():
            for f3, c3 in _graft_go(f1, f2).items():
                _add_into(acc, f3, c1 * c2 * c3)
    return LinComb(acc)


_GL: dict[tuple[OrderedForest, OrderedForest], LinComb] = {}


def gl_forests(a: OrderedForest, b: OrderedForest) -> LinComb:
    got = _GL.get((a, b))
    if got is None:
        acc: dict = {}
        for (a1, a2), c in deshuffle_forest(a).items():
            for f, c2 in graft_forests(a2, b).items():
                _add_into(acc, word(a1, f), c * c2)
        got = LinComb(acc)
        _GL[(a, b)] = got
    return got


def gl_product(x: LinComb, y: LinComb) -> LinComb:
    """Grossman-Larson product A * B = A_(1) . (A_(2) < B)."""
    acc: dict = {}
    for f1, c1 in x.items():
        for f2, c2 in y.items():
            for f3, c3 in gl_forests(f1, f2).items():
                _add_into(acc, f3, c1 * c2 * c3)
    return LinComb(acc)


def concat_antipode(x: LinComb) -> LinComb:
    """Antipode of the concatenation/deshuffle Hopf algebra: signed reversal."""
    acc: dict = {}
    for f, c in x.items():
        sign = -c if len(f) % 2 else c
        _add_into(acc, forest(reversed(f.trees)), sign)
    return LinComb(acc)


_GL_ANTIPODE: dict[OrderedForest, LinComb] = {}


def _gl_antipode_forest(a: OrderedForest) -> LinComb:
    got = _GL_ANTIPODE.get(a)
    if got is not None:
        return got
    out = concat_antipode(LinComb.basis(a))
    if not a.is_empty:
        for (a1, a2), c in deshuffle_forest(a).items():
            if a1.is_empty or a2.is_empty:
                continue
            out = out + c * left_graft(
                _gl_antipode_forest(a1), concat_antipode(LinComb.basis(a2)))
    _GL_ANTIPODE[a] = out
    return out


def gl_antipode(x: LinComb) -> LinComb:
    """Antipode of the Grossman-Larson Hopf algebra.

    Satisfies S*(A) = S(A) + S*(A^(1)) < S(A^(2)) over the reduced
    deshuffle, with S the concatenation antipode.
    """
    acc: dict = {}
    for f, c in x.items():
        for f2, c2 in _gl_antipode_forest(f).items():
            _add_into(acc, f2, c * c2)
    return LinComb(acc)


def gl_inverse_product(x: LinComb, y: LinComb) -> LinComb:
    """Recover concatenation from * : A . B = A_(1) * (S*(A_(2)) < B)."""
    acc: dict = {}
    for f1, c1 in x.items():
        for (a1, a2), c in deshuffle_forest(f1).items():
            rhs = left_graft(_gl_antipode_forest(a2), y)
            for f3, c3 in gl_product(LinComb.basis(a1), rhs).items():
                _add_into(acc, f3, c1 * c * c3)
    return LinComb(acc)


def jacobi_bracket(x: LinComb, y: LinComb) -> LinComb:
    """Post-Lie bracket [x, y] = x < y - y < x + x y - y x."""
    return (left_graft(x, y) - left_graft(y, x)
            + concat(x, y) - concat(y, x))


def gl_exp(x: LinComb, maxdeg: int) -> LinComb:
    """Truncated *-exponential of an augmentation-ideal element."""
    if counit(x):
        raise ValueError("gl_exp needs a series with zero unit component")
    xt = x.truncate(maxdeg)
    out = LinComb.basis(FOREST_ONE)
    term = out
    k = 1
    while True:
        term = gl_product(term, xt).truncate(maxdeg) * Fraction(1, k)
        if term.is_zero:
            break
        out = out + term
        k += 1
    return out

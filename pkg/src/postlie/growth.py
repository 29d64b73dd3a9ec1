"""Natural growth on planar forests and the primitive-element machinery.

The growth operation ``x T y`` grafts all roots of ``x`` onto a single vertex
of ``y``, shuffling the arriving block with that vertex's existing children,
then averages over the choice of vertex.  Against the cut coproduct it
satisfies

    reduced(x T y) = x (x) y + x^(1) (x) (x^(2) T y)

whenever ``y`` is primitive, which makes the iterated fold

    fold(p_k, ..., p_1) = (...(p_k T p_(k-1)) T ...) T p_1

behave like word concatenation: the reduced coproduct deconcatenates folds.
Everything else here rides on that fact: the projection onto primitives, the
fold decomposition witnessing cofreeness, primitive-space bases, the interval
comodules, and the classification of coalgebra endomorphisms by their action
on primitives.

Leg order ties tensors to folds throughout: leg 0 is the outermost (leftmost)
fold factor, and iterating the reduced coproduct peels legs off in the same
order.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .forest import FOREST_ONE, OrderedForest, PlanarTree, enumerate_forests, forest, tree
from .lincomb import LinComb, Tensor, _add_into, tensor_of
from .linalg import kernel_basis, rank
from .mkw import iterated_reduced, reduced_coproduct, reduced_coproduct_forest


def gr_shuffle(u: tuple, v: tuple) -> LinComb:
    """Shuffle two words given as tuples of letters; keys are merged tuples."""
    nu, nv = len(u), len(v)
    acc: dict = {}
    for pick in combinations(range(nu + nv), nu):
        out: list = [None] * (nu + nv)
        for idx, p in enumerate(pick):
            out[p] = u[idx]
        it = iter(v)
        for i in range(nu + nv):
            if out[i] is None:
                out[i] = next(it)
        _add_into(acc, tuple(out), Fraction(1))
    return LinComb(acc)


def gr_deconcat(w: tuple) -> Tensor:
    """Deconcatenation of a tuple word, including both empty splits."""
    acc: dict = {}
    for i in range(len(w) + 1):
        _add_into(acc, (w[:i], w[i:]), Fraction(1))
    return Tensor(2, acc)


def _vertex_children(f: OrderedForest) -> list[tuple[PlanarTree, ...]]:
    # Children tuples in depth-first preorder, matching _replace_at numbering.
    out: list = []

    def walk(t: PlanarTree) -> None:
        out.append(t.children)
        for c in t.children:
            walk(c)

    for t in f.trees:
        walk(t)
    return out


def _replace_at(t: PlanarTree, target: int, newkids: tuple, counter: list) -> PlanarTree:
    my = counter[0]
    counter[0] += 1
    if my == target:
        return tree(t.decoration, newkids)
    return tree(t.decoration, tuple(_replace_at(c, target, newkids, counter)
                                    for c in t.children))


_GROWTH: dict = {}


def _growth_forests(w1: OrderedForest, w2: OrderedForest) -> LinComb:
    key = (w1, w2)
    got = _GROWTH.get(key)
    if got is not None:
        return got
    if w2.is_empty:
        out = LinComb.zero()
    elif w1.is_empty:
        out = LinComb.basis(w2)
    else:
        share = Fraction(1, w2.degree)
        acc: dict = {}
        for vi, existing in enumerate(_vertex_children(w2)):
            for newkids, mult in gr_shuffle(w1.trees, existing).items():
                counter = [0]
                rebuilt = forest(_replace_at(t, vi, newkids, counter)
                                 for t in w2.trees)
                _add_into(acc, rebuilt, mult * share)
        out = LinComb(acc)
    _GROWTH[key] = out
    return out


def natural_growth(x: LinComb, y: LinComb) -> LinComb:
    """Graft the roots of x onto one vertex of y, averaged over vertices.

    The grafted block is shuffled with the target vertex's children.  The
    empty forest acts as identity on the left and absorbs to zero on the
    right.
    """
    acc: dict = {}
    for f1, c1 in x.items():
        for f2, c2 in y.items():
            for f3, c3 in _growth_forests(f1, f2).items():
                _add_into(acc, f3, c1 * c2 * c3)
    return LinComb(acc)


def growth_fold(factors: Sequence[LinComb]) -> LinComb:
    """Left-nested growth fold; the first factor is outermost."""
    if not factors:
        return LinComb.basis(FOREST_ONE)
    out = factors[0]
    for p in factors[1:]:
        out = natural_growth(out, p)
    return out


_FOLD: dict = {}


def fold_tensor(t: Tensor) -> LinComb:
    """Growth fold applied legwise to a tensor, leg 0 outermost."""
    acc: dict = {}
    for key, c in t.items():
        got = _FOLD.get(key)
        if got is None:
            got = LinComb.basis(key[0])
            for f in key[1:]:
                got = natural_growth(got, LinComb.basis(f))
            _FOLD[key] = got
        for f2, c2 in got.items():
            _add_into(acc, f2, c * c2)
    return LinComb(acc)


def is_primitive(x: LinComb) -> bool:
    if x.is_zero:
        return True
    if x.coeff(FOREST_ONE):
        return False
    return reduced_coproduct(x).is_zero


def cocycle_bplus(x: LinComb, p: LinComb) -> LinComb:
    """Growth against a fixed primitive; a one-cocycle for the cut coproduct."""
    if not is_primitive(p):
        raise ValueError("cocycle direction must be a primitive element")
    return natural_growth(x, p)


_PI: dict = {}


def _pi_forest(f: OrderedForest) -> LinComb:
    got = _PI.get(f)
    if got is None:
        got = LinComb.basis(f)
        for (l, r), c in reduced_coproduct_forest(f).items():
            got = got - c * natural_growth(LinComb.basis(l), _pi_forest(r))
        _PI[f] = got
    return got


def primitive_projection(x: LinComb) -> LinComb:
    """Projection onto primitives: pi(x) = x - x^(1) T pi(x^(2)).

    Constants project to zero.  Single trees of degree two or more also
    vanish, since any such tree is itself a growth onto a one-vertex tree.
    """
    acc: dict = {}
    for f, c in x.items():
        if f.is_empty:
            continue
        for k, c2 in _pi_forest(f).items():
            _add_into(acc, k, c * c2)
    return LinComb(acc)


def primitive_degree(x: LinComb) -> int:
    """Number of fold factors needed to express x; 0 for constants."""
    if x.is_zero:
        return 0
    if x.coeff(FOREST_ONE):
        if len(x) == 1:
            return 0
        raise ValueError("mixed constant and augmentation-ideal components")
    t = reduced_coproduct(x)
    k = 1
    bound = x.max_degree()
    while not t.is_zero:
        t = t.apply_coproduct(0, reduced_coproduct_forest)
        k += 1
        if k > bound:
            raise RuntimeError("iterated reduced coproduct failed to vanish")
    return k


def _require_primitive_legs(t: Tensor) -> None:
    for leg in range(t.arity):
        if not t.apply_coproduct(leg, reduced_coproduct_forest).is_zero:
            raise RuntimeError("decomposition produced a non-primitive leg")


def f_decompose(x: LinComb) -> dict[int, Tensor]:
    """Split x into levels: x = sum over k of fold_tensor(levels[k]).

    levels[k] is a tensor of k primitive legs, recovered as the (k-1)-fold
    reduced coproduct of what remains after stripping all higher levels.
    Raises ValueError on a constant component.
    """
    if x.coeff(FOREST_ONE):
        raise ValueError("constants have no fold decomposition")
    levels: dict[int, Tensor] = {}
    r = x
    while not r.is_zero:
        m = primitive_degree(r)
        if m == 1:
            t = Tensor(1, {(f,): c for f, c in r.items()})
        else:
            t = iterated_reduced(r, m - 1)
        _require_primitive_legs(t)
        levels[m] = t
        r = r - fold_tensor(t)
        if not r.is_zero and primitive_degree(r) >= m:
            raise RuntimeError("fold decomposition did not descend")
    return levels


def f_recompose(levels: Mapping[int, Tensor]) -> LinComb:
    out = LinComb.zero()
    for t in levels.values():
        out = out + fold_tensor(t)
    return out


_PRIM_BASIS: dict = {}


def primitive_basis(n: int, alphabet: Iterable[str]) -> tuple[LinComb, ...]:
    """Basis of the primitive subspace in homogeneous degree n.

    Computed as the kernel of the reduced coproduct on the span of all
    degree-n forests; the coordinate order follows the canonical forest
    enumeration, so the result is deterministic.
    """
    alphabet = tuple(alphabet)
    key = (n, alphabet)
    got = _PRIM_BASIS.get(key)
    if got is not None:
        return got
    if n <= 0:
        out: tuple = ()
    else:
        forests = enumerate_forests(n, alphabet)
        images = [reduced_coproduct_forest(f) for f in forests]
        targets = sorted({k for img in images for k, _ in img.items()},
                         key=lambda p: (p[0].sort_key(), p[1].sort_key()))
        matrix = [[img.coeff(tkey) for img in images] for tkey in targets]
        out = tuple(LinComb.from_terms(zip(forests, vec))
                    for vec in kernel_basis(matrix, len(forests)))
    _PRIM_BASIS[key] = out
    return out


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Ordered splittings of n into k positive parts."""
    if k <= 0 or k > n:
        return
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def interval_decompositions(a: int, b: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Splittings of the integer interval [a..b] into consecutive blocks."""
    if a > b:
        yield ()
        return
    for j in range(a, b + 1):
        for rest in interval_decompositions(j + 1, b):
            yield ((a, j),) + rest


def comodule_coaction(n: int, family: Mapping[tuple[int, int], LinComb]) -> list[dict[int, LinComb]]:
    """Coaction rows of the comodule built from a triangular primitive family.

    ``family`` maps (i, j) with 1 <= i <= j <= n to primitive elements.  Row i
    of the result sends basis vector i to ``sum_j row[i][j] (x) e_j``: the
    coefficient of e_j collects, over every splitting of [j+1..i] into
    consecutive blocks, the growth fold of the blocks' primitives taken from
    the last block outward.
    """
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            p = family.get((i, j))
            if p is None:
                raise ValueError(f"family is missing entry {(i, j)}")
            if not is_primitive(p):
                raise ValueError(f"family entry {(i, j)} is not primitive")
    rows: list = []
    for i in range(n + 1):
        row = {i: LinComb.basis(FOREST_ONE)}
        for j in range(i):
            total = LinComb.zero()
            for blocks in interval_decompositions(j + 1, i):
                total = total + growth_fold([family[b] for b in reversed(blocks)])
            if not total.is_zero:
                row[j] = total
        rows.append(row)
    return rows


def coalgebra_endomorphism(u: Mapping[int, Callable[[Tensor], LinComb]],
                           x: LinComb) -> LinComb:
    """Apply the coalgebra endomorphism classified by the family ``u``.

    ``u[a]`` eats a tensor of ``a`` primitive legs and returns a primitive;
    missing arities act as zero.  Level k of the fold decomposition is mapped
    by summing, over all splittings of its legs into consecutive blocks, the
    fold of the blockwise images.  The result is bijective exactly when
    ``u[1]`` is invertible on primitives.
    """
    acc: dict = {}
    c0 = x.coeff(FOREST_ONE)
    if c0:
        _add_into(acc, FOREST_ONE, c0)
        x = x - c0 * LinComb.basis(FOREST_ONE)
    for nlevel, t in f_decompose(x).items():
        for k in range(1, nlevel + 1):
            for comp in compositions(nlevel, k):
                if any(a not in u for a in comp):
                    continue
                pieces = Tensor(k)
                for key, c in t.items():
                    legs = []
                    pos = 0
                    for a in comp:
                        legs.append(u[a](Tensor.basis(key[pos:pos + a])))
                        pos += a
                    pieces = pieces + c * tensor_of(*legs)
                for f2, c2 in fold_tensor(pieces).items():
                    _add_into(acc, f2, c2)
    return LinComb(acc)


def u1_rank_by_degree(u1: Callable[[Tensor], LinComb], maxdeg: int,
                      alphabet: Iterable[str]) -> dict[int, tuple[int, int]]:
    """(rank, dimension) of a degree-preserving arity-one map on primitives.

    Raises ValueError if the map moves a primitive out of its degree, since
    per-degree ranks then say nothing about bijectivity.
    """
    alphabet = tuple(alphabet)
    out: dict = {}
    for d in range(1, maxdeg + 1):
        basis = primitive_basis(d, alphabet)
        forests = enumerate_forests(d, alphabet)
        index = {f: i for i, f in enumerate(forests)}
        rows = []
        for p in basis:
            img = u1(Tensor(1, {(f,): c for f, c in p.items()}))
            row = [Fraction(0)] * len(forests)
            for f, c in img.items():
                if f.degree != d:
                    raise ValueError("arity-one map does not preserve degree")
                row[index[f]] = c
            rows.append(row)
        out[d] = (rank(rows) if rows else 0, len(basis))
    return out

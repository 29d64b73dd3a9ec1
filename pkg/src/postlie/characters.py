"""Embedding planar forests into a word Hopf algebra, and truncated characters.

``phi`` is the algebra isomorphism that turns the associative product built
on grafting into plain word concatenation, fixing single trees.  On a forest
it follows the rewriting

    phi(t w) = t . phi(w) - sum over trees s of w: phi(w with s replaced by t <| s)

which terminates because every term on the right has fewer trees.  Its
inverse rebuilds with the grafting product instead: a word t.w maps to
t * phi_inverse(w).  Both preserve degree and are unitriangular with respect
to tree count, which ``phi_matrix`` exposes for rank checks.

``TruncChar`` is a linear functional on forests of bounded degree, stored
extensionally.  Both flavors are multiplicative for the shuffle of forests;
they differ in which coproduct drives convolution: the cut coproduct for the
"mkw" flavor, deconcatenation for the "tensor" flavor.  ``canonical_lift``
exponentiates a degree-one increment element, ``embed_rough_path`` moves a
lift to the tensor flavor by pushing its representing series through ``phi``,
and ``PiScaling``/``deg_pi`` grade words of trees by vertex share.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

from .forest import (FOREST_ONE, OrderedForest, PlanarTree, enumerate_forests,
                     enumerate_trees, forest, parse_forest, single)
from .grafting import concat_antipode, gl_exp, gl_product, graft_forests
from .lincomb import (LinComb, Tensor, _add_into, as_coeff, concat,
                      deconcat_forest, deshuffle, shuffle, tensor_of)
from .mkw import mkw_coproduct_forest, mkw_antipode

_PHI: dict = {}


def _phi_forest(f: OrderedForest) -> LinComb:
    got = _PHI.get(f)
    if got is not None:
        return got
    ts = f.trees
    if len(ts) <= 1:
        out = LinComb.basis(f)
    else:
        head = single(ts[0])
        rest = forest(ts[1:])
        out = concat(LinComb.basis(head), _phi_forest(rest))
        for j in range(1, len(ts)):
            grafted = graft_forests(single(ts[0]), single(ts[j]))
            for g, c in grafted.items():
                replaced = forest(ts[1:j] + g.trees + ts[j + 1:])
                out = out - c * _phi_forest(replaced)
    _PHI[f] = out
    return out


def phi(x: LinComb) -> LinComb:
    """Isomorphism onto the word side: trees are fixed, * becomes concat."""
    acc: dict = {}
    for f, c in x.items():
        for f2, c2 in _phi_forest(f).items():
            _add_into(acc, f2, c * c2)
    return LinComb(acc)


_PHI_INV: dict = {}


def _phi_inv_forest(f: OrderedForest) -> LinComb:
    got = _PHI_INV.get(f)
    if got is not None:
        return got
    ts = f.trees
    if len(ts) <= 1:
        out = LinComb.basis(f)
    else:
        out = gl_product(LinComb.basis(single(ts[0])), _phi_inv_forest(forest(ts[1:])))
    _PHI_INV[f] = out
    return out


def phi_inverse(x: LinComb) -> LinComb:
    """Inverse of ``phi``: a word rebuilds as head * phi_inverse(tail)."""
    acc: dict = {}
    for f, c in x.items():
        for f2, c2 in _phi_inv_forest(f).items():
            _add_into(acc, f2, c * c2)
    return LinComb(acc)


def phi_matrix(n: int, alphabet: Iterable[str]) -> tuple[tuple[OrderedForest, ...], list[list[Fraction]]]:
    """Matrix of ``phi`` on degree n, basis sorted by tree count then text.

    Entry [i][j] is the coefficient of basis forest i in the image of basis
    forest j; with this ordering the matrix is unitriangular.
    """
    basis = tuple(sorted(enumerate_forests(n, tuple(alphabet)),
                         key=lambda f: (len(f.trees), f.sort_key())))
    index = {f: i for i, f in enumerate(basis)}
    mat = [[Fraction(0)] * len(basis) for _ in basis]
    for j, f in enumerate(basis):
        for g, c in _phi_forest(f).items():
            mat[index[g]][j] = c
    return basis, mat


MKW_FLAVOR = "mkw-character"
TENSOR_FLAVOR = "tensor-character"

_FLAVORS = {"mkw": MKW_FLAVOR, MKW_FLAVOR: MKW_FLAVOR,
            "tensor": TENSOR_FLAVOR, TENSOR_FLAVOR: TENSOR_FLAVOR}


class TruncChar:
    """Functional on forests of degree <= N, unit value pinned to 1."""

    __slots__ = ("N", "flavor", "_values")

    def __init__(self, N: int, values: Mapping[OrderedForest, int | Fraction],
                 flavor: str = MKW_FLAVOR):
        if N < 0:
            raise ValueError("truncation degree must be nonnegative")
        canon = _FLAVORS.get(flavor)
        if canon is None:
            raise ValueError(f"unknown flavor {flavor!r}")
        vals: dict = {}
        for f, c in values.items():
            if f.degree > N:
                raise ValueError(f"value on {f.text} exceeds truncation {N}")
            cc = as_coeff(c)
            if f.is_empty:
                if cc != 1:
                    raise ValueError("value on the unit must be 1")
                continue
            if cc:
                vals[f] = cc
        self.N = N
        self.flavor = canon
        self._values = vals

    def value(self, f: OrderedForest) -> Fraction:
        if f.degree > self.N:
            raise ValueError(f"{f.text} lies beyond truncation {self.N}")
        if f.is_empty:
            return Fraction(1)
        return self._values.get(f, Fraction(0))

    def pair(self, x: LinComb) -> Fraction:
        total = Fraction(0)
        for f, c in x.items():
            total += c * self.value(f)
        return total

    def support(self):
        return self._values.keys()

    def series(self) -> LinComb:
        """Representing series: the unit plus all stored values."""
        acc = {FOREST_ONE: Fraction(1)}
        acc.update(self._values)
        return LinComb(acc)

    def letters(self) -> tuple[str, ...]:
        out: set = set()
        for f in self._values:
            stack = list(f.trees)
            while stack:
                t = stack.pop()
                out.add(t.decoration)
                stack.extend(t.children)
        return tuple(sorted(out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncChar):
            return NotImplemented
        return (self.N == other.N and self.flavor == other.flavor
                and self._values == other._values)

    def __repr__(self) -> str:
        return f"TruncChar(N={self.N}, flavor={self.flavor!r}, nvalues={len(self._values)})"


def counit_char(N: int, flavor: str = MKW_FLAVOR) -> TruncChar:
    return TruncChar(N, {}, flavor)


def character_failures(X: TruncChar, alphabet: Iterable[str] | None = None) -> list[tuple]:
    """Witnesses against shuffle multiplicativity, over pairs within degree N.

    Returns (f, g, X(f shuffle g), X(f)X(g)) triples-with-values; empty means
    X is a character as far as the truncation can see.
    """
    letters = tuple(alphabet) if alphabet is not None else X.letters()
    bad: list = []
    for d1 in range(1, X.N):
        for d2 in range(1, X.N - d1 + 1):
            if d2 < d1:
                continue
            for f in enumerate_forests(d1, letters):
                for g in enumerate_forests(d2, letters):
                    lhs = X.pair(shuffle(LinComb.basis(f), LinComb.basis(g)))
                    rhs = X.value(f) * X.value(g)
                    if lhs != rhs:
                        bad.append((f, g, lhs, rhs))
    return bad


def group_like_failures(series: LinComb, N: int) -> list[tuple]:
    """Split failures of deshuffle(series) = series (x) series below degree N."""
    lhs = deshuffle(series.truncate(N))
    rhs = tensor_of(series, series)
    bad: list = []
    keys = set(k for k, _ in lhs.items()) | set(k for k, _ in rhs.items())
    for l, r in sorted(keys, key=lambda p: (p[0].sort_key(), p[1].sort_key())):
        if l.degree + r.degree > N:
            continue
        if lhs.coeff((l, r)) != rhs.coeff((l, r)):
            bad.append((l, r, lhs.coeff((l, r)), rhs.coeff((l, r))))
    return bad


def char_convolve(X: TruncChar, Y: TruncChar) -> TruncChar:
    """Convolution against the flavor's coproduct: cut for mkw, split for tensor."""
    if X.N != Y.N:
        raise ValueError("truncation degrees differ")
    if X.flavor != Y.flavor:
        raise ValueError("flavors differ")
    split = mkw_coproduct_forest if X.flavor == MKW_FLAVOR else deconcat_forest
    letters = tuple(sorted(set(X.letters()) | set(Y.letters())))
    vals: dict = {}
    for n in range(1, X.N + 1):
        for f in enumerate_forests(n, letters):
            total = Fraction(0)
            for (l, r), c in split(f).items():
                total += c * X.value(l) * Y.value(r)
            if total:
                vals[f] = total
    return TruncChar(X.N, vals, X.flavor)


def char_inverse(X: TruncChar) -> TruncChar:
    """Convolution inverse: precompose with the flavor's antipode."""
    anti = mkw_antipode if X.flavor == MKW_FLAVOR else concat_antipode
    letters = X.letters()
    vals: dict = {}
    for n in range(1, X.N + 1):
        for f in enumerate_forests(n, letters):
            v = X.pair(anti(LinComb.basis(f)))
            if v:
                vals[f] = v
    return TruncChar(X.N, vals, X.flavor)


def canonical_lift(increments: Mapping[str, int | Fraction], N: int) -> TruncChar:
    """Exponential lift of letter increments, as an mkw-flavor character."""
    if N < 1:
        raise ValueError("truncation degree must be at least 1")
    gen = LinComb.from_terms(
        (parse_forest(f"[{d}]"), as_coeff(c)) for d, c in increments.items() if as_coeff(c))
    series = gl_exp(gen, N)
    return TruncChar(N, dict(series.items()), MKW_FLAVOR)


def embed_rough_path(X: TruncChar) -> TruncChar:
    """Move an mkw-flavor character to the tensor flavor along ``phi``."""
    if X.flavor != MKW_FLAVOR:
        raise ValueError("embedding starts from the mkw flavor")
    return TruncChar(X.N, dict(phi(X.series()).items()), TENSOR_FLAVOR)


def unembed_rough_path(Y: TruncChar) -> TruncChar:
    if Y.flavor != TENSOR_FLAVOR:
        raise ValueError("un-embedding starts from the tensor flavor")
    return TruncChar(Y.N, dict(phi_inverse(Y.series()).items()), MKW_FLAVOR)


class PiScaling:
    """Inhomogeneous scaling: tree j of size s gets exponent N/s."""

    __slots__ = ("N", "trees", "exponents")

    def __init__(self, N: int, alphabet: Iterable[str]):
        if N < 1:
            raise ValueError("truncation degree must be at least 1")
        ts: list = []
        for d in range(1, N + 1):
            ts.extend(enumerate_trees(d, tuple(alphabet)))
        self.N = N
        self.trees = tuple(ts)
        self.exponents = tuple(Fraction(N, t.degree) for t in ts)


def deg_pi(w: OrderedForest, scaling: PiScaling) -> Fraction:
    """Scaled degree of a word: each tree contributes size over N."""
    total = Fraction(0)
    for t in w.trees:
        if t.degree > scaling.N:
            raise ValueError(f"tree {t.text} exceeds the scaling window {scaling.N}")
        total += Fraction(t.degree, scaling.N)
    return total


def char_to_json(X: TruncChar) -> str:
    rows = sorted(X._values.items(), key=lambda kv: kv[0].sort_key())
    return json.dumps({"N": X.N, "flavor": X.flavor,
                       "values": {f.text: str(c) for f, c in rows}}, indent=2)


def char_from_json(text: str) -> TruncChar:
    data = json.loads(text)
    vals = {parse_forest(k): Fraction(v) for k, v in data["values"].items()}
    return TruncChar(int(data["N"]), vals, data["flavor"])


def char_to_csv(X: TruncChar) -> str:
    lines = ["forest,value"]
    rows = sorted(X._values.items(), key=lambda kv: kv[0].sort_key())
    lines.extend(f"{f.text},{c}" for f, c in rows)
    return "\n".join(lines) + "\n"

"""Sparse linear combinations over exact rationals, and small tensors.

:class:`LinComb` maps basis keys to nonzero ``Fraction`` coefficients.  Keys
are any hashable basis values; the degree-aware helpers additionally expect a
``.degree`` attribute (planar forests, nonplanar forests, decorated trees all
qualify).  Instances are immutable and hashable, so a LinComb can itself be
used as a letter of a formal word.

:class:`Tensor` is the flat sparse analogue for tensor products: terms are
keyed by tuples of basis keys, one per leg.  Coproduct iteration is done by
reapplying maps legwise (``apply_coproduct``), products by merging two legs
(``merge_legs``).

Word operations on forests (concatenation, shuffle, deshuffle,
deconcatenation, Kronecker pairing) live here as module functions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Hashable, Iterable, Iterator, Mapping

from .forest import FOREST_ONE, OrderedForest, forest, word

Coeff = Fraction


def as_coeff(value: int | str | Fraction) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _add_into(acc: dict, key: Hashable, coeff: Fraction) -> None:
    c = acc.get(key)
    if c is None:
        if coeff:
            acc[key] = coeff
    else:
        c = c + coeff
        if c:
            acc[key] = c
        else:
            del acc[key]


class LinComb:
    """Immutable sparse linear combination with Fraction coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Fraction] | None = None):
        data = {k: v for k, v in (terms or {}).items() if v}
        self._terms = data
        self._hash: int | None = None

    # construction ---------------------------------------------------------

    @staticmethod
    def zero() -> "LinComb":
        return _ZERO

    @staticmethod
    def basis(key: Hashable) -> "LinComb":
        return LinComb({key: Fraction(1)})

    @staticmethod
    def from_terms(pairs: Iterable[tuple[Hashable, int | Fraction]]) -> "LinComb":
        acc: dict = {}
        for k, c in pairs:
            _add_into(acc, k, as_coeff(c))
        return LinComb(acc)

    # accessors ------------------------------------------------------------

    def items(self) -> Iterator[tuple[Hashable, Fraction]]:
        return iter(self._terms.items())

    def support(self):
        return self._terms.keys()

    def coeff(self, key: Hashable) -> Fraction:
        return self._terms.get(key, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(acc, k, c)
        return LinComb(acc)

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(acc, k, -c)
        return LinComb(acc)

    def __neg__(self) -> "LinComb":
        return LinComb({k: -c for k, c in self._terms.items()})

    def scale(self, scalar: int | Fraction) -> "LinComb":
        s = as_coeff(scalar)
        if not s:
            return _ZERO
        return LinComb({k: c * s for k, c in self._terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def map_basis(self, fn: Callable[[Hashable], "LinComb"]) -> "LinComb":
        """Linear extension of a basis-valued map."""
        acc: dict = {}
        for k, c in self._terms.items():
            for k2, c2 in fn(k)._terms.items():
                _add_into(acc, k2, c * c2)
        return LinComb(acc)

    # degree-aware helpers (keys must expose .degree) ----------------------

    def degrees(self) -> set[int]:
        return {k.degree for k in self._terms}

    def homogeneous(self, n: int) -> "LinComb":
        return LinComb({k: c for k, c in self._terms.items() if k.degree == n})

    def truncate(self, maxdeg: int) -> "LinComb":
        return LinComb({k: c for k, c in self._terms.items() if k.degree <= maxdeg})

    def max_degree(self) -> int:
        return max((k.degree for k in self._terms), default=0)

    # equality -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            self._hash = h
        return h

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb(0)"
        bits = ", ".join(f"{k!r}: {c}" for k, c in self._terms.items())
        return f"LinComb({{{bits}}})"


_ZERO = LinComb({})


def combine(coeffs: Iterable[int | Fraction], elems: Iterable[LinComb]) -> LinComb:
    """Linear combination sum(c_i * x_i)."""
    acc: dict = {}
    for c, x in zip(coeffs, elems):
        cc = as_coeff(c)
        for k, v in x._terms.items():
            _add_into(acc, k, cc * v)
    return LinComb(acc)


class Tensor:
    """Sparse tensor of fixed arity; terms keyed by tuples of basis keys."""

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Mapping[tuple, Fraction] | None = None):
        self.arity = arity
        self._terms = {k: v for k, v in (terms or {}).items() if v}
        self._hash: int | None = None

    @staticmethod
    def zero(arity: int) -> "Tensor":
        return Tensor(arity)

    @staticmethod
    def basis(key: tuple) -> "Tensor":
        return Tensor(len(key), {key: Fraction(1)})

    @staticmethod
    def from_terms(arity: int, pairs: Iterable[tuple[tuple, int | Fraction]]) -> "Tensor":
        acc: dict = {}
        for k, c in pairs:
            _add_into(acc, k, as_coeff(c))
        return Tensor(arity, acc)

    def items(self) -> Iterator[tuple[tuple, Fraction]]:
        return iter(self._terms.items())

    def coeff(self, key: tuple) -> Fraction:
        return self._terms.get(key, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "Tensor") -> "Tensor":
        if not isinstance(other, Tensor) or other.arity != self.arity:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(acc, k, c)
        return Tensor(self.arity, acc)

    def __sub__(self, other: "Tensor") -> "Tensor":
        if not isinstance(other, Tensor) or other.arity != self.arity:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(acc, k, -c)
        return Tensor(self.arity, acc)

    def __neg__(self) -> "Tensor":
        return Tensor(self.arity, {k: -c for k, c in self._terms.items()})

    def scale(self, scalar: int | Fraction) -> "Tensor":
        s = as_coeff(scalar)
        if not s:
            return Tensor(self.arity)
        return Tensor(self.arity, {k: c * s for k, c in self._terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def apply_linear(self, leg: int, fn: Callable[[Hashable], LinComb]) -> "Tensor":
        """Apply a linear map to one leg, keeping the arity."""
        acc: dict = {}
        for key, c in self._terms.items():
            for k2, c2 in fn(key[leg]).items():
                _add_into(acc, key[:leg] + (k2,) + key[leg + 1:], c * c2)
        return Tensor(self.arity, acc)

    def apply_coproduct(self, leg: int, fn: Callable[[Hashable], "Tensor"]) -> "Tensor":
        """Apply a two-leg coproduct to one leg, raising the arity by one."""
        acc: dict = {}
        for key, c in self._terms.items():
            for (l, r), c2 in fn(key[leg]).items():
                _add_into(acc, key[:leg] + (l, r) + key[leg + 1:], c * c2)
        return Tensor(self.arity + 1, acc)

    def merge_legs(self, i: int, j: int,
                   product: Callable[[Hashable, Hashable], LinComb]) -> "Tensor":
        """Multiply legs ``i`` and ``j`` (i < j); the product lands in leg ``i``."""
        if not 0 <= i < j < self.arity:
            raise ValueError("need 0 <= i < j < arity")
        acc: dict = {}
        for key, c in self._terms.items():
            rest = key[:j] + key[j + 1:]
            for k2, c2 in product(key[i], key[j]).items():
                _add_into(acc, rest[:i] + (k2,) + rest[i + 1:], c * c2)
        return Tensor(self.arity - 1, acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.arity, frozenset(self._terms.items())))
            self._hash = h
        return h

    def __repr__(self) -> str:
        return f"Tensor(arity={self.arity}, nterms={len(self._terms)})"


def tensor_of(*factors: LinComb) -> Tensor:
    """Outer product of LinCombs as a Tensor."""
    acc: dict = {(): Fraction(1)}
    for f in factors:
        nxt: dict = {}
        for key, c in acc.items():
            for k, c2 in f.items():
                nxt[key + (k,)] = c * c2
        acc = nxt
    return Tensor(len(factors), acc)


# -- word operations on ordered forests ------------------------------------

def concat(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear concatenation of forests as words of trees."""
    acc: dict = {}
    for f1, c1 in x.items():
        for f2, c2 in y.items():
            _add_into(acc, word(f1, f2), c1 * c2)
    return LinComb(acc)


def shuffle_words(f1: OrderedForest, f2: OrderedForest) -> LinComb:
    """Shuffle two forests as words of trees (multiplicities included)."""
    t1, t2 = f1.trees, f2.trees
    n1, n2 = len(t1), len(t2)
    if not n1:
        return LinComb.basis(f2)
    if not n2:
        return LinComb.basis(f1)
    acc: dict = {}
    slots = range(n1 + n2)
    for pick in combinations(slots, n1):
        out: list = [None] * (n1 + n2)
        for idx, p in enumerate(pick):
            out[p] = t1[idx]
        it = iter(t2)
        for p in slots:
            if out[p] is None:
                out[p] = next(it)
        _add_into(acc, forest(out), Fraction(1))
    return LinComb(acc)


def shuffle(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear shuffle product of forest words."""
    acc: dict = {}
    for f1, c1 in x.items():
        for f2, c2 in y.items():
            for f3, c3 in shuffle_words(f1, f2).items():
                _add_into(acc, f3, c1 * c2 * c3)
    return LinComb(acc)


def deshuffle_forest(f: OrderedForest) -> Tensor:
    """Unshuffle coproduct of one forest: sum over subsets of tree positions."""
    trees_ = f.trees
    n = len(trees_)
    acc: dict = {}
    for r in range(n + 1):
        for pick in combinations(range(n), r):
            left = forest(trees_[i] for i in pick)
            picked = set(pick)
            right = forest(trees_[i] for i in range(n) if i not in picked)
            _add_into(acc, (left, right), Fraction(1))
    return Tensor(2, acc)


def deshuffle(x: LinComb) -> Tensor:
    acc: dict = {}
    for f, c in x.items():
        for key, c2 in deshuffle_forest(f).items():
            _add_into(acc, key, c * c2)
    return Tensor(2, acc)


def deconcat_forest(f: OrderedForest) -> Tensor:
    """Deconcatenation coproduct: split the word of trees at every position."""
    trees_ = f.trees
    acc: dict = {}
    for i in range(len(trees_) + 1):
        _add_into(acc, (forest(trees_[:i]), forest(trees_[i:])), Fraction(1))
    return Tensor(2, acc)


def deconcat(x: LinComb) -> Tensor:
    acc: dict = {}
    for f, c in x.items():
        for key, c2 in deconcat_forest(f).items():
            _add_into(acc, key, c * c2)
    return Tensor(2, acc)


def pairing(x: LinComb, y: LinComb) -> Fraction:
    """Kronecker pairing: basis forests are orthonormal."""
    a, b = (x, y) if len(x) <= len(y) else (y, x)
    total = Fraction(0)
    for k, c in a.items():
        total += c * b.coeff(k)
    return total


def counit(x: LinComb) -> Fraction:
    """Coefficient of the empty forest."""
    return x.coeff(FOREST_ONE)

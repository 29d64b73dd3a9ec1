"""Decorated planar rooted trees and ordered forests.

A tree is written in bracket form as ``[d ...]`` where ``d`` is the root
decoration and ``...`` is the (ordered) list of child subtrees.  A forest
is a juxtaposition of trees read left to right; the empty forest renders
as ``1``.  Examples: ``[a]``, ``[a[b][c[d]]]``, ``[a[b]][c]``.

When the session alphabet has a single letter the decoration token may be
omitted, so ``[[][]]`` parses as ``[o[o][o]]`` over alphabet ``{"o"}``.

Trees and forests are immutable and hash-consed: structurally equal values
are the same object, hashes are precomputed, and child order is load-bearing
(``[a[b][c]]`` differs from ``[a[c][b]]``).
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence


class ForestSyntaxError(ValueError):
    """Raised on malformed bracket text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class PlanarTree:
    __slots__ = ("decoration", "children", "degree", "_hash", "_text")

    def __init__(self, decoration: str, children: tuple["PlanarTree", ...]):
        self.decoration = decoration
        self.children = children
        self.degree = 1 + sum(c.degree for c in children)
        self._hash = hash((decoration, children))
        self._text: str | None = None

    @property
    def text(self) -> str:
        t = self._text
        if t is None:
            t = "[" + self.decoration + "".join(c.text for c in self.children) + "]"
            self._text = t
        return t

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, PlanarTree):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.decoration == other.decoration
            and self.children == other.children
        )

    def __repr__(self) -> str:
        return f"PlanarTree({self.text!r})"


_TREES: dict[tuple[str, tuple[PlanarTree, ...]], PlanarTree] = {}


def tree(decoration: str, children: Iterable[PlanarTree] = ()) -> PlanarTree:
    """Intern and return the tree with the given root decoration and children."""
    kids = tuple(children)
    key = (decoration, kids)
    t = _TREES.get(key)
    if t is None:
        t = _TREES.setdefault(key, PlanarTree(decoration, kids))
    return t


def leaf(decoration: str) -> PlanarTree:
    return tree(decoration, ())


class OrderedForest:
    __slots__ = ("trees", "degree", "_hash", "_text")

    def __init__(self, trees_: tuple[PlanarTree, ...]):
        self.trees = trees_
        self.degree = sum(t.degree for t in trees_)
        self._hash = hash(trees_)
        self._text: str | None = None

    @property
    def text(self) -> str:
        t = self._text
        if t is None:
            t = "".join(t_.text for t_ in self.trees) if self.trees else "1"
            self._text = t
        return t

    @property
    def is_empty(self) -> bool:
        return not self.trees

    def sort_key(self) -> tuple[int, str]:
        return (self.degree, self.text)

    def __len__(self) -> int:
        return len(self.trees)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, OrderedForest):
            return NotImplemented
        return self._hash == other._hash and self.trees == other.trees

    def __repr__(self) -> str:
        return f"OrderedForest({self.text!r})"


_FORESTS: dict[tuple[PlanarTree, ...], OrderedForest] = {}


def forest(trees_: Iterable[PlanarTree]) -> OrderedForest:
    """Intern and return the ordered forest with the given trees."""
    kids = tuple(trees_)
    f = _FORESTS.get(kids)
    if f is None:
        f = _FORESTS.setdefault(kids, OrderedForest(kids))
    return f


FOREST_ONE = forest(())


def single(t: PlanarTree) -> OrderedForest:
    return forest((t,))


def word(f1: OrderedForest, f2: OrderedForest) -> OrderedForest:
    """Concatenate two forests as words of trees."""
    if f1.is_empty:
        return f2
    if f2.is_empty:
        return f1
    return forest(f1.trees + f2.trees)


def degree(x: PlanarTree | OrderedForest) -> int:
    return x.degree


def b_plus(f: OrderedForest, decoration: str) -> PlanarTree:
    """Graft every tree of ``f`` onto a new root carrying ``decoration``."""
    return tree(decoration, f.trees)


def b_minus(t: PlanarTree) -> OrderedForest:
    """Remove the root, returning the ordered forest of its branches."""
    return forest(t.children)


def compare(f1: OrderedForest, f2: OrderedForest) -> int:
    """Total order: by degree, then lexicographically on canonical text."""
    k1, k2 = f1.sort_key(), f2.sort_key()
    if k1 < k2:
        return -1
    if k1 > k2:
        return 1
    return 0


_TOKEN = re.compile(r"[A-Za-z0-9_]+")


def _parse_tree(text: str, pos: int, alphabet: frozenset[str] | None,
                default: str | None) -> tuple[PlanarTree, int]:
    if pos >= len(text) or text[pos] != "[":
        raise ForestSyntaxError("expected '['", pos)
    pos += 1
    m = _TOKEN.match(text, pos)
    if m is not None:
        decoration = m.group(0)
        pos = m.end()
        if alphabet is not None and decoration not in alphabet:
            raise ForestSyntaxError(f"decoration {decoration!r} not in alphabet", m.start())
    elif default is not None:
        decoration = default
    else:
        raise ForestSyntaxError("missing decoration token", pos)
    children = []
    while pos < len(text) and text[pos] == "[":
        child, pos = _parse_tree(text, pos, alphabet, default)
        children.append(child)
    if pos >= len(text) or text[pos] != "]":
        raise ForestSyntaxError("expected ']'", pos)
    return tree(decoration, children), pos + 1


def parse_forest(text: str, alphabet: Iterable[str] | None = None) -> OrderedForest:
    """Parse bracket text into an ordered forest.

    ``alphabet`` restricts the admissible decoration tokens; with a singleton
    alphabet the token may be omitted inside brackets.  ``1`` (or an empty
    string of trees) is the empty forest.  Raises :class:`ForestSyntaxError`
    with a position on malformed input.
    """
    alpha = frozenset(alphabet) if alphabet is not None else None
    default = next(iter(alpha)) if alpha is not None and len(alpha) == 1 else None
    trees_: list[PlanarTree] = []
    pos = 0
    n = len(text)
    seen_unit = False
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch == "[":
            t, pos = _parse_tree(text, pos, alpha, default)
            trees_.append(t)
        elif ch == "1" and not trees_ and not seen_unit:
            seen_unit = True
            pos += 1
        else:
            raise ForestSyntaxError(f"unexpected character {ch!r}", pos)
    if seen_unit and trees_:
        raise ForestSyntaxError("unit '1' mixed with trees", 0)
    return forest(trees_)


def render_forest(f: OrderedForest) -> str:
    """Canonical bracket text; inverse of :func:`parse_forest` on its image."""
    return f.text


def render_tree(t: PlanarTree) -> str:
    return t.text


# -- enumeration ------------------------------------------------------------

_TREE_BASIS: dict[tuple[int, tuple[str, ...]], tuple[PlanarTree, ...]] = {}
_FOREST_BASIS: dict[tuple[int, tuple[str, ...]], tuple[OrderedForest, ...]] = {}


def _canon_alphabet(alphabet: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(alphabet)))


def enumerate_trees(n: int, alphabet: Iterable[str]) -> tuple[PlanarTree, ...]:
    """All decorated planar trees with exactly ``n`` vertices, in compare-order."""
    alpha = _canon_alphabet(alphabet)
    key = (n, alpha)
    got = _TREE_BASIS.get(key)
    if got is not None:
        return got
    if n <= 0:
        out: tuple[PlanarTree, ...] = ()
    else:
        out = tuple(
            sorted(
                (tree(d, f.trees)
                 for d in alpha
                 for f in enumerate_forests(n - 1, alpha)),
                key=lambda t: (t.degree, t.text),
            )
        )
    _TREE_BASIS[key] = out
    return out


def enumerate_forests(n: int, alphabet: Iterable[str]) -> tuple[OrderedForest, ...]:
    """All ordered forests with exactly ``n`` vertices, in compare-order.

    Over a one-letter alphabet the count at degree ``n`` is the Catalan
    number C(n); decorations multiply that by ``len(alphabet) ** n``.
    """
    alpha = _canon_alphabet(alphabet)
    key = (n, alpha)
    got = _FOREST_BASIS.get(key)
    if got is not None:
        return got
    if n < 0:
        out: tuple[OrderedForest, ...] = ()
    elif n == 0:
        out = (FOREST_ONE,)
    else:
        found = [
            forest((first,) + rest.trees)
            for k in range(1, n + 1)
            for first in enumerate_trees(k, alpha)
            for rest in enumerate_forests(n - k, alpha)
        ]
        out = tuple(sorted(found, key=OrderedForest.sort_key))
    _FOREST_BASIS[key] = out
    return out


def forests_up_to(n: int, alphabet: Iterable[str]) -> Iterator[OrderedForest]:
    for k in range(n + 1):
        yield from enumerate_forests(k, alphabet)


# -- JSON -------------------------------------------------------------------

def tree_to_json(t: PlanarTree) -> dict:
    return {"d": t.decoration, "c": [tree_to_json(c) for c in t.children]}


def tree_from_json(obj: dict) -> PlanarTree:
    if not isinstance(obj, dict) or "d" not in obj:
        raise ValueError(f"not a tree object: {obj!r}")
    children = obj.get("c", [])
    if not isinstance(children, Sequence) or isinstance(children, (str, bytes)):
        raise ValueError("tree children must be a list")
    return tree(str(obj["d"]), (tree_from_json(c) for c in children))


def forest_to_json(f: OrderedForest) -> list:
    return [tree_to_json(t) for t in f.trees]


def forest_from_json(obj: list) -> OrderedForest:
    if not isinstance(obj, Sequence) or isinstance(obj, (str, bytes)):
        raise ValueError("forest must be a list of trees")
    return forest(tree_from_json(t) for t in obj)

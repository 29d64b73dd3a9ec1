"""Doubly decorated planar trees and their deformed operations.

Trees here carry two decoration layers over a fixed dimension d: every
vertex holds a multi-index (polynomial content) and every edge holds a
multi-index (a derivative order riding on the edge).  A tree whose root is
decorated by m and carries planted branches s_1 ... s_k stands for the
product word X^m s_1 ... s_k in normal form, so a single interned type
covers the polynomial generators, the planted generators, and every word
built from them.

The operations:

* raising adds to a vertex decoration; lowering subtracts a unit from one
  root-adjacent edge decoration per term, dropping what would go negative;
* deformed grafting attaches the left tree to a vertex v of the right one
  through an edge decorated a, summed over ell <= min(n_v, a) with
  componentwise binomial weights, the edge losing ell and the vertex
  losing ell; polynomial generators act by raising instead of attaching;
* the associative word product (roots merge left to right; a unit vertex
  commutes past planted letters at the cost of one lowering term) and the
  Grossman-Larson style product built on it by deshuffling the left
  factor through the deformed graft;
* the dual coproduct, obtained by transposing the product, and the
  isomorphism between the two products that is the identity on single
  letters.

A note on grading.  Degree counts edges plus the norms of all decorations.
Both products are filtered but not graded for it: commuting a unit vertex
past a planted letter drops the degree by exactly two, so a full transpose
of the product would be an infinite sum.  The dual coproduct therefore
transposes the degree-preserving part (the associated graded product);
duality against the product is exact on degree-complementary pairs.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations, product as iproduct
from math import comb
from typing import Iterator

from .forest import ForestSyntaxError
from .lincomb import LinComb, Tensor, _add_into

MultiIndex = tuple[int, ...]


# -- multi-index helpers ----------------------------------------------------

def mi_zero(d: int) -> MultiIndex:
    return (0,) * d


def mi_unit(d: int, j: int) -> MultiIndex:
    if not 0 <= j < d:
        raise ValueError(f"unit coordinate {j} outside dimension {d}")
    return tuple(1 if i == j else 0 for i in range(d))


def mi_add(m: MultiIndex, n: MultiIndex) -> MultiIndex:
    return tuple(a + b for a, b in zip(m, n))


def mi_sub(m: MultiIndex, n: MultiIndex) -> MultiIndex | None:
    """Componentwise difference, or None when any entry would go negative."""
    out = tuple(a - b for a, b in zip(m, n))
    return None if any(a < 0 for a in out) else out


def mi_norm(m: MultiIndex) -> int:
    return sum(m)


def mi_binom(m: MultiIndex, n: MultiIndex) -> int:
    """Componentwise product of binomial coefficients; zero unless n <= m."""
    out = 1
    for a, b in zip(m, n):
        if b > a:
            return 0
        out *= comb(a, b)
    return out


def mi_splits(m: MultiIndex) -> Iterator[tuple[MultiIndex, MultiIndex]]:
    """All componentwise decompositions m = n1 + n2."""
    for n1 in iproduct(*[range(a + 1) for a in m]):
        yield n1, tuple(a - b for a, b in zip(m, n1))


def multiindices(d: int, norm: int) -> list[MultiIndex]:
    """All d-tuples of naturals with the given l1 norm."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if d == 1:
        return [(norm,)]
    out = []
    for first in range(norm + 1):
        for rest in multiindices(d - 1, norm - first):
            out.append((first,) + rest)
    return out


# -- the tree type ----------------------------------------------------------

class RegTree:
    """Interned planar rooted tree with vertex and edge decorations.

    ``dec`` is the root's multi-index, ``edges`` the ordered tuple of
    (edge decoration, subtree) pairs.  ``degree`` counts edges plus the
    norms of every decoration below and including this vertex.  Instances
    are unique per shape, so identity works as equality.
    """

    __slots__ = ("dec", "edges", "degree", "_hash", "_text")

    def __init__(self, dec: MultiIndex, edges: tuple, degree: int):
        self.dec = dec
        self.edges = edges
        self.degree = degree
        self._hash = hash((dec, edges))
        self._text: str | None = None

    @property
    def dim(self) -> int:
        return len(self.dec)

    @property
    def is_unit(self) -> bool:
        return self.degree == 0

    @property
    def letters(self) -> int:
        """Length of the word this tree denotes: root norm plus branch count."""
        return mi_norm(self.dec) + len(self.edges)

    @property
    def text(self) -> str:
        t = self._text
        if t is None:
            t = render_reg_tree(self)
            self._text = t
        return t

    def sort_key(self) -> tuple[int, str]:
        return (self.degree, self.text)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"RegTree({self.text!r})"


_REG_TREES: dict[tuple, RegTree] = {}


def reg_tree(dec: MultiIndex, edges=()) -> RegTree:
    """Intern the tree with the given root decoration and child edges."""
    dec = tuple(int(a) for a in dec)
    edges = tuple((tuple(int(a) for a in e), sub) for e, sub in edges)
    key = (dec, edges)
    got = _REG_TREES.get(key)
    if got is not None:
        return got
    d = len(dec)
    if d < 1:
        raise ValueError("decoration dimension must be at least 1")
    if any(a < 0 for a in dec):
        raise ValueError("negative vertex decoration")
    deg = mi_norm(dec)
    for e, sub in edges:
        if not isinstance(sub, RegTree) or len(e) != d or sub.dim != d:
            raise ValueError("edge decoration or subtree dimension mismatch")
        if any(a < 0 for a in e):
            raise ValueError("negative edge decoration")
        deg += 1 + mi_norm(e) + sub.degree
    t = _REG_TREES.setdefault(key, RegTree(dec, edges, deg))
    return t


def reg_one(d: int) -> RegTree:
    """The empty word: a bare zero-decorated root."""
    return reg_tree(mi_zero(d))


def x_power(m: MultiIndex) -> RegTree:
    """A single vertex decorated by m: the polynomial generator power."""
    return reg_tree(m)


def plant(a: MultiIndex, t: RegTree) -> RegTree:
    """Hang ``t`` under a fresh zero-decorated root via an edge decorated ``a``."""
    return reg_tree(mi_zero(len(a)), ((tuple(a), t),))


def _as_lin(x: LinComb | RegTree) -> LinComb:
    return x if isinstance(x, LinComb) else LinComb.basis(x)


def _check_dim(t1: RegTree, t2: RegTree) -> None:
    if t1.dim != t2.dim:
        raise ValueError(
            f"decoration dimension mismatch: {t1.dim} vs {t2.dim}")


# -- text and JSON ----------------------------------------------------------

def _render_mi(m: MultiIndex) -> str:
    return ",".join(str(a) for a in m)


def render_reg_tree(t: RegTree) -> str:
    """Canonical text: vertices as ``o{m}``, each child followed by ``{a}``."""
    bits = ["[o{", _render_mi(t.dec), "}"]
    for a, sub in t.edges:
        bits.append(render_reg_tree(sub))
        bits.append("{" + _render_mi(a) + "}")
    bits.append("]")
    return "".join(bits)


_INT = re.compile(r"\d+")

# Raw parse nodes: (dec | None, dec_position, [(child_node, ann | None, ann_position)])


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_group(text: str, pos: int) -> tuple[MultiIndex, int]:
    # text[pos] is '{'; accepts an optional 'a=' prefix and optional parens.
    pos = _skip_ws(text, pos + 1)
    if text.startswith("a", pos):
        nxt = _skip_ws(text, pos + 1)
        if nxt < len(text) and text[nxt] == "=":
            pos = _skip_ws(text, nxt + 1)
    paren = pos < len(text) and text[pos] == "("
    if paren:
        pos = _skip_ws(text, pos + 1)
    entries = []
    while True:
        m = _INT.match(text, pos)
        if m is None:
            raise ForestSyntaxError("expected a decoration number", pos)
        entries.append(int(m.group(0)))
        pos = _skip_ws(text, m.end())
        if pos < len(text) and text[pos] == ",":
            pos = _skip_ws(text, pos + 1)
        else:
            break
    if paren:
        if pos >= len(text) or text[pos] != ")":
            raise ForestSyntaxError("expected ')'", pos)
        pos = _skip_ws(text, pos + 1)
    if pos >= len(text) or text[pos] != "}":
        raise ForestSyntaxError("expected '}'", pos)
    return tuple(entries), pos + 1


def _parse_reg(text: str, pos: int):
    if pos >= len(text) or text[pos] != "[":
        raise ForestSyntaxError("expected '['", pos)
    pos = _skip_ws(text, pos + 1)
    if pos < len(text) and text[pos] == "o":
        pos = _skip_ws(text, pos + 1)
    dec, dec_pos = None, pos
    if pos < len(text) and text[pos] == "{":
        dec, pos = _parse_group(text, pos)
        pos = _skip_ws(text, pos)
    kids = []
    while pos < len(text) and text[pos] == "[":
        child, pos = _parse_reg(text, pos)
        pos = _skip_ws(text, pos)
        ann, ann_pos = None, pos
        if pos < len(text) and text[pos] == "{":
            ann, pos = _parse_group(text, pos)
            pos = _skip_ws(text, pos)
        kids.append((child, ann, ann_pos))
    if pos >= len(text) or text[pos] != "]":
        raise ForestSyntaxError("expected ']'", pos)
    return (dec, dec_pos, kids), pos + 1


def _first_width(node) -> int | None:
    dec, _, kids = node
    if dec is not None:
        return len(dec)
    for child, ann, _ in kids:
        if ann is not None:
            return len(ann)
        got = _first_width(child)
        if got is not None:
            return got
    return None


def _build_reg(node, d: int) -> RegTree:
    dec, dec_pos, kids = node
    if dec is None:
        dec = mi_zero(d)
    elif len(dec) != d:
        raise ForestSyntaxError(
            f"decoration has {len(dec)} entries, expected {d}", dec_pos)
    edges = []
    for child, ann, ann_pos in kids:
        if ann is None:
            ann = mi_zero(d)
        elif len(ann) != d:
            raise ForestSyntaxError(
                f"decoration has {len(ann)} entries, expected {d}", ann_pos)
        edges.append((ann, _build_reg(child, d)))
    return reg_tree(dec, edges)


def parse_reg_tree(text: str, d: int | None = None) -> RegTree:
    """Parse decorated bracket text into a tree.

    Vertices read as ``o{m}`` and each child subtree may be followed by an
    edge annotation ``{a}``; an ``a=`` prefix and parentheses around the
    numbers are tolerated, as is omitting the ``o``.  Omitted decorations
    are zero.  The dimension comes from ``d`` or, failing that, from the
    first explicit multi-index.  Raises :class:`ForestSyntaxError` with a
    position on malformed input.
    """
    node, pos = _parse_reg(text, _skip_ws(text, 0))
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ForestSyntaxError("trailing input after tree", pos)
    width = d if d is not None else _first_width(node)
    if width is None:
        raise ForestSyntaxError(
            "cannot infer the decoration dimension; give d or decorate something", 0)
    return _build_reg(node, width)


def reg_tree_to_json(t: RegTree) -> dict:
    return {"n": list(t.dec),
            "e": [{"a": list(a), "t": reg_tree_to_json(sub)} for a, sub in t.edges]}


def reg_tree_from_json(obj: dict) -> RegTree:
    if not isinstance(obj, dict) or "n" not in obj:
        raise ValueError(f"not a decorated tree object: {obj!r}")
    edges = []
    for e in obj.get("e", []):
        if not isinstance(e, dict) or "a" not in e or "t" not in e:
            raise ValueError("each edge needs 'a' and 't' entries")
        edges.append((tuple(int(v) for v in e["a"]), reg_tree_from_json(e["t"])))
    return reg_tree(tuple(int(v) for v in obj["n"]), edges)


# -- vertex surgery ---------------------------------------------------------

def vertex_count(t: RegTree) -> int:
    return 1 + sum(vertex_count(sub) for _, sub in t.edges)


def vertex_decoration(t: RegTree, v: int) -> MultiIndex:
    """Decoration of vertex ``v`` in depth-first preorder (root is 0)."""
    found = _find_vertex(t, v, 0)
    if found is None:
        raise ValueError(f"vertex index {v} out of range")
    return found


def _find_vertex(t: RegTree, target: int, idx: int):
    if idx == target:
        return t.dec
    idx += 1
    for _, sub in t.edges:
        n = vertex_count(sub)
        if target < idx + n:
            return _find_vertex(sub, target, idx)
        idx += n
    return None


def _map_vertex(node: RegTree, target: int, fn, idx: int = 0):
    # fn(dec, edges) -> (dec, edges), applied at the preorder target vertex.
    my = idx
    idx += 1
    kids = []
    for a, sub in node.edges:
        ns, idx = _map_vertex(sub, target, fn, idx)
        kids.append((a, ns))
    dec, eds = node.dec, tuple(kids)
    if my == target:
        dec, eds = fn(dec, eds)
    return reg_tree(dec, eds), idx


def raise_at(t: RegTree, v: int, l: MultiIndex) -> RegTree:
    """Add ``l`` to the decoration of preorder vertex ``v``."""
    l = tuple(int(a) for a in l)
    if len(l) != t.dim:
        raise ValueError("raise amount has the wrong dimension")
    if any(a < 0 for a in l):
        raise ValueError("raise amount must be componentwise nonnegative")
    out, count = _map_vertex(t, v, lambda dec, eds: (mi_add(dec, l), eds))
    if not 0 <= v < count:
        raise ValueError(f"vertex index {v} out of range")
    return out


def _raise_unit(t: RegTree, j: int) -> LinComb:
    e = mi_unit(t.dim, j)
    return LinComb.from_terms(
        (raise_at(t, v, e), 1) for v in range(vertex_count(t)))


def reg_raise(x: LinComb | RegTree, l: MultiIndex) -> LinComb:
    """Raise by ``l``, one unit coordinate at a time over all vertices.

    Each unit step distributes over every vertex, so repeated units pick
    up multinomial multiplicities.
    """
    out = _as_lin(x)
    for j, reps in enumerate(tuple(int(a) for a in l)):
        if reps < 0:
            raise ValueError("raise amount must be componentwise nonnegative")
        for _ in range(reps):
            out = out.map_basis(lambda t: _raise_unit(t, j))
    return out


def lower_root_adjacent(x: LinComb | RegTree, i: MultiIndex) -> LinComb:
    """Subtract the unit ``i`` from one root-adjacent edge decoration per term.

    Terms whose edge decoration would go negative vanish.
    """
    i = tuple(int(a) for a in i)
    if mi_norm(i) != 1 or any(a < 0 for a in i):
        raise ValueError("lowering needs a unit multi-index")
    acc: dict = {}
    for t, c in _as_lin(x).items():
        if len(i) != t.dim:
            raise ValueError("lowering index has the wrong dimension")
        for k, (a, sub) in enumerate(t.edges):
            na = mi_sub(a, i)
            if na is None:
                continue
            eds = t.edges[:k] + ((na, sub),) + t.edges[k + 1:]
            _add_into(acc, reg_tree(t.dec, eds), c)
    return LinComb(acc)


# -- the associative word product -------------------------------------------

_MUL: dict[tuple[RegTree, RegTree], LinComb] = {}


def reg_mul_trees(t1: RegTree, t2: RegTree) -> LinComb:
    got = _MUL.get((t1, t2))
    if got is not None:
        return got
    _check_dim(t1, t2)
    j = next((k for k, a in enumerate(t2.dec) if a), None)
    if j is None:
        out = LinComb.basis(reg_tree(t1.dec, t1.edges + t2.edges))
    else:
        e = mi_unit(t1.dim, j)
        rest = reg_tree(mi_sub(t2.dec, e), t2.edges)
        stepped = (LinComb.basis(reg_tree(mi_add(t1.dec, e), t1.edges))
                   + lower_root_adjacent(t1, e))
        out = stepped.map_basis(lambda s: reg_mul_trees(s, rest))
    _MUL[(t1, t2)] = out
    return out


def reg_assoc_product(x: LinComb | RegTree, y: LinComb | RegTree) -> LinComb:
    """Associative product of normal-form words.

    A zero-rooted right factor merges roots keeping left-right branch
    order; a unit vertex on the right commutes past the left factor's
    planted letters, adding to the root decoration and spawning one
    root-adjacent lowering term.  The empty word is the unit.
    """
    acc: dict = {}
    for t1, c1 in _as_lin(x).items():
        for t2, c2 in _as_lin(y).items():
            for t3, c3 in reg_mul_trees(t1, t2).items():
                _add_into(acc, t3, c1 * c2 * c3)
    return LinComb(acc)


# -- deshuffle of words -----------------------------------------------------

_DESH: dict[RegTree, Tensor] = {}


def reg_deshuffle_tree(t: RegTree) -> Tensor:
    got = _DESH.get(t)
    if got is not None:
        return got
    edges = t.edges
    n = len(edges)
    acc: dict = {}
    for n1, n2 in mi_splits(t.dec):
        w = Fraction(mi_binom(t.dec, n1))
        for r in range(n + 1):
            for pick in combinations(range(n), r):
                picked = set(pick)
                left = reg_tree(n1, tuple(edges[i] for i in pick))
                right = reg_tree(n2, tuple(
                    edges[i] for i in range(n) if i not in picked))
                _add_into(acc, (left, right), w)
    out = Tensor(2, acc)
    _DESH[t] = out
    return out


def reg_deshuffle(x: LinComb | RegTree) -> Tensor:
    """Unshuffle a word: letters are primitive, branch order is kept, and
    repeated unit vertices contribute componentwise binomial weights."""
    acc: dict = {}
    for t, c in _as_lin(x).items():
        for key, c2 in reg_deshuffle_tree(t).items():
            _add_into(acc, key, c * c2)
    return Tensor(2, acc)


def reg_counit(x: LinComb | RegTree) -> Fraction:
    """Coefficient of the empty word."""
    total = Fraction(0)
    for t, c in _as_lin(x).items():
        if t.is_unit:
            total += c
    return total


def _peel(t: RegTree) -> tuple[RegTree, RegTree]:
    # First letter of a nonempty word and the remaining word.
    j = next((k for k, a in enumerate(t.dec) if a), None)
    if j is not None:
        e = mi_unit(t.dim, j)
        return reg_tree(e), reg_tree(mi_sub(t.dec, e), t.edges)
    a, sub = t.edges[0]
    return plant(a, sub), reg_tree(t.dec, t.edges[1:])


# -- deformed grafting ------------------------------------------------------

def _graft_letters(t1: RegTree, t2: RegTree) -> LinComb:
    # Both arguments are single letters; t2 is not the unit.
    if not t2.edges:
        return LinComb.zero()
    b, sigma = t2.edges[0]
    if not t1.edges:
        j = next(k for k, a in enumerate(t1.dec) if a)
        e = mi_unit(t1.dim, j)
        return LinComb.from_terms(
            (plant(b, raise_at(sigma, v, e)), 1)
            for v in range(vertex_count(sigma)))
    a, tau = t1.edges[0]
    acc: dict = {}
    for v in range(vertex_count(sigma)):
        nv = vertex_decoration(sigma, v)
        for l in iproduct(*[range(min(p, q) + 1) for p, q in zip(nv, a)]):
            w = mi_binom(nv, l)
            na = mi_sub(a, l)
            attached, _ = _map_vertex(
                sigma, v,
                lambda dec, eds: (mi_sub(dec, l), ((na, tau),) + eds))
            _add_into(acc, plant(b, attached), Fraction(w))
    return LinComb(acc)


_GRAFT: dict[tuple[RegTree, RegTree], LinComb] = {}


def reg_graft_trees(t1: RegTree, t2: RegTree) -> LinComb:
    got = _GRAFT.get((t1, t2))
    if got is not None:
        return got
    _check_dim(t1, t2)
    if t1.is_unit:
        out = LinComb.basis(t2)
    elif t2.is_unit:
        out = LinComb.zero()
    elif t2.letters >= 2:
        u2, r2 = _peel(t2)
        acc: dict = {}
        for (a1, a2), c in reg_deshuffle_tree(t1).items():
            for f1, c1 in reg_graft_trees(a1, u2).items():
                for f2, c2 in reg_graft_trees(a2, r2).items():
                    for f3, c3 in reg_mul_trees(f1, f2).items():
                        _add_into(acc, f3, c * c1 * c2 * c3)
        out = LinComb(acc)
    elif t1.letters <= 1:
        out = _graft_letters(t1, t2)
    else:
        u, w = _peel(t1)
        inner = reg_graft_trees(w, t2).map_basis(
            lambda f: reg_graft_trees(u, f))
        outer = reg_graft_trees(u, w).map_basis(
            lambda f: reg_graft_trees(f, t2))
        out = inner - outer
    _GRAFT[(t1, t2)] = out
    return out


def reg_graft(x: LinComb | RegTree, y: LinComb | RegTree) -> LinComb:
    """Deformed grafting, extended to whole words on both sides.

    On single letters: a planted tree attaches to every vertex of the
    right operand's content, spreading over the binomially weighted
    decoration transfers; a polynomial generator raises the content
    instead; any letter acting on a polynomial generator gives zero.
    Word arguments reduce by the enveloping recursions, peeling the left
    word letter by letter and splitting the right word through the
    deshuffle of the left.
    """
    acc: dict = {}
    for t1, c1 in _as_lin(x).items():
        for t2, c2 in _as_lin(y).items():
            for t3, c3 in reg_graft_trees(t1, t2).items():
                _add_into(acc, t3, c1 * c2 * c3)
    return LinComb(acc)


def is_v_letter(t: RegTree) -> bool:
    """Generators of the deformed post-Lie algebra: a single planted tree
    (one root edge, zero root decoration) or a unit-decorated vertex."""
    if t.edges:
        return len(t.edges) == 1 and not any(t.dec)
    return mi_norm(t.dec) == 1


def _check_v(x: LinComb, op: str) -> None:
    for t in x.support():
        if not is_v_letter(t):
            raise ValueError(
                f"{op} needs operands in the span of planted trees "
                f"and unit vertices; got {t.text}")


def deformed_graft(x: LinComb | RegTree, y: LinComb | RegTree) -> LinComb:
    """The deformed post-Lie product on generator combinations.

    Same action as :func:`reg_graft` but restricted to the span of planted
    trees and unit vertices, which it preserves.
    """
    lx, ly = _as_lin(x), _as_lin(y)
    _check_v(lx, "deformed_graft")
    _check_v(ly, "deformed_graft")
    return reg_graft(lx, ly)


def bracket0(x: LinComb | RegTree, y: LinComb | RegTree) -> LinComb:
    """Lie bracket on generator combinations.

    Two planted trees bracket to the root-merge commutator; a planted tree
    against a unit vertex lowers a root-adjacent edge; two unit vertices
    commute.  Against the word product this is just the commutator, which
    the nested-bracket identities rely on.
    """
    lx, ly = _as_lin(x), _as_lin(y)
    _check_v(lx, "bracket0")
    _check_v(ly, "bracket0")
    acc: dict = {}
    for t1, c1 in lx.items():
        for t2, c2 in ly.items():
            _check_dim(t1, t2)
            if t1.edges and t2.edges:
                part = reg_mul_trees(t1, t2) - reg_mul_trees(t2, t1)
            elif t1.edges:
                part = lower_root_adjacent(t1, t2.dec)
            elif t2.edges:
                part = -lower_root_adjacent(t2, t1.dec)
            else:
                continue
            for t3, c3 in part.items():
                _add_into(acc, t3, c1 * c2 * c3)
    return LinComb(acc)


# -- the Grossman-Larson style product --------------------------------------

_STAR: dict[tuple[RegTree, RegTree], LinComb] = {}


def reg_gl_trees(a: RegTree, b: RegTree) -> LinComb:
    got = _STAR.get((a, b))
    if got is None:
        acc: dict = {}
        for (a1, a2), c in reg_deshuffle_tree(a).items():
            for f, c2 in reg_graft_trees(a2, b).items():
                for f3, c3 in reg_mul_trees(a1, f).items():
                    _add_into(acc, f3, c * c2 * c3)
        got = LinComb(acc)
        _STAR[(a, b)] = got
    return got


def reg_gl_product(x: LinComb | RegTree, y: LinComb | RegTree) -> LinComb:
    """Product A * B = A_(1) . (A_(2) grafted into B).

    Associative with the empty word as unit.  Not free: polynomial
    generators commute exactly, X^i * X^j = X^{i+j} = X^j * X^i.
    """
    acc: dict = {}
    for t1, c1 in _as_lin(x).items():
        for t2, c2 in _as_lin(y).items():
            for t3, c3 in reg_gl_trees(t1, t2).items():
                _add_into(acc, t3, c1 * c2 * c3)
    return LinComb(acc)


# -- graded enumeration -----------------------------------------------------

_ENUM: dict[tuple[int, int, int | None], tuple[RegTree, ...]] = {}


def enumerate_reg_trees(n: int, d: int,
                        max_norm: int | None = None) -> tuple[RegTree, ...]:
    """All decorated trees of degree ``n`` over dimension ``d``, sorted.

    ``max_norm`` caps each individual decoration norm (None means exact,
    no cap).  Capped enumerations are for keeping sweep inputs small; the
    dual coproduct always enumerates exactly.
    """
    key = (n, d, max_norm)
    got = _ENUM.get(key)
    if got is not None:
        return got
    if n < 0:
        out: tuple[RegTree, ...] = ()
    else:
        acc = []
        for p in range(n + 1):
            if max_norm is not None and p > max_norm:
                break
            for m in multiindices(d, p):
                for eds in _branch_seqs(n - p, d, max_norm):
                    acc.append(reg_tree(m, eds))
        out = tuple(sorted(acc, key=RegTree.sort_key))
    _ENUM[key] = out
    return out


def _branch_seqs(total: int, d: int, max_norm: int | None) -> list[tuple]:
    if total == 0:
        return [()]
    out = []
    for first_deg in range(1, total + 1):
        rests = _branch_seqs(total - first_deg, d, max_norm)
        for b in _branches(first_deg, d, max_norm):
            for r in rests:
                out.append((b,) + r)
    return out


def _branches(deg: int, d: int, max_norm: int | None) -> list[tuple]:
    # One (edge decoration, subtree) pair of degree deg = 1 + |a| + deg(sub).
    out = []
    top = deg - 1 if max_norm is None else min(deg - 1, max_norm)
    for q in range(top + 1):
        for a in multiindices(d, q):
            for sub in enumerate_reg_trees(deg - 1 - q, d, max_norm):
                out.append((a, sub))
    return out


def reg_trees_up_to(n: int, d: int,
                    max_norm: int | None = None) -> Iterator[RegTree]:
    for k in range(n + 1):
        yield from enumerate_reg_trees(k, d, max_norm)


def enumerate_v_letters(n: int, d: int,
                        max_norm: int | None = None) -> tuple[RegTree, ...]:
    """Degree ``n`` generators: unit vertices and planted trees."""
    return tuple(t for t in enumerate_reg_trees(n, d, max_norm)
                 if is_v_letter(t))


# -- dual coproduct ---------------------------------------------------------

_DMKW: dict[RegTree, Tensor] = {}


def deformed_mkw_tree(t: RegTree) -> Tensor:
    got = _DMKW.get(t)
    if got is not None:
        return got
    n, d = t.degree, t.dim
    acc: dict = {}
    for i in range(n + 1):
        right = enumerate_reg_trees(n - i, d)
        for a in enumerate_reg_trees(i, d):
            for b in right:
                c = reg_gl_trees(a, b).coeff(t)
                if c:
                    _add_into(acc, (a, b), c)
    out = Tensor(2, acc)
    _DMKW[t] = out
    return out


def deformed_mkw_coproduct(x: LinComb | RegTree, maxdeg: int) -> Tensor:
    """Transpose of the degree-preserving part of the product.

    The product is filtered, not graded (commuting a unit vertex past a
    planted letter drops two degrees), so only degree-complementary dual
    pairs are summed; on those the duality with the product is exact, and
    the coproduct is coassociative as the dual of the associated graded.
    ``maxdeg`` bounds the enumeration; input above it raises.
    """
    lx = _as_lin(x)
    top = lx.max_degree()
    if top > maxdeg:
        raise ValueError(f"degree overflow: input has degree {top}, cap {maxdeg}")
    acc: dict = {}
    for t, c in lx.items():
        for key, c2 in deformed_mkw_tree(t).items():
            _add_into(acc, key, c * c2)
    return Tensor(2, acc)


# -- isomorphism between the two products -----------------------------------

_PHI: dict[RegTree, LinComb] = {}
_PSI: dict[RegTree, LinComb] = {}


def _phi_tree(t: RegTree) -> LinComb:
    got = _PHI.get(t)
    if got is not None:
        return got
    if t.letters <= 1:
        out = LinComb.basis(t)
    else:
        # t = b * w - (b grafted into w), with b the first letter, so the
        # image is b . phi(w) - phi(b grafted into w).
        b, w = _peel(t)
        out = (_phi_tree(w).map_basis(lambda s: reg_mul_trees(b, s))
               - reg_graft_trees(b, w).map_basis(_phi_tree))
    _PHI[t] = out
    return out


def _psi_tree(t: RegTree) -> LinComb:
    got = _PSI.get(t)
    if got is not None:
        return got
    if t.letters <= 1:
        out = LinComb.basis(t)
    else:
        b, w = _peel(t)
        out = _psi_tree(w).map_basis(lambda s: reg_gl_trees(b, s))
    _PSI[t] = out
    return out


def phi_reg(x: LinComb | RegTree, maxdeg: int) -> LinComb:
    """Isomorphism from the deformed product onto the word product.

    The identity on single letters, computed by peeling the leading
    letter b of each word, which lowers the letter count at every step:
    phi(b * w) = b . phi(w) along those decompositions.  A coalgebra
    morphism for the deshuffle coproduct and bijective per graded piece.
    Not multiplicative on arbitrary pairs; the GL product envelops a
    different bracket on letters than the word product, so no
    identity-on-letters map can be (see X * I_0(.) vs I_0(.) * X).
    ``maxdeg`` guards the input degree.
    """
    lx = _as_lin(x)
    top = lx.max_degree()
    if top > maxdeg:
        raise ValueError(f"degree overflow: input has degree {top}, cap {maxdeg}")
    return lx.map_basis(_phi_tree)


def phi_reg_inverse(x: LinComb | RegTree, maxdeg: int) -> LinComb:
    """Inverse isomorphism: rebuilds each word as a left-nested * product."""
    lx = _as_lin(x)
    top = lx.max_degree()
    if top > maxdeg:
        raise ValueError(f"degree overflow: input has degree {top}, cap {maxdeg}")
    return lx.map_basis(_psi_tree)


def phi_reg_matrix(n: int, d: int):
    """Degree ``n`` basis and the matrix of the isomorphism's graded part.

    Entry [i][j] is the coefficient of basis[i] in the image of basis[j];
    lower-degree components are dropped.  The matrix is unitriangular in
    the letter-count order, hence invertible.
    """
    basis = enumerate_reg_trees(n, d)
    images = [_phi_tree(b) for b in basis]
    rows = [[img.coeff(a) for img in images] for a in basis]
    return basis, rows

"""Text and JSON forms for linear combinations and tensors.

Rendering is canonical: terms are sorted in compare-order (degree, then
text), coefficients are exact rationals, and the empty word prints as 1.
The parser accepts sums with rational coefficients, juxtaposed bracket
groups as words, ``sh`` for the shuffle product, and ``(x)`` separating
tensor legs, so coproduct displays round-trip through text.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable

from .forest import (ForestSyntaxError, OrderedForest, forest_from_json,
                     forest_to_json, parse_forest)
from .lincomb import LinComb, Tensor, shuffle, tensor_of
from .regstruct import RegTree, parse_reg_tree, reg_tree_from_json, reg_tree_to_json

__all__ = [
    "render_lincomb", "render_tensor", "parse_lincomb", "parse_tensor",
    "parse_reg_lincomb", "lincomb_to_json", "lincomb_from_json",
    "reg_lincomb_to_json", "reg_lincomb_from_json", "tensor_to_json",
    "tensor_from_json",
]


# -- rendering ---------------------------------------------------------------

def _coeff_text(c: Fraction) -> str:
    return str(c)


def _term_text(mag: Fraction, body: str) -> str:
    return body if mag == 1 else f"{_coeff_text(mag)}*{body}"


def render_lincomb(x: LinComb) -> str:
    """Canonical text of a linear combination, terms in compare-order."""
    if x.is_zero:
        return "0"
    items = sorted(x.items(), key=lambda kv: kv[0].sort_key())
    parts: list[str] = []
    for key, c in items:
        body = _term_text(abs(c), key.text)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def render_tensor(t: Tensor) -> str:
    """Canonical text of a tensor, legs separated by (x)."""
    if t.is_zero:
        return "0"
    items = sorted(t.items(), key=lambda kv: tuple(k.sort_key() for k in kv[0]))
    parts: list[str] = []
    for key, c in items:
        body = _term_text(abs(c), " (x) ".join(k.text for k in key))
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


# -- parsing -----------------------------------------------------------------

_NUMBER = re.compile(r"\d+(?:/\d+)?")


class _Lexer:
    """Splits an expression into operators, rationals and word tokens.

    A word token is a maximal run of balanced bracket groups, so the
    whole forest [a[b]][c] comes out as one token and any decoration
    syntax inside the brackets is passed through untouched.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._scan()
        self.index = 0

    def _scan(self) -> None:
        text, n = self.text, len(self.text)
        i = 0
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if text.startswith("(x)", i):
                self.tokens.append(("otimes", "(x)", i))
                i += 3
                continue
            if text.startswith("sh", i) and (i + 2 == n or not text[i + 2].isalnum()):
                self.tokens.append(("sh", "sh", i))
                i += 2
                continue
            if ch in "+-*()":
                kind = {"+": "plus", "-": "minus", "*": "times",
                        "(": "lparen", ")": "rparen"}[ch]
                self.tokens.append((kind, ch, i))
                i += 1
                continue
            if ch == "[":
                start = i
                depth = 0
                while i < n:
                    if text[i] == "[":
                        depth += 1
                    elif text[i] == "]":
                        depth -= 1
                        if depth < 0:
                            raise ForestSyntaxError("unbalanced ]", i)
                        if depth == 0:
                            j = i + 1
                            while j < n and text[j].isspace():
                                j += 1
                            if j < n and text[j] == "[":
                                i = j
                                continue
                            i += 1
                            break
                    i += 1
                else:
                    raise ForestSyntaxError("unbalanced [", start)
                self.tokens.append(("word", text[start:i], start))
                continue
            m = _NUMBER.match(text, i)
            if m:
                self.tokens.append(("number", m.group(0), i))
                i = m.end()
                continue
            raise ForestSyntaxError(f"unexpected character {ch!r}", i)

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ForestSyntaxError("unexpected end of expression", len(self.text))
        self.index += 1
        return tok


class _Parser:
    """Sum / tensor-term / shuffle-term / factor grammar over word atoms."""

    def __init__(self, lexer: _Lexer, atom: Callable[[str, int], LinComb],
                 shuffle_fn: Callable[[LinComb, LinComb], LinComb] | None,
                 unit: LinComb):
        self.lex = lexer
        self.atom = atom
        self.shuffle_fn = shuffle_fn
        self.unit = unit

    def parse(self) -> Tensor:
        out = self.sum()
        tok = self.lex.peek()
        if tok is not None:
            raise ForestSyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return out

    def sum(self) -> Tensor:
        negate = False
        tok = self.lex.peek()
        if tok is not None and tok[0] == "minus":
            self.lex.next()
            negate = True
        acc = self.tensor_term()
        if negate:
            acc = -acc
        while True:
            tok = self.lex.peek()
            if tok is None or tok[0] not in ("plus", "minus"):
                return acc
            self.lex.next()
            nxt = self.tensor_term()
            if nxt.arity != acc.arity:
                raise ForestSyntaxError("mixed tensor arity in sum", tok[2])
            acc = acc - nxt if tok[0] == "minus" else acc + nxt

    def tensor_term(self) -> Tensor:
        legs = [self.shuffle_term()]
        while True:
            tok = self.lex.peek()
            if tok is None or tok[0] != "otimes":
                break
            self.lex.next()
            legs.append(self.shuffle_term())
        return tensor_of(*legs)

    def shuffle_term(self) -> LinComb:
        acc = self.factor()
        while True:
            tok = self.lex.peek()
            if tok is None or tok[0] != "sh":
                return acc
            if self.shuffle_fn is None:
                raise ForestSyntaxError("shuffle is not defined here", tok[2])
            self.lex.next()
            acc = self.shuffle_fn(acc, self.factor())

    def factor(self) -> LinComb:
        tok = self.lex.peek()
        if tok is None:
            raise ForestSyntaxError("expected a term", len(self.lex.text))
        if tok[0] == "number":
            self.lex.next()
            coeff = Fraction(tok[1])
            nxt = self.lex.peek()
            if nxt is not None and nxt[0] == "times":
                self.lex.next()
                return self.factor().scale(coeff)
            return self.unit.scale(coeff)
        return self.atomic()

    def atomic(self) -> LinComb:
        tok = self.lex.next()
        if tok[0] == "word":
            return self.atom(tok[1], tok[2])
        if tok[0] == "lparen":
            inner = self.sum()
            close = self.lex.next()
            if close[0] != "rparen":
                raise ForestSyntaxError("expected )", close[2])
            if inner.arity != 1:
                raise ForestSyntaxError("tensor inside parentheses", tok[2])
            return LinComb({key[0]: c for key, c in inner.items()})
        raise ForestSyntaxError(f"unexpected token {tok[1]!r}", tok[2])


def _forest_atom(alphabet) -> Callable[[str, int], LinComb]:
    def atom(text: str, pos: int) -> LinComb:
        try:
            return LinComb.basis(parse_forest(text, alphabet))
        except ForestSyntaxError as err:
            raise ForestSyntaxError(err.message, pos + err.position) from None
    return atom


def _parse(text: str, atom, shuffle_fn, unit) -> Tensor:
    return _Parser(_Lexer(text), atom, shuffle_fn, unit).parse()


def parse_lincomb(text: str, alphabet=None) -> LinComb:
    """Parse a sum of forest words with rational coefficients."""
    out = _parse(text, _forest_atom(alphabet), shuffle,
                 LinComb.basis(parse_forest("1")))
    if out.arity != 1:
        raise ForestSyntaxError("expected a plain sum, found tensor legs", 0)
    return LinComb({key[0]: c for key, c in out.items()})


def parse_tensor(text: str, alphabet=None) -> Tensor:
    """Parse a sum of (x)-separated tensor terms over forest words."""
    return _parse(text, _forest_atom(alphabet), shuffle,
                  LinComb.basis(parse_forest("1")))


def parse_reg_lincomb(text: str, d: int | None = None) -> LinComb:
    """Parse a sum of decorated words; dimension inferred when not given."""
    dim = [d]

    def atom(tok: str, pos: int) -> LinComb:
        try:
            t = parse_reg_tree(tok, dim[0])
        except ForestSyntaxError as err:
            raise ForestSyntaxError(err.message, pos + err.position) from None
        dim[0] = t.dim
        return LinComb.basis(t)

    unit_text = "[o{" + ",".join("0" for _ in range(d or 1)) + "}]"
    out = _parse(text, atom, None, LinComb.basis(parse_reg_tree(unit_text)))
    if out.arity != 1:
        raise ForestSyntaxError("expected a plain sum, found tensor legs", 0)
    return LinComb({key[0]: c for key, c in out.items()})


# -- JSON --------------------------------------------------------------------

def lincomb_to_json(x: LinComb) -> dict:
    items = sorted(x.items(), key=lambda kv: kv[0].sort_key())
    return {"terms": [{"coeff": str(c), "forest": forest_to_json(f)}
                      for f, c in items]}


def lincomb_from_json(obj: dict) -> LinComb:
    return LinComb.from_terms(
        (forest_from_json(t["forest"]), Fraction(t["coeff"]))
        for t in obj["terms"])


def reg_lincomb_to_json(x: LinComb) -> dict:
    items = sorted(x.items(), key=lambda kv: kv[0].sort_key())
    return {"terms": [{"coeff": str(c), "tree": reg_tree_to_json(t)}
                      for t, c in items]}


def reg_lincomb_from_json(obj: dict) -> LinComb:
    return LinComb.from_terms(
        (reg_tree_from_json(t["tree"]), Fraction(t["coeff"]))
        for t in obj["terms"])


def _leg_json(key) -> object:
    if isinstance(key, OrderedForest):
        return forest_to_json(key)
    if isinstance(key, RegTree):
        return reg_tree_to_json(key)
    raise TypeError(f"no JSON form for {type(key).__name__}")


def tensor_to_json(t: Tensor) -> dict:
    items = sorted(t.items(), key=lambda kv: tuple(k.sort_key() for k in kv[0]))
    return {"terms": [{"coeff": str(c), "legs": [_leg_json(k) for k in key]}
                      for key, c in items]}


def tensor_from_json(obj: dict, reg: bool = False) -> Tensor:
    load = reg_tree_from_json if reg else forest_from_json
    terms = [(tuple(load(leg) for leg in t["legs"]), Fraction(t["coeff"]))
             for t in obj["terms"]]
    arity = len(terms[0][0]) if terms else 2
    return Tensor.from_terms(arity, terms)

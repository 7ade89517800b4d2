"""Formulas of the propositional language: atoms, negation and disjunction.

Concrete syntax (tightest binding first)::

    ~ / !      negation
    &          conjunction      (left-assoc, sugar)
    |          disjunction      (left-assoc)
    ->         implication      (right-assoc, sugar)
    <->        biconditional    (left-assoc, sugar)

Sugar never survives parsing; the resulting tree only contains
:class:`Atom`, :class:`Not` and :class:`Or`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from di9.errors import FormulaSyntaxError

ATOM_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not ATOM_NAME.fullmatch(self.name):
            raise ValueError(f"invalid atom name: {self.name!r}")


@dataclass(frozen=True)
class Not:
    operand: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


Formula = Union[Atom, Not, Or]


def conj(a: Formula, b: Formula) -> Formula:
    return Not(Or(Not(a), Not(b)))


def implies(a: Formula, b: Formula) -> Formula:
    return Or(Not(a), b)


def iff(a: Formula, b: Formula) -> Formula:
    return conj(implies(a, b), implies(b, a))


# ---------------------------------------------------------------------------
# tokenizer

_TOKEN = re.compile(r"\s*(?:(<->)|(->)|([~!&|()])|([A-Za-z_][A-Za-z0-9_]*))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            # skip leading whitespace so the reported column points at the culprit
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise FormulaSyntaxError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        tok = m.group(m.lastindex)
        if tok == "!":
            tok = "~"
        if m.lastindex == 4:
            tokens.append(("ATOM:" + tok, start))
        else:
            tokens.append((tok, start))
        pos = m.end()
    tokens.append(("EOF", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def advance(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            raise FormulaSyntaxError(f"expected {tok!r}, found {self._describe()}", self.pos())
        self.advance()

    def _describe(self) -> str:
        tok = self.peek()
        if tok == "EOF":
            return "end of input"
        if tok.startswith("ATOM:"):
            return f"atom {tok[5:]!r}"
        return repr(tok)

    def parse(self) -> Formula:
        if self.peek() == "EOF":
            raise FormulaSyntaxError("empty formula", 0)
        f = self.biconditional()
        if self.peek() != "EOF":
            raise FormulaSyntaxError(f"unexpected {self._describe()}", self.pos())
        return f

    def biconditional(self) -> Formula:
        f = self.implication()
        while self.peek() == "<->":
            self.advance()
            f = iff(f, self.implication())
        return f

    def implication(self) -> Formula:
        f = self.disjunction()
        if self.peek() == "->":
            self.advance()
            return implies(f, self.implication())
        return f

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "|":
            self.advance()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.advance()
            f = conj(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "~":
            self.advance()
            return Not(self.unary())
        if tok == "(":
            self.advance()
            f = self.biconditional()
            self.expect(")")
            return f
        if tok.startswith("ATOM:"):
            self.advance()
            return Atom(tok[5:])
        raise FormulaSyntaxError(f"expected a formula, found {self._describe()}", self.pos())


def parse(text: str) -> Formula:
    """Parse formula text into a core tree, desugaring ``&``, ``->`` and ``<->``."""
    return _Parser(text).parse()


def render(f: Formula) -> str:
    """Render with the fewest parentheses that still reparse to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        inner = render(f.operand)
        if isinstance(f.operand, Or):
            inner = f"({inner})"
        return "~" + inner
    left = render(f.left)
    right = render(f.right)
    # disjunction is left-associative, so only a right-nested Or needs brackets
    if isinstance(f.right, Or):
        right = f"({right})"
    return f"{left} | {right}"


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.operand)
    elif isinstance(f, Or):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def atoms(f: Formula) -> tuple[str, ...]:
    """Atom names occurring in ``f``, sorted and without duplicates."""
    return tuple(sorted({g.name for g in subformulas(f) if isinstance(g, Atom)}))


def depth(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Not):
        return 1 + depth(f.operand)
    return 1 + max(depth(f.left), depth(f.right))


def size(f: Formula) -> int:
    return sum(1 for _ in subformulas(f))

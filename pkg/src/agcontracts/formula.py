"""Propositional formulas: parsing, evaluation to truth tables, DNF printing.

Grammar, loosest first::

    impl := disj ( '->' impl )?          right associative
    disj := conj ( '|' conj )*
    conj := neg ( '&' neg )*
    neg  := '!' neg | atom
    atom := 'true' | 'false' | IDENT | '(' impl ')'

Word forms ``not``, ``and``, ``or``, ``implies`` and ``~`` for negation are
accepted too; those words are reserved and cannot be variable names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .boolalg import AlgebraError, BoolAlgebra, Element


class FormulaError(ValueError):
    pass


class FormulaSyntaxError(FormulaError):
    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


class UnknownVariable(FormulaError):
    def __init__(self, name: str):
        super().__init__(f"unknown variable {name!r}")
        self.name = name


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    value: bool

    def __str__(self):
        return "true" if self.value else "false"


@dataclass(frozen=True)
class Not:
    arg: Formula

    def __str__(self):
        return f"!{_wrap(self.arg, 4)}"


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula

    def __str__(self):
        return f"{_wrap(self.left, 3)} & {_wrap(self.right, 3.5)}"


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula

    def __str__(self):
        return f"{_wrap(self.left, 2)} | {_wrap(self.right, 2.5)}"


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula

    def __str__(self):
        return f"{_wrap(self.left, 1.5)} -> {_wrap(self.right, 1)}"


Formula = Union[Var, Const, Not, And, Or, Implies]

_PREC = {Implies: 1, Or: 2, And: 3, Not: 4, Var: 5, Const: 5}


def _wrap(f: Formula, min_prec: float) -> str:
    s = str(f)
    return s if _PREC[type(f)] >= min_prec else f"({s})"


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<arrow>->)
  | (?P<sym>[!~&|()])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
""", re.VERBOSE)

_WORDS = {"not": "!", "and": "&", "or": "|", "implies": "->",
          "true": "true", "false": "false"}


@dataclass(frozen=True)
class _Token:
    kind: str       # '!', '&', '|', '->', '(', ')', 'true', 'false', 'ident', 'eof'
    text: str
    pos: int        # 1-based


def tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[i]!r}", i + 1)
        kind = m.lastgroup
        word = m.group()
        if kind == "arrow":
            tokens.append(_Token("->", word, i + 1))
        elif kind == "sym":
            tokens.append(_Token("!" if word == "~" else word, word, i + 1))
        elif kind == "ident":
            tokens.append(_Token(_WORDS.get(word, "ident"), word, i + 1))
        i = m.end()
    tokens.append(_Token("eof", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, tok: _Token):
        what = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise FormulaSyntaxError(f"unexpected {what}", tok.pos)

    def impl(self) -> Formula:
        left = self.disj()
        if self.peek().kind == "->":
            self.take()
            return Implies(left, self.impl())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek().kind == "|":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.neg()
        while self.peek().kind == "&":
            self.take()
            f = And(f, self.neg())
        return f

    def neg(self) -> Formula:
        if self.peek().kind == "!":
            self.take()
            return Not(self.neg())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.take()
        if tok.kind == "ident":
            return Var(tok.text)
        if tok.kind in ("true", "false"):
            return Const(tok.kind == "true")
        if tok.kind == "(":
            f = self.impl()
            close = self.take()
            if close.kind != ")":
                self.fail(close)
            return f
        self.fail(tok)


def parse(text: str) -> Formula:
    """Parse ``text``; raises FormulaSyntaxError carrying a 1-based position."""
    p = _Parser(text)
    f = p.impl()
    if p.peek().kind != "eof":
        p.fail(p.peek())
    return f


def variables(f: Formula) -> set[str]:
    return {node.name for node in _walk(f) if isinstance(node, Var)}


def _walk(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Not):
            stack.append(node.arg)
        elif isinstance(node, (And, Or, Implies)):
            stack.extend((node.left, node.right))


def eval_to_element(f: Formula | str, algebra: BoolAlgebra) -> Element:
    """Truth table of ``f`` over ``algebra``.

    Every variable of ``f`` must be a generator; there is no implicit extension.
    """
    if isinstance(f, str):
        f = parse(f)
    unknown = sorted(variables(f) - set(algebra.generators))
    if unknown:
        raise UnknownVariable(unknown[0])
    return algebra.element(_eval_bits(f, algebra))


def _eval_bits(f: Formula, algebra: BoolAlgebra) -> int:
    mask = algebra.mask
    if isinstance(f, Var):
        try:
            return algebra.var(f.name).bits
        except AlgebraError:
            raise UnknownVariable(f.name) from None
    if isinstance(f, Const):
        return mask if f.value else 0
    if isinstance(f, Not):
        return _eval_bits(f.arg, algebra) ^ mask
    left = _eval_bits(f.left, algebra)
    right = _eval_bits(f.right, algebra)
    if isinstance(f, And):
        return left & right
    if isinstance(f, Or):
        return left | right
    return (left ^ mask) | right


def to_dnf(x: Element) -> str:
    """Canonical disjunction of minterms, one per set bit, in valuation order."""
    if x.is_bottom():
        return "false"
    if x.is_top():
        return "true"
    algebra = x.algebra
    terms = []
    for i in range(algebra.width):
        if x.bit(i):
            val = algebra.valuation(i)
            lits = [name if val[name] else f"!{name}" for name in algebra.generators]
            terms.append("(" + " & ".join(lits) + ")")
    return " | ".join(terms)

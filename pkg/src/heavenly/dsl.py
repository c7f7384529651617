"""Recursive-descent parser for the expression DSL.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' ['-'] int)?
    atom   := int | name | name '[' int (',' int)* ']' | '(' expr ')' | '-' factor

A bare dependent or function name is its 0-jet.  Division is only allowed by a
single-term divisor; ``to_text`` prints in the same grammar so ``parse`` inverts it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .diffpoly import DiffPoly, to_text
from .errors import DeclarationError, ParseError
from .jetspace import Chart

__all__ = ["parse", "parse_ast", "evaluate_ast", "to_text", "Num", "Name", "Neg", "BinOp", "Pow"]

_TOKEN = re.compile(r"\s*(?:([0-9]+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str
    index: tuple | None
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


Node = Union[Num, Name, Neg, BinOp, Pow]


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or not m.group(0).strip():
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append((ch, ch, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def take(self, kind: str):
        tok = self.tok
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Node:
        node = self.term()
        while self.tok[0] in ("+", "-"):
            op, _, pos = self.tok
            self.i += 1
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.tok[0] in ("*", "/"):
            op, _, pos = self.tok
            self.i += 1
            node = BinOp(op, node, self.factor(), pos)
        return node

    def factor(self) -> Node:
        if self.tok[0] == "-":
            self.i += 1
            return Neg(self.factor())
        node = self.atom()
        if self.tok[0] == "^":
            self.i += 1
            sign = 1
            if self.tok[0] == "-":
                sign = -1
                self.i += 1
            node = Pow(node, sign * int(self.take("int")[1]))
        return node

    def atom(self) -> Node:
        kind, val, pos = self.tok
        if kind == "int":
            self.i += 1
            return Num(int(val))
        if kind == "name":
            self.i += 1
            index = None
            if self.tok[0] == "[":
                self.i += 1
                idx = [int(self.take("int")[1])]
                while self.tok[0] == ",":
                    self.i += 1
                    idx.append(int(self.take("int")[1]))
                self.take("]")
                index = tuple(idx)
            return Name(val, index, pos)
        if kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos)


def parse_ast(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    if p.tok[0] != "end":
        raise ParseError(f"unexpected {p.tok[1]!r}", p.tok[2])
    return node


def _symbol(node: Name, chart: Chart) -> DiffPoly:
    name = node.name
    try:
        if name in chart.dependents or name in chart.functions:
            if node.index is None:
                deps = chart.coords if name in chart.dependents else chart.functions[name]
                return DiffPoly.from_sym(chart.jet_sym(name, (0,) * len(deps)))
            return DiffPoly.from_sym(chart.jet_sym(name, node.index))
    except DeclarationError as exc:
        raise ParseError(f"arity error: {exc}", node.pos) from None
    if node.index is not None:
        raise ParseError(f"{name!r} takes no index", node.pos)
    if name in chart.coords:
        return DiffPoly.coord(name)
    if name in chart.params:
        return DiffPoly.param(name)
    raise ParseError(f"unknown symbol {name!r} on chart {chart.name}", node.pos)


def evaluate_ast(node: Node, chart: Chart) -> DiffPoly:
    if isinstance(node, Num):
        return DiffPoly.const(node.value)
    if isinstance(node, Name):
        return _symbol(node, chart)
    if isinstance(node, Neg):
        return -evaluate_ast(node.arg, chart)
    if isinstance(node, Pow):
        base = evaluate_ast(node.base, chart)
        if node.exp < 0 and not base.is_monomial():
            raise ParseError("negative power of a non-monomial")
        try:
            return base ** node.exp
        except (ArithmeticError, ValueError) as exc:
            raise ParseError(str(exc)) from None
    left, right = evaluate_ast(node.left, chart), evaluate_ast(node.right, chart)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if not right.is_monomial():
        raise ParseError("divisor must be a single-term monomial", node.pos)
    try:
        return left / right
    except (ArithmeticError, ValueError) as exc:
        raise ParseError(f"bad divisor: {exc}", node.pos) from None


def parse(text: str, chart: Chart) -> DiffPoly:
    """Parse ``text`` into a DiffPoly on ``chart``."""
    return evaluate_ast(parse_ast(text), chart)

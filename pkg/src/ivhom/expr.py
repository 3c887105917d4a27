"""A tiny expression DSL for user-defined IV-functions and scalings.

Grammar:
    expr  := call | var | const
    call  := ident "(" expr { "," expr } ")"
    var   := "L" | "X" digits
    const := "[" number "," number "]"
    ident := "min" | "max" | "mul" | "psum" | "neg" | "mean" | "pow" | "proj"

pow takes (expr, positive-integer-literal); proj takes an integer-literal
argument index. Numbers are decimals or rationals like 1/3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Union

from .interval import Interval, complement, join, meet, prob_sum, product
from .functions import IVFunction, ScalingFunction, _mean, _pow


class ExprError(ValueError):
    """Syntax or arity error in a DSL expression, with 1-based position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class LVar:
    pass


@dataclass(frozen=True)
class Const:
    lo: Fraction
    hi: Fraction


@dataclass(frozen=True)
class Pow:
    arg: "Node"
    exponent: int


@dataclass(frozen=True)
class Proj:
    index: int


@dataclass(frozen=True)
class Call:
    ident: str
    args: tuple["Node", ...]


Node = Union[Var, LVar, Const, Pow, Proj, Call]

_IDENTS = {"min", "max", "mul", "psum", "neg", "mean", "pow", "proj"}
# minimum argument counts; None marks special-cased forms (pow, proj)
_MIN_ARGS = {"min": 2, "max": 2, "mul": 2, "psum": 2, "neg": 1, "mean": 1}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:\.\d+)?(?:/\d+)?)
  | (?P<ident>[A-Za-z_]\w*)
  | (?P<punct>[()\[\],])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # number | ident | punct | end
    text: str
    line: int
    column: int


def _show(tok: _Token) -> str:
    return "end of input" if tok.kind == "end" else repr(tok.text)


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    line, col, pos = 1, 1, 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ExprError(f"unexpected character {src[pos]!r}", line, col)
        text = m.group(0)
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, text, line, col))
        for ch in text:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        pos = m.end()
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise ExprError(message, tok.line, tok.column)

    def expect(self, text: str) -> _Token:
        tok = self.next()
        if tok.kind == "end" or tok.text != text:
            self.fail(f"expected {text!r}, found {_show(tok)}", tok)
        return tok

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            self.fail(f"unexpected trailing input {tok.text!r}", tok)
        return node

    def expr(self) -> Node:
        tok = self.peek()
        if tok.kind == "punct" and tok.text == "[":
            return self.const()
        if tok.kind == "ident":
            if tok.text == "L":
                self.next()
                return LVar()
            m = re.fullmatch(r"X(\d+)", tok.text)
            if m:
                self.next()
                idx = int(m.group(1))
                if idx < 1:
                    self.fail("variable index must be >= 1", tok)
                return Var(idx)
            if tok.text in _IDENTS:
                return self.call()
            self.fail(f"unknown identifier {tok.text!r}", tok)
        self.fail(f"expected expression, found {_show(tok)}", tok)

    def const(self) -> Node:
        self.expect("[")
        lo = self.number()
        self.expect(",")
        hi = self.number()
        self.expect("]")
        return Const(lo, hi)

    def number(self) -> Fraction:
        tok = self.next()
        if tok.kind != "number":
            self.fail(f"expected number, found {_show(tok)}", tok)
        return Fraction(tok.text)

    def integer(self) -> int:
        tok = self.next()
        if tok.kind != "number" or not tok.text.isdigit():
            self.fail("expected integer literal", tok)
        return int(tok.text)

    def call(self) -> Node:
        ident = self.next()
        self.expect("(")
        if ident.text == "proj":
            idx = self.integer()
            self.expect(")")
            if idx < 1:
                self.fail("proj index must be >= 1", ident)
            return Proj(idx)
        if ident.text == "pow":
            base = self.expr()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            if k < 1:
                self.fail("pow exponent must be a positive integer", ident)
            return Pow(base, k)
        args = [self.expr()]
        while self.peek().text == ",":
            self.next()
            args.append(self.expr())
        self.expect(")")
        if len(args) < _MIN_ARGS[ident.text]:
            self.fail(
                f"{ident.text} needs at least {_MIN_ARGS[ident.text]} argument(s)",
                ident,
            )
        if ident.text == "neg" and len(args) != 1:
            self.fail("neg takes exactly one argument", ident)
        return Call(ident.text, tuple(args))


def depth(node: Node) -> int:
    if isinstance(node, Call):
        return 1 + max(depth(a) for a in node.args)
    if isinstance(node, Pow):
        return 1 + depth(node.arg)
    return 1


def uses_l(node: Node) -> bool:
    if isinstance(node, LVar):
        return True
    if isinstance(node, Call):
        return any(uses_l(a) for a in node.args)
    if isinstance(node, Pow):
        return uses_l(node.arg)
    return False


def max_var_index(node: Node) -> int:
    if isinstance(node, (Var, Proj)):
        return node.index
    if isinstance(node, Call):
        return max((max_var_index(a) for a in node.args), default=0)
    if isinstance(node, Pow):
        return max_var_index(node.arg)
    return 0


def parse_expr(src: str, arity: int) -> Node:
    """Parse and check variable indices against the declared arity."""
    if arity < 1:
        raise ValueError("arity must be a positive integer")
    node = _Parser(src).parse()
    hi = max_var_index(node)
    if hi > arity:
        raise ExprError(f"variable X{hi} exceeds declared arity {arity}", 1, 1)
    return node


def _eval(node: Node, args: tuple[Interval, ...], lam: Interval | None) -> Interval:
    if isinstance(node, Var):
        return args[node.index - 1]
    if isinstance(node, Proj):
        return args[node.index - 1]
    if isinstance(node, LVar):
        if lam is None:
            raise ExprError("L is only allowed in scaling expressions", 1, 1)
        return lam
    if isinstance(node, Const):
        return Interval(node.lo, node.hi)
    if isinstance(node, Pow):
        return _pow(_eval(node.arg, args, lam), node.exponent)
    vals = [_eval(a, args, lam) for a in node.args]
    if node.ident == "min":
        return reduce(meet, vals)
    if node.ident == "max":
        return reduce(join, vals)
    if node.ident == "mul":
        return reduce(product, vals)
    if node.ident == "psum":
        return reduce(prob_sum, vals)
    if node.ident == "neg":
        return complement(vals[0])
    if node.ident == "mean":
        return _mean(*vals)
    raise AssertionError(f"unhandled call {node.ident!r}")


def evaluate(
    node: Node, args: tuple[Interval, ...], lam: Interval | None = None
) -> Interval:
    """Evaluate an AST at the given arguments (and L binding, if any)."""
    return _eval(node, args, lam)


def compile_ivfunction(node: Node, arity: int, name: str = "expr") -> IVFunction:
    if uses_l(node):
        raise ExprError("IV-function expressions may not use L", 1, 1)
    return IVFunction(name, arity, lambda *xs: _eval(node, xs, None))


def compile_scaling(node: Node, name: str = "expr") -> ScalingFunction:
    """Compile an expression over {L, X1} into a scaling function G(L, X1)."""
    hi = max_var_index(node)
    if hi > 1:
        raise ExprError("scaling expressions may only use L and X1", 1, 1)
    return ScalingFunction(name, lambda a, b: _eval(node, (b,), a))


def compile_expr(node: Node, arity: int, name: str = "expr"):
    """Compile to a ScalingFunction when L occurs, else an IVFunction."""
    if uses_l(node):
        return compile_scaling(node, name)
    return compile_ivfunction(node, arity, name)

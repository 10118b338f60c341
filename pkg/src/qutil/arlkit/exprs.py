"""Tiny symbolic grammar for asymptotic scaling expressions.

Grammar (ASCII rendering of the survey-table notation):

    scaling  := "O(" expr ")"
    expr     := product ("+" product)*
    product  := power (("*" | "/") power)*
    power    := atom ("^" atom)?
    atom     := NUMBER | VARIABLE | FUNC "(" expr ("," expr)* ")" | "(" expr ")"
    FUNC     := "binom" | "ceil" | "log"

`log(x, b)` is the base-b logarithm; `binom(n, k)` the binomial coefficient.
Adjacent variables must be joined with explicit "*". Variables are the
survey-table legend symbols; `|T|` is a single token.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

VARIABLE_LEGEND = {
    "N": "number of qubits",
    "eps": "precision",
    "n": "number of visible layers",
    "m": "number of hidden layers",
    "n_p": "number of particles",
    "t": "number of Trotter time steps",
    "p": "number of terms in Hamiltonian",
    "q": "number of ansatz parameters",
    "|T|": "cardinality of training set",
    "L": "number of re-uploading layers",
    "E": "number of graph edges",
    "n_out": "number of output layer nodes",
    "r": "reduction rate of pooling layers",
    "V": "number of graph vertices",
    "n_v": "number of sampling vectors",
}

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)"
    r"|(?P<var>\|T\||n_p|n_out|n_v|eps|[A-Za-z]+)"
    r"|(?P<op>[+*/^(),]))"
)

_FUNCS = {"binom", "ceil", "log"}


class ExprParseError(ValueError):
    pass


@dataclass(frozen=True)
class _Node:
    kind: str  # num | var | call | binop
    value: object = None
    children: tuple = ()

    def evaluate(self, bindings: dict) -> float:
        if self.kind == "num":
            return float(self.value)
        if self.kind == "var":
            if self.value not in bindings:
                raise KeyError(f"unbound variable {self.value!r}")
            return float(bindings[self.value])
        args = [c.evaluate(bindings) for c in self.children]
        if self.kind == "call":
            if self.value == "binom":
                return float(math.comb(round(args[0]), round(args[1])))
            if self.value == "ceil":
                return float(math.ceil(args[0]))
            if self.value == "log":
                return math.log(args[0], args[1])
        if self.kind == "binop":
            a, b = args
            return {"+": a + b, "*": a * b, "/": a / b, "^": a**b}[self.value]
        raise AssertionError(self.kind)

    def variables(self) -> set:
        if self.kind == "var":
            return {self.value}
        out: set = set()
        for c in self.children:
            out |= c.variables()
        return out


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ExprParseError("unexpected end of expression")
        if expected is not None and tok != expected:
            raise ExprParseError(f"expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def parse(self) -> _Node:
        node = self.expr()
        if self.peek() is not None:
            raise ExprParseError(f"trailing tokens at {self.peek()!r}")
        return node

    def expr(self) -> _Node:
        node = self.product()
        while self.peek() == "+":
            self.take()
            node = _Node("binop", "+", (node, self.product()))
        return node

    def product(self) -> _Node:
        node = self.power()
        while self.peek() in ("*", "/"):
            op = self.take()
            node = _Node("binop", op, (node, self.power()))
        return node

    def power(self) -> _Node:
        node = self.atom()
        if self.peek() == "^":
            self.take()
            node = _Node("binop", "^", (node, self.atom()))
        return node

    def atom(self) -> _Node:
        tok = self.take()
        if tok == "(":
            node = self.expr()
            self.take(")")
            return node
        if re.fullmatch(r"\d+(?:\.\d+)?", tok):
            return _Node("num", float(tok))
        if tok in _FUNCS:
            self.take("(")
            args = [self.expr()]
            while self.peek() == ",":
                self.take()
                args.append(self.expr())
            self.take(")")
            want = 1 if tok == "ceil" else 2
            if len(args) != want:
                raise ExprParseError(f"{tok} expects {want} argument(s)")
            return _Node("call", tok, tuple(args))
        if tok in VARIABLE_LEGEND:
            return _Node("var", tok)
        raise ExprParseError(f"unknown symbol {tok!r}")


@dataclass(frozen=True)
class ScalingExpr:
    text: str  # normalized form, e.g. "O(t*q*(q+p))"
    root: _Node
    legend: dict

    @classmethod
    def parse(cls, text: str) -> "ScalingExpr":
        inner = text.strip()
        if not (inner.startswith("O(") and inner.endswith(")")):
            raise ExprParseError(f"expected O(...), got {text!r}")
        body = inner[2:-1]
        tokens = []
        pos = 0
        while pos < len(body):
            match = _TOKEN_RE.match(body, pos)
            if match is None:
                raise ExprParseError(f"cannot tokenize {body[pos:]!r}")
            tokens.append(match.group(match.lastgroup))
            pos = match.end()
        root = _Parser(tokens).parse()
        legend = {v: VARIABLE_LEGEND[v] for v in sorted(root.variables())}
        return cls(text=inner, root=root, legend=legend)

    def evaluate(self, **bindings) -> float:
        merged = dict(bindings)
        if "T" in merged:  # allow evaluate(T=8) for the |T| symbol
            merged["|T|"] = merged.pop("T")
        return self.root.evaluate(merged)

    def variables(self) -> set:
        return self.root.variables()

    def __str__(self) -> str:
        return self.text

"""Tiny recursive-descent parser for module and Drinfeld-polynomial expressions.

Grammar::

    module  := eval(INT, scalar) | tensor(module, module) | dual(module)
             | eself(module) | weyl(dpoly)
    dpoly   := factor ("*" factor)*
    factor  := str(INT, scalar) | root(scalar, INT)
    scalar  := atom ("*" atom)*
    atom    := ["-"] INT ["/" INT] | "q" ["^" ["-"] INT]
"""
from __future__ import annotations

import re
from fractions import Fraction

from .dpoly import DrinfeldPoly, qstring
from .qnum import QParam, as_qparam
from .repcore.module import Module, dual, tensor

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<sym>[(),*/^\-]))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


class _Parser:
    def __init__(self, text: str, q: QParam):
        self.text = text
        self.q = q
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip() == "":
                    break
                raise ParseError("unexpected character", pos, text)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    # token helpers
    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self, value: str | None = None, kind: str | None = None):
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", tok[2], self.text)
        self.i += 1
        return tok

    def done(self):
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", tok[2], self.text)

    # grammar
    def integer(self) -> int:
        sign = -1 if self.peek()[1] == "-" and self.take("-") else 1
        return sign * int(self.take(kind="num")[1])

    def atom(self) -> Fraction:
        tok = self.peek()
        if tok[1] == "q":
            self.take("q")
            if self.peek()[1] == "^":
                self.take("^")
                return self.q.q ** self.integer()
            return self.q.q
        num = self.integer()
        if self.peek()[1] == "/":
            self.take("/")
            den = int(self.take(kind="num")[1])
            if den == 0:
                raise ParseError("zero denominator", tok[2], self.text)
            return Fraction(num, den)
        return Fraction(num)

    def scalar(self) -> Fraction:
        value = self.atom()
        while self.peek()[1] == "*":
            self.take("*")
            value *= self.atom()
        return value

    def factor(self) -> DrinfeldPoly:
        kind, name, pos = self.take(kind="name")
        self.take("(")
        if name == "str":
            m = self.integer()
            self.take(",")
            a = self.scalar()
            self.take(")")
            return qstring(m, a, self.q)
        if name == "root":
            a = self.scalar()
            self.take(",")
            p = self.integer()
            self.take(")")
            return DrinfeldPoly.from_roots([(a, p)])
        raise ParseError(f"unknown polynomial factor {name!r}", pos, self.text)

    def dpoly(self) -> DrinfeldPoly:
        pi = self.factor()
        while self.peek()[1] == "*":
            self.take("*")
            pi = pi * self.factor()
        return pi

    def module(self) -> Module:
        from .selfext import graded_twist
        from .sl2eval import eval_module
        from .weylalg import local_weyl

        kind, name, pos = self.take(kind="name")
        self.take("(")
        if name == "eval":
            m = self.integer()
            self.take(",")
            a = self.scalar()
            out = eval_module(m, a, self.q)
        elif name == "tensor":
            left = self.module()
            self.take(",")
            out = tensor(left, self.module())
        elif name == "dual":
            out = dual(self.module())
        elif name == "eself":
            out = graded_twist(self.module())
        elif name == "weyl":
            out = local_weyl(self.dpoly(), self.q)
        else:
            raise ParseError(f"unknown constructor {name!r}", pos, self.text)
        self.take(")")
        return out


def parse_module(text: str, q=2) -> Module:
    p = _Parser(text, as_qparam(q))
    out = p.module()
    p.done()
    return out


def parse_dpoly(text: str, q=2) -> DrinfeldPoly:
    p = _Parser(text, as_qparam(q))
    out = p.dpoly()
    p.done()
    return out


def parse_scalar(text: str, q=2) -> Fraction:
    p = _Parser(text, as_qparam(q))
    out = p.scalar()
    p.done()
    return out

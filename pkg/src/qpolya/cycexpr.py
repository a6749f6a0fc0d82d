"""Parser for exact cyclotomic expressions such as ``(3 + 4*z)/5``.

Grammar::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-' unary | atom ('^' ['-'] integer)?
    atom  := integer | 'z' | '(' expr ')'

``z`` denotes zeta_s for the session order s. A rational literal ``p/q``
is parsed as a division, which gives the same value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .arith.cyclotomic import CyclotomicNumber
from .errors import CyclotomicZeroDivisionError, DomainError, ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|(z)|([-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "z", an operator character, or "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(Token("int", m.group(1), start))
        elif m.group(2):
            out.append(Token("z", "z", start))
        else:
            out.append(Token(m.group(3), m.group(3), start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, order: int):
        self.toks = tokenize(text)
        self.i = 0
        self.order = order

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def take(self, kind: str) -> Token:
        t = self.tok
        if t.kind != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError(f"expected {want}, got {got}", t.pos)
        self.i += 1
        return t

    def expr(self):
        val = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.take(self.tok.kind).kind
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.tok.kind in ("*", "/"):
            op = self.take(self.tok.kind)
            rhs = self.unary()
            if op.kind == "*":
                val = val * rhs
            else:
                if rhs.is_zero():
                    raise CyclotomicZeroDivisionError(f"division by zero at position {op.pos}")
                val = val / rhs
        return val

    def unary(self):
        if self.tok.kind == "-":
            self.take("-")
            return -self.unary()
        base = self.atom()
        if self.tok.kind == "^":
            caret = self.take("^")
            neg = False
            if self.tok.kind == "-":
                self.take("-")
                neg = True
            e = int(self.take("int").text)
            e = -e if neg else e
            if e < 0 and base.is_zero():
                raise CyclotomicZeroDivisionError(f"negative power of zero at position {caret.pos}")
            base = base ** e
        return base

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.take("int")
            return CyclotomicNumber.rational(int(t.text), self.order)
        if t.kind == "z":
            self.take("z")
            return CyclotomicNumber.zeta(self.order)
        if t.kind == "(":
            self.take("(")
            val = self.expr()
            self.take(")")
            return val
        got = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"expected a number, 'z' or '(', got {got}", t.pos)


def parse_cyclotomic_expr(text: str, order: int = 1) -> CyclotomicNumber:
    """Evaluate ``text`` exactly in Q(zeta_order)."""
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    p = _Parser(text, order)
    val = p.expr()
    p.take("end")
    return val

"""Polynomial text format.

Grammar (whitespace is insignificant)::

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := rational? ('*'? factor)*        -- at least one part
    factor     := identifier ('^' integer)? | '(' expression ')' ('^' integer)?
    rational   := integer ('/' integer)?

Identifiers are a letter followed by letters or digits, so ``x01`` and
``p0`` are single names and ``2x`` is ``2*x``.  Every identifier must be
declared in the :class:`VarTable` passed to :func:`parse_poly`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import QQ, AlgebraError, Poly, Ring, VarTable

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(\S))")


class ParseError(AlgebraError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownIdentifierError(ParseError):
    pass


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        num, ident, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif ident is not None:
            tokens.append(("id", ident, start))
        else:
            if sym not in "+-*/^()":
                raise ParseError(f"unexpected character {sym!r}", start)
            tokens.append((sym, sym, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, table: VarTable, ring: Ring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.table = table
        self.ring = ring

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        t = self.tokens[self.i]
        if kind is not None and t[0] != kind:
            raise ParseError(f"expected {kind!r}, found {t[1] or 'end of input'!r}", t[2])
        self.i += 1
        return t

    def parse(self) -> Poly:
        if self.tok[0] == "end":
            raise ParseError("empty expression", self.tok[2])
        p = self.expression()
        if self.tok[0] != "end":
            raise ParseError(f"unexpected {self.tok[1]!r}", self.tok[2])
        return p

    def expression(self) -> Poly:
        sign = 1
        if self.tok[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.tok[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        start = self.tok
        acc = None
        if self.tok[0] == "num":
            acc = Poly.const(self.rational(), self.table, self.ring)
        while True:
            kind = self.tok[0]
            if kind == "*":
                if acc is None:
                    raise ParseError("'*' without a left operand", self.tok[2])
                self.take()
                f = self.factor()
            elif kind in ("id", "("):
                f = self.factor()
            else:
                break
            acc = f if acc is None else acc * f
        if acc is None:
            raise ParseError(f"expected a term, found {start[1] or 'end of input'!r}", start[2])
        return acc

    def rational(self):
        num = int(self.take("num")[1])
        if self.tok[0] == "/":
            self.take()
            t = self.take("num")
            den = int(t[1])
            if den == 0:
                raise ParseError("zero denominator", t[2])
            return Fraction(num, den)
        return num

    def factor(self) -> Poly:
        t = self.tok
        if t[0] == "id":
            self.take()
            if t[1] not in self.table:
                raise UnknownIdentifierError(f"unknown identifier {t[1]!r}", t[2])
            base = Poly.var(t[1], self.table, self.ring)
        elif t[0] == "(":
            self.take()
            base = self.expression()
            self.take(")")
        else:
            raise ParseError(f"expected a variable or '(', found {t[1] or 'end of input'!r}", t[2])
        if self.tok[0] == "^":
            self.take()
            e = self.take("num")
            if int(e[1]) == 0:
                raise ParseError("exponent must be positive", e[2])
            base = base ** int(e[1])
        return base


def parse_poly(text: str, table: VarTable, ring: Ring = QQ) -> Poly:
    """Parse ``text`` into a canonical polynomial over ``table``."""
    try:
        return _Parser(text, table, ring).parse()
    except ZeroDivisionError as exc:  # e.g. a denominator divisible by p
        raise ParseError(str(exc), 0) from None


def identifiers(text: str) -> list[str]:
    """Identifiers in ``text``, deduplicated, in order of first appearance."""
    seen = []
    for m in re.finditer(r"[A-Za-z][A-Za-z0-9]*", text):
        if m.group() not in seen:
            seen.append(m.group())
    return seen


def _format_monomial(exps, names) -> str:
    parts = []
    for n, k in zip(names, exps):
        if k == 1:
            parts.append(n)
        elif k:
            parts.append(f"{n}^{k}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical text: graded-lex term order, ``" + "``/``" - "`` separators."""
    if p.is_zero():
        return "0"
    names = p.table.names
    out = []
    for exps, c in p.items():
        neg = c < 0
        mag = -c if neg else c
        mono = _format_monomial(exps, names)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_scalar(c) -> str:
    return str(c)

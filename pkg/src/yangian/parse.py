"""Text syntax for algebra elements.

Grammar::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := rational | 'T[' int ',' int ',' int ']' | 'Z[' int ']' | '(' expr ')'
    rational := int ['/' int]

``T[level,i,j]`` is a generator (level nonzero, positive in the Yangian,
negative in the dual Yangian).  ``Z[r]`` is the coefficient of the central
series Z(u) at u^-r.  Products are kept in the written order and the result
is brought to normal form at the end.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import AlgElement, Word, normal_form
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|(T\[)|(Z\[)|([-+*/(),\]]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("T", "T[", start))
        elif m.group(3):
            tokens.append(("Z", "Z[", start))
        else:
            tokens.append(("op", m.group(4), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


Raw = dict[Word, Fraction]


def _mul(a: Raw, b: Raw) -> Raw:
    out: Raw = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            out[w] = out.get(w, 0) + ca * cb
    return {w: c for w, c in out.items() if c}


def _add(a: Raw, b: Raw, sign: int) -> Raw:
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, 0) + sign * c
    return {w: c for w, c in out.items() if c}


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, val, pos = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", self.text, pos)

    def integer(self, allow_sign: bool = False) -> tuple[int, int]:
        sign = 1
        kind, val, pos = self.peek()
        if allow_sign and val in "+-" and kind == "op":
            self.take()
            sign = -1 if val == "-" else 1
            kind, val, _ = self.peek()
        if kind != "int":
            raise ParseError(f"expected an integer, found {val or 'end of input'!r}", self.text, self.peek()[2])
        self.take()
        return sign * int(val), pos

    def parse(self) -> Raw:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", self.text, 0)
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", self.text, pos)
        return value

    def expr(self) -> Raw:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        total = _add({}, self.term(), sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                total = _add(total, self.term(), -1 if val == "-" else 1)
            else:
                return total

    def term(self) -> Raw:
        value = self.factor()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            value = _mul(value, self.factor())
        return value

    def factor(self) -> Raw:
        kind, val, pos = self.peek()
        if kind == "int":
            num, _ = self.integer()
            den = 1
            if self.peek()[1] == "/":
                self.take()
                den, dpos = self.integer()
                if den == 0:
                    raise ParseError("zero denominator", self.text, dpos)
            c = Fraction(num, den)
            return {(): c} if c else {}
        if kind == "T":
            self.take()
            level, lpos = self.integer(allow_sign=True)
            self.expect(",")
            i, ipos = self.integer()
            self.expect(",")
            j, jpos = self.integer()
            self.expect("]")
            if level == 0:
                raise ParseError("level 0 is not a generator (T^(0) is the Kronecker delta)", self.text, lpos)
            for idx, p in ((i, ipos), (j, jpos)):
                if not 1 <= idx <= self.n:
                    raise ParseError(f"index {idx} out of range 1..{self.n}", self.text, p)
            return {((level, i, j),): Fraction(1)}
        if kind == "Z":
            self.take()
            r, rpos = self.integer()
            self.expect("]")
            from .hopf import z_series

            return dict(z_series(self.n, r)[r].terms)
        if kind == "op" and val == "(":
            self.take()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {val or 'end of input'!r}", self.text, pos)


def parse_raw(text: str, n: int) -> dict[Word, Fraction]:
    """Parse ``text`` into a combination of words in the written order."""
    if n < 1:
        raise ValueError("N must be at least 1")
    return _Parser(text, n).parse()


def parse_element(text: str, n: int, D: int | None = None, tag: str | None = None) -> AlgElement:
    """Parse ``text`` and bring it to normal form with dual truncation ``D``."""
    return normal_form(parse_raw(text, n), n, D, tag=tag)

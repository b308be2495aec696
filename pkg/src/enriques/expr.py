"""Divisor expressions: '3*E1 + 3*E2 - A4' or a raw vector '[3,3,0,0,0,0,0,0,0,-1]'."""

from __future__ import annotations

import re

from .errors import PreconditionError
from .lattice import LABELS, RANK, DivisorClass

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<gen>[A-Za-z_]\w*)|(?P<op>[-+*\[\],]))")
_GENERATORS = {name: i for i, name in enumerate(LABELS)}


class ParseError(PreconditionError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].isspace():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind, value=None):
        tok = self.toks[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        self.i += 1
        return tok

    def signed_int(self):
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take("op")[1] == "-" else 1
        return sign * int(self.take("int")[1])

    def vector(self):
        self.take("op", "[")
        vals = [self.signed_int()]
        while self.peek()[:2] == ("op", ","):
            self.take("op", ",")
            vals.append(self.signed_int())
        close = self.take("op", "]")
        if len(vals) != RANK:
            raise ParseError(f"vector needs {RANK} entries, got {len(vals)}", self.text, close[2])
        return vals

    def term(self):
        coef = 1
        if self.peek()[0] == "int":
            coef = int(self.take("int")[1])
            self.take("op", "*")
        kind, name, pos = self.peek()
        if kind != "gen":
            raise ParseError(f"expected a generator, found {name or 'end of input'!r}", self.text, pos)
        self.i += 1
        if name not in _GENERATORS:
            raise ParseError(f"unknown generator {name!r}", self.text, pos)
        return coef, _GENERATORS[name]

    def expr(self):
        if self.peek()[:2] == ("op", "["):
            vals = self.vector()
        else:
            vals = [0] * RANK
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                self.take("op", "-")
                sign = -1
            while True:
                coef, idx = self.term()
                vals[idx] += sign * coef
                tok = self.peek()
                if tok[:2] not in (("op", "+"), ("op", "-")):
                    break
                self.i += 1
                sign = -1 if tok[1] == "-" else 1
        self.take("end")
        return vals


def parse_divisor(text):
    if not text or not text.strip():
        raise ParseError("empty expression", text or "", 0)
    vals = _Parser(text).expr()
    try:
        return DivisorClass(tuple(vals))
    except OverflowError as exc:
        raise ParseError(str(exc), text, 0) from None


def format_divisor(c):
    """Inverse of parse_divisor; the zero class prints as a raw vector."""
    parts = []
    for label, v in zip(LABELS, c.coords):
        if not v:
            continue
        mag = "" if abs(v) == 1 else f"{abs(v)}*"
        if parts:
            parts.append(f"{'-' if v < 0 else '+'} {mag}{label}")
        else:
            parts.append(f"{'-' if v < 0 else ''}{mag}{label}")
    if not parts:
        return "[" + ",".join(["0"] * RANK) + "]"
    return " ".join(parts)

"""Recursive-descent parser for the formula language.

Grammar (whitespace-insensitive)::

    formula := ("exists" | "forall") VAR "in" ("G" | "H") "." formula | disj
    disj    := conj ("or" conj)*
    conj    := lit ("and" lit)*
    lit     := "not" lit | "(" formula ")" | atom
    atom    := "V(" gterm ")" ["+" INT] CMP vterm | gterm "=" gterm
             | gterm "cong" NAT gterm | "H(" gterm ")" | "true" | "false"
    gterm   := term (("+" | "-") term)*
    term    := [INT "*"] (VAR | "a" | "b" | "g(" INT "," INT ")")
    vterm   := "V(" gterm ")" ["+" INT] | NAT | "inf"
    CMP     := "<" | "<=" | "=" | ">=" | ">"

``a`` and ``b`` denote the generators alpha and beta.
"""

from __future__ import annotations

import re

from ..errors import FormulaSyntaxError, UnsupportedFragmentError
from ..groups import INF
from .ast import (
    FALSE,
    TRUE,
    And,
    Cong,
    Const,
    Eq,
    Exists,
    Forall,
    GTerm,
    HAtom,
    Item,
    Lit,
    Not,
    Or,
    Paren,
    Var,
    VApp,
    VCmp,
    VLit,
)

KEYWORDS = {"exists", "forall", "in", "and", "or", "not", "cong", "inf", "true", "false"}
RESERVED = KEYWORDS | {"a", "b", "g", "V", "H", "G"}

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z_0-9']*)|(?P<op><=|>=|[()<>=+\-*,.])"
)


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col

    def __repr__(self):
        return f"{self.kind}:{self.text}"


def tokenize(text: str) -> list:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        else:
            for i, ch in enumerate(m.group()):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    # -- helpers
    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return FormulaSyntaxError(msg, tok.line, tok.col)

    def at(self, text):
        return self.tok.text == text and self.tok.kind in ("id", "op")

    def expect(self, text):
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        self.i += 1

    def number(self, signed=True) -> int:
        neg = False
        if signed and self.at("-"):
            neg = True
            self.i += 1
        if self.tok.kind != "num":
            raise self.error("expected a number")
        v = int(self.tok.text)
        self.i += 1
        return -v if neg else v

    # -- formulas
    def parse(self):
        f = self.formula()
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")
        return f

    def formula(self):
        if self.at("exists") or self.at("forall"):
            kw = self.tok.text
            self.i += 1
            var = self.variable()
            self.expect("in")
            sort_tok = self.tok
            if sort_tok.text == "V":
                raise UnsupportedFragmentError(
                    f"quantifiers over the value sort are not supported "
                    f"(line {sort_tok.line}, column {sort_tok.col})"
                )
            if sort_tok.text not in ("G", "H"):
                raise self.error("expected sort 'G' or 'H'")
            self.i += 1
            self.expect(".")
            body = self.formula()
            return (Exists if kw == "exists" else Forall)(var, sort_tok.text, body)
        return self.disj()

    def disj(self):
        parts = [self.conj()]
        while self.at("or"):
            self.i += 1
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj(self):
        parts = [self.lit()]
        while self.at("and"):
            self.i += 1
            parts.append(self.lit())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def lit(self):
        if self.at("not"):
            self.i += 1
            return Not(self.lit())
        if self.at("("):
            self.i += 1
            body = self.formula()
            self.expect(")")
            return Paren(body)
        return self.atom()

    def atom(self):
        if self.at("true") or self.at("false"):
            value = self.tok.text == "true"
            self.i += 1
            return TRUE if value else FALSE
        if self.at("V") and self.peek().text == "(":
            lhs = self.vapp()
            op = self.cmp()
            return VCmp(lhs, op, self.vterm())
        if self.at("H") and self.peek().text == "(":
            self.i += 2
            t = self.gterm()
            self.expect(")")
            return HAtom(t)
        lhs = self.gterm()
        if self.at("="):
            self.i += 1
            return Eq(lhs, self.gterm())
        if self.at("cong"):
            self.i += 1
            n = self.number(signed=False)
            if n < 1:
                raise self.error("congruence modulus must be positive")
            return Cong(lhs, n, self.gterm())
        raise self.error("expected '=' or 'cong' after a group term")

    def cmp(self):
        if self.tok.text in ("<", "<=", "=", ">=", ">") and self.tok.kind == "op":
            op = self.tok.text
            self.i += 1
            return op
        raise self.error("expected a comparison")

    def vapp(self):
        self.expect("V")
        self.expect("(")
        t = self.gterm()
        self.expect(")")
        shift = None
        if self.at("+"):
            self.i += 1
            shift = self.number()
        elif self.at("-") and self.peek().kind == "num":
            self.i += 1
            shift = -self.number(signed=False)
        return VApp(t, shift)

    def vterm(self):
        if self.at("V") and self.peek().text == "(":
            return self.vapp()
        if self.at("inf"):
            self.i += 1
            return VLit(INF)
        if self.tok.kind == "num" or (self.at("-") and self.peek().kind == "num"):
            return VLit(self.number())
        raise self.error("expected a value term")

    # -- group terms
    def gterm(self):
        items = [self.term("+")]
        while self.at("+") or self.at("-"):
            sign = self.tok.text
            self.i += 1
            items.append(self.term(sign))
        return GTerm(tuple(items))

    def term(self, sign):
        coeff = None
        if self.tok.kind == "num" or (self.at("-") and self.peek().kind == "num"):
            coeff = self.number()
            self.expect("*")
        return Item(sign, coeff, self.primary())

    def primary(self):
        tok = self.tok
        if tok.kind != "id":
            raise self.error("expected a variable, 'a', 'b' or 'g(m,n)'")
        if tok.text in ("a", "b"):
            self.i += 1
            return Const(tok.text)
        if tok.text == "g" and self.peek().text == "(":
            self.i += 2
            m = self.number()
            self.expect(",")
            n = self.number()
            self.expect(")")
            return Lit(m, n)
        return Var(self.variable())

    def variable(self):
        tok = self.tok
        if tok.kind != "id":
            raise self.error("expected a variable")
        if self.peek().text == "(" and tok.text not in KEYWORDS:
            raise self.error(f"unknown identifier {tok.text!r}")
        if tok.text in RESERVED:
            raise self.error(f"{tok.text!r} is reserved and cannot be a variable")
        self.i += 1
        return tok.text


def parse(text: str):
    """Parse formula text into an AST (see the module docstring for the grammar)."""
    return Parser(text).parse()


def parse_gterm(text: str) -> GTerm:
    p = Parser(text)
    t = p.gterm()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    return t

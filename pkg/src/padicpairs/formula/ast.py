"""Syntax trees for the two-sorted language of pairs of p-valued groups.

Group terms keep their surface form (order of summands, explicit
coefficients) so that printing a parsed formula gives back the input up to
whitespace; :meth:`GTerm.linear` gives the integer-linear normal form used
for computation. ``Paren`` records explicit parentheses for the same reason.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..groups import ALPHA, BETA, INF, GroupElement
from .linear import Lin, ValueExpr

CMP_OPS = ("<", "<=", "=", ">=", ">")
NEGATED = {"<": ">=", "<=": ">", ">": "<=", ">=": "<"}
FLIPPED = {"<": ">", "<=": ">=", "=": "=", ">=": "<=", ">": "<"}


def compare(left, op: str, right) -> bool:
    if op == "<":
        return left < right
    if op == "<=":
        return left <= right
    if op == "=":
        return left == right
    if op == ">=":
        return left >= right
    if op == ">":
        return left > right
    raise ValueError(f"unknown comparison {op!r}")


class Node:
    def __str__(self):
        return to_text(self)


# ---------------------------------------------------------------- group terms


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class Const(Node):
    name: str  # "a" (alpha) or "b" (beta)


@dataclass(frozen=True)
class Lit(Node):
    m: int
    n: int


@dataclass(frozen=True)
class Item:
    sign: str  # "+" or "-"
    coeff: int | None
    atom: Var | Const | Lit


def _atom_lin(atom) -> Lin:
    if isinstance(atom, Var):
        return Lin.var(atom.name)
    if isinstance(atom, Const):
        return Lin.constant(ALPHA if atom.name == "a" else BETA)
    return Lin.constant(GroupElement(atom.m, atom.n))


@dataclass(frozen=True)
class GTerm(Node):
    items: tuple

    def linear(self) -> Lin:
        out = Lin()
        for it in self.items:
            c = 1 if it.coeff is None else it.coeff
            if it.sign == "-":
                c = -c
            out = out + _atom_lin(it.atom).scale(c)
        return out

    @classmethod
    def of_var(cls, name: str) -> "GTerm":
        return cls((Item("+", None, Var(name)),))

    @classmethod
    def from_lin(cls, lin: Lin) -> "GTerm":
        parts: list[tuple[int, object]] = [(c, Var(v)) for v, c in lin.coeffs]
        g = lin.const
        if (g.m, g.n) in ((1, 0), (-1, 0)):
            parts.append((g.m, Const("a")))
        elif (g.m, g.n) in ((0, 1), (0, -1)):
            parts.append((g.n, Const("b")))
        elif not g.is_identity or not parts:
            parts.append((1, Lit(g.m, g.n)))
        items = []
        for i, (c, atom) in enumerate(parts):
            if i == 0:
                items.append(Item("+", None if c == 1 else c, atom))
            elif c > 0:
                items.append(Item("+", None if c == 1 else c, atom))
            else:
                items.append(Item("-", None if c == -1 else -c, atom))
        return cls(tuple(items))


# ---------------------------------------------------------------- value terms


@dataclass(frozen=True)
class VApp(Node):
    term: GTerm
    shift: int | None = None

    def value_expr(self) -> ValueExpr:
        return ValueExpr(self.term.linear(), self.shift or 0)


@dataclass(frozen=True)
class VLit(Node):
    value: int | float

    def value_expr(self) -> ValueExpr:
        return ValueExpr.literal(self.value)


def vterm_from(expr: ValueExpr):
    if expr.term is None:
        return VLit(expr.shift)
    return VApp(GTerm.from_lin(expr.term), expr.shift or None)


# ---------------------------------------------------------------- atoms


@dataclass(frozen=True)
class VCmp(Node):
    lhs: VApp
    op: str
    rhs: VApp | VLit


@dataclass(frozen=True)
class Eq(Node):
    lhs: GTerm
    rhs: GTerm


@dataclass(frozen=True)
class Cong(Node):
    lhs: GTerm
    n: int
    rhs: GTerm


@dataclass(frozen=True)
class HAtom(Node):
    term: GTerm


@dataclass(frozen=True)
class Truth(Node):
    value: bool


ATOMS = (VCmp, Eq, Cong, HAtom, Truth)

# ---------------------------------------------------------------- connectives


@dataclass(frozen=True)
class Not(Node):
    arg: Node


@dataclass(frozen=True)
class And(Node):
    args: tuple


@dataclass(frozen=True)
class Or(Node):
    args: tuple


@dataclass(frozen=True)
class Exists(Node):
    var: str
    sort: str  # "G" or "H"
    body: Node


@dataclass(frozen=True)
class Forall(Node):
    var: str
    sort: str
    body: Node


@dataclass(frozen=True)
class Paren(Node):
    body: Node


@dataclass(frozen=True)
class Ite(Node):
    """``cond and then or not cond and other``; built by quantifier elimination.

    Keeping the branch structure lets negation move to the leaves instead of
    distributing over the whole disjunction.
    """

    cond: Node
    then: Node
    other: Node


TRUE = Truth(True)
FALSE = Truth(False)


def conj(parts) -> Node:
    parts = [p for p in parts if p != TRUE]
    if any(p == FALSE for p in parts):
        return FALSE
    if not parts:
        return TRUE
    return parts[0] if len(parts) == 1 else And(tuple(parts))


def disj(parts) -> Node:
    out = []
    for p in parts:
        if p not in out and p != FALSE:
            out.append(p)
    if any(p == TRUE for p in out):
        return TRUE
    if not out:
        return FALSE
    return out[0] if len(out) == 1 else Or(tuple(out))


def negate(f: Node) -> Node:
    if isinstance(f, Truth):
        return Truth(not f.value)
    if isinstance(f, Not):
        return f.arg
    if isinstance(f, Ite):
        return Ite(f.cond, negate(f.then), negate(f.other))
    return Not(f)


def unparen(f: Node) -> Node:
    while isinstance(f, Paren):
        f = f.body
    return f


# ---------------------------------------------------------------- queries


def term_vars(t: GTerm) -> set:
    return {it.atom.name for it in t.items if isinstance(it.atom, Var)}


def free_vars(f: Node) -> set:
    if isinstance(f, VCmp):
        out = term_vars(f.lhs.term)
        if isinstance(f.rhs, VApp):
            out |= term_vars(f.rhs.term)
        return out
    if isinstance(f, (Eq, Cong)):
        return term_vars(f.lhs) | term_vars(f.rhs)
    if isinstance(f, HAtom):
        return term_vars(f.term)
    if isinstance(f, Truth):
        return set()
    if isinstance(f, (Not, Paren)):
        return free_vars(f.arg if isinstance(f, Not) else f.body)
    if isinstance(f, (And, Or)):
        out = set()
        for a in f.args:
            out |= free_vars(a)
        return out
    if isinstance(f, Ite):
        return free_vars(f.cond) | free_vars(f.then) | free_vars(f.other)
    if isinstance(f, (Exists, Forall)):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula node: {f!r}")


def is_quantifier_free(f: Node) -> bool:
    if isinstance(f, (Exists, Forall)):
        return False
    if isinstance(f, (Not, Paren)):
        return is_quantifier_free(f.arg if isinstance(f, Not) else f.body)
    if isinstance(f, (And, Or)):
        return all(is_quantifier_free(a) for a in f.args)
    if isinstance(f, Ite):
        return all(is_quantifier_free(a) for a in (f.cond, f.then, f.other))
    return True


# ---------------------------------------------------------------- printing


def _fmt_atom(a) -> str:
    if isinstance(a, Var):
        return a.name
    if isinstance(a, Const):
        return a.name
    return f"g({a.m},{a.n})"


def fmt_gterm(t: GTerm) -> str:
    out = []
    for i, it in enumerate(t.items):
        text = _fmt_atom(it.atom)
        if it.coeff is not None:
            text = f"{it.coeff}*{text}"
        out.append(text if i == 0 else f" {it.sign} {text}")
    return "".join(out)


def _fmt_value(v) -> str:
    return "inf" if v == INF else str(v)


def _fmt_vterm(t) -> str:
    if isinstance(t, VLit):
        return _fmt_value(t.value)
    text = f"V({fmt_gterm(t.term)})"
    if t.shift is None:
        return text
    return f"{text} - {-t.shift}" if t.shift < 0 else f"{text} + {t.shift}"


def to_text(f: Node, ctx: str = "top") -> str:
    if isinstance(f, GTerm):
        return fmt_gterm(f)
    if isinstance(f, (VApp, VLit)):
        return _fmt_vterm(f)
    if isinstance(f, VCmp):
        return f"{_fmt_vterm(f.lhs)} {f.op} {_fmt_vterm(f.rhs)}"
    if isinstance(f, Eq):
        return f"{fmt_gterm(f.lhs)} = {fmt_gterm(f.rhs)}"
    if isinstance(f, Cong):
        return f"{fmt_gterm(f.lhs)} cong {f.n} {fmt_gterm(f.rhs)}"
    if isinstance(f, HAtom):
        return f"H({fmt_gterm(f.term)})"
    if isinstance(f, Truth):
        return "true" if f.value else "false"
    if isinstance(f, Paren):
        return f"({to_text(f.body)})"
    if isinstance(f, Ite):
        expanded = Or((And((f.cond, f.then)), And((negate(f.cond), f.other))))
        return to_text(expanded, ctx)
    if isinstance(f, Not):
        return "not " + to_text(f.arg, "not")
    if isinstance(f, And):
        text = " and ".join(to_text(a, "and") for a in f.args)
        return f"({text})" if ctx in ("and", "not") else text
    if isinstance(f, Or):
        text = " or ".join(to_text(a, "or") for a in f.args)
        return f"({text})" if ctx in ("and", "or", "not") else text
    if isinstance(f, (Exists, Forall)):
        kw = "exists" if isinstance(f, Exists) else "forall"
        text = f"{kw} {f.var} in {f.sort}. {to_text(f.body)}"
        return f"({text})" if ctx in ("and", "or", "not") else text
    raise TypeError(f"cannot print {f!r}")

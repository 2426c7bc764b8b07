"""Disjunctive normal form with respect to a designated variable.

After :func:`normalize_dnf`, every literal mentioning the variable ``x`` is

* ``Phi``:  ``V(l*x - a) + r  op  R`` with ``R`` free of ``x``,
* ``Psi``:  ``l*x - a cong_n 0`` or its negation,
* ``HLit``: ``l*x - a in H`` or its negation,

with one coefficient ``l`` shared by the whole disjunct. Coefficients are
aligned with ``V(M*u) = V(u) + v_p(M)``; congruences scale their modulus;
``H`` is pure in ``G`` so ``M*u in H`` iff ``u in H``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from math import gcd, lcm

from ..errors import BudgetError, UnsupportedFragmentError
from ..groups import INF, GroupElement
from ..padic import vp
from .ast import (
    FLIPPED,
    NEGATED,
    And,
    Cong,
    Eq,
    Exists,
    Forall,
    GTerm,
    HAtom,
    Ite,
    Not,
    Or,
    Paren,
    Truth,
    VApp,
    VCmp,
    compare,
    conj,
    disj,
    negate,
    vterm_from,
)
from .linear import ZERO, Lin, ValueExpr


@dataclass(frozen=True)
class Phi:
    l: int
    a: Lin
    r: int
    op: str
    rhs: ValueExpr


@dataclass(frozen=True)
class Psi:
    l: int
    a: Lin
    n: int
    positive: bool = True


@dataclass(frozen=True)
class HLit:
    l: int
    a: Lin
    positive: bool


@dataclass(frozen=True)
class Free:
    atom: object
    positive: bool

    def formula(self):
        return self.atom if self.positive else negate(self.atom)


@dataclass
class Conjunct:
    """One disjunct: ``x``-literals sharing coefficient ``l`` plus ``x``-free literals."""

    var: str
    l: int = 1
    phis: list = field(default_factory=list)
    psis: list = field(default_factory=list)
    hs: list = field(default_factory=list)
    free: list = field(default_factory=list)

    @property
    def x_literals(self):
        return self.phis + self.psis + self.hs

    def formula(self):
        return conj([lit_formula(x, self.var) for x in self.x_literals] + [f.formula() for f in self.free])


def _xterm(l: int, a: Lin, var: str) -> GTerm:
    return GTerm.from_lin(Lin.var(var, l) - a)


def lit_formula(lit, var: str):
    """The AST of a normalized literal."""
    if isinstance(lit, Phi):
        rhs = lit.rhs
        r = lit.r
        if rhs.is_literal and rhs.shift != INF and rhs.shift - r >= 0:
            rhs, r = ValueExpr.literal(rhs.shift - r), 0
        return VCmp(VApp(_xterm(lit.l, lit.a, var), r or None), lit.op, vterm_from(rhs))
    if isinstance(lit, Psi):
        atom = Cong(_xterm(lit.l, lit.a, var), lit.n, GTerm.from_lin(ZERO))
        return atom if lit.positive else Not(atom)
    if isinstance(lit, HLit):
        atom = HAtom(_xterm(lit.l, lit.a, var))
        return atom if lit.positive else Not(atom)
    if isinstance(lit, Free):
        return lit.formula()
    raise TypeError(lit)


# ---------------------------------------------------------------- NNF / DNF


DNF_BUDGET = 200_000


def _merge(x: tuple, y: tuple):
    """Concatenate two literal tuples; ``None`` if they assign an atom both ways."""
    seen = dict(x)
    for atom, pol in y:
        if seen.setdefault(atom, pol) != pol:
            return None
    return tuple(seen.items())


def nnf_literals(f, positive=True):
    """DNF over raw (atom, polarity) pairs: a list of lists.

    Products drop combinations that assert an atom and its negation. More
    than ``DNF_BUDGET`` disjuncts raise :class:`BudgetError`.
    """
    return [list(d) for d in _nnf(f, positive)]


def _nnf(f, positive):
    if isinstance(f, Paren):
        return _nnf(f.body, positive)
    if isinstance(f, Not):
        return _nnf(f.arg, not positive)
    if isinstance(f, Truth):
        return [()] if f.value == positive else []
    if isinstance(f, Ite):
        return _product(_nnf(f.cond, True), _nnf(f.then, positive)) + _product(
            _nnf(f.cond, False), _nnf(f.other, positive)
        )
    if isinstance(f, (And, Or)):
        parts = [_nnf(a, positive) for a in f.args]
        if isinstance(f, And) == positive:
            out = [()]
            for p in parts:
                out = _product(out, p)
            return out
        return list(dict.fromkeys(d for p in parts for d in p))
    if isinstance(f, (Exists, Forall)):
        raise UnsupportedFragmentError("normalize expects a quantifier-free formula")
    return [((f, positive),)]


def _product(xs, ys):
    out = {}
    for x in xs:
        for y in ys:
            m = _merge(x, y)
            if m is not None:
                out[m] = None
        if len(out) > DNF_BUDGET:
            raise BudgetError(
                f"disjunctive normal form exceeds {DNF_BUDGET} disjuncts; "
                "the sentence alternates quantifiers over too large a body"
            )
    return list(out)


def _sign_fix(l: int, a: Lin):
    return (-l, -a) if l < 0 else (l, a)


def _vside(v):
    """``(lin, shift)`` of a VApp or ``None`` for literals."""
    if isinstance(v, VApp):
        return v.term.linear(), v.shift or 0
    return None


def _classify(atom, positive: bool, x: str, p: int):
    """Alternatives (a list of literal lists) equivalent to one raw literal."""
    if isinstance(atom, VCmp):
        op = atom.op
        if not positive:
            if op == "=":
                return [
                    alt
                    for o in ("<", ">")
                    for alt in _classify(VCmp(atom.lhs, o, atom.rhs), True, x, p)
                ]
            op = NEGATED[op]
        lin1, r1 = _vside(atom.lhs)
        side2 = _vside(atom.rhs)
        c1 = lin1.coeff(x)
        c2 = side2[0].coeff(x) if side2 else 0
        if c1 == 0 and c2 == 0:
            return [[Free(atom, positive)]]
        if side2 is None:
            l, a = _sign_fix(c1, -lin1.drop(x))
            return [[Phi(l, a, r1, op, ValueExpr.literal(atom.rhs.value))]]
        lin2, r2 = side2
        if c2 == 0:
            l, a = _sign_fix(c1, -lin1.drop(x))
            return [[Phi(l, a, r1, op, ValueExpr(lin2, r2))]]
        if c1 == 0:
            l, a = _sign_fix(c2, -lin2.drop(x))
            return [[Phi(l, a, r2, FLIPPED[op], ValueExpr(lin1, r1))]]
        return _two_sided(c1, -lin1.drop(x), r1, op, c2, -lin2.drop(x), r2, p)
    if isinstance(atom, Eq):
        lin = atom.lhs.linear() - atom.rhs.linear()
        c = lin.coeff(x)
        if c == 0:
            return [[Free(atom, positive)]]
        l, a = _sign_fix(c, -lin.drop(x))
        return [[Phi(l, a, 0, "=" if positive else "<", ValueExpr.literal(INF))]]
    if isinstance(atom, Cong):
        lin = atom.lhs.linear() - atom.rhs.linear()
        c = lin.coeff(x)
        if c == 0:
            return [[Free(atom, positive)]]
        l, a = _sign_fix(c, -lin.drop(x))
        return [[Psi(l, a, atom.n, positive)]]
    if isinstance(atom, HAtom):
        lin = atom.term.linear()
        c = lin.coeff(x)
        if c == 0:
            return [[Free(atom, positive)]]
        l, a = _sign_fix(c, -lin.drop(x))
        return [[HLit(l, a, positive)]]
    raise TypeError(f"not an atom: {atom!r}")


def _two_sided(l1, a1, r1, op, l2, a2, r2, p):
    """Eliminate ``x`` from one side of ``V(l1 x - a1) + r1 op V(l2 x - a2) + r2``.

    With both sides at coefficient ``L`` and ``d = V(c1 - c2)`` the cases
    ``V1 < d``, ``V1 = V2 = d``, ``V1 > d``, ``V2 > d`` are disjoint and
    exhaustive, and in each the comparison loses one occurrence of ``x``.
    """
    l1, a1 = _sign_fix(l1, a1)
    l2, a2 = _sign_fix(l2, a2)
    L = lcm(l1, l2)
    m1, m2 = L // l1, L // l2
    c1, s1 = a1.scale(m1), r1 - vp(m1, p)
    c2, s2 = a2.scale(m2), r2 - vp(m2, p)
    diff = c1 - c2
    inf = ValueExpr.literal(INF)
    if diff.is_zero:
        alts = []
        if compare(s1, op, s2):
            alts.append([Phi(L, c1, 0, "<", inf)])
        if op in ("=", "<=", ">="):
            alts.append([Phi(L, c1, 0, "=", inf)])
        return alts
    d = ValueExpr(diff.canonical_sign(), 0)
    dterm = GTerm.from_lin(d.term)
    alts = []
    if compare(s1, op, s2):
        alts.append([Phi(L, c1, 0, "<", d)])
    alts.append(
        [
            Phi(L, c1, 0, "=", d),
            Phi(L, c2, 0, "=", d),
            Free(VCmp(VApp(dterm, s1 or None), op, VApp(dterm, s2 or None)), True),
        ]
    )
    alts.append([Phi(L, c1, 0, ">", d), Phi(L, c1, s1, op, d.plus(s2))])
    alts.append([Phi(L, c2, 0, ">", d), Phi(L, c2, s2, FLIPPED[op], d.plus(s1))])
    return alts


def _reduce_content(lit, p):
    """Divide the common content out of a ``Phi`` term (``V(g*u) = V(u) + v_p(g)``)."""
    if not isinstance(lit, Phi):
        return lit
    g = gcd(lit.l, lit.a.content())
    if g <= 1:
        return lit
    return replace(lit, l=lit.l // g, a=lit.a.divide(g), r=lit.r + vp(g, p))


def _align(lits, p):
    xl = [x for x in lits if not isinstance(x, Free)]
    if not xl:
        return 1, lits
    L = lcm(*[x.l for x in xl])
    out = []
    for lit in lits:
        if isinstance(lit, Free):
            out.append(lit)
            continue
        M = L // lit.l
        if isinstance(lit, Phi):
            out.append(replace(lit, l=L, a=lit.a.scale(M), r=lit.r - vp(M, p)))
        elif isinstance(lit, Psi):
            out.append(Psi(L, lit.a.scale(M), lit.n * M, lit.positive))
        else:
            out.append(HLit(L, lit.a.scale(M), lit.positive))
    return L, out


def _congruences_clash(L: int, psis) -> bool:
    """Pairwise test on ground congruences ``L*x = a (mod n)``; pairwise suffices over Z."""
    ground = [(psi.n, psi.a.const) for psi in psis if psi.positive and psi.a.is_ground]
    ground.append((L, GroupElement(0, 0)))
    for (n1, a1), (n2, a2) in itertools.combinations(ground, 2):
        g = gcd(n1, n2)
        if (a1.m - a2.m) % g or (a1.n - a2.n) % g:
            return True
    return False


def build_conjunct(lits, x: str, p: int):
    """Align already-classified literals into a :class:`Conjunct`; ``None`` on a congruence clash."""
    lits = list(dict.fromkeys(_reduce_content(lit, p) for lit in lits))
    L, lits = _align(lits, p)
    c = Conjunct(x, L)
    for lit in dict.fromkeys(lits):
        if isinstance(lit, Phi):
            c.phis.append(lit)
        elif isinstance(lit, Psi):
            c.psis.append(lit)
        elif isinstance(lit, HLit):
            c.hs.append(lit)
        else:
            c.free.append(lit)
    return None if _congruences_clash(L, c.psis) else c


def classify(atom, positive: bool, x: str, p: int) -> list:
    """Alternatives (lists of normal-form literals) equivalent to one raw literal."""
    return _classify(atom, positive, x, p)


def factors(f, positive=True) -> list:
    """Split ``f`` into conjunctive factors, each given by its raw DNF."""
    if isinstance(f, Paren):
        return factors(f.body, positive)
    if isinstance(f, Not):
        return factors(f.arg, not positive)
    if isinstance(f, (And, Or)) and isinstance(f, And) == positive:
        return [fac for a in f.args for fac in factors(a, positive)]
    return [_nnf(f, positive)]


def normalize_dnf(f, x: str, p: int) -> list:
    """Quantifier-free ``f`` as a list of :class:`Conjunct` over variable ``x``.

    Repeated literals and repeated disjuncts are dropped, as are disjuncts
    whose ground congruences already clash.
    """
    out, seen = [], set()
    for raw in nnf_literals(f):
        alternatives = [_classify(atom, pol, x, p) for atom, pol in dict.fromkeys(raw)]
        for combo in itertools.product(*alternatives):
            c = build_conjunct([lit for alt in combo for lit in alt], x, p)
            if c is None:
                continue
            key = (c.l, frozenset(c.x_literals + c.free))
            if key not in seen:
                seen.add(key)
                out.append(c)
    return out


def normalize(f, x: str, p: int):
    """The DNF of ``f`` as a formula whose ``x``-atoms are in normal form."""
    return disj([c.formula() for c in normalize_dnf(f, x, p)])


__all__ = [
    "Phi",
    "Psi",
    "HLit",
    "Free",
    "Conjunct",
    "build_conjunct",
    "classify",
    "factors",
    "lit_formula",
    "normalize",
    "normalize_dnf",
]

"""Deciding formulas over the standard model by eliminating one variable at a time.

For a normalized disjunct the substitution ``x' = l*x`` leaves three kinds of
condition on ``x'``: closed balls ``V(x' - c) >= rho`` and their complements,
one coset ``x' in c + N*G`` after combining congruences (``x' in l*G`` is one
of them), and ``H``-cosets. In the standard model ``G`` maps isometrically
onto a dense subgroup of ``Z_p``; ``c + N*G`` is dense in the ball
``B(c, v_p(N))``, and a coset of ``H`` meeting ``c + N*G`` is dense in it
too while finitely many ``H``-cosets never cover an open set. So a disjunct
is satisfiable exactly when the finite Boolean combination of balls is
nonempty in the ``p``-branching tree, plus some coset bookkeeping.

The same procedure runs symbolically: questions about the other variables
are answered by an oracle which, when it does not know, makes the run branch.
Collecting the branches that end in "satisfiable" gives the eliminated form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from sympy import factorint

from .errors import DomainError, UnsupportedFragmentError
from .groups import INF, GroupElement, StandardModel
from .formula.ast import (
    FALSE,
    TRUE,
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
    VLit,
    compare,
    conj,
    disj,
    free_vars,
    is_quantifier_free,
    negate,
)
from .formula.linear import ZERO, Lin, ValueExpr
from .formula.normalize import Conjunct, build_conjunct, classify, factors, normalize_dnf

_ZERO_TERM = GTerm.from_lin(ZERO)


# ---------------------------------------------------------------- ground semantics


def eval_ground(f, env: dict, model: StandardModel) -> bool:
    """Truth of a quantifier-free formula under ``env``, computed exactly."""
    if isinstance(f, Truth):
        return f.value
    if isinstance(f, Paren):
        return eval_ground(f.body, env, model)
    if isinstance(f, Ite):
        branch = f.then if eval_ground(f.cond, env, model) else f.other
        return eval_ground(branch, env, model)
    if isinstance(f, Not):
        return not eval_ground(f.arg, env, model)
    if isinstance(f, And):
        return all(eval_ground(a, env, model) for a in f.args)
    if isinstance(f, Or):
        return any(eval_ground(a, env, model) for a in f.args)
    if isinstance(f, VCmp):
        left = f.lhs.value_expr().evaluate(env, model)
        right = f.rhs.value_expr().evaluate(env, model)
        return compare(left, f.op, right)
    if isinstance(f, Eq):
        return (f.lhs.linear() - f.rhs.linear()).evaluate(env).is_identity
    if isinstance(f, Cong):
        return model.cong(f.lhs.linear().evaluate(env), f.rhs.linear().evaluate(env), f.n)
    if isinstance(f, HAtom):
        return f.term.linear().evaluate(env).in_h
    if isinstance(f, (Exists, Forall)):
        raise DomainError("eval_ground needs a quantifier-free formula; use decide")
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------- canonical questions


def _vapp(t: Lin, shift=0) -> VApp:
    return VApp(GTerm.from_lin(t.canonical_sign()), shift or None)


def _value_of(t: Lin, model) -> ValueExpr:
    """``V(t)`` as a literal when ``t`` is ground, else symbolic."""
    if t.is_zero:
        return ValueExpr.literal(INF)
    if t.is_ground:
        return ValueExpr.literal(model.big_V(t.const))
    return ValueExpr(t.canonical_sign(), 0)


def _ge(x: ValueExpr, y: ValueExpr, ask) -> bool:
    """``x >= y`` in ``Z u {inf}``, asking about symbolic sides in a canonical form."""
    if x.is_literal and y.is_literal:
        return x.shift >= y.shift
    if x.is_inf or y.is_literal and y.shift == -INF:
        return True
    if y.is_inf:
        # only V(t) = inf reaches inf
        return (not x.is_literal) and ask(_eq0(x.term))
    if x.is_literal:
        # x >= V(u) + s  iff  V(u) <= x - s
        bound = x.shift - y.shift
        if bound < 0:
            return False
        return ask(VCmp(_vapp(y.term), "<=", VLit(bound)))
    if y.is_literal:
        bound = y.shift - x.shift
        if bound <= 0:
            return True
        return ask(VCmp(_vapp(x.term), ">=", VLit(bound)))
    s = y.shift - x.shift
    if x.term.canonical_sign() == y.term.canonical_sign():
        # V(t) >= V(t) + s holds for s <= 0, otherwise only at t = 0
        return s <= 0 or ask(_eq0(x.term))
    return ask(VCmp(_vapp(x.term), ">=", _vapp(y.term, s)))


def _cmp(x: ValueExpr, op: str, y: ValueExpr, ask) -> bool:
    if op == ">=":
        return _ge(x, y, ask)
    if op == "<=":
        return _ge(y, x, ask)
    if op == ">":
        return not _ge(y, x, ask)
    if op == "<":
        return not _ge(x, y, ask)
    return _ge(x, y, ask) and _ge(y, x, ask)


def _eq0(t: Lin):
    return Eq(GTerm.from_lin(t.canonical_sign()), _ZERO_TERM)


def _is_zero(t: Lin, ask) -> bool:
    if t.is_ground:
        return t.is_zero
    return ask(_eq0(t))


def _cong0(t: Lin, n: int, ask) -> bool:
    """``t in n*G``."""
    t = t.reduce_mod(n)
    if t.is_ground:
        return t.const.is_identity
    return ask(Cong(GTerm.from_lin(t), n, _ZERO_TERM))


def _in_h_plus(t: Lin, n: int, ask) -> bool:
    """``t in H + n*G``, asked as one flat disjunction over the ``n`` cosets."""
    atoms = []
    for i in range(n):
        r = (t - Lin.constant(GroupElement(i, 0))).reduce_mod(n)
        if r.is_ground:
            if r.const.is_identity:
                return True
            continue
        atom = Cong(GTerm.from_lin(r), n, _ZERO_TERM)
        if atom not in atoms:
            atoms.append(atom)
    return bool(atoms) and ask(disj(atoms))


def _in_h(t: Lin, ask) -> bool:
    if t.is_ground:
        return t.const.in_h
    return ask(HAtom(GTerm.from_lin(t.canonical_sign())))


# ---------------------------------------------------------------- congruences


def _combine(congs, ask):
    """Merge ``x' = a (mod n)`` constraints; ``(N, c)`` or ``None`` if inconsistent.

    Work one prime power at a time: the constraint with the largest power of
    ``q`` subsumes the others once they agree with it, and CRT idempotents glue
    the prime parts back together without dividing symbolic terms.
    """
    parts: dict[int, tuple[int, Lin]] = {}
    for n, a in congs:
        if n < 1:
            raise DomainError("congruence modulus must be positive")
        for q, e in sorted(factorint(n).items()):
            cur = parts.get(q)
            if cur is None:
                parts[q] = (e, a)
                continue
            e0, a0 = cur
            low, (hi_e, hi_a) = min(e, e0), max((e, a), (e0, a0), key=lambda t: t[0])
            if not _cong0(a - a0, q**low, ask):
                return None
            parts[q] = (hi_e, hi_a)
    N = 1
    for q, (e, _) in parts.items():
        N *= q**e
    c = ZERO
    for q, (e, a) in parts.items():
        qe = q**e
        M = N // qe
        c = c + a.scale(M * pow(M, -1, qe))
    return N, c.reduce_mod(N)


def combine_congruences(congs):
    """Combine ground constraints ``x = a_i (mod n_i)`` into ``(n, a)`` or ``None``.

    ``congs`` is a list of ``(n, GroupElement)``. The empty list gives
    ``(1, identity)``.
    """
    out = _combine([(n, Lin.constant(a)) for n, a in congs], _no_questions)
    if out is None:
        return None
    N, c = out
    return N, c.const


def _no_questions(atom):
    raise AssertionError(f"ground computation asked {atom}")


# ---------------------------------------------------------------- ball calculus


def _nonempty(pos, neg, within, rad_le, succ, p) -> bool:
    """Is ``/\\ pos minus \\/ neg`` nonempty in the complete ``p``-branching tree?

    Balls are ``(center, radius)`` meaning ``{y : d(y, center) >= radius}``;
    ``within(a, b, r)`` tells whether ``d(a, b) >= r``. ``pos`` must be
    nonempty and radii finite.
    """
    c0, r0 = pos[0]
    for c, r in pos[1:]:
        if rad_le(r0, r):
            c0, r0 = c, r
    for c, r in pos:
        if not within(c0, c, r):
            return False
    inside = []
    for d, s in neg:
        if rad_le(s, r0):
            if within(c0, d, s):
                return False
        elif within(d, c0, r0):
            inside.append((d, s))
    return not _covered(c0, r0, inside, within, rad_le, succ, p)


def _covered(c, r, balls, within, rad_le, succ, p) -> bool:
    # every ball lies strictly inside B(c, r)
    if len(balls) < p:
        return False
    r1 = succ(r)
    groups: list[tuple[object, list]] = []
    for d, s in balls:
        for rep, members in groups:
            if within(rep, d, r1):
                members.append((d, s))
                break
        else:
            groups.append((d, [(d, s)]))
    if len(groups) < p:
        return False
    for rep, members in groups:
        if any(rad_le(s, r1) for _, s in members):
            continue
        if not _covered(rep, r1, members, within, rad_le, succ, p):
            return False
    return True


def ultrametric_nonempty(pos, neg, p: int, dist) -> bool:
    """Ball-combination test over an abstract ``p``-branching tree.

    ``dist(a, b)`` must be an ultrametric valuation of ``a - b`` (``inf`` on
    the diagonal) on centers drawn from a tree where every ball has exactly
    ``p`` children. An empty ``pos`` means the root ball of radius 0.
    """
    pos = list(pos) or []
    if not pos:
        if not neg:
            return True
        pos = [(neg[0][0], 0)]
    return _nonempty(
        pos,
        list(neg),
        lambda a, b, r: dist(a, b) >= r,
        lambda a, b: a <= b,
        lambda r: r + 1,
        p,
    )


# ---------------------------------------------------------------- the core


_BALL_OPS = {
    ">=": ((0, True),),
    ">": ((1, True),),
    "<=": ((1, False),),
    "<": ((0, False),),
    "=": ((0, True), (1, False)),
}


def _sat_core(l, phis, congs, h_in, h_out, ask, model, excluded=()) -> bool:
    """Satisfiability of one system in ``x' = l*x``.

    ``phis`` holds ``(center, op, radius)`` for ``V(x' - center) op radius``;
    ``congs`` holds ``(n, a)`` for ``x' = a (mod n)`` and ``excluded`` the
    same for ``x' != a (mod n)``; ``h_in``/``h_out`` hold offsets ``a`` with
    ``x' - a`` in or out of ``H``.
    """
    finite = []
    for center, op, radius in phis:
        if not radius.is_literal and _is_zero(radius.term, ask):
            radius = ValueExpr.literal(INF)
        if radius.is_inf:
            if op in ("=", ">="):
                return _at_point(center, l, phis, congs, h_in, h_out, ask, model, excluded)
            if op == ">":
                return False
            # x' != center or no condition: removing points never empties an open set
            continue
        finite.append((center, op, radius))

    combined = _combine(list(congs) + ([(l, ZERO)] if l > 1 else []), ask)
    if combined is None:
        return False
    N, c = combined

    if h_in:
        a1 = h_in[0]
        if not all(_in_h(a - a1, ask) for a in h_in[1:]):
            return False
        if any(_in_h(a1 - b, ask) for b in h_out):
            return False
    if not excluded:
        return _sat_coset(N, c, finite, h_in, ask, model)
    # split the coset into cosets of M*G, each wholly in or out of every excluded class
    M = math.lcm(N, *(n for n, _ in excluded))
    k = M // N

    def shift(i, j):
        return Lin.constant(GroupElement(N * i, N * j))

    banned = []
    for n, b in excluded:
        g = math.gcd(N, n)
        if not _cong0(c - b, g, ask):
            continue
        s = n // g
        cells = [(i, j) for i in range(s) for j in range(s)]
        # exactly one cell hits the class, so the last one needs no question
        hit = next((ij for ij in cells[:-1] if _cong0(c - b + shift(*ij), n, ask)), cells[-1])
        banned.append((s, hit))
    rows = range(k)
    if h_in:
        t = c - h_in[0]
        if not _in_h_plus(t, N, ask):
            return False
        # exactly one row of sub-cosets meets H
        row = next((j for j in range(k - 1) if _in_h_plus(t + shift(0, j), M, ask)), k - 1)
        rows = [row]
    for j in rows:
        for i in range(k):
            if any((i % s, j % s) == hit for s, hit in banned):
                continue
            if _sat_coset(M, c + shift(i, j), finite, (), ask, model):
                return True
    return False


def _sat_coset(N, c, finite, h_in, ask, model) -> bool:
    """Solutions inside the coset ``c + N*G``, given compatible H offsets."""
    if h_in and not _in_h_plus(c - h_in[0], N, ask):
        return False
    pos = [(ZERO, ValueExpr.literal(0))]
    if N > 1:
        pos.append((c, ValueExpr.literal(model.vp(N))))
    neg = []
    for center, op, radius in finite:
        for bump, positive in _BALL_OPS[op]:
            (pos if positive else neg).append((center, radius.plus(bump)))

    def within(a, b, r):
        return _ge(_value_of(a - b, model), r, ask)

    return _nonempty(
        pos, neg, within, lambda r1, r2: _ge(r2, r1, ask), lambda r: r.plus(1), model.p
    )


def _at_point(point, l, phis, congs, h_in, h_out, ask, model, excluded=()) -> bool:
    """Substitute ``x' := point``; every condition becomes a question."""
    if l > 1 and not _cong0(point, l, ask):
        return False
    for center, op, radius in phis:
        if not _cmp(_value_of(point - center, model), op, radius, ask):
            return False
    for n, a in congs:
        if not _cong0(point - a, n, ask):
            return False
    if any(_cong0(point - b, n, ask) for n, b in excluded):
        return False
    if not all(_in_h(point - a, ask) for a in h_in):
        return False
    return not any(_in_h(point - b, ask) for b in h_out)


def _conjunct_core(c: Conjunct, ask, model) -> bool:
    phis = [(phi.a, phi.op, phi.rhs.plus(-phi.r)) for phi in c.phis]
    congs = [(psi.n, psi.a) for psi in c.psis if psi.positive]
    excluded = [(psi.n, psi.a) for psi in c.psis if not psi.positive]
    h_in = [h.a for h in c.hs if h.positive]
    h_out = [h.a for h in c.hs if not h.positive]
    return _sat_core(c.l, phis, congs, h_in, h_out, ask, model, excluded)


# ---------------------------------------------------------------- oracles


class _NeedBranch(Exception):
    def __init__(self, atom):
        self.atom = atom


class _ReplayOracle:
    """Answers from fixed assumptions, ground atoms exactly, otherwise branches."""

    def __init__(self, assumptions: dict, model):
        self.assumptions = assumptions
        self.model = model

    def __call__(self, atom) -> bool:
        if atom in self.assumptions:
            return self.assumptions[atom]
        if not free_vars(atom):
            value = eval_ground(atom, {}, self.model)
            self.assumptions[atom] = value
            return value
        raise _NeedBranch(atom)


def _decision_tree(run, model, assumptions=None):
    """Formula equivalent to ``run(ask)`` over every assignment of the free atoms."""
    assumptions = dict(assumptions or {})
    try:
        value = run(_ReplayOracle(assumptions, model))
    except _NeedBranch as nb:
        yes = _decision_tree(run, model, {**assumptions, nb.atom: True})
        no = _decision_tree(run, model, {**assumptions, nb.atom: False})
        return _ite(nb.atom, yes, no)
    return TRUE if value else FALSE


def _simplify_ground(f, model):
    return f if free_vars(f) else Truth(eval_ground(f, {}, model))


def _ite(atom, yes, no):
    if yes == no:
        return yes
    if yes == TRUE and no == FALSE:
        return atom
    if yes == FALSE and no == TRUE:
        return negate(atom)
    return Ite(atom, yes, no)


# ---------------------------------------------------------------- elimination


def eliminate_exists(var: str, body, model: StandardModel):
    """A quantifier-free formula equivalent to ``exists var in G. body``."""
    out = []
    for c in normalize_dnf(body, var, model.p):
        free = [_simplify_ground(f.formula(), model) for f in c.free]
        if FALSE in free:
            continue
        core = _decision_tree(lambda ask: _conjunct_core(c, ask, model), model)
        out.append(conj(free + [core]))
    return disj(out)


def eliminate(f, model: StandardModel):
    """Remove every quantifier from ``f``, innermost first."""
    if isinstance(f, Paren):
        return eliminate(f.body, model)
    if isinstance(f, Not):
        return negate(eliminate(f.arg, model))
    if isinstance(f, (And, Or)):
        parts = [eliminate(a, model) for a in f.args]
        return conj(parts) if isinstance(f, And) else disj(parts)
    if isinstance(f, Exists):
        body = eliminate(f.body, model)
        if f.sort == "H":
            body = conj([HAtom(GTerm.of_var(f.var)), body])
        return eliminate_exists(f.var, body, model)
    if isinstance(f, Forall):
        body = negate(eliminate(f.body, model))
        if f.sort == "H":
            body = conj([HAtom(GTerm.of_var(f.var)), body])
        return negate(eliminate_exists(f.var, body, model))
    return f


def _exists_search(var: str, body, model: StandardModel) -> bool:
    """Truth of ``exists var. body`` for ``body`` free of other variables.

    Depth-first over the conjunctive factors of ``body`` (smallest first),
    checking each partial choice of literals with the exact core so that
    unsatisfiable prefixes are cut before the full product is formed.
    """
    p = model.p
    ask = lambda atom: eval_ground(atom, {}, model)  # noqa: E731
    facs = sorted(factors(body), key=len)
    memo = {}

    def sat(lits):
        key = frozenset(lits)
        if key not in memo:
            c = build_conjunct(lits, var, p)
            memo[key] = c is not None and all(
                ask(f.atom) == f.positive for f in c.free
            ) and _conjunct_core(c, ask, model)
        return memo[key]

    def search(i, lits, assigned):
        if i == len(facs):
            return True
        for alt in facs[i]:
            merged = dict(assigned)
            if any(merged.setdefault(atom, pol) != pol for atom, pol in alt):
                continue
            fresh = [(atom, pol) for atom, pol in alt if atom not in assigned]
            choices = [classify(atom, pol, var, p) for atom, pol in fresh]
            for combo in itertools.product(*choices):
                new = lits + [lit for part in combo for lit in part]
                if sat(new) and search(i + 1, new, merged):
                    return True
        return False

    return search(0, [], {})


def _truth(f, model: StandardModel) -> bool:
    """Truth of a sentence; the outermost quantifiers use :func:`_exists_search`."""
    if isinstance(f, Paren):
        return _truth(f.body, model)
    if isinstance(f, Not):
        return not _truth(f.arg, model)
    if isinstance(f, And):
        return all(_truth(a, model) for a in f.args)
    if isinstance(f, Or):
        return any(_truth(a, model) for a in f.args)
    if isinstance(f, (Exists, Forall)):
        body = eliminate(f.body, model)
        if isinstance(f, Forall):
            body = negate(body)
        if f.sort == "H":
            body = conj([HAtom(GTerm.of_var(f.var)), body])
        found = _exists_search(f.var, body, model)
        return found if isinstance(f, Exists) else not found
    return eval_ground(f, {}, model)


def decide(sentence, model: StandardModel) -> bool:
    """Truth value of a sentence in the standard model."""
    fv = free_vars(sentence)
    if fv:
        raise DomainError(f"not a sentence; free variables: {', '.join(sorted(fv))}")
    return _truth(sentence, model)


def decide_exists(body, var: str, model: StandardModel) -> bool:
    """Satisfiability of ``body`` in ``var`` (other variables must be absent)."""
    if isinstance(body, Conjunct):
        return _conjunct_core(body, lambda atom: eval_ground(atom, {}, model), model)
    extra = free_vars(body) - {var}
    if extra:
        raise DomainError(f"unexpected free variables: {', '.join(sorted(extra))}")
    return decide(Exists(var, "G", body), model)


# ---------------------------------------------------------------- ball systems


@dataclass(frozen=True)
class BallSystem:
    """A ground system in ``x' = l*x``.

    ``constraints`` holds ``(center, op, radius)`` for ``V(l*x - center) op
    radius``; ``coset`` is ``(n, a)`` for ``l*x = a (mod n)`` and already
    includes divisibility by ``l``; ``coset_out`` lists excluded classes
    ``(n, a)``; ``h_in``/``h_out`` hold offsets ``a`` with ``l*x - a`` in,
    or not in, ``H``.
    """

    var: str
    l: int = 1
    constraints: tuple = ()
    coset: tuple | None = None
    h_in: tuple = field(default=())
    h_out: tuple = field(default=())
    coset_out: tuple = field(default=())

    @property
    def h_flag(self) -> str:
        if self.h_in:
            return "in-H"
        return "not-in-H" if self.h_out else "unconstrained"

    @classmethod
    def from_conjunct(cls, c: Conjunct, model: StandardModel):
        """Ground disjunct to system; ``None`` when its congruences clash."""
        if c.free or any(
            not (phi.a.is_ground and (phi.rhs.is_literal or phi.rhs.term.is_ground))
            for phi in c.phis
        ):
            raise DomainError("BallSystem needs a ground disjunct")
        cons = []
        for phi in c.phis:
            value = phi.rhs.evaluate({}, model)
            cons.append((phi.a.const, phi.op, value if value == INF else value - phi.r))
        congs = [(psi.n, psi.a.const) for psi in c.psis if psi.positive]
        if c.l > 1:
            congs.append((c.l, GroupElement(0, 0)))
        coset = combine_congruences(congs)
        if coset is None:
            return None
        return cls(
            c.var,
            c.l,
            tuple(cons),
            coset if coset[0] > 1 else None,
            tuple(h.a.const for h in c.hs if h.positive),
            tuple(h.a.const for h in c.hs if not h.positive),
            tuple((psi.n, psi.a.const) for psi in c.psis if not psi.positive),
        )

    def holds_at(self, x: GroupElement, model: StandardModel) -> bool:
        y = self.l * x
        for center, op, radius in self.constraints:
            if not compare(model.big_V(y - center), op, radius):
                return False
        if self.coset and not model.cong(y, self.coset[1], self.coset[0]):
            return False
        if any(model.cong(y, a, n) for n, a in self.coset_out):
            return False
        if not all((y - a).in_h for a in self.h_in):
            return False
        return not any((y - b).in_h for b in self.h_out)


def ball_consistency(sys: BallSystem, model: StandardModel) -> bool:
    """Whether ``sys`` has a solution in ``G``."""
    phis = [(Lin.constant(c), op, ValueExpr.literal(r)) for c, op, r in sys.constraints]
    congs = [(sys.coset[0], Lin.constant(sys.coset[1]))] if sys.coset else []
    return _sat_core(
        sys.l,
        phis,
        congs,
        [Lin.constant(a) for a in sys.h_in],
        [Lin.constant(b) for b in sys.h_out],
        _no_questions,
        model,
        [(n, Lin.constant(a)) for n, a in sys.coset_out],
    )


def candidates(bound: int):
    """Group elements with ``|m|, |n| <= bound`` in the order ``(|m| + |n|, m, n)``."""
    for s in range(2 * bound + 1):
        layer = []
        for m in range(-min(s, bound), min(s, bound) + 1):
            rest = s - abs(m)
            if rest > bound:
                continue
            for n in sorted({rest, -rest}):
                layer.append((m, n))
        for m, n in sorted(layer):
            yield GroupElement(m, n)


def _centers(sys: BallSystem, bound: int):
    """Points ``x`` with ``l*x`` a ball center or coset representative."""
    pts = [center for center, _, _ in sys.constraints]
    if sys.coset:
        pts.append(sys.coset[1])
    for y in pts:
        if y.m % sys.l == 0 and y.n % sys.l == 0:
            x = GroupElement(y.m // sys.l, y.n // sys.l)
            if abs(x.m) <= bound and abs(x.n) <= bound:
                yield x


def witness_search(sys: BallSystem, bound: int, model: StandardModel):
    """A witness within ``bound`` for ``sys``, or ``None``.

    Ball centers are tried first; after that the scan runs in the order of
    ``candidates``, so the answer is deterministic.
    """
    for x in itertools.chain(_centers(sys, bound), candidates(bound)):
        if sys.holds_at(x, model):
            return x
    return None


def find_witness(body, var: str, model: StandardModel, bound: int, env=None):
    """Smallest ``x`` within ``bound`` with ``body`` true at ``var := x``."""
    env = dict(env or {})
    if not free_vars(body) <= set(env) | {var}:
        raise DomainError("body has unassigned free variables")
    if not is_quantifier_free(body):
        raise UnsupportedFragmentError("witness search needs a quantifier-free body")
    for x in candidates(bound):
        env[var] = x
        if eval_ground(body, env, model):
            return x
    return None


def check_sat(body, var: str, model: StandardModel, bound: int):
    """``(sat, witness)``: the theory answer plus a bounded witness when one exists."""
    sat = decide_exists(body, var, model)
    witness = find_witness(body, var, model, bound) if sat else None
    return sat, witness


__all__ = [
    "BallSystem",
    "ball_consistency",
    "candidates",
    "check_sat",
    "combine_congruences",
    "decide",
    "decide_exists",
    "eliminate",
    "eliminate_exists",
    "eval_ground",
    "find_witness",
    "ultrametric_nonempty",
    "witness_search",
]

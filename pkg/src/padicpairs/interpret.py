"""Discrete case: definable maps between ``alpha^Z``, ``beta^Z`` and ``gamma^Z``.

With ``v_p(alpha) = v_p(beta) > 0`` the quotient ``gamma = alpha/beta`` is a
unit, and a suitable power ``gamma^e`` lies in ``1 + pZ_p`` (``1 + 4Z_2``
when ``p = 2``), where ``v_p(gamma^(e*n) - 1) = v_p(n) + v_p(gamma^e - 1)``.
That identity turns ``alpha^n -> alpha^(v_p(n))`` into a map computed from
valuations alone, and with it ``p^n`` and ``V_p``. The second half of the
module compiles small arithmetic sentences over ``(N, +, V_p, v_p, p^x, <)``
into statements about ``alpha``-powers and evaluates both sides.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from sympy import isprime

from .errors import ConfigError, DomainError, FormulaSyntaxError, PadicPairsError, UnsupportedFragmentError
from .padic import multiplicative_order, vp


@dataclass(frozen=True)
class DiscreteConfig:
    """Generators of positive valuation, equalized as ``alpha**a``, ``beta**b``.

    ``gamma = alpha/beta`` is kept as is; ``gamma_exp`` is the least ``e``
    with ``gamma**e`` in ``1 + pZ_p`` (``1 + 4Z_2`` for ``p = 2``).
    """

    p: int
    alpha: int
    beta: int
    powers: tuple = (1, 1)
    gamma_exp: int = field(init=False)

    def __post_init__(self):
        p, a, b = self.p, self.alpha, self.beta
        if not isprime(p):
            raise ConfigError(f"p={p} is not prime")
        if a <= 1 or b <= 1:
            raise ConfigError("alpha and beta must be naturals greater than 1")
        if vp(a, p) <= 0 or vp(b, p) <= 0:
            raise ConfigError("the discrete case needs v_p(alpha), v_p(beta) > 0")
        if vp(a, p) != vp(b, p):
            raise ConfigError("v_p(alpha) != v_p(beta); use DiscreteConfig.normalized")
        if a == b:
            raise ConfigError("alpha = beta: gamma = 1 is a root of unity")
        modulus_exp = 2 if p == 2 else 1
        e = multiplicative_order(self.gamma, p, modulus_exp)
        object.__setattr__(self, "gamma_exp", e)

    @classmethod
    def normalized(cls, p: int, alpha: int, beta: int) -> "DiscreteConfig":
        """Replace the generators by powers with equal valuation."""
        if not isprime(p):
            raise ConfigError(f"p={p} is not prime")
        if alpha <= 1 or beta <= 1 or alpha % p or beta % p:
            raise ConfigError("the discrete case needs v_p(alpha), v_p(beta) > 0")
        va, vb = vp(alpha, p), vp(beta, p)
        g = gcd(va, vb)
        a, b = vb // g, va // g
        return cls(p, alpha**a, beta**b, powers=(a, b))

    @property
    def v(self) -> int:
        """The common valuation ``v_p(alpha) = v_p(beta)``."""
        return vp(self.alpha, self.p)

    @property
    def gamma(self) -> Fraction:
        return Fraction(self.alpha, self.beta)

    @property
    def gamma_e(self) -> Fraction:
        return self.gamma**self.gamma_exp

    def alpha_pow(self, n: int) -> Fraction:
        return Fraction(self.alpha) ** n


def tau(cfg: DiscreteConfig, n: int) -> Fraction:
    """The element of ``beta^Z`` with the valuation of ``alpha^n``, i.e. ``beta^n``."""
    return _tau_of(cfg, cfg.alpha_pow(n))


def _tau_of(cfg: DiscreteConfig, q: Fraction) -> Fraction:
    # found from the valuation alone
    return Fraction(cfg.beta) ** (vp(q, cfg.p) // cfg.v)


def sigma(cfg: DiscreteConfig, n: int) -> Fraction:
    """``alpha^n / tau(alpha^n) = gamma^n``."""
    q = cfg.alpha_pow(n)
    return q / _tau_of(cfg, q)


def identity_holds(cfg: DiscreteConfig, n: int) -> bool:
    """``v_p(gamma_e^n - 1) = v_p(n) + v_p(gamma_e - 1)``."""
    g = cfg.gamma_e
    return vp(g**n - 1, cfg.p) == vp(n, cfg.p) + vp(g - 1, cfg.p)


def _vp_via_gamma(cfg: DiscreteConfig, sigma_value: Fraction) -> int:
    g = sigma_value**cfg.gamma_exp
    if g == 1:
        raise DomainError("v_p(0) is undefined; n must be at least 1")
    return vp(g - 1, cfg.p) - vp(cfg.gamma_e - 1, cfg.p)


def vp_selfmap(cfg: DiscreteConfig, n: int) -> int:
    """``v_p(n)``, computed directly and through ``gamma``; the two must agree."""
    if n < 1:
        raise DomainError("n must be at least 1")
    direct = vp(n, cfg.p)
    through_gamma = _vp_via_gamma(cfg, sigma(cfg, n))
    if direct != through_gamma:
        raise AssertionError(f"v_p({n}) = {direct} but the gamma route gives {through_gamma}")
    return direct


def vp_decomposition(cfg: DiscreteConfig, n: int) -> tuple[int, int]:
    """The unique ``(m, k)`` with ``v_p(n) = v_p(alpha^m) + k`` and ``0 <= k < v_p(alpha)``."""
    return divmod(vp_selfmap(cfg, n), cfg.v)


def p_pow(p: int, n: int) -> int:
    """``min{k >= 1 : v_p(k) = n}``, found by search and checked against ``p**n``.

    The least ``k`` at level ``n`` is a multiple of the answer at level
    ``n - 1``, so each level scans at most ``p`` multiples.
    """
    if n < 0:
        raise DomainError("n must be a natural number")
    k = 1
    for level in range(1, n + 1):
        step = k
        k = step
        while vp(k, p) != level:
            k += step
    if k != p**n:
        raise AssertionError(f"min characterization gave {k} for p^{n}")
    return k


def big_Vp(p: int, n: int) -> int:
    """The largest power of ``p`` dividing ``n``."""
    if n < 1:
        raise DomainError("n must be at least 1")
    return p ** vp(n, p)


# ---------------------------------------------------------------- arithmetic sentences


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class Plus:
    left: object
    right: object


@dataclass(frozen=True)
class Apply:
    fn: str  # "v_p", "V_p" or "p^"
    arg: object


@dataclass(frozen=True)
class Compare:
    left: object
    op: str
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Junction:
    kind: str  # "and" or "or"
    args: tuple


@dataclass(frozen=True)
class Quant:
    kind: str  # "forall" or "exists"
    var: str
    low: int | None
    high: int | None
    body: object


_ARITH_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)|(?P<fn>V_p|v_p)|(?P<id>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>\.\.|<=|>=|[()<>=+^.])"
)
_ARITH_KEYWORDS = {"and", "or", "not", "forall", "exists", "in", "p"}
_CMP = ("<", "<=", "=", ">=", ">")


def _arith_tokens(text):
    toks, pos = [], 0
    while pos < len(text):
        m = _ARITH_TOKEN.match(text, pos)
        if not m:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        if m.lastgroup != "ws":
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            toks.append((m.lastgroup, m.group(), line, col))
        pos = m.end()
    line = text.count("\n") + 1
    toks.append(("eof", "", line, len(text) - (text.rfind("\n") + 1) + 1))
    return toks


class _ArithParser:
    """Sentences over ``(N, +, v_p, V_p, p^x, <)``.

    ::

        sentence := ("forall" | "exists") VAR ["in" NAT ".." NAT] "." sentence | disj
        disj     := conj ("or" conj)*        conj := lit ("and" lit)*
        lit      := "not" lit | "(" sentence ")" | term CMP term
        term     := factor ("+" factor)*
        factor   := NAT | VAR | "v_p(" term ")" | "V_p(" term ")" | "p^" factor | "(" term ")"
    """

    def __init__(self, text):
        self.toks = _arith_tokens(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg):
        _, _, line, col = self.tok
        return FormulaSyntaxError(msg, line, col)

    def at(self, text):
        return self.tok[1] == text and self.tok[0] in ("id", "op", "fn")

    def expect(self, text):
        if not self.at(text):
            raise self.error(f"expected {text!r}, found {self.tok[1] or 'end of input'!r}")
        self.i += 1

    def number(self):
        if self.tok[0] != "num":
            raise self.error("expected a number")
        v = int(self.tok[1])
        self.i += 1
        return v

    def parse(self):
        f = self.sentence()
        if self.tok[0] != "eof":
            raise self.error(f"unexpected {self.tok[1]!r}")
        return f

    def sentence(self):
        if self.at("forall") or self.at("exists"):
            kind = self.tok[1]
            self.i += 1
            var = self.variable()
            low = high = None
            if self.at("in"):
                self.i += 1
                low = self.number()
                self.expect("..")
                high = self.number()
            self.expect(".")
            return Quant(kind, var, low, high, self.sentence())
        return self.disj()

    def disj(self):
        parts = [self.conj()]
        while self.at("or"):
            self.i += 1
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Junction("or", tuple(parts))

    def conj(self):
        parts = [self.lit()]
        while self.at("and"):
            self.i += 1
            parts.append(self.lit())
        return parts[0] if len(parts) == 1 else Junction("and", tuple(parts))

    def lit(self):
        if self.at("not"):
            self.i += 1
            return Neg(self.lit())
        if self.at("("):
            save = self.i
            try:
                self.i += 1
                inner = self.sentence()
                self.expect(")")
                if not (self.tok[1] in _CMP or self.at("+")):
                    return inner
            except FormulaSyntaxError:
                pass
            self.i = save
        left = self.term()
        if self.tok[1] not in _CMP:
            raise self.error("expected a comparison")
        op = self.tok[1]
        self.i += 1
        return Compare(left, op, self.term())

    def term(self):
        t = self.factor()
        while self.at("+"):
            self.i += 1
            t = Plus(t, self.factor())
        return t

    def factor(self):
        kind, text = self.tok[0], self.tok[1]
        if kind == "num":
            return Num(self.number())
        if kind == "fn":
            self.i += 1
            self.expect("(")
            arg = self.term()
            self.expect(")")
            return Apply(text, arg)
        if self.at("p"):
            self.i += 1
            self.expect("^")
            return Apply("p^", self.factor())
        if self.at("("):
            self.i += 1
            t = self.term()
            self.expect(")")
            return t
        return Ref(self.variable())

    def variable(self):
        kind, text = self.tok[0], self.tok[1]
        if kind != "id" or text in _ARITH_KEYWORDS:
            raise self.error("expected a variable")
        self.i += 1
        return text


def parse_arith(text: str):
    return _ArithParser(text).parse()


def arith_text(f) -> str:
    if isinstance(f, Num):
        return str(f.value)
    if isinstance(f, Ref):
        return f.name
    if isinstance(f, Plus):
        return f"{arith_text(f.left)} + {_arith_factor(f.right)}"
    if isinstance(f, Apply):
        if f.fn == "p^":
            return f"p^{_arith_factor(f.arg)}"
        return f"{f.fn}({arith_text(f.arg)})"
    if isinstance(f, Compare):
        return f"{arith_text(f.left)} {f.op} {arith_text(f.right)}"
    if isinstance(f, Neg):
        return f"not {_arith_lit(f.arg)}"
    if isinstance(f, Junction):
        return f" {f.kind} ".join(_arith_lit(a) for a in f.args)
    if isinstance(f, Quant):
        rng = f" in {f.low}..{f.high}" if f.low is not None else ""
        return f"{f.kind} {f.var}{rng}. {arith_text(f.body)}"
    raise TypeError(f)


def _arith_factor(t):
    return f"({arith_text(t)})" if isinstance(t, Plus) else arith_text(t)


def _arith_lit(f):
    return f"({arith_text(f)})" if isinstance(f, (Junction, Quant)) else arith_text(f)


# ---------------------------------------------------------------- direct evaluation


def _term_direct(t, env, p):
    if isinstance(t, Num):
        return t.value
    if isinstance(t, Ref):
        return env[t.name]
    if isinstance(t, Plus):
        return _term_direct(t.left, env, p) + _term_direct(t.right, env, p)
    n = _term_direct(t.arg, env, p)
    if t.fn == "p^":
        return p**n
    if n < 1:
        raise DomainError(f"{t.fn}(0) is undefined")
    return vp(n, p) if t.fn == "v_p" else p ** vp(n, p)


def _range(q: Quant):
    if q.low is None:
        raise UnsupportedFragmentError(f"unbounded quantifier over {q.var} cannot be evaluated")
    return range(q.low, q.high + 1)


def eval_direct(f, env, p: int) -> bool:
    """Truth over the naturals."""
    if isinstance(f, Compare):
        from .formula.ast import compare

        return compare(_term_direct(f.left, env, p), f.op, _term_direct(f.right, env, p))
    if isinstance(f, Neg):
        return not eval_direct(f.arg, env, p)
    if isinstance(f, Junction):
        parts = (eval_direct(a, env, p) for a in f.args)
        return all(parts) if f.kind == "and" else any(parts)
    if isinstance(f, Quant):
        values = (eval_direct(f.body, {**env, f.var: n}, p) for n in _range(f))
        return all(values) if f.kind == "forall" else any(values)
    raise TypeError(f)


# ---------------------------------------------------------------- compiled statements


@dataclass(frozen=True)
class APow:
    """``alpha^n`` for a literal ``n``."""

    n: int


@dataclass(frozen=True)
class AVar:
    name: str


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Map:
    fn: str  # "vpmap", "Vmap" or "ppow"
    arg: object


@dataclass(frozen=True)
class ValCmp:
    """Valuation comparison (``<`` etc.) or equality of ``alpha``-powers."""

    left: object
    op: str
    right: object


def _compile(f):
    if isinstance(f, Num):
        return APow(f.value)
    if isinstance(f, Ref):
        return AVar(f.name)
    if isinstance(f, Plus):
        return Mul(_compile(f.left), _compile(f.right))
    if isinstance(f, Apply):
        fn = {"v_p": "vpmap", "V_p": "Vmap", "p^": "ppow"}[f.fn]
        return Map(fn, _compile(f.arg))
    if isinstance(f, Compare):
        return ValCmp(_compile(f.left), f.op, _compile(f.right))
    if isinstance(f, Neg):
        return Neg(_compile(f.arg))
    if isinstance(f, Junction):
        return Junction(f.kind, tuple(_compile(a) for a in f.args))
    if isinstance(f, Quant):
        return Quant(f.kind, f.var, f.low, f.high, _compile(f.body))
    raise TypeError(f)


def compiled_text(c) -> str:
    if isinstance(c, APow):
        return f"alpha^{c.n}"
    if isinstance(c, AVar):
        return c.name.upper()
    if isinstance(c, Mul):
        return f"{compiled_text(c.left)} * {compiled_text(c.right)}"
    if isinstance(c, Map):
        return f"{c.fn}({compiled_text(c.arg)})"
    if isinstance(c, ValCmp):
        if c.op == "=":
            return f"{compiled_text(c.left)} = {compiled_text(c.right)}"
        return f"v({compiled_text(c.left)}) {c.op} v({compiled_text(c.right)})"
    if isinstance(c, Neg):
        return f"not {_compiled_lit(c.arg)}"
    if isinstance(c, Junction):
        return f" {c.kind} ".join(_compiled_lit(a) for a in c.args)
    if isinstance(c, Quant):
        dom = f"alpha^[{c.low}..{c.high}]" if c.low is not None else "alpha^N"
        return f"{c.kind} {c.var.upper()} in {dom}. {compiled_text(c.body)}"
    raise TypeError(c)


def _compiled_lit(c):
    return f"({compiled_text(c)})" if isinstance(c, (Junction, Quant)) else compiled_text(c)


def compile_atomic(f) -> str:
    """Translate an arithmetic sentence (text or AST) to the ``alpha``-power language.

    ``n`` becomes ``alpha^n``, ``+`` becomes multiplication, ``<`` compares
    valuations, and ``v_p``, ``V_p``, ``p^`` become the maps ``vpmap``,
    ``Vmap`` and ``ppow`` defined from ``tau``, ``sigma`` and valuations.
    """
    if isinstance(f, str):
        f = parse_arith(f)
    return compiled_text(_compile(f))


class _RationalModel:
    """The maps on ``alpha``-powers, using only field arithmetic and ``v_p``."""

    def __init__(self, cfg: DiscreteConfig):
        self.cfg = cfg
        self.p = cfg.p
        self.alpha = Fraction(cfg.alpha)
        self._levels = [self.alpha]  # ppow table: alpha^(p^j)

    def vpmap(self, q: Fraction) -> Fraction:
        s = q / _tau_of(self.cfg, q)
        d = _vp_via_gamma(self.cfg, s)
        m, k = divmod(d, self.cfg.v)
        return (self.alpha**m) ** self.cfg.v * self.alpha**k

    def ppow(self, q: Fraction) -> Fraction:
        # least alpha^k with vpmap(alpha^k) = q, scanning multiples of the previous level
        level, target = 0, q
        while self.alpha**level != target:
            level += 1
            if level > 64:
                raise DomainError("ppow argument too large to evaluate")
            if level < len(self._levels):
                continue
            step = self._levels[-1]
            k = step
            want = self.alpha**level
            while self.vpmap(k) != want:
                k *= step
            self._levels.append(k)
        return self._levels[level]

    def term(self, c, env) -> Fraction:
        if isinstance(c, APow):
            return self.alpha**c.n
        if isinstance(c, AVar):
            return env[c.name]
        if isinstance(c, Mul):
            return self.term(c.left, env) * self.term(c.right, env)
        q = self.term(c.arg, env)
        if c.fn == "ppow":
            return self.ppow(q)
        if q == 1:
            raise DomainError(f"{c.fn}(alpha^0) is undefined")
        v = self.vpmap(q)
        return v if c.fn == "vpmap" else self.ppow(v)

    def holds(self, c, env) -> bool:
        if isinstance(c, ValCmp):
            from .formula.ast import compare

            a, b = self.term(c.left, env), self.term(c.right, env)
            if c.op == "=":
                return a == b
            return compare(vp(a, self.p), c.op, vp(b, self.p))
        if isinstance(c, Neg):
            return not self.holds(c.arg, env)
        if isinstance(c, Junction):
            parts = (self.holds(a, env) for a in c.args)
            return all(parts) if c.kind == "and" else any(parts)
        if isinstance(c, Quant):
            values = (self.holds(c.body, {**env, c.var: self.alpha**n}) for n in _range(c))
            return all(values) if c.kind == "forall" else any(values)
        raise TypeError(c)


class DualEvalMismatch(PadicPairsError):
    """Direct and compiled evaluation disagree."""


def eval_compiled(f, env, cfg: DiscreteConfig) -> bool:
    """Evaluate the compiled form of ``f`` over exact rationals."""
    if isinstance(f, str):
        f = parse_arith(f)
    model = _RationalModel(cfg)
    return model.holds(_compile(f), {k: model.alpha**v for k, v in env.items()})


def dual_eval(f, env, cfg: DiscreteConfig) -> bool:
    """Evaluate ``f`` over the naturals and its compiled form over the rationals."""
    if isinstance(f, str):
        f = parse_arith(f)
    env = dict(env or {})
    direct = eval_direct(f, env, cfg.p)
    compiled = eval_compiled(f, env, cfg)
    if direct != compiled:
        raise DualEvalMismatch(f"{arith_text(f)}: direct {direct}, compiled {compiled}")
    return direct

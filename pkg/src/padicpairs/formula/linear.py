"""Integer-linear group terms and symbolic value expressions."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..groups import INF, IDENTITY, GroupElement


@dataclass(frozen=True)
class Lin:
    """``sum(c_v * v) + const`` with ``coeffs`` a sorted tuple of ``(var, c)``, c != 0."""

    coeffs: tuple = ()
    const: GroupElement = IDENTITY

    @classmethod
    def var(cls, name: str, c: int = 1) -> "Lin":
        return cls(((name, c),)) if c else cls()

    @classmethod
    def constant(cls, g: GroupElement) -> "Lin":
        return cls((), g)

    @staticmethod
    def _merge(pairs) -> tuple:
        acc: dict[str, int] = {}
        for v, c in pairs:
            acc[v] = acc.get(v, 0) + c
        return tuple(sorted((v, c) for v, c in acc.items() if c))

    def __add__(self, other: "Lin") -> "Lin":
        return Lin(self._merge(self.coeffs + other.coeffs), self.const + other.const)

    def __neg__(self) -> "Lin":
        return Lin(tuple((v, -c) for v, c in self.coeffs), -self.const)

    def __sub__(self, other: "Lin") -> "Lin":
        return self + (-other)

    def scale(self, k: int) -> "Lin":
        if k == 0:
            return Lin()
        return Lin(tuple((v, k * c) for v, c in self.coeffs), k * self.const)

    __rmul__ = scale

    def coeff(self, var: str) -> int:
        return dict(self.coeffs).get(var, 0)

    def drop(self, var: str) -> "Lin":
        return Lin(tuple((v, c) for v, c in self.coeffs if v != var), self.const)

    @property
    def vars(self) -> frozenset:
        return frozenset(v for v, _ in self.coeffs)

    @property
    def is_ground(self) -> bool:
        return not self.coeffs

    @property
    def is_zero(self) -> bool:
        return not self.coeffs and self.const.is_identity

    def content(self) -> int:
        g = 0
        for _, c in self.coeffs:
            g = gcd(g, c)
        return gcd(gcd(g, self.const.m), self.const.n)

    def divide(self, k: int) -> "Lin":
        """Exact division; ``k`` must divide :meth:`content`."""
        return Lin(
            tuple((v, c // k) for v, c in self.coeffs),
            GroupElement(self.const.m // k, self.const.n // k),
        )

    def reduce_mod(self, n: int) -> "Lin":
        """Representative modulo ``n*G`` with every integer reduced into ``[0, n)``."""
        return Lin(
            self._merge((v, c % n) for v, c in self.coeffs),
            GroupElement(self.const.m % n, self.const.n % n),
        )

    def canonical_sign(self) -> "Lin":
        """``self`` or ``-self``, chosen so that equal-valuation terms share a key."""
        if self.coeffs:
            lead = self.coeffs[0][1]
        else:
            lead = self.const.m or self.const.n
        return -self if lead < 0 else self

    def evaluate(self, env) -> GroupElement:
        out = self.const
        for v, c in self.coeffs:
            try:
                out = out + c * env[v]
            except KeyError:
                raise KeyError(f"no value for variable {v!r}") from None
        return out


ZERO = Lin()


@dataclass(frozen=True)
class ValueExpr:
    """A value ``V(term) + shift`` or, when ``term`` is None, the literal ``shift``.

    Literals range over the naturals plus ``INF``; symbolic shifts may be any
    integer (comparisons are made in ``Z u {inf}``).
    """

    term: Lin | None
    shift: int | float = 0

    @classmethod
    def literal(cls, value) -> "ValueExpr":
        return cls(None, value)

    @property
    def is_literal(self) -> bool:
        return self.term is None

    @property
    def is_inf(self) -> bool:
        return self.term is None and self.shift == INF

    def plus(self, r: int) -> "ValueExpr":
        if self.is_inf:
            return self
        return ValueExpr(self.term, self.shift + r)

    def evaluate(self, env, model):
        if self.term is None:
            return self.shift
        v = model.big_V(self.term.evaluate(env))
        return v if v == INF else v + self.shift

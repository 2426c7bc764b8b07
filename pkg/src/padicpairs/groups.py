"""The standard model ``(G, H, V) = (alpha^Z beta^Z, alpha^Z, V_p)``.

Group notation is additive throughout: the element ``alpha**m * beta**n`` is
``GroupElement(m, n)``, ``g + h`` multiplies, ``k * g`` raises to the power
``k``. A term ``l*x - a`` is therefore realized as ``x**l * a**(-1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .config import Config
from .errors import DomainError, IndeterminateError
from .padic import DEFAULT_PRECISION, _ival, padic_log, vp

INF = math.inf


def succ(value, r: int = 1):
    """``r``-th successor in ``N u {inf}``; the successor of ``inf`` is ``inf``."""
    return value if value == INF else value + r


@dataclass(frozen=True, order=True)
class GroupElement:
    m: int
    n: int

    def __add__(self, other):
        return GroupElement(self.m + other.m, self.n + other.n)

    def __sub__(self, other):
        return GroupElement(self.m - other.m, self.n - other.n)

    def __neg__(self):
        return GroupElement(-self.m, -self.n)

    def __rmul__(self, k: int):
        return GroupElement(k * self.m, k * self.n)

    @property
    def is_identity(self) -> bool:
        return self.m == 0 and self.n == 0

    @property
    def in_h(self) -> bool:
        return self.n == 0

    def __str__(self):
        return f"g({self.m},{self.n})"

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n}


IDENTITY = GroupElement(0, 0)
ALPHA = GroupElement(1, 0)
BETA = GroupElement(0, 1)


class StandardModel:
    """Valuation, congruence and residue computations for one :class:`Config`."""

    def __init__(self, config: Config):
        self.config = config
        self.p = config.p
        self.k = config.k

    def realize(self, g: GroupElement) -> Fraction:
        """The exact rational ``alpha**m * beta**n``."""
        return Fraction(self.config.alpha) ** g.m * Fraction(self.config.beta) ** g.n

    def _residue(self, g: GroupElement, N: int) -> int:
        mod = self.p**N
        return pow(self.config.alpha, g.m, mod) * pow(self.config.beta, g.n, mod) % mod

    def big_V(self, g: GroupElement, method: str = "exact"):
        """``V(g) = v_p(g - 1) - k``; the identity has value ``inf``."""
        if g.is_identity:
            return INF
        if method == "exact":
            return self._big_v_exact(g)
        if method == "log":
            return self._big_v_log(g)
        raise ValueError(f"unknown method {method!r}")

    def _big_v_exact(self, g: GroupElement) -> int:
        # alpha^m beta^n - 1 = (A - B)/B with B a unit, so v_p(A - B) is the answer;
        # A != B, so escalating the modulus terminates
        a, b, p = self.config.alpha, self.config.beta, self.p
        N = 64
        while True:
            mod = p**N
            A = pow(a, max(g.m, 0), mod) * pow(b, max(g.n, 0), mod)
            B = pow(a, max(-g.m, 0), mod) * pow(b, max(-g.n, 0), mod)
            r = (A - B) % mod
            if r:
                return _ival(r, p) - self.k
            N *= 2

    def _big_v_log(self, g: GroupElement) -> int:
        N = DEFAULT_PRECISION
        cap = self.config.max_precision
        while True:
            la = padic_log(self.config.alpha, self.p, N, cap)
            lb = padic_log(self.config.beta, self.p, N, cap)
            total = g.m * la + g.n * lb
            if not total.possibly_zero:
                return total.valuation - self.k
            if N >= cap:
                raise IndeterminateError(
                    f"log valuation of {g} not certified at precision {N}", reached=N
                )
            N = min(2 * N, cap)

    def distance(self, g: GroupElement, h: GroupElement):
        return self.big_V(g - h)

    @staticmethod
    def cong(g: GroupElement, h: GroupElement, n: int) -> bool:
        """``g = h + n*z`` for some ``z`` in ``G`` (componentwise, by freeness)."""
        if n < 1:
            raise DomainError("modulus must be at least 1")
        return (g.m - h.m) % n == 0 and (g.n - h.n) % n == 0

    def residue_unit(self, x: GroupElement, y: GroupElement) -> int:
        """The unique ``0 < i < p`` with ``V(x - i*y) > V(x)``."""
        vx, vy = self.big_V(x), self.big_V(y)
        if vx != vy or vx == INF:
            raise DomainError(f"need V(x) = V(y) < inf, got {vx} and {vy}")
        v = vx + self.k
        p = self.p
        rx = (self._residue(x, v + 1) - 1) // p**v
        ry = (self._residue(y, v + 1) - 1) // p**v
        return rx * pow(ry, -1, p) % p

    @staticmethod
    def quotient_reps(n: int, subgroup: str = "G") -> list[GroupElement]:
        """Representatives of ``G/nG`` (or ``H/nH``)."""
        if n < 1:
            raise DomainError("n must be positive")
        if subgroup == "H":
            return [GroupElement(i, 0) for i in range(n)]
        return [GroupElement(i, j) for i in range(n) for j in range(n)]

    def vp(self, n: int) -> int:
        return vp(n, self.p)

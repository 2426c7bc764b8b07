"""Exact p-adic primitives on rationals.

Everything here works on :class:`fractions.Fraction` values (or ints) and a
prime ``p``. Truncated results are returned as :class:`PadicApprox`, which
keeps track of the absolute precision that was actually justified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DomainError

DEFAULT_PRECISION = 32
MAX_PRECISION = 4096


def _ival(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(q, p: int) -> int:
    """Return the p-adic valuation of a nonzero rational.

    >>> vp(75, 5), vp(Fraction(-5, 11), 5)
    (2, 1)
    """
    q = Fraction(q)
    if q == 0:
        raise DomainError("v_p(0) is infinite; use the valued-group layer for infinity")
    return _ival(abs(q.numerator), p) - _ival(q.denominator, p)


def unit_residue(q, p: int, N: int) -> int:
    """Residue of a p-integral rational modulo ``p**N``."""
    q = Fraction(q)
    mod = p**N
    if q.denominator % p == 0:
        raise DomainError(f"{q} is not p-integral for p={p}")
    return q.numerator * pow(q.denominator, -1, mod) % mod


def lambda_rep(x, p: int) -> Fraction:
    """The element of ``p**Z`` with the same valuation as ``x``."""
    return Fraction(p) ** vp(x, p)


@dataclass(frozen=True)
class PadicApprox:
    """A p-adic number ``p**valuation * unit_part`` known modulo ``p**precision``.

    When the value is zero modulo ``p**precision`` the valuation cannot be
    certified; such values are stored with ``unit_part == 0`` and
    ``valuation == precision`` and report :attr:`possibly_zero`.
    """

    p: int
    unit_part: int
    valuation: int
    precision: int

    def __post_init__(self):
        if self.precision < 1 and not self.possibly_zero:
            raise DomainError("precision must be at least 1")
        if self.unit_part % self.p == 0 and self.unit_part != 0:
            raise DomainError("unit_part must be coprime to p")

    @property
    def possibly_zero(self) -> bool:
        return self.unit_part == 0

    @classmethod
    def from_residue(cls, residue: int, p: int, N: int, shift: int = 0) -> "PadicApprox":
        """Build from ``p**shift * residue`` where ``residue`` is known mod ``p**N``.

        The absolute precision of the result is ``N + shift``.
        """
        residue %= p**N
        if residue == 0:
            return cls(p, 0, N + shift, N + shift)
        v = _ival(residue, p)
        unit = (residue // p**v) % p ** (N - v)
        return cls(p, unit, v + shift, N + shift)

    @classmethod
    def from_rational(cls, q, p: int, N: int) -> "PadicApprox":
        q = Fraction(q)
        if q == 0:
            return cls(p, 0, N, N)
        v = vp(q, p)
        if v >= N:
            return cls(p, 0, N, N)
        unit = unit_residue(q / Fraction(p) ** v, p, N - v)
        return cls(p, unit, v, N)

    @property
    def residue(self) -> int:
        """The value modulo ``p**precision`` (only meaningful when valuation >= 0)."""
        if self.valuation < 0:
            raise DomainError("value is not p-integral")
        return self.unit_part * self.p**self.valuation % self.p**self.precision

    def _check(self, other):
        if not isinstance(other, PadicApprox):
            other = PadicApprox.from_rational(other, self.p, self.precision)
        if other.p != self.p:
            raise DomainError("mixing different primes")
        return other

    def _shifted(self, low: int) -> int:
        # integer u with value = p**low * u (exact), requires valuation >= low
        return self.unit_part * self.p ** (self.valuation - low)

    def __add__(self, other):
        other = self._check(other)
        N = min(self.precision, other.precision)
        low = min(self.valuation, other.valuation, N)
        total = self._shifted(low) + other._shifted(low)
        return PadicApprox.from_residue(total, self.p, N - low, low)

    __radd__ = __add__

    def __neg__(self):
        if self.possibly_zero:
            return self
        mod = self.p ** (self.precision - self.valuation)
        return PadicApprox(self.p, (-self.unit_part) % mod, self.valuation, self.precision)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        N = min(self.precision + other.valuation, other.precision + self.valuation)
        v = self.valuation + other.valuation
        if self.possibly_zero or other.possibly_zero or v >= N:
            return PadicApprox(self.p, 0, N, N)
        return PadicApprox.from_residue(self.unit_part * other.unit_part, self.p, N - v, v)

    __rmul__ = __mul__

    def congruent(self, other, N: int | None = None) -> bool:
        """True when the two values agree modulo ``p**N`` (default: common precision)."""
        other = self._check(other)
        diff = self - other
        N = diff.precision if N is None else N
        if N > diff.precision:
            raise DomainError("requested precision exceeds what is known")
        return diff.valuation >= N


def _log_terms(v: int, N: int, p: int) -> int:
    """Number of series terms whose valuation can be below N."""
    i = 1
    while i * v - _ilog(i, p) < N:
        i += 1
    return i - 1


def _ilog(i: int, p: int) -> int:
    e, q = 0, p
    while q <= i:
        q *= p
        e += 1
    return e


def padic_log(x, p: int, N: int, max_precision: int = MAX_PRECISION) -> PadicApprox:
    """Truncated p-adic logarithm of ``x`` modulo ``p**N``.

    Requires ``v_p(x - 1) >= 1`` (``>= 2`` when ``p == 2``). Every series
    term with valuation below ``N`` is summed; the result has absolute
    precision ``N`` and valuation ``v_p(x - 1)``.

    >>> padic_log(6, 5, 3).residue
    55
    """
    if N < 1:
        raise DomainError("precision must be at least 1")
    if N > max_precision:
        raise DomainError(f"precision {N} exceeds max_precision {max_precision}")
    return _padic_log(Fraction(x), p, N)


@lru_cache(maxsize=1024)
def _padic_log(x: Fraction, p: int, N: int) -> PadicApprox:
    u = x - 1
    if u == 0:
        return PadicApprox(p, 0, N, N)
    v = vp(u, p)
    least = 2 if p == 2 else 1
    if v < least:
        hint = " (square the argument first)" if p == 2 and v == 1 else ""
        raise DomainError(f"log_p needs v_p(x - 1) >= {least}, got {v}{hint}")
    if v >= N:
        return PadicApprox(p, 0, N, N)
    terms = _log_terms(v, N, p)
    M = N + _ilog(terms, p)
    mod = p**M
    target = p**N
    ur = unit_residue(u, p, M)
    acc = 0
    power = 1
    for i in range(1, terms + 1):
        power = power * ur % mod
        e = _ival(i, p)
        unit_i = i // p**e
        term = (power // p**e) * pow(unit_i, -1, target)
        acc += term if i % 2 else -term
    return PadicApprox.from_residue(acc, p, N)


def is_nth_power(x, n: int, p: int) -> bool:
    """Decide whether ``x`` is an n-th power in the multiplicative group of Q_p.

    The valuation must be divisible by ``n``; the unit part is then tested
    modulo ``p**(2*v_p(n) + 1)``, which suffices by Hensel's lemma.
    """
    x = Fraction(x)
    if x == 0:
        raise DomainError("0 is excluded")
    if n < 2:
        raise DomainError("n must be at least 2")
    v = vp(x, p)
    if v % n:
        return False
    e = _ival(n, p)
    K = 2 * e + 1
    mod = p**K
    u = unit_residue(x / Fraction(p) ** v, p, K)
    if p == 2:
        # Z_2^x = {+-1} x (1 + 4Z_2); 2**e-th powers are exactly 1 + 2**(e+2)Z_2
        return e == 0 or u % 2 ** (e + 2) == 1
    order = p ** (K - 1) * (p - 1)
    return pow(u, order // gcd(n, order), mod) == 1


def multiplicative_order(a, p: int, N: int) -> int:
    """Order of the p-adic unit ``a`` in ``(Z/p**N)^x``."""
    mod = p**N
    r = unit_residue(a, p, N)
    if r % p == 0:
        raise DomainError("not a unit")
    phi = p ** (N - 1) * (p - 1)
    order = phi
    for q in _prime_factors(phi):
        while order % q == 0 and pow(r, order // q, mod) == 1:
            order //= q
    return order


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out

"""Ambient parameters of the dense case: a prime and two generators."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from sympy import isprime

from .errors import ConfigError, DependenceError
from .mann import mult_indep
from .padic import MAX_PRECISION, multiplicative_order, vp


@dataclass(frozen=True)
class Config:
    """Parameters ``(p, alpha, beta)`` with ``k = v_p(alpha - 1)``.

    Construction validates, in order: ``p`` prime, generators above 1,
    multiplicative independence, ``v_p(alpha) = v_p(beta) = 0`` and
    ``v_p(alpha - 1) = v_p(beta - 1) = k >= 1`` (``k >= 2`` for ``p = 2``).
    Use :meth:`normalized` to replace the generators by suitable powers.
    """

    p: int
    alpha: int
    beta: int
    max_precision: int = MAX_PRECISION
    default_bound: int = 10_000
    powers: tuple = (1, 1)
    k: int = field(init=False)

    def __post_init__(self):
        p, a, b = self.p, self.alpha, self.beta
        if not isprime(p):
            raise ConfigError(f"p={p} is not prime")
        if a <= 1 or b <= 1:
            raise ConfigError("alpha and beta must be naturals greater than 1")
        dep = mult_indep(a, b)
        if dep is not True:
            m, n = dep[1]
            raise DependenceError(
                f"alpha={a} and beta={b} are multiplicatively dependent: "
                f"{a}^{m} = {b}^{n}; the pair reduces to the cyclic group they share "
                "(finite-index subgroup reduction), which this tool does not perform",
                (m, n),
            )
        if vp(a, p) or vp(b, p):
            raise ConfigError(
                f"need v_p(alpha) = v_p(beta) = 0 for the dense case (p={p}); "
                "the discrete case lives in padicpairs.interpret"
            )
        ka, kb = vp(a - 1, p), vp(b - 1, p)
        least = 2 if p == 2 else 1
        if ka != kb or ka < least:
            raise ConfigError(
                f"need v_p(alpha - 1) = v_p(beta - 1) >= {least}, got {ka} and {kb}; "
                "Config.normalized replaces the generators by suitable powers"
            )
        object.__setattr__(self, "k", ka)

    @classmethod
    def normalized(cls, p: int, alpha: int, beta: int, **kwargs) -> "Config":
        """Replace ``alpha``, ``beta`` by powers satisfying the invariants."""
        if not isprime(p):
            raise ConfigError(f"p={p} is not prime")
        if alpha <= 1 or beta <= 1:
            raise ConfigError("alpha and beta must be naturals greater than 1")
        if alpha % p == 0 or beta % p == 0:
            raise ConfigError("generators must be p-adic units for the dense case")
        modulus_exp = 2 if p == 2 else 1
        ea = multiplicative_order(alpha, p, modulus_exp)
        eb = multiplicative_order(beta, p, modulus_exp)
        a, b = alpha**ea, beta**eb
        ka, kb = vp(a - 1, p), vp(b - 1, p)
        if ka < kb:
            ea *= p ** (kb - ka)
        elif kb < ka:
            eb *= p ** (ka - kb)
        return cls(p, alpha**ea, beta**eb, powers=(ea, eb), **kwargs)

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        """Build from ``PGL_P``, ``PGL_ALPHA``, ``PGL_BETA``; keyword overrides win."""
        values = {
            "p": int(os.environ.get("PGL_P", 5)),
            "alpha": int(os.environ.get("PGL_ALPHA", 6)),
            "beta": int(os.environ.get("PGL_BETA", 11)),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

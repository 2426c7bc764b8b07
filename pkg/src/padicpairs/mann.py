"""Bounded enumeration of nondegenerate solutions of Mann equations.

An equation ``a_1*x_1 + ... + a_n*x_n = 1`` is solved with every ``x_i`` in
the multiplicative group generated by ``generators``, restricted to the
exponent box ``|e| <= bound``. Lists produced here are complete only inside
that box; nothing is claimed beyond it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from sympy import Matrix, factorint

from .errors import BudgetError, DomainError

DEFAULT_CEILING = 2_000_000


def mult_indep(a: int, b: int):
    """Test multiplicative independence of two naturals greater than 1.

    Returns ``True`` when independent, otherwise ``(False, (m, n))`` with
    ``a**m == b**n`` and ``(m, n)`` in lowest terms.

    >>> mult_indep(4, 8)
    (False, (3, 2))
    """
    if a <= 1 or b <= 1:
        raise DomainError("both arguments must exceed 1")
    fa, fb = factorint(a), factorint(b)
    if set(fa) != set(fb):
        return True
    q = next(iter(fa))
    m, n = fb[q], fa[q]
    g = gcd(m, n)
    m, n = m // g, n // g
    if all(fa[r] * m == fb[r] * n for r in fa):
        return False, (m, n)
    return True


def _independent(generators) -> bool:
    primes = sorted({q for g in generators for q in factorint(g)})
    rows = [[factorint(g).get(q, 0) for q in primes] for g in generators]
    return Matrix(rows).rank() == len(generators)


@dataclass(frozen=True)
class MannInstance:
    coeffs: tuple
    generators: tuple
    bound: int
    solutions: tuple = field(default=())
    complete_within_bound: bool = True

    def values(self, solution) -> tuple:
        """Realize a solution (a tuple of exponent vectors) as rationals."""
        return tuple(_realize(self.generators, e) for e in solution)

    def to_json(self) -> dict:
        return {
            "coeffs": [str(c) for c in self.coeffs],
            "generators": list(self.generators),
            "bound": self.bound,
            "solutions": [[list(e) for e in sol] for sol in self.solutions],
            "values": [[str(v) for v in self.values(sol)] for sol in self.solutions],
            "complete_within_bound": self.complete_within_bound,
            "axiom_text": mann_axiom(self),
        }


def _realize(generators, exps) -> Fraction:
    out = Fraction(1)
    for g, e in zip(generators, exps):
        out *= Fraction(g) ** e
    return out


def is_nondegenerate(coeffs, values) -> bool:
    """No nonempty proper subset of the terms sums to zero."""
    n = len(coeffs)
    terms = [Fraction(a) * x for a, x in zip(coeffs, values)]
    for size in range(1, n):
        for idx in itertools.combinations(range(n), size):
            if sum(terms[i] for i in idx) == 0:
                return False
    return True


def mann_enumerate(coeffs, bound: int, generators=(2, 3), ceiling: int = DEFAULT_CEILING) -> MannInstance:
    """All nondegenerate solutions with every exponent in ``[-bound, bound]``.

    The first ``n - 1`` unknowns range over the exponent box and the last is
    solved for and looked up, so the work is ``(2*bound + 1)**(r*(n - 1))``
    for ``r`` generators. Budgets above ``ceiling`` raise :class:`BudgetError`.
    """
    coeffs = tuple(Fraction(c) for c in coeffs)
    generators = tuple(int(g) for g in generators)
    if not coeffs:
        raise DomainError("at least one coefficient is required")
    if any(c == 0 for c in coeffs):
        raise DomainError("coefficients must be nonzero")
    if bound < 0:
        raise DomainError("bound must be nonnegative")
    if any(g <= 1 for g in generators):
        raise DomainError("generators must exceed 1")
    if not _independent(generators):
        raise DomainError("generators are multiplicatively dependent; exponent tuples would not be unique")

    n, r = len(coeffs), len(generators)
    side = 2 * bound + 1
    work = side ** (r * (n - 1))
    if work > ceiling:
        raise BudgetError(
            f"enumeration needs {work} steps for n={n}, bound={bound}; ceiling is {ceiling}",
            hint="lower --bound or raise --ceiling",
        )

    box = list(itertools.product(range(-bound, bound + 1), repeat=r))
    lookup = {_realize(generators, e): e for e in box}
    found = set()
    for head in itertools.product(box, repeat=n - 1):
        partial = sum(
            (c * _realize(generators, e) for c, e in zip(coeffs, head)), Fraction(0)
        )
        last = (1 - partial) / coeffs[-1]
        tail = lookup.get(last)
        if tail is None:
            continue
        sol = head + (tail,)
        if is_nondegenerate(coeffs, [_realize(generators, e) for e in sol]):
            found.add(sol)
    return MannInstance(coeffs, generators, bound, tuple(sorted(found)), True)


def _coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def mann_axiom(inst: MannInstance) -> str:
    """The Mann axiom for ``inst`` with its solutions listed as the only ones.

    Written in the formula grammar extended with the field-level predicate
    ``A`` and rational constants. The first line flags that the list is only
    known to be complete inside the exponent box.
    """
    n = len(inst.coeffs)
    ys = [f"y{i + 1}" for i in range(n)]
    terms = [f"{_coef(c)}*{y}" for c, y in zip(inst.coeffs, ys)]
    hyp = [f"A({y})" for y in ys]
    hyp.append(" + ".join(terms) + " = 1")
    for size in range(1, n):
        for idx in itertools.combinations(range(n), size):
            hyp.append("not " + " + ".join(terms[i] for i in idx) + " = 0")
    disjuncts = []
    for sol in inst.solutions:
        vals = inst.values(sol)
        eqs = " and ".join(f"{y} = {_coef(v)}" for y, v in zip(ys, vals))
        disjuncts.append(f"({eqs})")
    concl = " or ".join(disjuncts) if disjuncts else "false"
    gens = ", ".join(str(g) for g in inst.generators)
    caveat = (
        f"# nondegenerate solutions in <{gens}> with exponents bounded by {inst.bound}; "
        "completeness beyond the bound is not claimed"
    )
    body = f"forall {', '.join(ys)} in K. ({' and '.join(hyp)}) -> ({concl})"
    return caveat + "\n" + body

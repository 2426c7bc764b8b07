"""Finite-scale audit of the pair axioms in the standard model.

Universal statements are checked on deterministic samples. Density statements
are checked constructively: a candidate witness is computed in logarithmic
coordinates (``G`` is a lattice in ``Z_p`` there) and then verified with exact
arithmetic. Witnesses in ``nG`` are written ``y = n*z`` and the exponent bound
applies to ``z``. A candidate that does not fit in the bound makes the check
inconclusive, never failed, since density promises existence only.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import primerange

from .config import Config
from .errors import DomainError
from .groups import ALPHA, BETA, IDENTITY, INF, GroupElement, StandardModel, succ
from .padic import multiplicative_order, padic_log, vp

PASS, FAIL, VACUOUS, INCONCLUSIVE = "pass", "fail", "vacuous", "inconclusive at bound"

CHECKS = (
    "axiom1",
    "axiom2",
    "axiom3",
    "axiom4",
    "axiom5",
    "axiom6",
    "axiom7",
    "axiom8",
    "valued_group_laws",
    "G_cap_H",
    "density_order",
)


@dataclass
class Status:
    status: str
    detail: str = ""
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out = {"status": self.status, "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class AuditReport:
    config: Config
    depth: int
    bound: int
    seed: int
    samples: int
    results: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return all(s.status != FAIL for s in self.results.values())

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "config": {"p": self.config.p, "alpha": self.config.alpha, "beta": self.config.beta, "k": self.config.k},
            "parameters": {"depth": self.depth, "bound": self.bound, "seed": self.seed, "samples": self.samples},
            "results": {name: s.to_json() for name, s in self.results.items()},
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _ge(g: GroupElement) -> dict:
    return g.to_json()


class _Fail(Exception):
    def __init__(self, detail, counterexample):
        self.detail = detail
        self.counterexample = counterexample


def _expect(cond, detail, **counterexample):
    if not cond:
        raise _Fail(detail, {k: _ge(v) if isinstance(v, GroupElement) else v for k, v in counterexample.items()})


class _Auditor:
    def __init__(self, config, depth, bound, seed, samples, sample_range):
        self.model = StandardModel(config)
        self.p = config.p
        self.k = config.k
        self.depth = depth
        self.bound = bound
        self.rng = random.Random(seed)
        self.samples = samples
        self.sample_range = sample_range
        self.primes = list(primerange(2, max(depth, 2) + 1))
        self._logs = {}

    # -- sampling
    def element(self, in_h=False) -> GroupElement:
        r = self.sample_range
        m = self.rng.randint(-r, r)
        n = 0 if in_h else self.rng.randint(-r, r)
        return GroupElement(m, n)

    def V(self, g):
        return self.model.big_V(g)

    # -- checks
    def axiom1(self):
        for q in self.primes:
            reps = self.model.quotient_reps(q)
            _expect(len(reps) == q * q, "wrong number of representatives", q=q)
            for i, g in enumerate(reps):
                for h in reps[i + 1 :]:
                    _expect(not self.model.cong(g, h, q), "representatives congruent", q=q, g=g, h=h)
            for _ in range(self.samples):
                x = self.element()
                hits = [g for g in reps if self.model.cong(x, g, q)]
                _expect(len(hits) == 1, "element not in exactly one coset", q=q, x=x)
        for _ in range(self.samples):
            x, y, z = self.element(), self.element(), self.element()
            _expect(x + y == y + x and (x + y) + z == x + (y + z), "group law", x=x, y=y, z=z)
            _expect(x + (-x) == IDENTITY, "inverse", x=x)
        return f"[G:qG] = q^2 for primes q <= {self.depth}; group laws on {self.samples} samples"

    def axiom2(self):
        _expect(ALPHA.in_h, "1 (alpha) not in H", x=ALPHA)
        for q in self.primes:
            reps = self.model.quotient_reps(q, "H")
            _expect(len(reps) == q, "wrong number of H representatives", q=q)
            for i, g in enumerate(reps):
                for h in reps[i + 1 :]:
                    # congruent in H iff difference in qH
                    d = g - h
                    _expect(not (d.in_h and d.m % q == 0), "H representatives congruent", q=q, g=g, h=h)
        for _ in range(self.samples):
            x = self.element()
            n = self.rng.randint(1, max(self.depth, 2))
            _expect(not (n * x).in_h or x.in_h, "H not pure", x=x, n=n)
        return f"purity on {self.samples} samples, [H:qH] = q for primes q <= {self.depth}"

    def axiom3(self):
        values = [self.V(self.element()) for _ in range(self.samples)]
        for v in values:
            _expect(v == INF or (isinstance(v, int) and v >= 0), "value outside N u {inf}", value=str(v))
        _expect(succ(INF) == INF, "successor of inf", value=str(succ(INF)))
        return "values in N u {inf}, S(inf) = inf"

    def _valued_group_laws(self, in_h):
        _expect(self.V(IDENTITY) == INF, "V(0) != inf", x=IDENTITY, value=str(self.V(IDENTITY)))
        for _ in range(self.samples):
            x, y = self.element(in_h), self.element(in_h)
            vx = self.V(x)
            _expect((vx == INF) == x.is_identity, "V(x) = inf iff x = 0", x=x)
            n = self.rng.choice([i for i in range(-2 * self.p - 1, 2 * self.p + 2) if i])
            _expect(self.V(n * x) == succ(vx, vp(n, self.p)), "V(nx) = V(x) + v_p(n)", x=x, n=n)
            _expect(self.V(x + y) >= min(vx, self.V(y)), "ultrametric inequality", x=x, y=y)

    def axiom4(self):
        self._valued_group_laws(False)
        self._valued_group_laws(True)
        return f"valued group laws on G and H, {self.samples} samples each"

    def valued_group_laws(self):
        self._valued_group_laws(False)
        return f"V(nx) = V(x) + v_p(n), ultrametric and V(x) = inf iff x = 0 on {self.samples} samples"

    def axiom5(self):
        _expect(
            self.V(ALPHA) == 0 and self.V(BETA) == 0,
            "V(1) = V(C) = 0 fails",
            V_alpha=str(self.V(ALPHA)),
            V_beta=str(self.V(BETA)),
        )
        for n in range(1, self.depth + 1):
            pts = [i * ALPHA + j * BETA for i in range(n) for j in range(n)]
            seen = set()
            for g in pts:
                key = (g.m % n, g.n % n)
                _expect(key not in seen, "i*1 + j*C congruent", n=n, g=g)
                seen.add(key)
            for i in range(n):
                for j in range(i + 1, n):
                    d = (i - j) * ALPHA
                    _expect(d.m % n != 0, "i*1 in same coset of nH", n=n, i=i, j=j)
        return f"coset representatives distinct for n <= {self.depth}"

    def axiom6(self):
        tested = 0
        for _ in range(self.samples):
            x = self.element()
            vx = self.V(x)
            if vx == INF:
                continue
            # y with V(y) = V(x): a multiple of x by a unit plus a higher-valued term
            j = self.rng.randint(1, self.p - 1)
            z = self.element()
            e = max(0, vx + 1 - self.V(z)) if self.V(z) != INF else 0
            y = j * x + (self.p**e) * z
            if self.V(y) != vx:
                continue
            good = [i for i in range(1, self.p) if self.V(x - i * y) > vx]
            _expect(len(good) == 1, "no unique residue", x=x, y=y, candidates=good)
            _expect(good[0] == self.model.residue_unit(x, y), "residue_unit disagrees", x=x, y=y)
            tested += 1
        if not tested:
            return VACUOUS, "no pairs with equal value sampled"
        return f"{tested} pairs with equal value"

    # -- density helpers
    def _units(self, prec):
        """``log(alpha)/p^k`` and ``log(beta)/p^k`` modulo ``p**prec``."""
        if prec not in self._logs:
            N = prec + self.k
            cfg = self.model.config
            la = padic_log(cfg.alpha, self.p, N, cfg.max_precision)
            lb = padic_log(cfg.beta, self.p, N, cfg.max_precision)
            mod = self.p**prec
            self._logs[prec] = (la.residue // self.p**self.k % mod, lb.residue // self.p**self.k % mod)
        return self._logs[prec]

    def _approximate(self, target_log, prec, only_h):
        """Short ``(m, n)`` with ``m*u + n*w = target_log`` mod ``p**prec``."""
        mod = self.p**prec
        u, w = self._units(prec)
        m0 = target_log * pow(u, -1, mod) % mod
        if only_h:
            return GroupElement(m0 - mod if m0 > mod // 2 else m0, 0)
        # lattice of (m, n) with m*u + n*w = 0 mod p^prec, Gauss-reduced
        b1 = (mod, 0)
        b2 = ((-w * pow(u, -1, mod)) % mod, 1)
        b1, b2 = _gauss(b1, b2)
        # Babai rounding of (m0, 0) against the reduced basis
        det = b1[0] * b2[1] - b1[1] * b2[0]
        c1 = round(Fraction(m0 * b2[1], det))
        c2 = round(Fraction(-m0 * b1[1], det))
        m = m0 - c1 * b1[0] - c2 * b2[0]
        n = -c1 * b1[1] - c2 * b2[1]
        return GroupElement(m, n), (b1, b2)

    def _log_coord(self, g, prec):
        u, w = self._units(prec)
        return (g.m * u + g.n * w) % self.p**prec

    def _in_bound(self, g):
        return abs(g.m) <= self.bound and abs(g.n) <= self.bound

    def axiom7(self):
        checked, inconclusive = 0, []
        per_n = max(1, self.samples // (10 * max(self.depth, 1)))
        for n in range(1, self.depth + 1):
            e = vp(n, self.p)
            for _ in range(per_n):
                x = (self.p**e) * self.element()
                if self.V(x) < e:
                    continue
                for gamma in range(e, self.depth + 1):
                    prec = gamma - e
                    if prec == 0:
                        z = IDENTITY
                    else:
                        # n*z close to x  iff  z*(n/p^e) close to x/p^e
                        t = self._log_coord(x, prec + e) // self.p**e
                        t = t * pow(n // self.p**e, -1, self.p**prec) % self.p**prec
                        z, _ = self._approximate(t, prec, False)
                    y = n * z
                    if not self._in_bound(z):
                        inconclusive.append((n, x, gamma))
                        continue
                    _expect(self.V(x - y) >= gamma, "density witness failed exact check", n=n, x=x, y=y, gamma=gamma)
                    checked += 1
        if inconclusive:
            n, x, gamma = inconclusive[0]
            return INCONCLUSIVE, f"{len(inconclusive)} targets need cofactor exponents beyond {self.bound} (first: n={n}, x={x}, gamma={gamma})"
        return f"{checked} witnesses y in nG with V(x - y) >= gamma, n <= {self.depth}"

    def axiom8(self):
        checked, inconclusive = 0, []
        per_n = max(1, self.samples // (10 * max(self.depth, 1)))
        for n in range(1, self.depth + 1):
            e = vp(n, self.p)
            unit = n // self.p**e
            for _ in range(per_n):
                x = n * self.element()
                for gamma in range(e + 1, self.depth + 1):
                    prec = gamma - e
                    mod = self.p**prec
                    t = self._log_coord(x, prec + e) // self.p**e * pow(unit, -1, mod) % mod
                    zh = self._approximate(t, prec, True)
                    zg, (b1, b2) = self._approximate(t, prec, False)
                    if zg.n == 0:
                        shift = b1 if b1[1] else b2
                        zg = zg + GroupElement(*shift)
                    yh, yg = n * zh, n * zg
                    if not (self._in_bound(zh) and self._in_bound(zg)):
                        inconclusive.append((n, x, gamma))
                        continue
                    _expect(yh.in_h and self.V(x - yh) >= gamma, "nH not dense near target", n=n, x=x, y=yh, gamma=gamma)
                    _expect(
                        not yg.in_h and self.V(x - yg) >= gamma,
                        "nG minus nH not dense near target",
                        n=n,
                        x=x,
                        y=yg,
                        gamma=gamma,
                    )
                    checked += 1
        if inconclusive:
            n, x, gamma = inconclusive[0]
            return INCONCLUSIVE, f"{len(inconclusive)} targets need cofactor exponents beyond {self.bound} (first: n={n}, x={x}, gamma={gamma})"
        if not checked:
            return VACUOUS, "no targets sampled"
        return f"{checked} targets approximated from nH and from nG minus nH"

    def G_cap_H(self):
        cfg = self.model.config
        a, b = Fraction(cfg.alpha), Fraction(cfg.beta)
        r = min(self.sample_range, 12)
        powers_a = {a**m: m for m in range(-r, r + 1)}
        for n in range(-r, r + 1):
            if n == 0:
                continue
            m = powers_a.get(b**n)
            _expect(m is None, "alpha^m = beta^n with n != 0", m=m, n=n)
        return f"no alpha^m = beta^n with 0 < |n| <= {r}, |m| <= {r}"

    def density_order(self):
        cfg = self.model.config
        rows = []
        for N in range(self.k + 1, self.depth + 1):
            for name, g in (("alpha", cfg.alpha), ("beta", cfg.beta)):
                order = multiplicative_order(g, self.p, N)
                _expect(order == self.p ** (N - self.k), f"order of {name} mod p^N", N=N, order=order)
            rows.append(N)
        if not rows:
            return VACUOUS, f"no N with k < N <= {self.depth}"
        return f"orders p^(N-k) for {rows[0]} <= N <= {rows[-1]}"


def _gauss(b1, b2):
    def dot(u, v):
        return u[0] * v[0] + u[1] * v[1]

    if dot(b1, b1) < dot(b2, b2):
        b1, b2 = b2, b1
    while True:
        mu = round(Fraction(dot(b1, b2), dot(b2, b2)))
        b1 = (b1[0] - mu * b2[0], b1[1] - mu * b2[1])
        if dot(b1, b1) >= dot(b2, b2):
            return b2, b1
        b1, b2 = b2, b1


def audit(
    config: Config,
    depth: int = 6,
    bound: int = 10_000,
    seed: int = 0,
    samples: int = 200,
    sample_range: int = 30,
) -> AuditReport:
    """Check the pair axioms on the standard model for ``config``.

    ``depth`` caps moduli, radii and the ``N`` of the order check; ``bound``
    caps exponents of density witnesses; sampling uses ``seed``.
    """
    if depth < 1 or bound < 1:
        raise DomainError("depth and bound must be at least 1")
    start = time.perf_counter()
    auditor = _Auditor(config, depth, bound, seed, samples, sample_range)
    report = AuditReport(config, depth, bound, seed, samples)
    for name in CHECKS:
        try:
            out = getattr(auditor, name)()
        except _Fail as fail:
            report.results[name] = Status(FAIL, fail.detail, fail.counterexample)
            continue
        if isinstance(out, tuple):
            report.results[name] = Status(*out)
        else:
            report.results[name] = Status(PASS, out)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def recheck(config: Config, name: str, counterexample: dict) -> bool:
    """Re-evaluate a reported density or law counterexample; True if it is genuine."""
    model = StandardModel(config)

    def g(key):
        return GroupElement(**counterexample[key])

    if name in ("axiom7", "axiom8"):
        return model.big_V(g("x") - g("y")) < counterexample["gamma"]
    if name in ("axiom4", "valued_group_laws") and "n" in counterexample:
        x, n = g("x"), counterexample["n"]
        return model.big_V(n * x) != succ(model.big_V(x), vp(n, config.p))
    if name in ("axiom4", "valued_group_laws") and "y" in counterexample:
        x, y = g("x"), g("y")
        return model.big_V(x + y) < min(model.big_V(x), model.big_V(y))
    raise DomainError(f"no re-check available for {name}")

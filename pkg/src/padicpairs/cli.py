"""Command-line entry point: ``padicpairs [global flags] <command> ...``.

Exit codes: 0 done, 1 usage or configuration error, 2 indeterminate
(a precision or search bound was exhausted; the message names the flag to
raise), 3 an audit check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .audit import FAIL, INCONCLUSIVE, audit
from .config import Config
from .errors import (
    BudgetError,
    ConfigError,
    DependenceError,
    DomainError,
    FormulaSyntaxError,
    IndeterminateError,
    UnsupportedFragmentError,
)
from .formula import Exists, free_vars, is_quantifier_free, parse
from .groups import GroupElement, StandardModel
from .interpret import (
    DiscreteConfig,
    big_Vp,
    compile_atomic,
    dual_eval,
    p_pow,
    parse_arith,
    sigma,
    tau,
    vp_decomposition,
    vp_selfmap,
)
from .mann import mann_enumerate
from .padic import MAX_PRECISION, multiplicative_order
from .qe import check_sat, decide, eval_ground

DEFAULTS = {"p": 5, "alpha": 6, "beta": 11, "precision": MAX_PRECISION, "seed": 0}
DISCRETE_DEFAULTS = {"p": 2, "alpha": 2, "beta": 6}
BOUND_DEFAULTS = {"check-sat": 20, "audit": 10_000, "mann": 10}

EXIT_OK, EXIT_USAGE, EXIT_INDETERMINATE, EXIT_FAILED = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="padicpairs", description="Pairs of p-valued groups inside Q_p.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--p", type=int, help="prime (env PGL_P, default 5)")
    ap.add_argument("--alpha", type=int, help="first generator (env PGL_ALPHA, default 6)")
    ap.add_argument("--beta", type=int, help="second generator (env PGL_BETA, default 11)")
    ap.add_argument("--precision", type=int, help="max p-adic precision (env PGL_PRECISION)")
    ap.add_argument("--bound", type=int, help="search bound (env PGL_BOUND; default per command)")
    ap.add_argument("--seed", type=int, help="random seed (env PGL_SEED, default 0)")
    ap.add_argument("--normalize", action="store_true", help="replace generators by suitable powers")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--no-timing", action="store_true", help="omit elapsed_ms from JSON")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", help="truth value of a sentence")
    p.add_argument("formula")

    p = sub.add_parser("check-sat", help="satisfiability of a formula in one free variable")
    p.add_argument("formula")

    p = sub.add_parser("eval", help="evaluate a quantifier-free formula")
    p.add_argument("formula")
    p.add_argument("--env", action="append", default=[], metavar="x=M,N", help="assign g(M,N) to x")

    p = sub.add_parser("audit", help="finite audit of the pair axioms")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--samples", type=int, default=200)

    p = sub.add_parser("mann", help="bounded Mann-equation enumeration")
    p.add_argument("--coeffs", required=True, help="comma-separated rationals")
    p.add_argument("--generators", default="2,3")
    p.add_argument("--bound", dest="mann_bound", type=int)
    p.add_argument("--ceiling", type=int, default=2_000_000)

    p = sub.add_parser("interp", help="discrete-case maps (defaults p=2, alpha=2, beta=6)")
    p.add_argument("op", choices=["tau", "sigma", "vpmap", "ppow", "compile"])
    p.add_argument("arg")

    p = sub.add_parser("density", help="orders of alpha and beta modulo p^N")
    p.add_argument("--depth", type=int, default=10)
    return ap


def _resolve(args, name, env, defaults):
    value = getattr(args, name, None)
    if value is not None:
        return value
    raw = env.get(f"PGL_{name.upper()}")
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise _UsageError(f"PGL_{name.upper()} must be an integer, got {raw!r}") from None
    return defaults.get(name)


def _dense_config(args, env) -> Config:
    p, a, b = (_resolve(args, k, env, DEFAULTS) for k in ("p", "alpha", "beta"))
    precision = _resolve(args, "precision", env, DEFAULTS)
    if args.normalize:
        return Config.normalized(p, a, b, max_precision=precision)
    return Config(p, a, b, max_precision=precision)


def _discrete_config(args, env) -> DiscreteConfig:
    p, a, b = (_resolve(args, k, env, DISCRETE_DEFAULTS) for k in ("p", "alpha", "beta"))
    if args.normalize:
        return DiscreteConfig.normalized(p, a, b)
    return DiscreteConfig(p, a, b)


def _bound(args, env, command):
    b = getattr(args, "mann_bound", None)
    if b is None:
        b = _resolve(args, "bound", env, {"bound": BOUND_DEFAULTS.get(command)})
    if b is not None and b < 0:
        raise _UsageError("bound must be nonnegative")
    return b


class _Out:
    def __init__(self, args, stream):
        self.args = args
        self.stream = stream
        self.start = time.perf_counter()

    def emit(self, text, payload):
        if self.args.json:
            if not self.args.no_timing:
                payload["elapsed_ms"] = round((time.perf_counter() - self.start) * 1000, 3)
            self.stream.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def _parse_env(items):
    env = {}
    for item in items:
        name, _, value = item.partition("=")
        value = value.strip()
        if value.startswith("g(") and value.endswith(")"):
            value = value[2:-1]
        try:
            m, n = (int(x) for x in value.split(","))
        except ValueError:
            raise _UsageError(f"bad --env value {item!r}; expected x=M,N or x=g(M,N)") from None
        env[name.strip()] = GroupElement(m, n)
    return env


def _cmd_decide(args, env, out):
    model = StandardModel(_dense_config(args, env))
    value = decide(parse(args.formula), model)
    out.emit("true" if value else "false", {"result": value, "method": "theory"})


def _cmd_check_sat(args, env, out):
    model = StandardModel(_dense_config(args, env))
    f = parse(args.formula)
    if isinstance(f, Exists) and f.sort == "G" and not free_vars(f):
        var, body = f.var, f.body
    else:
        fv = sorted(free_vars(f))
        if len(fv) != 1:
            raise _UsageError("check-sat needs exactly one free variable or a sentence 'exists x in G. ...'")
        var, body = fv[0], f
    if not is_quantifier_free(body):
        raise UnsupportedFragmentError("check-sat needs a quantifier-free body")
    bound = _bound(args, env, "check-sat")
    sat, witness = check_sat(body, var, model, bound)
    payload = {"result": "sat" if sat else "unsat", "method": "witness" if witness else "theory", "bound": bound}
    if not sat:
        text = "unsat"
    elif witness is not None:
        text = f"sat (witness found: {var} = {witness})"
        payload["witness"] = witness.to_json()
    else:
        text = f"sat (no witness within bound {bound})"
    out.emit(text, payload)


def _cmd_eval(args, env, out):
    model = StandardModel(_dense_config(args, env))
    f = parse(args.formula)
    if not is_quantifier_free(f):
        raise UnsupportedFragmentError("eval needs a quantifier-free formula; use decide for sentences")
    assignment = _parse_env(args.env)
    missing = free_vars(f) - set(assignment)
    if missing:
        raise _UsageError(f"no --env value for {', '.join(sorted(missing))}")
    value = eval_ground(f, assignment, model)
    out.emit("true" if value else "false", {"result": value, "method": "exact"})


def _cmd_audit(args, env, out):
    cfg = _dense_config(args, env)
    seed = _resolve(args, "seed", env, DEFAULTS)
    bound = _bound(args, env, "audit")
    report = audit(cfg, depth=args.depth, bound=bound, seed=seed, samples=args.samples)
    lines = [
        f"audit p={cfg.p} alpha={cfg.alpha} beta={cfg.beta} k={cfg.k} "
        f"depth={args.depth} bound={bound} seed={seed} samples={args.samples}"
    ]
    width = max(len(n) for n in report.results)
    for name, status in report.results.items():
        lines.append(f"{name.ljust(width)}  {status.status}: {status.detail}")
        if status.counterexample:
            lines.append(f"{' ' * width}  counterexample: {json.dumps(status.counterexample, sort_keys=True)}")
    statuses = {s.status for s in report.results.values()}
    if INCONCLUSIVE in statuses:
        lines.append("some density searches exhausted the bound; raise --bound")
    payload = report.to_json(timing=False)
    out.emit("\n".join(lines), payload)
    if FAIL in statuses:
        return EXIT_FAILED
    if INCONCLUSIVE in statuses:
        return EXIT_INDETERMINATE
    return EXIT_OK


def _cmd_mann(args, env, out):
    from fractions import Fraction

    try:
        coeffs = [Fraction(c) for c in args.coeffs.split(",")]
        gens = [int(g) for g in args.generators.split(",")]
    except ValueError:
        raise _UsageError("--coeffs and --generators take comma-separated numbers") from None
    bound = _bound(args, env, "mann")
    inst = mann_enumerate(coeffs, bound, gens, ceiling=args.ceiling)
    payload = inst.to_json()
    lines = [f"{len(inst.solutions)} nondegenerate solutions with exponents in [-{bound}, {bound}]"]
    for sol in inst.solutions:
        vals = ", ".join(str(v) for v in inst.values(sol))
        exps = " ".join(f"({', '.join(str(e) for e in x)})" for x in sol)
        lines.append(f"  {vals}    exponents {exps}")
    lines.append(payload["axiom_text"])
    out.emit("\n".join(lines), payload)


def _cmd_interp(args, env, out):
    cfg = _discrete_config(args, env)
    payload = {"op": args.op, "p": cfg.p, "alpha": cfg.alpha, "beta": cfg.beta}
    if args.op == "compile":
        f = parse_arith(args.arg)
        text = compile_atomic(f)
        payload["compiled"] = text
        lines = [text]
        try:
            value = dual_eval(f, {}, cfg)
        except UnsupportedFragmentError as exc:
            lines.append(f"(not evaluated: {exc})")
        else:
            payload["result"] = value
            lines.append(f"both sides: {'true' if value else 'false'}")
        out.emit("\n".join(lines), payload)
        return
    try:
        n = int(args.arg)
    except ValueError:
        raise _UsageError(f"interp {args.op} needs an integer argument") from None
    payload["n"] = n
    if args.op == "tau":
        value = tau(cfg, n)
        text = str(value)
    elif args.op == "sigma":
        value = sigma(cfg, n)
        text = str(value)
    elif args.op == "vpmap":
        value = vp_selfmap(cfg, n)
        m, k = vp_decomposition(cfg, n)
        payload["decomposition"] = {"m": m, "k": k}
        text = f"{value}  (v_p(n) = v_p(alpha^{m}) + {k})"
    else:
        value = p_pow(cfg.p, n)
        text = str(value)
        if n >= 1:
            payload["V_p"] = big_Vp(cfg.p, n)
            text += f"  (V_p({n}) = {payload['V_p']})"
    payload["result"] = str(value)
    out.emit(text, payload)


def _cmd_density(args, env, out):
    cfg = _dense_config(args, env)
    rows = []
    for N in range(cfg.k + 1, args.depth + 1):
        rows.append(
            {
                "N": N,
                "order_alpha": multiplicative_order(cfg.alpha, cfg.p, N),
                "order_beta": multiplicative_order(cfg.beta, cfg.p, N),
                "expected": cfg.p ** (N - cfg.k),
            }
        )
    lines = [f"orders in (1 + p^k Z_p)/(1 + p^N Z_p), p={cfg.p} k={cfg.k}"]
    for r in rows:
        mark = "ok" if r["order_alpha"] == r["order_beta"] == r["expected"] else "MISMATCH"
        lines.append(f"N={r['N']:>3}  alpha {r['order_alpha']}  beta {r['order_beta']}  p^(N-k) {r['expected']}  {mark}")
    out.emit("\n".join(lines), {"p": cfg.p, "k": cfg.k, "rows": rows})


COMMANDS = {
    "decide": _cmd_decide,
    "check-sat": _cmd_check_sat,
    "eval": _cmd_eval,
    "audit": _cmd_audit,
    "mann": _cmd_mann,
    "interp": _cmd_interp,
    "density": _cmd_density,
}


def run(argv=None, stdout=None, stderr=None, environ=None) -> int:
    """Run one invocation and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    env = os.environ if environ is None else environ
    try:
        args = build_parser().parse_args(argv)
        code = COMMANDS[args.command](args, env, _Out(args, stdout))
        return code or EXIT_OK
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except _UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except DependenceError as exc:
        m, n = exc.witness
        stderr.write(f"error: {exc}\ndependence witness: ({m}, {n})\n")
        return EXIT_USAGE
    except (ConfigError, FormulaSyntaxError, UnsupportedFragmentError, DomainError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except BudgetError as exc:
        hint = f"; {exc.hint}" if exc.hint else ""
        stderr.write(f"indeterminate: {exc}{hint}\n")
        return EXIT_INDETERMINATE
    except IndeterminateError as exc:
        stderr.write(f"indeterminate: {exc}; raise --{exc.knob}\n")
        return EXIT_INDETERMINATE


def main() -> None:
    sys.exit(run())

"""Random formula text for tests; shared by several test modules."""


def gterm(rng, xs=("x",), params=("y",), coeffs=(1, 2, 3, 5, 10, -1, -4)):
    parts = [f"{rng.choice(coeffs)}*{v}" for v in xs]
    parts += [f"{rng.choice([1, -1, 2, 5])}*{v}" for v in params if rng.random() < 0.5]
    m, n = rng.randint(-3, 3), rng.randint(-3, 3)
    parts.append(f"g({m},{n})")
    return " + ".join(parts)


def atom(rng, xs=("x",), params=("y",)):
    kind = rng.choice(["phi", "phi2", "lit", "cong", "h", "eq"])
    op = rng.choice(["<", "<=", "=", ">=", ">"])
    sub = [v for v in xs if rng.random() < 0.7] or [xs[0]]

    def t(vars_=sub):
        return gterm(rng, vars_, params)

    if kind == "phi":
        return f"V({t()}) {op} V({gterm(rng, (), params)}) + {rng.randint(0, 2)}"
    if kind == "phi2":
        return f"V({t()}) {op} V({t(xs)})"
    if kind == "lit":
        return f"V({t()}) {op} {rng.choice(['0', '1', '2', '3', 'inf'])}"
    if kind == "cong":
        return f"{t()} cong {rng.randint(2, 6)} {gterm(rng, (), params)}"
    if kind == "h":
        return f"H({t()})"
    return f"{t()} = {gterm(rng, (), params)}"


def qf(rng, depth=2, xs=("x",), params=("y",)):
    if depth == 0 or rng.random() < 0.3:
        return atom(rng, xs, params)
    kind = rng.choice(["and", "or", "not"])
    if kind == "not":
        return f"not ({qf(rng, depth - 1, xs, params)})"
    return f"({qf(rng, depth - 1, xs, params)}) {kind} ({qf(rng, depth - 1, xs, params)})"


def arith_term(rng, names, depth=2):
    """A natural-number term; arguments of v_p and V_p are kept positive."""
    r = rng.random()
    if depth == 0 or r < 0.35:
        return rng.choice([str(rng.randint(0, 12))] + list(names))
    if r < 0.55:
        return f"{arith_term(rng, names, depth - 1)} + {arith_term(rng, names, 0)}"
    if r < 0.7:
        return f"v_p({arith_term(rng, names, depth - 1)} + 1)"
    if r < 0.85:
        return f"V_p({arith_term(rng, names, depth - 1)} + 1)"
    return f"p^{rng.choice([str(rng.randint(0, 3))] + list(names))}"


def arith(rng, depth=2, names=()):
    """A bounded sentence over (N, +, v_p, V_p, p^x, <); quantified values stay <= 4."""
    r = rng.random()
    if depth > 0 and r < 0.3:
        v = "nmk"[len(names) % 3] + str(len(names))
        q = rng.choice(["forall", "exists"])
        return f"{q} {v} in 0..{rng.randint(1, 4)}. {arith(rng, depth - 1, names + (v,))}"
    if depth > 0 and r < 0.5:
        op = rng.choice(["and", "or"])
        return f"({arith(rng, depth - 1, names)}) {op} ({arith(rng, depth - 1, names)})"
    if depth > 0 and r < 0.6:
        return f"not ({arith(rng, depth - 1, names)})"
    op = rng.choice(["<", "<=", "=", ">=", ">"])
    return f"{arith_term(rng, names)} {op} {arith_term(rng, names)}"

"""The discrete case: alpha = 2, beta = 6 in Q_2.

Both generators have valuation 1, so gamma = alpha/beta = 1/3 is a unit and
v_2 of n can be read off from v_2(gamma^n - 1). That makes n -> v_2(n)
definable on exponents, which is what the compiled sentences use.
"""

from padicpairs.interpret import (
    DiscreteConfig,
    compile_atomic,
    dual_eval,
    sigma,
    tau,
    vp_selfmap,
)

cfg = DiscreteConfig(2, 2, 6)
print("gamma =", cfg.gamma, " gamma^e =", cfg.gamma_e, f"(e = {cfg.gamma_exp})")
for n in (1, 3, 12, 40):
    print(f"n={n:>3}  tau={tau(cfg, n)}  sigma={sigma(cfg, n)}  v_2(n)={vp_selfmap(cfg, n)}")

for text in ["V_p(12) = 4", "forall n in 1..8. v_p(n + n) = v_p(n) + 1", "p^3 < 7"]:
    print(f"\n{text}\n  compiled: {compile_atomic(text)}\n  value:    {dual_eval(text, {}, cfg)}")

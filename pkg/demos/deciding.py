"""Deciding sentences about (G, H, V) for p = 5, alpha = 6, beta = 11.

Quantifiers are eliminated one at a time; the answer is exact, and for
existential formulas a bounded search can also exhibit a witness.
"""

from padicpairs import Config, StandardModel
from padicpairs.formula import parse
from padicpairs.qe import check_sat, decide, eliminate

model = StandardModel(Config(5, 6, 11))

sentences = [
    "exists x in G. V(x) = 0",
    "exists x in G. H(x) and V(x - b) >= 4",
    "forall x in H. exists y in G. 2*y = x",
    "forall x in G. exists y in G. V(2*y - x) >= 7",
]
for s in sentences:
    print(f"{decide(parse(s), model)!s:>5}  {s}")

# elimination leaves a formula in the remaining variable
f = parse("exists x in G. V(x - y) >= 3 and x cong 5 a")
print("\neliminating x from", f)
print("  ->", eliminate(f, model))

sat, w = check_sat(parse("x cong 2 a and V(x - a) >= 2 and not x = a"), "x", model, 40)
print(f"\nsatisfiable: {sat}, witness: {w}")

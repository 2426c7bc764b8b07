"""The valuation V on G = 6^Z 11^Z inside Q_5.

V(g) = v_5(g - 1) - k with k = v_5(6 - 1) = 1. Two routes compute it: exact
rational arithmetic and the 5-adic logarithm. They should always agree.
"""

from padicpairs import Config, GroupElement, StandardModel

model = StandardModel(Config(5, 6, 11))

print("V of a few elements (m, n) = 6^m 11^n:")
for m, n in [(1, 0), (5, 0), (25, 0), (0, 5), (5, -5), (3, 7)]:
    g = GroupElement(m, n)
    exact, via_log = model.big_V(g, "exact"), model.big_V(g, "log")
    print(f"  {str(g):>10}  exact {exact}  log {via_log}")

# multiplying by n shifts the value by v_5(n)
x = GroupElement(2, 3)
for n in (1, 5, 10, 25):
    print(f"V({n}*x) = {model.big_V(n * x)}")

"""Nondegenerate solutions of y1 - y2 = 1 with y1, y2 in 2^Z 3^Z.

The enumeration is complete only inside the exponent box; nothing is claimed
beyond it.
"""

from fractions import Fraction

from padicpairs.mann import mann_enumerate

for bound in (2, 5, 10):
    inst = mann_enumerate([Fraction(1), Fraction(-1)], bound, [2, 3])
    sols = ", ".join(f"{a} - {b}" for a, b in (inst.values(s) for s in inst.solutions))
    print(f"bound {bound:>2}: {len(inst.solutions)} solutions: {sols}")

"""
A matroid over the monomial skew hyperfield from Ore polynomials
================================================================

Four vectors over GF(4)[T, Frobenius]: their circuits, the additive
polynomial of a circuit, its sigma-derivative, and the cross ratio of the
pushed-forward matroid.
"""

from skewmat.kernel import ore_matroid, worked_example
from skewmat.ore import format_ore
from skewmat.walkthrough import example_report

cols, a = worked_example(p=2, k=2)
om = ore_matroid(cols)
print("bases:", [om.matroid.fmt(B) for B in sorted(om.matroid.bases)])
for C, U in om.circuits.items():
    print("circuit", om.matroid.fmt(C), [format_ore(f) for f in U])

# mu keeps the lowest term of each entry
M = om.mu_signature()
print(M)

report, info = example_report(2, 2)
print("\n".join(info))
print("\n".join(report.lines()))

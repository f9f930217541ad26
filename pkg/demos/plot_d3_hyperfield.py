"""
The dihedral skew hyperfield D3
===============================

Build the 7-element hyperfield on the dihedral group of order 6, print its
tables and run the full axiom check.
"""

from skewmat import hyperfield_from_spec
from skewmat.axioms import axiom_check_hyperfield

H = hyperfield_from_spec("d3")

# products: d_i d_j = d_(i+j) for even i, d_(i-j) for odd i
for x in H.nonzero():
    print(x, [H.mul(x, y) for y in H.nonzero()])

# sums are sets; d_i + d_(i+3) is everything
print("d0 + d1 =", sorted(H.add("d0", "d1")))
print("d0 + d3 =", sorted(H.add("d0", "d3")))

report = axiom_check_hyperfield(H)
print("\n".join(report.lines()))

# the product distributes over sums from the left only
x, y, z = report.checks["right distributivity"].witness
print(f"({y} + {z}) {x} =", sorted(H.scale_set(H.add(y, z), x, "right")))
print(f"{y}{x} + {z}{x} =", sorted(H.add(H.mul(y, x), H.mul(z, x))))

"""
Boundary matroids and the flock of a monomial-hyperfield matroid
================================================================

Rescale by T^alpha, keep the minimum-valuation bases, and check that the
resulting family of GF(4)-matroids is a flock.
"""

from skewmat.boundary import boundary, check_flock, flock_window, perturb_fiber
from skewmat.kernel import ore_matroid, worked_example

M = ore_matroid(worked_example(2, 2)[0]).mu_signature()

b = boundary(M)
print("valuation:", {b.valuation.matroid.fmt(B): v for B, v in b.valuation.values.items()})
print("boundary bases:", [b.matroid.fmt(B) for B in b.matroid.bases])

F = flock_window(M, 1)
print("\n".join(check_flock(F).lines()))

# a single changed coefficient breaks the flock axioms
bent, alpha = perturb_fiber(F)
print("perturbed at", alpha)
print("\n".join(line for line in check_flock(bent).lines() if line.startswith("FAIL")))

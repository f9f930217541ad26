"""
Cross ratios over GF(5)
=======================

Cross ratios of four points on the projective line, and the conjugation
identity relating cr(a,b,c,d) to cr(c,b,a,d).
"""

from itertools import combinations

from skewmat.hmatroid import Signature, coords_from_signature, cr_properties_check, cross_ratio
from skewmat.hyperfield import hyperfield_from_spec

K = hyperfield_from_spec("gf:5")
pts = {"1": (1, 0), "2": (0, 1), "3": (1, 1), "4": (1, 3)}


def det(u, v):
    return (u[0] * v[1] - u[1] * v[0]) % 5


# each circuit {i,j,k} is (det(j,k), -det(i,k), det(i,j)) by Cramer's rule
labels = list(pts)
vectors = []
for i, j, k in combinations(range(4), 3):
    u, v, w = (pts[labels[t]] for t in (i, j, k))
    X = [0] * 4
    X[i], X[j], X[k] = det(v, w), -det(u, w) % 5, det(u, v)
    vectors.append(tuple(X))
cc = coords_from_signature(Signature(K, labels, vectors, "left"))

print("cr(1,2,3,4) =", cross_ratio(cc, (), "1", "2", "3", "4"))
print("cr(3,2,1,4) =", cross_ratio(cc, (), "3", "2", "1", "4"))

report = cr_properties_check(cc)
print("\n".join(report.lines()))

# the identity that does hold: [Fac,Fcd][Fad,Fac] cr(a,b,c,d) = cr(c,b,a,d) [Fab,Fbc]
lhs = K.mul(K.mul(cc[("13", "34")], cc[("14", "13")]), cross_ratio(cc, (), "1", "2", "3", "4"))
rhs = K.mul(cross_ratio(cc, (), "3", "2", "1", "4"), cc[("12", "23")])
print("conjugation identity:", lhs, "=", rhs)

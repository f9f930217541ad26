"""
Signatures of U_{2,4} and their coordinates
===========================================

Every D3-valued signature U(x, y) of the uniform matroid U_{2,4}: circuit
elimination and the quasi-Plücker axioms accept exactly the same pairs.
"""

from skewmat import coords_from_signature, hyperfield_from_spec, signature_from_coords
from skewmat.hmatroid import check_circuit_axioms, check_plucker, u24_make

H = hyperfield_from_spec("d3")

for x in H.nonzero():
    for y in H.nonzero():
        if H.one not in H.add(x, y):
            continue
        M = u24_make(H, x, y)
        cc = coords_from_signature(M)
        c_ok = check_circuit_axioms(M).ok
        p_ok = check_plucker(cc).ok
        back = signature_from_coords(cc, verify=False) == M
        print(f"U({x},{y}): circuits {'pass' if c_ok else 'fail'}, coordinates {'pass' if p_ok else 'fail'}, round trip {back}")

# coordinates of one passing instance
M = u24_make(H, "d0", "d3")
print("\n".join(coords_from_signature(M).lines()))

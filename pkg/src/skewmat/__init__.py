"""Matroids with coefficients in skew hyperfields, and the Ore-polynomial
matroids that produce them."""

from skewmat.hyperfield import hyperfield_from_spec
from skewmat.matroid import Matroid
from skewmat.hmatroid import Coordinates, Signature, coords_from_signature, signature_from_coords
from skewmat.ore import ore_ring
from skewmat.kernel import ore_matroid

__all__ = [
    "Coordinates",
    "Matroid",
    "Signature",
    "coords_from_signature",
    "hyperfield_from_spec",
    "ore_matroid",
    "ore_ring",
    "signature_from_coords",
]

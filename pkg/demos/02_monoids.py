"""Hilbert bases and normality of affine monoids."""
from conelab import AffineMonoid, Cone, hilbert_basis, is_normal, saturation

print("Hilbert basis of pos{(1,0),(1,2)}:", hilbert_basis(Cone(2, generators=[(1, 0), (1, 2)])).elements)
print("Hilbert basis of pos{(1,0),(1,5)}:", hilbert_basis(Cone(2, generators=[(1, 0), (1, 5)])).elements)

s = AffineMonoid(1, [(5,), (7,)])
res = is_normal(s)
print("<5,7> normal?", bool(res), "missing element:", res.witness)
print("its saturation:", saturation(s).generators)

t = AffineMonoid(2, [(1, 0), (1, 1), (1, 3)])
print("<(1,0),(1,1),(1,3)> normal?", bool(is_normal(t)), "witness:", is_normal(t).witness)

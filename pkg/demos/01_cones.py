"""Cones in both representations, their duals, and Caratheodory decompositions."""
from fractions import Fraction

from conelab import Cone, HalfSpace, QuadNum, caratheodory, dual, extremal_rays, lineality

wedge = Cone(2, generators=[(1, 0), (1, 2)])
print("facets of pos{(1,0),(1,2)}:", [h.normal for h in wedge.inequalities])
print("dual rays:", [r.direction for r in extremal_rays(dual(wedge))])

c3 = Cone(3, generators=[(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])
x = (2, Fraction(3, 2), Fraction(1, 3))
print("caratheodory of", x, "->", caratheodory(c3.generators, x))

halfplane = Cone(2, generators=[(1, 0), (-1, 0), (0, 1)])
print("lineality of the upper half-plane:", lineality(halfplane))

r2 = QuadNum(0, 1, 2)
sqrt2 = Cone(2, inequalities=[HalfSpace((0, 1)), HalfSpace((r2, -1))], quad_n=2)
print("sqrt(2)-cone rays:", [r.direction for r in extremal_rays(sqrt2)])
print("(12,17) in it?", sqrt2.contains((12, 17)), " (12,16)?", sqrt2.contains((12, 16)))

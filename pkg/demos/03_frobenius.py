"""Split-F-regularity verdicts, splitting maps and violation witnesses."""
from conelab import (AlgebraElement, Cone, HalfSpace, QuadNum, is_split_F_regular,
                     synthesize_splitting, witness_violation)

wedge = Cone(2, generators=[(1, 0), (1, 2)])
v = is_split_F_regular(wedge, 3)
print("wedge over F_3:", v.status)
for beta, e, m in v.table:
    print(f"  beta={beta}  minimal e={e}  max facet value={m}")

y = AlgebraElement(3, {(2, 1): 1, (1, 2): 2}, 2)
s = synthesize_splitting(wedge, y, 3)
print("splitting of", y.terms, "-> leading exponent", s.leading_exponent, "image", s.image)

open_half = Cone(2, inequalities=[HalfSpace((0, 1), strict=True)])
w = witness_violation(open_half, (-1, 1), 2, 3, 4)
shift = tuple(9 * b + a for a, b in zip(w.alpha, w.beta))
print("{y>0}, alpha=(-1,1), e=2, p=3: beta =", w.beta, "is outside, 9*beta + alpha =", shift, "is inside")

r2 = QuadNum(0, 1, 2)
sqrt2 = Cone(2, inequalities=[HalfSpace((0, 1)), HalfSpace((r2, -1))], quad_n=2)
for e in range(1, 5):
    w = witness_violation(sqrt2, (1, 1), e, 2, 12)
    print(f"sqrt(2)-cone e={e}: beta={w.beta} via {w.source}")

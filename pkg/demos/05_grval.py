"""Graded rings of monomial valuations and the finite-generation verdict."""
from conelab import AffineMonoid, MonomialValuation, QuadNum, gr_is_finitely_generated_if_SFR, graded_ring_presentation

r2 = QuadNum(0, 1, 2)
cases = {
    "N^2": MonomialValuation(AffineMonoid(2, [(1, 0), (0, 1)]), [(1, 0), (0, 1)], (1, r2)),
    "wedge": MonomialValuation(AffineMonoid(2, [(1, 0), (1, 1), (1, 2)]), [(1, 0), (0, 1)], (1, r2)),
    "<5,7>": MonomialValuation(AffineMonoid(1, [(5,), (7,)]), [(1,)], (1,)),
}
for name, v in cases.items():
    pres = graded_ring_presentation(v)
    verdict = gr_is_finitely_generated_if_SFR(v, 2)
    print(f"{name}: {pres.note}")
    print(f"   verdict {verdict.status}, generators {verdict.generators}, witness {verdict.witness}")

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conelab.cone import (
    Cone,
    HalfSpace,
    NotInCone,
    affine_section_cone,
    caratheodory,
    closure,
    cross_section,
    dual,
    extremal_rays,
    face,
    fourier_motzkin,
    h_to_v,
    hyperplane_section,
    lineality,
    quotient_by_lineality,
    relint_contains,
    v_to_h,
)
from conelab.quadratic import QuadNum
from oracles import PosOracle, box, box_array, halfspace_contains_many, random_generators, sympy_rank

R2 = QuadNum(0, 1, 2)
WEDGE = [(1, 0), (1, 2)]


def sqrt2_cone():
    return Cone(2, inequalities=[HalfSpace((0, 1)), HalfSpace((R2, -1))], quad_n=2)


def upper_open():
    return Cone(2, inequalities=[HalfSpace((0, 1), strict=True)])


def same_points(c, oracle, radius):
    pts = box_array(c.rank, radius)
    return np.array_equal(c.contains_many(pts), oracle(pts))


# -- examples -----------------------------------------------------------------

def test_closure_examples():
    cl = closure(upper_open())
    assert not cl.has_strict and cl.contains((5, 0)) and cl.contains((-3, 0))
    assert not upper_open().contains((5, 0))
    c = Cone(2, generators=WEDGE)
    assert closure(c) is c
    sq = sqrt2_cone()
    assert closure(sq) is sq


def test_conversion_examples():
    h = v_to_h(Cone(2, generators=WEDGE))
    assert sorted(h.facets) == [(0, 1), (2, -1)]
    orth = v_to_h(Cone(3, generators=[(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert sorted(orth.facets) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    half = v_to_h(Cone(2, generators=[(1, 0), (-1, 0), (0, 1)]))
    assert half.facets == ((0, 1),) and half.equations == ()
    for c in (h, orth, half):
        ora = PosOracle(c.generators, c.rank)
        assert same_points(c, ora.contains_many, 5)
    v = h_to_v(Cone(2, inequalities=[(0, 1), (2, -1)]))
    assert v.rays == ((1, 0), (1, 2))
    with pytest.raises(ValueError):
        v_to_h(Cone(3, generators=[(1, 0, 0), (0, 1, 0), (1, R2, 0)], quad_n=2))


def test_dual_examples():
    d = dual(Cone(2, generators=WEDGE))
    assert d.rays == ((0, 1), (2, -1))
    full = dual(Cone(2, inequalities=[]))
    assert full.rays == () and full.lines == () and full.dim == 0
    assert dual(Cone(2, inequalities=[(0, 1)])).rays == ((0, 1),)


def test_lineality_examples():
    assert lineality(Cone(2, inequalities=[(0, 1)])) == [(1, 0)]
    assert lineality(Cone(2, generators=[(1, 0), (-1, 0), (0, 1)])) == [(1, 0)]
    assert lineality(Cone(2, generators=WEDGE)) == []
    assert lineality(upper_open()) == []


def test_extremal_ray_examples():
    assert [r.direction for r in extremal_rays(Cone(2, generators=[(1, 0), (1, 1), (1, 2)]))] == WEDGE
    assert [r.direction for r in extremal_rays(Cone(2, generators=[(1, 0), (0, 1)]))] == [(0, 1), (1, 0)]
    assert [r.direction for r in extremal_rays(Cone(2, generators=[(2, 4)]))] == [(1, 2)]
    with pytest.raises(ValueError):
        extremal_rays(Cone(2, inequalities=[(0, 1)]))


def test_membership_examples():
    sq = sqrt2_cone()
    assert not sq.contains((12, 17))
    assert sq.contains((97, 137))
    quad = Cone(2, generators=[(1, 0), (0, 1)])
    assert quad.contains((0, 0)) and not relint_contains(quad, (0, 0))
    assert relint_contains(Cone(2, generators=WEDGE), (1, 1))
    with pytest.raises(ValueError):
        quad.contains((1, 2, 3))


def test_sqrt2_rays_are_exact():
    sq = sqrt2_cone()
    assert sq.rays[0] == (1, 0)
    assert sq.rays[1] == (1, R2)


def test_face_examples():
    quad = Cone(2, generators=[(1, 0), (0, 1)])
    assert face(quad, (0, 1)).rays == ((1, 0),)
    assert face(Cone(2, generators=WEDGE), (2, -1)).rays == ((1, 2),)
    c = Cone(2, generators=WEDGE)
    assert face(c, (0, 0)).rays == c.rays
    with pytest.raises(ValueError):
        face(c, (1, -1))


def test_quotient_examples():
    q, sec = quotient_by_lineality(Cone(2, inequalities=[(0, 1)]))
    assert q.rank == 1 and q.rays == ((1,),)
    assert sec.lift((1,)) == (0, 1) and sec.project((0, 1)) == (1,)
    c = Cone(2, generators=WEDGE)
    q, sec = quotient_by_lineality(c)
    assert q.rays == c.rays and sec.projection == ((1, 0), (0, 1))
    q, sec = quotient_by_lineality(Cone(2, inequalities=[]))
    assert q.rank == 0 and sec.quotient_rank == 0


def test_caratheodory_examples():
    g = [(1, 0), (1, 1), (0, 1)]
    assert caratheodory(g, (2, 2)) == [((1, 1), 2)]
    assert caratheodory(g, (1, 0)) == [((1, 0), 1)]
    res = caratheodory(g, (3, 1))
    assert sorted(res) == [((1, 0), 2), ((1, 1), 1)]
    with pytest.raises(NotInCone):
        caratheodory(g, (-1, 0))


def test_hyperplane_section_examples():
    s, basis = hyperplane_section(Cone(3, generators=[(1, 0, 0), (0, 1, 0), (0, 0, 1)]), (0, 0, 1))
    assert s.rank == 2 and sorted(s.rays) == [(0, 1), (1, 0)]
    s, basis = hyperplane_section(Cone(2, generators=WEDGE), (0, 1))
    assert s.rank == 1 and s.rays == ((1,),) and basis == [(1, 0)]
    s, basis = hyperplane_section(Cone(2, inequalities=[(0, 1)]), (0, 1))
    assert s.rank == 1 and s.lines == ((1,),)
    with pytest.raises(ValueError):
        hyperplane_section(Cone(2, generators=WEDGE), (0, 0))


def test_affine_section_examples():
    ctx = affine_section_cone(Cone(2, generators=[(1, 0), (0, 1)]), (1, 1), (1, 1))
    assert ctx.membership((5, -5)) == (True, 5)
    assert ctx.membership((0, 0)) == (True, 1)
    ctx = affine_section_cone(Cone(2, generators=WEDGE), (1, 1), (1, 0))
    assert ctx.membership((0, 3)) == (True, 3)
    with pytest.raises(ValueError):
        affine_section_cone(Cone(2, generators=WEDGE), (0, 1), (1, 0))
    with pytest.raises(ValueError):
        affine_section_cone(Cone(2, generators=WEDGE), (1, 1), (-1, 0))


def test_cross_section_examples():
    quad = Cone(2, generators=[(1, 0), (0, 1)])
    assert sorted(cross_section(quad, (1, 1), 1).vertices) == [(0, 1), (1, 0)]
    assert sorted(cross_section(Cone(2, generators=WEDGE), (1, 0), 1).vertices) == [(1, 0), (1, 2)]
    assert sorted(cross_section(Cone(2, generators=[(1, 0), (1, 1), (0, 1)]), (1, 1), 2).vertices) \
        == [(0, 2), (2, 0)]
    with pytest.raises(ValueError):
        cross_section(quad, (1, 0), 1)


def test_degenerate_cones():
    zero = Cone(2, generators=[])
    assert zero.contains((0, 0)) and not zero.contains((1, 0))
    assert dual(zero).lines and dual(zero).dim == 2
    r0 = Cone(0, generators=[])
    assert r0.contains(()) and r0.dim == 0


def test_quadratic_cone_rejects_high_rank_conversion():
    c = Cone(3, inequalities=[(R2, -1, 0), (0, 1, 0), (0, 0, 1)], quad_n=2)
    assert c.contains((3, 4, 0)) and not c.contains((3, 5, 0))
    with pytest.raises(ValueError):
        c.rays


# -- properties ---------------------------------------------------------------

def random_closed_cone(rng, max_rank=4, max_gens=8):
    d = rng.randint(1, max_rank)
    gens = random_generators(rng, d, rng.randint(1, max_gens))
    return Cone(d, generators=gens), gens


def test_duality_involution_and_round_trips():
    rng = random.Random(21)
    for _ in range(120):
        c, gens = random_closed_cone(rng, max_rank=3, max_gens=6)
        pts = box_array(c.rank, 6)
        truth = PosOracle(gens, c.rank).contains_many(pts)
        dd = dual(dual(c))
        assert np.array_equal(halfspace_contains_many([h.normal for h in dd.inequalities], pts), truth)
        assert np.array_equal(PosOracle(dd.generators, c.rank).contains_many(pts), truth)
        hv = h_to_v(Cone(c.rank, inequalities=v_to_h(c).inequalities))
        assert np.array_equal(PosOracle(hv.generators, c.rank).contains_many(pts), truth)


def test_fourier_motzkin_agrees_with_double_description():
    rng = random.Random(3)
    for _ in range(80):
        d = rng.randint(1, 3)
        gens = random_generators(rng, d, rng.randint(1, 5))
        ineqs, eqs = fourier_motzkin(gens, d)
        rows = list(ineqs) + list(eqs) + [tuple(-x for x in e) for e in eqs]
        pts = box_array(d, 5)
        ref = Cone(d, generators=gens).contains_many(pts)
        assert np.array_equal(halfspace_contains_many(rows, pts), ref)


def test_caratheodory_property():
    rng = random.Random(4)
    for _ in range(200):
        d = rng.randint(1, 4)
        gens = random_generators(rng, d, rng.randint(1, 7))
        x = [0] * d
        for g in gens:
            k = Fraction(rng.randint(0, 5), rng.randint(1, 3))
            x = [a + k * b for a, b in zip(x, g)]
        res = caratheodory(gens, x)
        assert sympy_rank([g for g, _ in res]) == len(res)
        assert all(c > 0 for _, c in res)
        assert [sum(c * g[i] for g, c in res) for i in range(d)] == x


def test_quotient_is_strongly_convex_and_dual_matches():
    rng = random.Random(8)
    for _ in range(60):
        d = rng.randint(2, 3)
        gens = random_generators(rng, d, rng.randint(1, 5), -3, 3)
        # add a line so the lineality is often nonzero
        if rng.random() < 0.7:
            g = gens[0]
            gens = gens + [tuple(-x for x in g)]
        c = Cone(d, generators=gens)
        q, sec = quotient_by_lineality(c)
        assert lineality(q) == [] and q.lines == ()
        # pulled-back dual of the quotient equals dual(c) ∩ ker(pi)^perp
        dq = dual(q)
        pulled = [tuple(sum(y[j] * sec.projection[j][i] for j in range(q.rank)) for i in range(d))
                  for y in dq.generators] if q.rank else []
        pts = box_array(d, 4)
        lhs = PosOracle(pulled, d).contains_many(pts)
        dc = dual(c)
        rhs = dc.contains_many(pts)
        for line in c.lines:
            rhs &= (pts @ np.array(line, dtype=np.int64)) == 0
        assert np.array_equal(lhs, rhs)


def test_faces_are_extremal():
    rng = random.Random(9)
    for _ in range(30):
        c, gens = random_closed_cone(rng, max_rank=2, max_gens=4)
        dc = dual(c)
        for phi in list(dc.rays) + [tuple(sum(t) for t in zip(*dc.rays))] if dc.rays else []:
            tau = face(c, phi)
            pts = [p for p in box(c.rank, 4) if c.contains(p)]
            for x in pts:
                for y in pts:
                    s = tuple(a + b for a, b in zip(x, y))
                    if tau.contains(s):
                        assert tau.contains(x) and tau.contains(y)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=4))
def test_closure_of_strict_cone_is_h_closure(normals):
    normals = [n for n in normals if any(n)]
    if not normals:
        return
    c = Cone(2, inequalities=[HalfSpace(n, strict=True) for n in normals])
    cl = closure(c)
    for p in box(2, 3):
        if c.contains(p):
            assert cl.contains(p)
        vals = [n[0] * p[0] + n[1] * p[1] for n in normals]
        assert cl.contains(p) == all(v >= 0 for v in vals)

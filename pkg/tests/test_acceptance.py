"""Acceptance runs, one test per criterion.

Each test prints a ``criterion N: PASS|FAIL`` line (collected again in the
pytest terminal summary).  Run directly with ``python tests/test_acceptance.py``
to get just those lines.
"""
from __future__ import annotations

import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conelab.cone import (  # noqa: E402
    Cone,
    HalfSpace,
    affine_section_cone,
    caratheodory,
    dual,
    h_to_v,
    quotient_by_lineality,
    v_to_h,
)
from conelab.diophantine import dense_approx  # noqa: E402
from conelab.frobenius import (  # noqa: E402
    AlgebraElement,
    apply_pi,
    enumerate_M_alpha_e,
    is_split_F_regular,
    quotient_summand_maps,
    splitting_condition,
    synthesize_splitting,
    verify_witness,
    witness_violation,
)
from conelab.monoid import hilbert_basis  # noqa: E402
from conelab.quadratic import QuadNum, convergents, sign  # noqa: E402
from oracles import (  # noqa: E402
    PosOracle,
    box,
    box_array,
    Decomposer,
    halfspace_contains_many,
    positive_functional,
    random_cone_point,
    random_generators,
    random_pointed_full_cone,
    sympy_rank,
)

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "demos" / "data"
R2 = QuadNum(0, 1, 2)
SQRT2 = Cone(2, inequalities=[HalfSpace((0, 1)), HalfSpace((R2, -1))], quad_n=2)
OPEN = Cone(2, inequalities=[HalfSpace((0, 1), strict=True)])


def cone_population(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        c, gens = random_pointed_full_cone(rng, Cone, max_rank=3, lo=-5, hi=5, max_gens=5)
        yield rng, c, gens


# 1 ---------------------------------------------------------------------------

def test_criterion_01_criterion_matches_box_oracle(report_criterion):
    t0 = time.perf_counter()
    n = disagreements = positives = 0
    for rng, c, gens in cone_population(101, 500):
        alpha = random_cone_point(rng, gens, 3)
        p = rng.choice([2, 3, 5])
        e = rng.randint(1, 4)
        q = p ** e
        ora = PosOracle(gens, c.rank)
        pts = box_array(c.rank, 12)
        in_m = ora.contains_many(pts * q + np.array(alpha, dtype=np.int64))
        oracle_ok = not np.any(in_m & ~ora.contains_many(pts))
        listed = {tuple(int(t) for t in row) for row in pts[in_m]}
        assert listed == set(enumerate_M_alpha_e(c, alpha, e, p, 12))
        cond = splitting_condition(c, alpha, e, p)
        positives += cond
        disagreements += cond != oracle_ok
        n += 1
    dt = time.perf_counter() - t0
    ok = disagreements == 0 and n >= 500 and dt < 60
    report_criterion(1, ok, f"{n} instances, {positives} true, {disagreements} disagreements, {dt:.1f}s")
    assert ok


# 2 ---------------------------------------------------------------------------

def test_criterion_02_closed_rational_cones_are_split(report_criterion):
    failures = 0
    n = 0
    for rng, c, gens in cone_population(101, 500):
        p = rng.choice([2, 3, 5])
        v = is_split_F_regular(c, p)
        ora = PosOracle(gens, c.rank)
        pts = box_array(c.rank, 3)
        facets_ok = np.array_equal(halfspace_contains_many(v.facets, pts), ora.contains_many(pts))
        good = v.status == "true" and facets_ok and len(v.table) == len(hilbert_basis(c))
        for beta, e, m in v.table:
            m2 = max(sum(a * b for a, b in zip(f, beta)) for f in v.facets)
            good &= m == m2 and p ** e > m >= p ** (e - 1)
        failures += not good
        n += 1
    report_criterion(2, failures == 0, f"{n} cones, {failures} failures")
    assert failures == 0


# 3 ---------------------------------------------------------------------------

def test_criterion_03_non_closed_cone_witnesses(report_criterion):
    t0 = time.perf_counter()
    found = 0
    for p in (2, 3):
        for e in range(1, 9):
            w = witness_violation(OPEN, (0, 1), e, p, 4)
            assert verify_witness(OPEN, w)
            assert not OPEN.contains(w.beta)
            assert OPEN.contains(tuple(p ** e * b + a for a, b in zip(w.alpha, w.beta)))
            found += 1
    dt = time.perf_counter() - t0
    ok = found == 16 and dt < 1
    report_criterion(3, ok, f"{found}/16 witnesses, {dt:.3f}s")
    assert ok


# 4 ---------------------------------------------------------------------------

def test_criterion_04_irrational_cone_witnesses(report_criterion):
    t0 = time.perf_counter()
    found = 0
    for e in range(1, 7):
        w = witness_violation(SQRT2, (1, 1), e, 2, 12)
        assert verify_witness(SQRT2, w)
        found += 1
        if e == 3:
            assert w.beta == (12, 17) and w.source == "convergent"
            assert "17^2 = 289 > 2*12^2 = 288" in w.check_beta_outside[0]
    # the convergents p/q of sqrt(2) above sqrt(2) from 17/12 on all witness e = 3
    family = [(q, p) for p, q in convergents(R2, 12) if sign(p - q * R2) > 0 and q >= 12]
    fam_ok = all(not SQRT2.contains(b) and SQRT2.contains((8 * b[0] + 1, 8 * b[1] + 1)) for b in family)
    dt = time.perf_counter() - t0
    ok = found == 6 and fam_ok and len(family) >= 3 and dt < 5
    report_criterion(4, ok, f"{found}/6 witnesses, convergent family {family[:3]}..., {dt:.3f}s")
    assert ok


# 5 ---------------------------------------------------------------------------

def test_criterion_05_duality_and_round_trips(report_criterion):
    rng = random.Random(105)
    failures = 0
    for i in range(500):
        d = rng.randint(1, 4)
        if i % 2 == 0:
            gens = random_generators(rng, d, rng.randint(1, 8))
            c = Cone(d, generators=gens)
            truth_fn = PosOracle(gens, d).contains_many
        else:
            normals = random_generators(rng, d, rng.randint(1, 8))
            c = Cone(d, inequalities=normals)
            truth_fn = lambda pts, n=normals: halfspace_contains_many(n, pts)
        pts = box_array(d, 6)
        truth = truth_fn(pts)
        dd = dual(dual(c))
        checks = [
            halfspace_contains_many([h.normal for h in dd.inequalities], pts),
            PosOracle(dd.generators, d).contains_many(pts),
        ]
        if c.given_generators is not None:
            h = v_to_h(c)
            back = h_to_v(Cone(d, inequalities=h.inequalities))
        else:
            v = h_to_v(c)
            back = v_to_h(Cone(d, generators=v.generators))
        checks.append(PosOracle(back.generators, d).contains_many(pts))
        checks.append(halfspace_contains_many([h.normal for h in back.inequalities], pts))
        failures += not all(np.array_equal(x, truth) for x in checks)
    report_criterion(5, failures == 0, f"500 cones, {failures} failures")
    assert failures == 0


# 6 ---------------------------------------------------------------------------

def test_criterion_06_caratheodory(report_criterion):
    rng = random.Random(106)
    failures = 0
    for _ in range(1000):
        d = rng.randint(1, 4)
        gens = random_generators(rng, d, rng.randint(1, 8))
        x = [Fraction(0)] * d
        for g in gens:
            k = Fraction(rng.randint(1, 6), rng.randint(1, 4))
            x = [a + k * b for a, b in zip(x, g)]
        res = caratheodory(gens, x)
        good = sympy_rank([g for g, _ in res]) == len(res)
        good &= all(c > 0 for _, c in res)
        good &= [sum((c * g[i] for g, c in res), Fraction(0)) for i in range(d)] == x
        good &= all(tuple(g) in {tuple(h) for h in gens} for g, _ in res)
        failures += not good
    report_criterion(6, failures == 0, f"1000 instances, {failures} failures")
    assert failures == 0


# 7 ---------------------------------------------------------------------------

def test_criterion_07_hilbert_bases(report_criterion):
    rng = random.Random(107)
    failures = 0
    for _ in range(100):
        c, gens = random_pointed_full_cone(rng, Cone, max_rank=3, lo=-4, hi=4, max_gens=4)
        hb = hilbert_basis(c).elements
        ora = PosOracle(gens, c.rank)
        nu = positive_functional(list(hb))
        pts = box_array(c.rank, 8)
        inside = [tuple(int(t) for t in row) for row in pts[ora.contains_many(pts)]]
        dec = Decomposer(hb, nu, ora.contains)
        good = all(dec(x) for x in inside)
        good &= all(ora.contains(h) for h in hb)
        good &= not any(b != h and ora.contains(tuple(a - t for a, t in zip(h, b)))
                        for h in hb for b in hb)
        failures += not good
    golden = hilbert_basis(Cone(2, generators=[(1, 0), (1, 2)])).elements == ((1, 0), (1, 1), (1, 2))
    ok = failures == 0 and golden
    report_criterion(7, ok, f"100 cones, {failures} failures, golden {'ok' if golden else 'wrong'}")
    assert ok


# 8 ---------------------------------------------------------------------------

def test_criterion_08_splitting_synthesis(report_criterion):
    rng = random.Random(108)
    failures = 0
    n = 0
    while n < 200:
        c, gens = random_pointed_full_cone(rng, Cone, max_rank=3, lo=-5, hi=5, max_gens=4)
        p = rng.choice([2, 3, 5])
        terms = {random_cone_point(rng, gens, 3): rng.randint(1, p - 1) for _ in range(rng.randint(1, 4))}
        y = AlgebraElement(p, terms, c.rank)
        if y.is_zero():
            continue
        n += 1
        r = synthesize_splitting(c, y, p)
        d = r.descriptor
        one = AlgebraElement.one(p, c.rank)
        good = apply_pi(d, y * r.scalar) == one
        good &= apply_pi(d, AlgebraElement.monomial(p, d.alpha)) == one
        q = p ** d.e
        for g in box(c.rank, 4):
            exp = tuple(a + q * t for a, t in zip(d.alpha, g))
            good &= apply_pi(d, AlgebraElement.monomial(p, exp)) == AlgebraElement.monomial(p, g)
        failures += not good
    report_criterion(8, failures == 0, f"{n} elements, {failures} failures")
    assert failures == 0


# 9 ---------------------------------------------------------------------------

def test_criterion_09_direct_summand_maps(report_criterion):
    rng = random.Random(109)
    failures = 0
    cones = 0
    while cones < 50:
        d = rng.randint(2, 4)
        gens = random_generators(rng, d, rng.randint(1, 5), -3, 3)
        gens = gens + [tuple(-x for x in gens[0])]
        c = Cone(d, generators=gens)
        if not c.lines:
            continue
        cones += 1
        qc, sec = quotient_by_lineality(c)
        pi, i = quotient_summand_maps(c, sec)
        k = sec.quotient_rank
        good = True
        for _ in range(100):
            y = tuple(rng.randint(-5, 5) for _ in range(k))
            xy = AlgebraElement.monomial(2, y) if k else AlgebraElement.one(2, 0)
            good &= pi(i(xy)) == xy
            if qc.contains(y):
                good &= c.contains(next(iter(i(xy).terms)))
        failures += not good
    report_criterion(9, failures == 0, f"{cones} cones x 100 monomials, {failures} failures")
    assert failures == 0


# 10 --------------------------------------------------------------------------

def test_criterion_10_affine_section_bound(report_criterion):
    rng = random.Random(110)
    failures = 0
    n = 0
    while n < 500:
        c, gens = random_pointed_full_cone(rng, Cone, max_rank=3, lo=-4, hi=4, max_gens=4)
        if c.rank < 2:
            continue
        alpha = random_cone_point(rng, gens, 2)
        nu = tuple(rng.randint(-3, 3) for _ in range(c.rank))
        if sum(a * b for a, b in zip(nu, alpha)) <= 0:
            continue
        plane = [b for b in box(c.rank, 6) if sum(x * y for x, y in zip(nu, b)) == 0]
        beta = rng.choice(plane)
        n += 1
        ctx = affine_section_cone(c, alpha, nu)
        member, ell = ctx.membership(beta)
        ora = PosOracle(gens, c.rank)
        brute = next((l for l in range(1, 101)
                      if ora.contains(tuple(b + l * a for a, b in zip(alpha, beta)))), None)
        if brute is None:
            good = not member or ell > 100
        else:
            good = member and ell == brute
        failures += not good
    report_criterion(10, failures == 0, f"{n} triples, {failures} failures")
    assert failures == 0


# 11 --------------------------------------------------------------------------

def test_criterion_11_density(report_criterion):
    rng = random.Random(111)
    eps = Fraction(1, 20)
    certified = 0
    for _ in range(50):
        tgt = (Fraction(rng.randint(0, 4000), 1000), Fraction(rng.randint(0, 4000), 1000))
        res = dense_approx((1, R2), 2, tgt, eps, budget=10 ** 7)
        pos = (res.m + res.lam[0], res.m * R2 + res.lam[1])
        good = sign(res.m) >= 0 and all(x % 2 == 0 for x in res.lam)
        good &= all(sign(eps - abs(p - t)) > 0 for p, t in zip(pos, tgt))
        certified += good
    report_criterion(11, certified == 50, f"{certified}/50 targets certified")
    assert certified == 50


# 12 --------------------------------------------------------------------------

GR_GOLDEN = {
    "grval_n2.json": ("true", [[0, 1], [1, 0]], None),
    "grval_wedge.json": ("true", [[1, 0], [1, 1], [1, 2]], None),
    "grval_5_7.json": ("not_normal", [], [1]),
}


def _run_cli(path, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    proc = subprocess.run([sys.executable, "-m", "conelab.cli", "grval", "--input", str(path),
                           "--format", "json"], capture_output=True, env=env, check=False)
    return proc.returncode, proc.stdout


def test_criterion_12_grval_goldens(report_criterion):
    good = True
    for name, (status, gens, witness) in GR_GOLDEN.items():
        code1, out1 = _run_cli(DATA / name, 1)
        code2, out2 = _run_cli(DATA / name, 2)
        res = json.loads(out1)["result"]
        good &= code1 == code2 == 0 and out1 == out2
        good &= res["verdict"] == status and res["generators"] == gens and res["witness"] == witness
    report_criterion(12, good, "3 goldens, byte-identical across runs" if good else "mismatch")
    assert good


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))

"""Convex cones with exact rational (or single real quadratic field) data.

A :class:`Cone` is given by generators, by inequalities (optionally strict),
or both.  The missing representation is computed on demand with the
incremental double description method.  Strict inequalities only affect
membership; every other operation works on the closure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

import numpy as np

from ._linalg import (
    dot,
    is_rational_vec,
    is_zero_vec,
    normalize_direction,
    nullspace,
    primitive,
    rank as mat_rank,
    solve,
    to_fractions,
)
from .lattice import LatticeSection, split_quotient, sublattice_intersection
from .quadratic import QuadNum, sign

__all__ = [
    "HalfSpace",
    "Cone",
    "Ray",
    "Polytope",
    "ConeMembershipContext",
    "NotInCone",
    "closure",
    "v_to_h",
    "h_to_v",
    "dual",
    "lineality",
    "extremal_rays",
    "contains",
    "relint_contains",
    "face",
    "quotient_by_lineality",
    "caratheodory",
    "hyperplane_section",
    "affine_section_cone",
    "cross_section",
    "double_description",
    "fourier_motzkin",
]


class NotInCone(ValueError):
    """The point is not a nonnegative combination of the generators."""


def _exact(x, n):
    if isinstance(x, QuadNum):
        if x.b == 0:
            return x.a
        if n is not None and x.n != n:
            raise ValueError(f"mixed radicands {x.n} and {n}")
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted")
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f


def _vec(v, n=None):
    return tuple(_exact(x, n) for x in v)


def _radicand(vectors):
    ns = {x.n for v in vectors for x in v if isinstance(x, QuadNum) and x.b != 0}
    if len(ns) > 1:
        raise ValueError(f"mixed radicands {sorted(ns)}")
    return ns.pop() if ns else None


def _scale(v, c):
    return [c * x for x in v]


def _comb(c1, v1, c2, v2):
    return [c1 * a + c2 * b for a, b in zip(v1, v2)]


def _canon_ray(v):
    return normalize_direction(v)


def _canon_line(v):
    r = normalize_direction(v)
    lead = next(x for x in r if x != 0)
    return r if sign(lead) > 0 else tuple(-x for x in r)


@dataclass(frozen=True)
class HalfSpace:
    """``normal . x >= 0``, or ``> 0`` when ``strict`` (0 is always in the cone)."""

    normal: tuple
    strict: bool = False

    def holds(self, x) -> bool:
        s = sign(dot(self.normal, x))
        return s > 0 if self.strict else s >= 0


@dataclass(frozen=True)
class Ray:
    direction: tuple

    def __post_init__(self):
        if is_zero_vec(self.direction):
            raise ValueError("a ray needs a nonzero direction")


@dataclass(frozen=True)
class Polytope:
    vertices: tuple


# -- double description ------------------------------------------------------

def double_description(normals, d: int):
    """Generators of ``{x : a.x >= 0 for a in normals}``.

    Returns ``(lines, rays)``: a basis of the lineality space and the
    extremal rays modulo it.  Works over Q and over Q(sqrt(n)).
    """
    normals = [list(a) for a in normals if not is_zero_vec(a)]
    rational = all(is_rational_vec(a) for a in normals)
    norm = (lambda v: list(primitive(v))) if rational else (lambda v: list(normalize_direction(v)))
    lines = [[int(i == j) for j in range(d)] for i in range(d)]
    rays: list[list] = []
    processed: list[list] = []
    for a in normals:
        lv = [dot(a, l) for l in lines]
        k = next((i for i, v in enumerate(lv) if v != 0), None)
        if k is not None:
            l0, v0 = lines[k], lv[k]
            if sign(v0) < 0:
                l0, v0 = [-x for x in l0], -v0
            new_lines = []
            for i, l in enumerate(lines):
                if i == k:
                    continue
                nl = _comb(v0, l, -lv[i], l0) if lv[i] != 0 else l
                new_lines.append(norm(nl))
            new_rays = []
            for r in rays:
                ar = dot(a, r)
                new_rays.append(norm(_comb(v0, r, -ar, l0)) if ar != 0 else r)
            new_rays.append(norm(l0))
            lines, rays = new_lines, new_rays
        else:
            vals = [dot(a, r) for r in rays]
            pos = [i for i, v in enumerate(vals) if sign(v) > 0]
            neg = [i for i, v in enumerate(vals) if sign(v) < 0]
            keep = [rays[i] for i, v in enumerate(vals) if sign(v) >= 0]
            target = d - len(lines) - 2
            tight = [frozenset(j for j, b in enumerate(processed) if dot(b, r) == 0) for r in rays]
            for i in pos:
                for j in neg:
                    common = tight[i] & tight[j]
                    if len(common) < target:
                        continue
                    if target > 0 and mat_rank([processed[t] for t in common], d) != target:
                        continue
                    new = _comb(vals[i], rays[j], -vals[j], rays[i])
                    if not is_zero_vec(new):
                        keep.append(norm(new))
            rays = keep
        processed.append(a)
    return lines, rays


def fourier_motzkin(generators, d: int):
    """Inequalities and equations describing ``pos(generators)``.

    Independent of :func:`double_description`: eliminates the multipliers of
    ``x = G.lambda, lambda >= 0`` with Chernikov's redundancy rule.  The
    output may be redundant.  Returns ``(inequalities, equations)``.
    """
    gens = [to_fractions(g) for g in generators]
    k = len(gens)
    # each row: coefficients on (x_1..x_d, lambda_1..lambda_k) and a history set
    eqs = [[Fraction(int(i == j)) for j in range(d)] + [-gens[t][i] for t in range(k)]
           for i in range(d)]
    ineqs = [([Fraction(0)] * d + [Fraction(int(t == s)) for s in range(k)], frozenset([t]))
             for t in range(k)]
    # use the equations to eliminate as many multipliers as possible
    remaining = list(range(k))
    for var in range(k):
        col = d + var
        piv = next((e for e in eqs if e[col] != 0), None)
        if piv is None:
            continue
        eqs.remove(piv)
        c = piv[col]
        sub = [x / c for x in piv]
        eqs = [[x - e[col] * y for x, y in zip(e, sub)] if e[col] != 0 else e for e in eqs]
        ineqs = [([x - row[col] * y for x, y in zip(row, sub)], h) if row[col] != 0 else (row, h)
                 for row, h in ineqs]
        remaining.remove(var)
    eliminated = 0
    for var in remaining:
        col = d + var
        pos = [(r, h) for r, h in ineqs if r[col] > 0]
        neg = [(r, h) for r, h in ineqs if r[col] < 0]
        out = [(r, h) for r, h in ineqs if r[col] == 0]
        eliminated += 1
        for rp, hp in pos:
            for rn, hn in neg:
                h = hp | hn
                if len(h) > eliminated + 1:
                    continue
                out.append(([rp[col] * y - rn[col] * x for x, y in zip(rp, rn)], h))
        seen, ineqs = set(), []
        for r, h in out:
            key = primitive(r) if not is_zero_vec(r) else None
            if key is None or key in seen:
                continue
            seen.add(key)
            ineqs.append((r, h))
    ineq_x = sorted({primitive(r[:d]) for r, _ in ineqs if not is_zero_vec(r[:d])})
    eq_x = [primitive(e[:d]) for e in eqs if not is_zero_vec(e[:d])]
    return ineq_x, eq_x


# -- the cone ----------------------------------------------------------------

class Cone:
    """Convex cone in ``R^rank`` containing the origin.

    Parameters
    ----------
    rank : ambient dimension ``d``
    generators : vectors whose nonnegative combinations form the cone
    inequalities : :class:`HalfSpace` objects or bare normal vectors
    quad_n : radicand of the quadratic field used by the entries, if any
    """

    def __init__(self, rank: int, generators=None, inequalities=None, quad_n: int | None = None,
                 check: bool = True):
        if generators is None and inequalities is None:
            raise ValueError("a cone needs generators or inequalities")
        self.rank = int(rank)
        gens = None
        if generators is not None:
            gens = tuple(_vec(g, quad_n) for g in generators)
        ineqs = None
        if inequalities is not None:
            ineqs = []
            for h in inequalities:
                if isinstance(h, HalfSpace):
                    ineqs.append(HalfSpace(_vec(h.normal, quad_n), bool(h.strict)))
                else:
                    ineqs.append(HalfSpace(_vec(h, quad_n), False))
            ineqs = tuple(ineqs)
        for v in (gens or ()) + tuple(h.normal for h in ineqs or ()):
            if len(v) != self.rank:
                raise ValueError(f"vector {v} does not have length {self.rank}")
        found = _radicand(list(gens or ()) + [h.normal for h in ineqs or ()])
        if quad_n is not None and found is not None and found != quad_n:
            raise ValueError(f"entries use sqrt({found}) but quad_n = {quad_n}")
        self.quad_n = quad_n if quad_n is not None else found
        self._gens = gens
        self._ineqs = ineqs
        if check and gens is not None and ineqs is not None:
            self._check_consistent()

    # basic predicates
    @property
    def is_rational(self) -> bool:
        vecs = list(self._gens or ()) + [h.normal for h in self._ineqs or ()]
        return all(is_rational_vec(v) for v in vecs)

    @property
    def has_strict(self) -> bool:
        return any(h.strict for h in self._ineqs or ())

    @property
    def is_closed(self) -> bool:
        return not self.has_strict

    def _require_convertible(self):
        if not self.is_rational and self.rank > 2:
            raise ValueError("quadratic-field cones are only converted in rank <= 2")

    def _check_consistent(self):
        if not self.is_rational or self.has_strict:
            return
        for g in self._gens:
            if not all(h.holds(g) for h in self._ineqs):
                raise ValueError(f"generator {g} violates the inequalities")
        lines, rays = double_description([h.normal for h in self._ineqs], self.rank)
        facets, eqs = self._v_closure_hrep()
        for v in list(rays) + list(lines) + [[-x for x in l] for l in lines]:
            if any(sign(dot(f, v)) < 0 for f in facets) or any(dot(e, v) != 0 for e in eqs):
                raise ValueError("generators and inequalities describe different cones")

    # representations of the closure
    @cached_property
    def _vrep(self):
        """``(lines, rays)`` of the closure, canonical."""
        self._require_convertible()
        if self._ineqs is not None:
            lines, rays = double_description([h.normal for h in self._ineqs], self.rank)
        else:
            facets, eqs = self._v_closure_hrep()
            normals = list(facets) + list(eqs) + [[-x for x in e] for e in eqs]
            lines, rays = double_description(normals, self.rank)
        return _canonical_vrep(lines, rays, self.rank)

    def _v_closure_hrep(self):
        # facets/equations of pos(generators) by dualizing
        gens = [g for g in self._gens if not is_zero_vec(g)]
        lines, rays = double_description(gens, self.rank)
        lines, rays = _canonical_vrep(lines, rays, self.rank)
        return tuple(rays), tuple(lines)

    @cached_property
    def _hrep(self):
        """``(facets, equations)`` of the closure, canonical and irredundant."""
        self._require_convertible()
        lines, rays = self._vrep
        gens = list(rays) + list(lines) + [tuple(-x for x in l) for l in lines]
        dl, dr = double_description(gens, self.rank)
        eqs, facets = _canonical_vrep(dl, dr, self.rank)
        return tuple(facets), tuple(eqs)

    @property
    def lines(self):
        return self._vrep[0]

    @property
    def rays(self):
        return self._vrep[1]

    @property
    def facets(self):
        return self._hrep[0]

    @property
    def equations(self):
        return self._hrep[1]

    @property
    def generators(self):
        if self._gens is not None:
            return self._gens
        lines, rays = self._vrep
        return tuple(rays) + tuple(lines) + tuple(tuple(-x for x in l) for l in lines)

    @property
    def inequalities(self):
        if self._ineqs is not None:
            return self._ineqs
        facets, eqs = self._hrep
        return (tuple(HalfSpace(f) for f in facets)
                + tuple(HalfSpace(e) for e in eqs)
                + tuple(HalfSpace(tuple(-x for x in e)) for e in eqs))

    @property
    def given_generators(self):
        return self._gens

    @property
    def given_inequalities(self):
        return self._ineqs

    @property
    def dim(self) -> int:
        lines, rays = self._vrep
        # extra rank contributed by the rays modulo the lineality space
        return mat_rank(list(lines) + list(rays), self.rank) if (lines or rays) else 0

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.rank

    @property
    def is_pointed(self) -> bool:
        return len(lineality(self)) == 0

    # membership
    @cached_property
    def _membership_rows(self):
        if self._ineqs is not None:
            return [(h.normal, h.strict) for h in self._ineqs]
        return [(h.normal, False) for h in self.inequalities]

    def contains(self, x) -> bool:
        if len(x) != self.rank:
            raise ValueError(f"point of length {len(x)} in a rank {self.rank} cone")
        if is_zero_vec(x):
            return True
        for normal, strict in self._membership_rows:
            s = sign(dot(normal, x))
            if s < 0 or (strict and s == 0):
                return False
        return True

    @cached_property
    def _int_rows(self):
        if not self.is_rational:
            return None
        rows, strict = [], []
        for normal, st in self._membership_rows:
            den = math.lcm(*[Fraction(v).denominator for v in normal]) if normal else 1
            rows.append([int(Fraction(v) * den) for v in normal])
            strict.append(st)
        return rows, strict

    def contains_many(self, points) -> np.ndarray:
        """Vectorized membership for an integer array of shape ``(N, rank)``."""
        pts = np.asarray(points)
        if pts.ndim != 2 or pts.shape[1] != self.rank:
            raise ValueError("points must have shape (N, rank)")
        if self._int_rows is None:
            return np.array([self.contains(tuple(int(t) for t in p)) for p in pts], dtype=bool)
        rows, strict = self._int_rows
        if not rows:
            return np.ones(len(pts), dtype=bool)
        a = np.array(rows, dtype=object if _too_big(rows, pts) else np.int64)
        vals = pts.astype(a.dtype) @ a.T
        ok = np.ones(len(pts), dtype=bool)
        for j, st in enumerate(strict):
            col = vals[:, j]
            ok &= (col > 0) if st else (col >= 0)
        zero = ~np.any(pts != 0, axis=1)
        return ok | zero

    def __repr__(self):
        parts = [f"rank={self.rank}"]
        if self._gens is not None:
            parts.append(f"generators={list(self._gens)}")
        if self._ineqs is not None:
            parts.append(f"inequalities={list(self._ineqs)}")
        if self.quad_n is not None:
            parts.append(f"quad_n={self.quad_n}")
        return f"Cone({', '.join(parts)})"


def _too_big(rows, pts) -> bool:
    m = max((abs(x) for r in rows for x in r), default=0)
    p = int(np.abs(pts).max()) if pts.size else 0
    return m * p * max(1, len(rows[0])) >= 2**62


def _project_out(v, lines, gram_inv):
    """Orthogonal projection of ``v`` onto the complement of ``span(lines)``."""
    if not lines:
        return list(v)
    c = [dot(l, v) for l in lines]
    coeff = [dot(row, c) for row in gram_inv]
    out = list(v)
    for a, l in zip(coeff, lines):
        if a != 0:
            out = [x - a * y for x, y in zip(out, l)]
    return out


def _gram_inverse(lines):
    k = len(lines)
    g = [[dot(a, b) for b in lines] for a in lines]
    inv = []
    for j in range(k):
        e = [int(i == j) for i in range(k)]
        inv.append(solve([list(col) for col in zip(*g)], e))
    return [list(r) for r in zip(*inv)]


def _canonical_vrep(lines, rays, d):
    if lines and all(is_rational_vec(l) for l in lines):
        lines = [tuple(l) for l in sublattice_intersection(d, lines)]
    else:
        lines = [_canon_line(l) for l in lines]
    gi = _gram_inverse(lines) if lines else []
    out = set()
    for r in rays:
        p = _project_out(r, lines, gi)
        if not is_zero_vec(p):
            out.add(_canon_ray(p))
    return tuple(lines), tuple(sorted(out, key=_sort_key))


def _sort_key(v):
    return tuple(float(x) if isinstance(x, QuadNum) else x for x in v), tuple(str(x) for x in v)


# -- operations --------------------------------------------------------------

def closure(c: Cone) -> Cone:
    if not c.has_strict:
        return c
    ineqs = [HalfSpace(h.normal, False) for h in c.given_inequalities]
    return Cone(c.rank, generators=c.given_generators, inequalities=ineqs, quad_n=c.quad_n,
                check=False)


def _with_both(c: Cone) -> Cone:
    return Cone(c.rank, generators=c.generators, inequalities=[h for h in c.inequalities],
                quad_n=c.quad_n, check=False)


def h_to_v(c: Cone) -> Cone:
    if c.given_inequalities is None:
        raise ValueError("h_to_v needs an H-representation")
    if c.has_strict:
        raise ValueError("conversion works on closed cones; call closure() first")
    c._require_convertible()
    lines, rays = c._vrep
    gens = tuple(rays) + tuple(lines) + tuple(tuple(-x for x in l) for l in lines)
    return Cone(c.rank, generators=gens, inequalities=c.inequalities, quad_n=c.quad_n, check=False)


def v_to_h(c: Cone) -> Cone:
    if c.given_generators is None:
        raise ValueError("v_to_h needs generators")
    c._require_convertible()
    facets, eqs = c._hrep
    ineqs = ([HalfSpace(f) for f in facets] + [HalfSpace(e) for e in eqs]
             + [HalfSpace(tuple(-x for x in e)) for e in eqs])
    return Cone(c.rank, generators=c.generators, inequalities=ineqs, quad_n=c.quad_n, check=False)


def dual(c: Cone) -> Cone:
    """The dual cone, in dual-lattice coordinates; always closed."""
    if not c.is_rational:
        c._require_convertible()
    facets, eqs = c._hrep
    lines, rays = c._vrep
    gens = tuple(facets) + tuple(eqs) + tuple(tuple(-x for x in e) for e in eqs)
    ineqs = ([HalfSpace(r) for r in rays] + [HalfSpace(l) for l in lines]
             + [HalfSpace(tuple(-x for x in l)) for l in lines])
    return Cone(c.rank, generators=gens, inequalities=ineqs, quad_n=c.quad_n, check=False)


def lineality(c: Cone) -> list:
    """Basis of the largest linear subspace contained in the cone."""
    if c.has_strict:
        return []
    if c.given_inequalities is not None:
        normals = [list(h.normal) for h in c.given_inequalities if not is_zero_vec(h.normal)]
        basis = nullspace(normals, c.rank)
        if all(is_rational_vec(v) for v in basis):
            return [tuple(v) for v in sublattice_intersection(c.rank, basis)] if basis else []
        return [_canon_line(v) for v in basis]
    return list(c.lines)


def extremal_rays(c: Cone) -> list[Ray]:
    if not c.is_rational:
        c._require_convertible()
    if c.lines:
        raise ValueError("cone has a nonzero lineality space; quotient it first")
    return [Ray(r) for r in c.rays]


def contains(c: Cone, x) -> bool:
    return c.contains(x)


def relint_contains(c: Cone, x) -> bool:
    if len(x) != c.rank:
        raise ValueError("dimension mismatch")
    if not c.is_full_dimensional:
        raise ValueError("relint_contains needs a full-dimensional cone")
    if not c.contains(x) and not is_zero_vec(x):
        return False
    return all(sign(dot(f, x)) > 0 for f in c.facets)


def face(c: Cone, phi) -> Cone:
    """The face ``c ∩ phi^perp`` for ``phi`` in the dual cone."""
    phi = _vec(phi, c.quad_n)
    if len(phi) != c.rank:
        raise ValueError("dimension mismatch")
    gens = c.generators if c.is_closed else closure(c).generators
    vals = [dot(phi, g) for g in gens]
    if any(sign(v) < 0 for v in vals):
        raise ValueError(f"{phi} is not in the dual cone")
    return Cone(c.rank, generators=[g for g, v in zip(gens, vals) if v == 0], quad_n=c.quad_n)


def quotient_by_lineality(c: Cone):
    """``(pi(c), section)`` where ``pi`` kills the lineality space."""
    if not c.is_rational:
        raise ValueError("quotient_by_lineality needs a rational cone")
    if c.has_strict:
        raise ValueError("quotient_by_lineality works on closed cones")
    lin = list(c.lines)
    sec = split_quotient(lin, c.rank)
    dq = sec.quotient_rank
    gens = sorted({_canon_ray(sec.project(r)) for r in c.rays if any(sec.project(r))},
                  key=_sort_key)
    facets, eqs = c._hrep
    pulled = [tuple(dot(f, col) for col in zip(*sec.section)) if dq else () for f in
              list(facets) + list(eqs)]
    ineqs = [HalfSpace(v) for v in pulled[:len(facets)]]
    ineqs += [HalfSpace(v) for v in pulled[len(facets):]]
    ineqs += [HalfSpace(tuple(-x for x in v)) for v in pulled[len(facets):]]
    ineqs = [h for h in ineqs if not is_zero_vec(h.normal)]
    q = Cone(dq, generators=gens, inequalities=ineqs, check=False)
    return q, sec


def caratheodory(gens, x):
    """Write ``x`` as a positive combination of linearly independent generators.

    Subsets are tried by increasing size (then index order), so the result is
    the lexicographically first decomposition of minimal support.
    """
    gens = [tuple(to_fractions(g)) for g in gens]
    x = tuple(to_fractions(x))
    if is_zero_vec(x):
        return []
    cand = [i for i, g in enumerate(gens) if not is_zero_vec(g)]
    r = mat_rank([list(gens[i]) for i in cand], len(x)) if cand else 0
    for size in range(1, r + 1):
        for idx in combinations(cand, size):
            cols = [list(gens[i]) for i in idx]
            if mat_rank(cols, len(x)) != size:
                continue
            coef = solve(cols, list(x))
            if coef is not None and all(t > 0 for t in coef):
                return [(tuple(_exact(t, None) for t in gens[i]), _exact(t, None))
                        for i, t in zip(idx, coef)]
    raise NotInCone(f"{x} is not in the cone generated by {gens}")


def hyperplane_section(c: Cone, normal):
    """``(c ∩ normal^perp, basis)`` with the section in coordinates of ``basis``."""
    normal = _vec(normal)
    if is_zero_vec(normal):
        raise ValueError("zero normal")
    if not is_rational_vec(normal) or len(normal) != c.rank:
        raise ValueError("normal must be a rational vector of the cone's rank")
    basis = sublattice_intersection(c.rank, nullspace([list(normal)], c.rank))
    ineqs = []
    for h in c.inequalities:
        pulled = tuple(dot(h.normal, b) for b in basis)
        if not is_zero_vec(pulled) or h.strict:
            ineqs.append(HalfSpace(pulled, h.strict))
    return Cone(c.rank - 1, inequalities=ineqs, quad_n=c.quad_n), basis


class ConeMembershipContext:
    """Membership in the cone of the affine section through ``alpha``.

    ``beta`` with ``nu(beta) = 0`` is a member iff ``beta + l*alpha`` lies in
    the cone for some integer ``l > 0``.
    """

    def __init__(self, c: Cone, alpha, nu):
        self.cone = c
        self.alpha = tuple(alpha)
        self.nu = tuple(nu)
        rows = list(c.facets) + list(c.equations) + [tuple(-x for x in e) for e in c.equations]
        self.scaled = []  # (phi, phi(alpha)) with phi(alpha) > 0
        self.hard = []    # phi with phi(alpha) == 0
        for phi in rows:
            v = dot(phi, self.alpha)
            if v > 0:
                self.scaled.append((phi, v))
            else:
                self.hard.append(phi)

    def bound(self, beta):
        """The least admissible ``l`` ignoring hard constraints."""
        need = [math.ceil(Fraction(-dot(phi, beta)) / Fraction(v)) for phi, v in self.scaled]
        return max([1] + need)

    def membership(self, beta):
        """``(is_member, l)``; ``l`` is the least valid multiplier or ``None``."""
        beta = tuple(beta)
        if dot(self.nu, beta) != 0:
            raise ValueError(f"{beta} is not on the linear hyperplane nu = 0")
        if any(dot(phi, beta) < 0 for phi in self.hard):
            return False, None
        return True, self.bound(beta)

    def __contains__(self, beta):
        return self.membership(beta)[0]


def affine_section_cone(c: Cone, alpha, nu) -> ConeMembershipContext:
    alpha = _vec(alpha)
    nu = _vec(nu)
    if not c.is_rational or c.has_strict:
        raise ValueError("affine sections need a closed rational polyhedral cone")
    if any(Fraction(a).denominator != 1 for a in alpha) or not c.contains(alpha):
        raise ValueError(f"alpha = {alpha} is not a lattice point of the cone")
    if dot(nu, alpha) <= 0:
        raise ValueError("nu(alpha) must be positive")
    return ConeMembershipContext(c, alpha, nu)


def cross_section(c: Cone, nu, level) -> Polytope:
    """Vertices of ``c ∩ {nu = level}`` for ``nu`` interior to the dual cone."""
    nu = _vec(nu)
    level = Fraction(level)
    if level <= 0:
        raise ValueError("level must be positive")
    d = dual(c)
    if not d.is_full_dimensional or not relint_contains(d, nu):
        raise ValueError(f"{nu} is not in the relative interior of the dual cone")
    verts = []
    for r in c.rays:
        t = level / Fraction(dot(nu, r))
        verts.append(tuple(_exact(t * x, None) for x in r))
    return Polytope(tuple(sorted(verts)))

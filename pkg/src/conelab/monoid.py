"""Affine monoids and Hilbert bases of rational cones."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ._linalg import dot, is_zero_vec, solve
from .cone import Cone, quotient_by_lineality
from .lattice import det, lattice_basis, lattice_coordinates, snf, sublattice_intersection

__all__ = [
    "AffineMonoid",
    "HilbertBasis",
    "NormalityResult",
    "Undecided",
    "hilbert_basis",
    "monoid_membership",
    "is_normal",
    "saturation",
    "triangulate",
]


class Undecided(RuntimeError):
    """Membership could not be bounded (no positive grading found)."""


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return tuple(x) in self.elements


def _int_vec(v):
    out = []
    for x in v:
        f = Fraction(x)
        if f.denominator != 1:
            raise ValueError(f"{v} is not integral")
        out.append(int(f))
    return tuple(out)


def triangulate(c: Cone):
    """Simplicial cones (as tuples of rays) covering a pointed cone.

    Recursive pulling from the first ray: the cone is the union of the cones
    over the facets that avoid that ray.
    """
    rays = list(c.rays)
    k = c.dim
    if len(rays) == k:
        return [tuple(rays)]
    apex = rays[0]
    out = []
    for f in c.facets:
        if dot(f, apex) == 0:
            continue
        on = [r for r in rays if dot(f, r) == 0]
        sub = Cone(c.rank, generators=on)
        for simplex in triangulate(sub):
            out.append((apex,) + simplex)
    return out


def _parallelepiped_points(cols):
    """Lattice points of the half-open parallelepiped spanned by ``cols``."""
    d = len(cols)
    b = [[cols[j][i] for j in range(d)] for i in range(d)]
    s, u, _ = snf(b)
    diag = [s[i][i] for i in range(d)]
    # U^{-1} maps the coset representatives y (0 <= y_i < d_i) into Z^d
    from .lattice import _inverse_unimodular
    uinv, _ = _inverse_unimodular(u)
    dt = det(b)
    adj_rows = []
    for i in range(d):
        e = [int(t == i) for t in range(d)]
        adj_rows.append(solve([list(c) for c in cols], e))  # row i of B^{-1}
    binv = [[adj_rows[j][i] for j in range(d)] for i in range(d)]
    reps = [()]
    for di in diag:
        reps = [r + (y,) for r in reps for y in range(di)]
    pts = set()
    for y in reps:
        x = [sum(uinv[i][j] * y[j] for j in range(d)) for i in range(d)]
        lam = [sum(binv[i][j] * x[j] for j in range(d)) for i in range(d)]
        frac = [l - math.floor(l) for l in lam]
        p = tuple(int(sum(frac[j] * cols[j][i] for j in range(d))) for i in range(d))
        pts.add(p)
    assert len(pts) == abs(dt)
    return pts


def _pointed_full_hilbert(c: Cone):
    rays = [tuple(r) for r in c.rays]
    if not rays:
        return []
    cand = set(rays)
    for simplex in triangulate(c):
        cand |= _parallelepiped_points(simplex)
    cand.discard(tuple([0] * c.rank))
    nu = [sum(col) for col in zip(*c.facets)] if c.facets else [0] * c.rank
    facets = c.facets
    basis = []
    for x in sorted(cand, key=lambda v: (dot(nu, v), v)):
        reducible = False
        for h in basis:
            diff = [a - b for a, b in zip(x, h)]
            if all(dot(f, diff) >= 0 for f in facets):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return basis


def _coords_in(basis, x):
    c = solve([list(b) for b in basis], list(x))
    if c is None:
        raise ValueError(f"{x} is not in the span of {basis}")
    return c


def _from_coords(basis, y, d):
    return tuple(int(sum(yi * b[i] for yi, b in zip(y, basis))) for i in range(d))


def hilbert_basis(c: Cone) -> HilbertBasis:
    """Minimal generating set of the monoid ``c ∩ Z^d``.

    With a nonzero lineality space the result is a lift of the quotient's
    Hilbert basis together with ``±`` a basis of the lineality lattice.
    """
    if not c.is_rational:
        raise ValueError("Hilbert bases need a rational cone")
    if c.has_strict:
        raise ValueError("Hilbert bases need a closed cone")
    d = c.rank
    if c.lines:
        q, sec = quotient_by_lineality(c)
        lifted = [sec.lift(h) for h in hilbert_basis(q)]
        lin = [tuple(l) for l in c.lines]
        elems = lifted + lin + [tuple(-x for x in l) for l in lin]
        return HilbertBasis(tuple(sorted(set(elems))))
    if not c.rays:
        return HilbertBasis(())
    if not c.is_full_dimensional:
        span = sublattice_intersection(d, list(c.rays))
        k = len(span)
        inner = Cone(k, generators=[[Fraction(t) for t in _coords_in(span, r)] for r in c.rays])
        elems = [_from_coords(span, y, d) for y in _pointed_full_hilbert(inner)]
        return HilbertBasis(tuple(sorted(elems)))
    return HilbertBasis(tuple(sorted(_pointed_full_hilbert(c))))


# -- affine monoids -----------------------------------------------------------

class AffineMonoid:
    """Submonoid of ``Z^rank`` generated by finitely many vectors."""

    def __init__(self, rank: int, generators):
        self.rank = int(rank)
        gens = {_int_vec(g) for g in generators}
        for g in gens:
            if len(g) != self.rank:
                raise ValueError(f"generator {g} does not have length {self.rank}")
        gens.discard(tuple([0] * self.rank))
        self.generators = tuple(sorted(gens))
        self._members: dict = {}

    def __repr__(self):
        return f"AffineMonoid(rank={self.rank}, generators={list(self.generators)})"

    @cached_property
    def group_basis(self):
        """HNF basis of the group generated by the monoid."""
        return lattice_basis(self.generators, self.rank)

    @cached_property
    def cone(self) -> Cone:
        return Cone(self.rank, generators=self.generators)

    @cached_property
    def _inner(self):
        # the monoid in coordinates of its own group: full-dimensional there
        basis = self.group_basis
        k = len(basis)
        gens = [lattice_coordinates(basis, g) for g in self.generators]
        return basis, Cone(k, generators=gens) if k else None

    @cached_property
    def hilbert_basis(self) -> HilbertBasis:
        """Hilbert basis of ``cone ∩ group``, in ambient coordinates."""
        basis, inner = self._inner
        if inner is None:
            return HilbertBasis(())
        elems = [_from_coords(basis, y, self.rank) for y in hilbert_basis(inner)]
        return HilbertBasis(tuple(sorted(elems)))

    @cached_property
    def _grading(self):
        c = self.cone
        facets = c.facets
        nu = [sum(col) for col in zip(*facets)] if facets else [0] * self.rank
        in_lin = [g for g in self.generators if all(dot(f, g) == 0 for f in facets)]
        pointed = [g for g in self.generators if g not in in_lin]
        for g in pointed:
            if dot(nu, g) <= 0:
                raise Undecided(f"no positive grading on generator {g}")
        lin_basis = lattice_basis(in_lin, self.rank)
        return nu, pointed, lin_basis

    def in_group(self, x) -> bool:
        return lattice_coordinates(self.group_basis, x) is not None if self.group_basis \
            else is_zero_vec(x)

    def __contains__(self, x):
        return monoid_membership(self, x)


def monoid_membership(s: AffineMonoid, x) -> bool:
    """Whether ``x`` is a nonnegative integer combination of the generators."""
    x = _int_vec(x)
    if len(x) != s.rank:
        raise ValueError("dimension mismatch")
    if is_zero_vec(x):
        return True
    if not s.cone.contains(x) or not s.in_group(x):
        return False
    nu, pointed, lin_basis = s._grading
    cone = s.cone
    memo = s._members

    def in_lin_group(y):
        if not lin_basis:
            return is_zero_vec(y)
        return lattice_coordinates(lin_basis, y) is not None

    def success(frames):
        for fr in frames:
            memo[fr[0]] = True
        return True

    if x in memo:
        return memo[x]
    if in_lin_group(x):
        memo[x] = True
        return True
    # iterative DFS; every step lowers the nu-degree, so it terminates
    frames = [[x, 0]]
    while frames:
        top = frames[-1]
        y, j = top
        pushed = False
        while j < len(pointed):
            g = pointed[j]
            j += 1
            z = tuple(a - b for a, b in zip(y, g))
            if dot(nu, z) < 0 or not cone.contains(z):
                continue
            known = memo.get(z)
            if known is False:
                continue
            if known or in_lin_group(z):
                memo[z] = True
                return success(frames)
            top[1] = j
            frames.append([z, 0])
            pushed = True
            break
        if not pushed:
            memo[y] = False
            frames.pop()
    return False


@dataclass(frozen=True)
class NormalityResult:
    normal: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.normal


def is_normal(s: AffineMonoid, in_ambient: bool = False) -> NormalityResult:
    """``S == cone(S) ∩ Z S``; a witness from the Hilbert basis otherwise.

    With ``in_ambient=True`` the comparison is against ``cone(S) ∩ Z^rank``
    instead, i.e. saturation of ``S`` in the ambient lattice.
    """
    elems = hilbert_basis(s.cone) if in_ambient else s.hilbert_basis
    for h in elems:
        if not monoid_membership(s, h):
            return NormalityResult(False, h)
    return NormalityResult(True)


def saturation(s: AffineMonoid) -> AffineMonoid:
    return AffineMonoid(s.rank, s.hilbert_basis.elements)

"""Integer lattice algorithms: Hermite and Smith normal forms and the
sublattice bookkeeping built on them.

Matrices are lists of rows of Python ints.  Sublattices of ``Z^d`` are passed
around as lists of generator vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import identity, is_rational_vec, lcm_denominators, mat_mul, mat_vec, nullspace

__all__ = [
    "hnf",
    "snf",
    "is_unimodular",
    "det",
    "sublattice_intersection",
    "saturate_subgroup",
    "split_quotient",
    "lattice_coordinates",
    "LatticeSection",
    "NotSaturatedError",
]


class NotSaturatedError(ValueError):
    """The quotient by the given sublattice has torsion."""


def _copy(a):
    return [list(map(int, r)) for r in a]


def hnf(a):
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ A``, ``U`` unimodular, ``H`` in row
    echelon form with positive pivots, entries above each pivot reduced into
    ``[0, pivot)``, and zero rows at the bottom.
    """
    h = _copy(a)
    m = len(h)
    n = len(h[0]) if m else 0
    u = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        # Euclid on column c among rows r..m-1
        while True:
            nz = [i for i in range(r, m) if h[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, m):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        p = h[r][c]
        for i in range(r):
            q = h[i][c] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def snf(a):
    """Smith normal form ``(S, U, V)`` with ``S == U @ A @ V``.

    ``S`` is diagonal with nonnegative entries ``d_1 | d_2 | ...``; ``U`` and
    ``V`` are unimodular.
    """
    s = _copy(a)
    m = len(s)
    n = len(s[0]) if m else 0
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        s[dst] = [x - q * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in s:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j]]
            if not entries:
                return _finish_snf(s, u, v)
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            p = s[t][t]
            clean = True
            for i in range(t + 1, m):
                if s[i][t]:
                    add_row(i, t, s[i][t] // p)
                    clean = clean and s[i][t] == 0
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(j, t, s[t][j] // p)
                    clean = clean and s[t][j] == 0
            if not clean:
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if s[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return _finish_snf(s, u, v)


def _finish_snf(s, u, v):
    for i in range(min(len(s), len(s[0]) if s else 0)):
        if s[i][i] < 0:
            s[i] = [-x for x in s[i]]
            u[i] = [-x for x in u[i]]
    return s, u, v


def det(a) -> int:
    """Exact determinant of a square integer matrix (via fraction-free Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    m = _copy(a)
    sgn, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sgn = -sgn
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sgn * m[n - 1][n - 1]


def is_unimodular(a) -> bool:
    return len(a) == (len(a[0]) if a else 0) and abs(det(a)) == 1


def _integral_rows(vectors):
    rows = []
    for v in vectors:
        if not is_rational_vec(v):
            raise ValueError(f"vector {v!r} has an irrational entry")
        den = lcm_denominators(v)
        rows.append([int(Fraction(x) * den) for x in v])
    return rows


def _saturated_row_basis(rows, d: int):
    if not rows:
        return []
    s, _, v = snf(rows)
    r = sum(1 for i in range(min(len(s), d)) if s[i][i] != 0)
    # rows of V^{-1}: the first r span the saturation of the row lattice
    vinv, _ = _inverse_unimodular(v)
    h, _ = hnf(vinv[:r])
    return [tuple(row) for row in h if any(row)]


def _inverse_unimodular(v):
    h, u = hnf(v)
    # H is upper triangular with unit pivots, hence the identity after reduction
    assert h == identity(len(v)), "matrix is not unimodular"
    return u, h


def sublattice_intersection(rank: int, subspace_basis):
    """Z-basis (in HNF) of ``W ∩ Z^rank`` for the rational span ``W``."""
    rows = _integral_rows(subspace_basis)
    for r in rows:
        if len(r) != rank:
            raise ValueError("dimension mismatch")
    return _saturated_row_basis(rows, rank)


def saturate_subgroup(gens, rank: int | None = None):
    """Basis of ``{x in Z^d : k*x in N for some k > 0}`` for ``N = <gens>``."""
    gens = [list(map(int, g)) for g in gens]
    if rank is None:
        if not gens:
            raise ValueError("rank required for an empty generator list")
        rank = len(gens[0])
    return _saturated_row_basis(gens, rank)


def lattice_basis(gens, rank: int):
    """HNF basis of the subgroup generated by integer vectors ``gens``."""
    gens = [list(map(int, g)) for g in gens]
    if not gens:
        return []
    h, _ = hnf(gens)
    return [tuple(r) for r in h if any(r)]


def lattice_coordinates(basis, x):
    """Integer coordinates of ``x`` in ``basis`` or ``None`` if not in the lattice."""
    from ._linalg import solve
    c = solve([list(b) for b in basis], list(x))
    if c is None or any(Fraction(t).denominator != 1 for t in c):
        return None
    return tuple(int(t) for t in c)


@dataclass(frozen=True)
class LatticeSection:
    """Split short exact sequence ``0 -> L∩M -> M -> pi(M) -> 0``.

    ``projection`` is a ``(d-r) x d`` matrix, ``section`` a ``d x (d-r)``
    matrix with ``projection @ section == I``; ``kernel_basis`` spans the
    kernel of ``projection``.
    """

    rank: int
    projection: tuple
    section: tuple
    kernel_basis: tuple

    @property
    def quotient_rank(self) -> int:
        return self.rank - len(self.kernel_basis)

    def project(self, x):
        return tuple(int(t) for t in mat_vec(self.projection, x))

    def lift(self, y):
        return tuple(int(t) for t in mat_vec(self.section, y))


def split_quotient(kernel_basis, rank: int) -> LatticeSection:
    kb = [list(map(int, k)) for k in kernel_basis]
    r = len(kb)
    if r == 0:
        eye = tuple(tuple(row) for row in identity(rank))
        return LatticeSection(rank, eye, eye, ())
    s, _, v = snf(kb)
    diag = [s[i][i] for i in range(r)]
    if any(x == 0 for x in diag):
        raise ValueError("kernel basis vectors are linearly dependent")
    if any(x != 1 for x in diag):
        raise NotSaturatedError(f"quotient has torsion (invariant factors {diag})")
    w, _ = _inverse_unimodular(v)  # rows of w: basis adapted to the kernel
    proj = [[v[i][j] for i in range(rank)] for j in range(r, rank)]
    sec_cols = [w[j] for j in range(r, rank)]
    # canonical choice: projection in HNF, section reduced modulo the kernel
    hp, up = hnf(proj) if proj else ([], [])
    if proj:
        up_inv, _ = _inverse_unimodular(up)
        sec_cols = [list(c) for c in zip(*mat_mul([list(x) for x in zip(*sec_cols)], up_inv))]
        kh = lattice_basis(kb, rank)
        sec_cols = [_reduce_mod(c, kh) for c in sec_cols]
    section = tuple(tuple(row) for row in zip(*sec_cols)) if sec_cols else tuple(() for _ in range(rank))
    ls = LatticeSection(rank, tuple(tuple(row) for row in hp), section,
                        tuple(tuple(k) for k in kb))
    assert mat_mul([list(x) for x in ls.projection], [list(x) for x in ls.section]) == identity(rank - r)
    return ls


def _reduce_mod(vec, hbasis):
    vec = list(vec)
    for row in hbasis:
        c = next(i for i, x in enumerate(row) if x)
        q = vec[c] // row[c]
        if q:
            vec = [a - q * b for a, b in zip(vec, row)]
    return vec

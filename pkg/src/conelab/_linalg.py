"""Exact linear algebra over Q or Q(sqrt(n)) on plain Python lists."""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .quadratic import QuadNum, sign


def dot(u, v):
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def is_zero_vec(v) -> bool:
    return all(x == 0 for x in v)


def is_rational_vec(v) -> bool:
    return all(not isinstance(x, QuadNum) or x.b == 0 for x in v)


def to_fractions(v):
    return [x.a if isinstance(x, QuadNum) else Fraction(x) for x in v]


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / Fraction(m[r][c]) if not isinstance(m[r][c], QuadNum) else m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols: int | None = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int):
    """Basis of ``{x : r.x = 0 for r in rows}`` (exact, field-generic)."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(cols, x):
    """Coefficients ``c`` with ``sum c_i * cols[i] == x`` or ``None``."""
    k = len(cols)
    d = len(x)
    aug = [[cols[j][i] for j in range(k)] + [x[i]] for i in range(d)]
    red, pivots = rref(aug, k + 1)
    if k in pivots:
        return None
    c = [Fraction(0)] * k
    for row, pc in zip(red, pivots):
        c[pc] = row[k]
    return c


def lcm_denominators(v) -> int:
    out = 1
    for x in v:
        out = math.lcm(out, Fraction(x).denominator)
    return out


def primitive(v) -> tuple[int, ...]:
    """Primitive integral vector on the same ray as rational ``v``."""
    v = to_fractions(v)
    den = lcm_denominators(v)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def normalize_direction(v):
    """Canonical representative of the ray through ``v``.

    Rational vectors become primitive integral; quadratic ones are scaled so
    the leading nonzero coordinate has absolute value 1.
    """
    if is_rational_vec(v):
        return primitive(v)
    lead = next(x for x in v if x != 0)
    s = abs(lead) if isinstance(lead, QuadNum) else abs(Fraction(lead))
    out = []
    for x in v:
        y = x / s
        if isinstance(y, QuadNum) and y.b == 0:
            y = y.a
        if isinstance(y, Fraction) and y.denominator == 1:
            y = int(y)
        out.append(y)
    return tuple(out)


def mat_vec(mat, v):
    return [dot(row, v) for row in mat]


def mat_mul(a, b):
    bt = list(zip(*b)) if b else []
    return [[dot(row, col) for col in bt] for row in a]


def transpose(a, ncols: int | None = None):
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*a)]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def box_points(dim: int, radius: int):
    """All integer points of ``[-radius, radius]^dim`` in lexicographic order."""
    return product(range(-radius, radius + 1), repeat=dim)


def vec_sign(v) -> list[int]:
    return [sign(x) for x in v]

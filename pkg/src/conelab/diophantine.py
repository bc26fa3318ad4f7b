"""Rank-2 density of an irrational ray plus a scaled lattice.

For a direction ``v`` with irrational slope and ``Lambda = s * Z^2`` the set
``{m*v + lam : m >= 0 real, lam in Lambda}`` is dense in the plane.  The
search below fixes the first coordinate exactly (``m*v_1 + s*a = t_1``) and
walks ``a`` away from the target; the second coordinate then moves by
``s * kappa`` per step with ``kappa`` the irrational slope, so its residue
modulo ``s`` is equidistributed and hits any window of width ``2*eps``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .quadratic import QuadNum, as_exact, floor, sign, sign_transcript

__all__ = ["RationalDirection", "ApproximationNotFound", "DenseApproximation", "dense_approx"]


class RationalDirection(ValueError):
    """The slope is rational, so the ray plus the lattice is not dense."""


class ApproximationNotFound(LookupError):
    def __init__(self, budget):
        super().__init__(f"no approximation within {budget} steps; raise the budget and retry")
        self.budget = budget


@dataclass(frozen=True)
class DenseApproximation:
    m: object        # nonnegative scale along the ray, exact
    lam: tuple       # point of s * Z^2
    error: tuple     # m*v + lam - target, exact per coordinate
    transcript: tuple
    steps: int


def _as_vec(v):
    return tuple(as_exact(x) for x in v)


def dense_approx(direction, lattice_scale: int, target, epsilon, budget: int = 10 ** 7
                 ) -> DenseApproximation:
    v1, v2 = _as_vec(direction)
    t1, t2 = (Fraction(x) for x in target)
    eps = Fraction(epsilon)
    s = int(lattice_scale)
    if eps <= 0 or s <= 0:
        raise ValueError("epsilon and lattice_scale must be positive")
    if v1 == 0 or v2 == 0:
        raise RationalDirection("direction lies on a coordinate axis")
    kappa = v2 / v1
    if not isinstance(kappa, QuadNum) or kappa.is_rational():
        raise RationalDirection(f"slope {kappa} is rational")
    step = -1 if sign(v1) > 0 else 1
    # first a with (t1 - s*a)/v1 >= 0
    a = floor(t1 / s) if step < 0 else -floor(-t1 / s)
    for k in range(budget):
        m = (t1 - s * a) / v1
        y = m * v2
        b = floor((t2 - y) / s + Fraction(1, 2))
        err_y = y + s * b - t2
        if sign(eps - abs(err_y)) > 0:
            lam = (s * a, s * b)
            err_x = m * v1 + lam[0] - t1
            checks = (sign_transcript(eps - abs(err_x))[1], sign_transcript(eps - abs(err_y))[1])
            assert sign(m) >= 0 and err_x == 0
            return DenseApproximation(_simplify(m), lam, (_simplify(err_x), _simplify(err_y)),
                                      checks, k + 1)
        a += step
    raise ApproximationNotFound(budget)


def _simplify(x):
    if isinstance(x, QuadNum) and x.is_rational():
        x = x.a
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x

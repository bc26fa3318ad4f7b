"""Approximating a rational target by lattice points plus a point on an irrational ray."""
from fractions import Fraction

from conelab import QuadNum, dense_approx

direction = (1, QuadNum(0, 1, 2))
for target in [(Fraction(1, 3), Fraction(7, 5)), (Fraction(3, 1), Fraction(1, 7))]:
    a = dense_approx(direction, 2, target, Fraction(1, 20))
    print(f"target {target}: m={a.m}, lattice point {a.lam}, steps {a.steps}")
    print("   ", a.transcript[-1])

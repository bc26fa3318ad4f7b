"""Exact arithmetic in a real quadratic field Q(sqrt(n)).

Numbers are ``a + b*sqrt(n)`` with rational ``a, b``.  Signs are decided
exactly by comparing ``a**2`` against ``n*b**2``; no floating point is used
anywhere on a decision path.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from numbers import Rational

__all__ = [
    "QuadNum",
    "is_squarefree",
    "sign",
    "sign_transcript",
    "floor",
    "as_exact",
    "continued_fraction",
    "convergents",
]


def is_squarefree(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@total_ordering
class QuadNum:
    """An element ``a + b*sqrt(n)`` of Q(sqrt(n)); immutable."""

    __slots__ = ("_a", "_b", "_n")

    def __init__(self, a=0, b=0, n: int | None = None):
        a = Fraction(a)
        b = Fraction(b)
        if b != 0:
            if n is None or not is_squarefree(n):
                raise ValueError(f"radicand must be squarefree and >= 2, got {n!r}")
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_n", n)

    def __setattr__(self, name, value):
        raise AttributeError("QuadNum is immutable")

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def n(self) -> int | None:
        return self._n

    def is_rational(self) -> bool:
        return self._b == 0

    def to_fraction(self) -> Fraction:
        if self._b != 0:
            raise ValueError(f"{self} is irrational")
        return self._a

    def conjugate(self) -> QuadNum:
        return QuadNum(self._a, -self._b, self._n)

    def norm(self) -> Fraction:
        if self._b == 0:
            return self._a * self._a
        return self._a * self._a - self._n * self._b * self._b

    def _coerce(self, other):
        if isinstance(other, QuadNum):
            if self._b != 0 and other._b != 0 and self._n != other._n:
                raise ValueError(f"mixed radicands {self._n} and {other._n}")
            n = self._n if self._b != 0 else other._n
            return other, n
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return QuadNum(other), self._n
        return None, None

    def __add__(self, other):
        o, n = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self._a + o._a, self._b + o._b, n)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self._a, -self._b, self._n)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o, n = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self._a - o._a, self._b - o._b, n)

    def __rsub__(self, other):
        o, n = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(o._a - self._a, o._b - self._b, n)

    def __mul__(self, other):
        o, n = self._coerce(other)
        if o is None:
            return NotImplemented
        nn = n if n is not None else 0
        return QuadNum(
            self._a * o._a + nn * self._b * o._b,
            self._a * o._b + self._b * o._a,
            n,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadNum:
        d = self.norm()
        if d == 0:
            raise ZeroDivisionError("QuadNum division by zero")
        return QuadNum(self._a / d, -self._b / d, self._n)

    def __truediv__(self, other):
        o, n = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o, n = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def sign(self) -> int:
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: the larger magnitude wins; equality is impossible
        if a * a > self._n * b * b:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        if isinstance(other, float):
            return NotImplemented
        o, _ = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __lt__(self, other):
        try:
            return (self - other).sign() < 0
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._n))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __float__(self):
        if self._b == 0:
            return float(self._a)
        return float(self._a) + float(self._b) * math.sqrt(self._n)

    def __floor__(self):
        return floor(self)

    def __repr__(self):
        if self._b == 0:
            return f"QuadNum({self._a})"
        return f"QuadNum({self._a}, {self._b}, n={self._n})"

    def __str__(self):
        if self._b == 0:
            return str(self._a)
        b = f"{self._b}*sqrt({self._n})"
        if self._a == 0:
            return b
        op = "+" if self._b > 0 else "-"
        return f"{self._a} {op} {abs(self._b)}*sqrt({self._n})"


def as_exact(x):
    """Normalize ``x`` to an int/Fraction, or a QuadNum when irrational."""
    if isinstance(x, QuadNum):
        return x.a if x.b == 0 else x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction")
    return Fraction(x)


def sign(x) -> int:
    if isinstance(x, QuadNum):
        return x.sign()
    return (x > 0) - (x < 0)


def _fmt(q: Fraction) -> str:
    return str(q) if q.denominator == 1 else f"({q})"


def sign_transcript(x) -> tuple[int, str]:
    """Return ``(sign(x), text)`` where ``text`` justifies the sign exactly.

    For ``a + b*sqrt(n)`` with ``a, b`` of opposite signs the justification is
    the integer comparison of ``a**2`` against ``n*b**2``, e.g.
    ``"17^2 = 289 > 2*12^2 = 288"``.
    """
    s = sign(x)
    if not isinstance(x, QuadNum) or x.b == 0:
        v = x.a if isinstance(x, QuadNum) else Fraction(x)
        rel = ">" if s > 0 else "<" if s < 0 else "="
        return s, f"{v} {rel} 0"
    a, b, n = x.a, x.b, x.n
    if a == 0 or (a > 0) == (b > 0):
        rel = ">" if s > 0 else "<"
        return s, f"{x} {rel} 0 (both parts share sign)"
    lhs, rhs = a * a, n * b * b
    rel = ">" if lhs > rhs else "<"
    text = (f"{_fmt(abs(a))}^2 = {lhs} {rel} {n}*{_fmt(abs(b))}^2 = {rhs}"
            f" so sign({x}) = {s:+d}")
    return s, text


def floor(x) -> int:
    """Exact floor of a rational or quadratic number."""
    if not isinstance(x, QuadNum):
        return math.floor(Fraction(x))
    if x.b == 0:
        return math.floor(x.a)
    u, w = x.b.numerator, x.b.denominator
    s = math.isqrt(u * u * x.n)  # |u|*sqrt(n) lies in (s, s+1)
    if u > 0:
        lo = x.a + Fraction(s, w)
    else:
        lo = x.a - Fraction(s + 1, w)
    k = math.floor(lo)
    while (x - (k + 1)).sign() >= 0:
        k += 1
    while (x - k).sign() < 0:
        k -= 1
    return k


def continued_fraction(x, terms: int) -> list[int]:
    """First ``terms`` partial quotients of ``x`` (fewer if ``x`` is rational)."""
    out = []
    for _ in range(terms):
        q = floor(x)
        out.append(q)
        frac = x - q
        if (frac.sign() if isinstance(frac, QuadNum) else sign(frac)) == 0:
            break
        x = 1 / frac
    return out


def convergents(x, terms: int):
    """Yield convergents ``(p, q)`` of ``x``, alternating below/above ``x``."""
    p0, q0, p1, q1 = 1, 0, 0, 1
    for a in continued_fraction(x, terms):
        p0, p1 = a * p0 + p1, p0
        q0, q1 = a * q0 + q1, q0
        yield p0, q0

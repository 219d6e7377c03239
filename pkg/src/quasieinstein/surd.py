"""Exact quadratic surds ``u + v*sqrt(d)`` over the rationals."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


TRIAL_LIMIT = 10**4


def squarefree_split(n: int) -> tuple[int, int]:
    """Write ``n = s**2 * d``; returns ``(s, d)``.

    ``d`` is squarefree whenever ``n < TRIAL_LIMIT**3``. Beyond that only square
    factors below the trial limit and a square cofactor are removed; surds with
    radicands differing by a rational square are still reconciled on arithmetic.
    """
    if n <= 0:
        raise ValueError("expected a positive integer")
    s, d, f = 1, 1, 2
    while f * f * f <= n and f <= TRIAL_LIMIT:
        while n % (f * f) == 0:
            n //= f * f
            s *= f
        if n % f == 0:
            n //= f
            d *= f
        f += 1
    # past the cube root the cofactor has at most two prime factors
    r = math.isqrt(n)
    if r > 1 and r * r == n:
        return s * r, d
    return s, d * n


@dataclass(frozen=True)
class Surd:
    u: Fraction
    v: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        u, v, d = Fraction(self.u), Fraction(self.v), int(self.d)
        if d < 1:
            raise ValueError("radicand must be a positive integer")
        if d > 1:
            s, d = squarefree_split(d)
            v *= s
        if d == 1:
            u, v = u + v, Fraction(0)
        if v == 0:
            d = 1
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, q) -> "Surd":
        """Exact square root of a nonnegative rational."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("square root of a negative rational")
        if q == 0:
            return cls(Fraction(0))
        return cls(Fraction(0), Fraction(1, q.denominator), q.numerator * q.denominator)

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.u

    def _coerce(self, other) -> "Surd":
        if isinstance(other, Surd):
            if other.d != self.d and not (other.is_rational or self.is_rational):
                # sqrt(d2) = sqrt(d1 d2) / d1 * sqrt(d1) when d1 d2 is a square
                prod = self.d * other.d
                r = math.isqrt(prod)
                if r * r != prod:
                    raise ValueError("surds with different radicands")
                return Surd(other.u, other.v * Fraction(r, self.d), self.d)
            return other
        return Surd(Fraction(other))

    def _d(self, other: "Surd") -> int:
        return max(self.d, other.d)

    def __add__(self, other):
        o = self._coerce(other)
        return Surd(self.u + o.u, self.v + o.v, self._d(o))

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.u, -self.v, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        d = self._d(o)
        return Surd(self.u * o.u + self.v * o.v * d, self.u * o.v + self.v * o.u, d)

    __rmul__ = __mul__

    def conjugate(self) -> "Surd":
        return Surd(self.u, -self.v, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        norm = o.u * o.u - o.v * o.v * o.d
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        return self * o.conjugate() * Surd(1 / norm)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def sign(self) -> int:
        """Exact sign of ``u + v sqrt(d)``."""
        su = (self.u > 0) - (self.u < 0)
        sv = (self.v > 0) - (self.v < 0)
        if sv == 0:
            return su
        if su == 0 or su == sv:
            return sv
        # opposite signs: compare u^2 with v^2 d
        diff = self.u * self.u - self.v * self.v * self.d
        return su if diff > 0 else (sv if diff < 0 else 0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Surd)):
            return (self - other).sign() == 0
        return NotImplemented

    def __hash__(self):
        return hash(self.u) if self.is_rational else hash((self.u, self.v, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.u) + float(self.v) * math.sqrt(self.d)

    def __str__(self):
        if self.is_rational:
            return _qstr(self.u)
        sign = "+" if self.v > 0 else "-"
        return f"{_qstr(self.u)} {sign} {_qstr(abs(self.v))}*sqrt({self.d})"

    def to_dict(self) -> dict:
        return {"u": _qfrac(self.u), "v": _qfrac(self.v), "d": self.d}


def _qstr(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _qfrac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def quadratic_roots(a, b, c) -> tuple[Surd, ...]:
    """Real roots of ``a x^2 + b x + c`` with rational coefficients, ascending."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        if b == 0:
            raise ValueError("degenerate equation")
        return (Surd(-c / b),)
    disc = b * b - 4 * a * c
    if disc < 0:
        return ()
    root = Surd.sqrt(disc)
    r1 = (Surd(-b) - root) / Surd(2 * a)
    r2 = (Surd(-b) + root) / Surd(2 * a)
    if disc == 0:
        return (r1,)
    return tuple(sorted((r1, r2)))

"""Exact arithmetic in Q(i, sqrt(p)).

Gauss sums of quadratic characters live here, and so does every closed-form
count built from them; keeping them exact turns "this count is an integer"
into a checkable predicate rather than a rounding judgement.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


class AlgebraicScalar:
    """The number a + b*sqrt(p) + i*(c + d*sqrt(p)) with rational a, b, c, d."""

    __slots__ = ("p", "a", "b", "c", "d")

    def __init__(self, p: int, a=0, b=0, c=0, d=0):
        self.p = int(p)
        self.a = _frac(a)
        self.b = _frac(b)
        self.c = _frac(c)
        self.d = _frac(d)

    # -- constructors -------------------------------------------------------

    @classmethod
    def sqrt_p(cls, p: int) -> "AlgebraicScalar":
        return cls(p, b=1)

    @classmethod
    def imag_unit(cls, p: int) -> "AlgebraicScalar":
        return cls(p, c=1)

    @classmethod
    def i_power(cls, p: int, k: int) -> "AlgebraicScalar":
        return [cls(p, 1), cls(p, c=1), cls(p, -1), cls(p, c=-1)][k % 4]

    @classmethod
    def p_half_power(cls, p: int, k: int) -> "AlgebraicScalar":
        """p**(k/2) for any integer k."""
        base = Fraction(p) ** (k // 2)
        if k % 2 == 0:
            return cls(p, base)
        return cls(p, b=base)

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> "AlgebraicScalar":
        if isinstance(other, AlgebraicScalar):
            if other.p != self.p:
                raise ValueError(f"mixing sqrt({self.p}) and sqrt({other.p})")
            return other
        if isinstance(other, Rational):
            return AlgebraicScalar(self.p, other)
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgebraicScalar(self.p, self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicScalar(self.p, -self.a, -self.b, -self.c, -self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.p

        def qmul(x0, x1, y0, y1):
            # (x0 + x1 s)(y0 + y1 s) with s^2 = p
            return x0 * y0 + p * x1 * y1, x0 * y1 + x1 * y0

        rr = qmul(self.a, self.b, o.a, o.b)
        ii = qmul(self.c, self.d, o.c, o.d)
        ri = qmul(self.a, self.b, o.c, o.d)
        ir = qmul(self.c, self.d, o.a, o.b)
        return AlgebraicScalar(p, rr[0] - ii[0], rr[1] - ii[1], ri[0] + ir[0], ri[1] + ir[1])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, AlgebraicScalar):
            if other.p != self.p:
                raise ValueError(f"mixing sqrt({self.p}) and sqrt({other.p})")
            # z / w = z * conj(w) / |w|^2, |w|^2 = r0 + r1*sqrt(p) real
            num = self * other.conjugate()
            den = other * other.conjugate()
            r0, r1 = den.a, den.b
            norm = r0 * r0 - self.p * r1 * r1
            if norm == 0:
                raise ZeroDivisionError("division by zero scalar")
            return num * AlgebraicScalar(self.p, r0 / norm, -r1 / norm)
        r = _frac(other)
        if r == 0:
            raise ZeroDivisionError("division by zero")
        return AlgebraicScalar(self.p, self.a / r, self.b / r, self.c / r, self.d / r)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = AlgebraicScalar(self.p, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> "AlgebraicScalar":
        return AlgebraicScalar(self.p, self.a, self.b, -self.c, -self.d)

    # -- predicates and conversion -----------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __hash__(self):
        if self.b == self.c == self.d == 0:
            return hash(self.a)
        return hash((self.p, self.a, self.b, self.c, self.d))

    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def is_integer(self) -> bool:
        return self.is_rational() and self.a.denominator == 1

    def is_gaussian_integer(self) -> bool:
        return self.b == 0 and self.d == 0 and self.a.denominator == 1 and self.c.denominator == 1

    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(self.a)

    def __index__(self):
        return int(self)

    def __complex__(self):
        s = math.sqrt(self.p)
        return complex(float(self.a) + float(self.b) * s, float(self.c) + float(self.d) * s)

    def __float__(self):
        if self.c or self.d:
            raise TypeError(f"{self} is not real")
        return float(self.a) + float(self.b) * math.sqrt(self.p)

    def __repr__(self):
        return f"AlgebraicScalar(p={self.p}, a={self.a}, b={self.b}, c={self.c}, d={self.d})"

    def __str__(self):
        root = f"√{self.p}"
        terms = []
        for coef, unit in ((self.a, ""), (self.b, root), (self.c, "i"), (self.d, "i·" + root)):
            if coef == 0:
                continue
            mag = abs(coef)
            if unit and mag == 1:
                body = unit
            elif unit:
                body = f"{mag}{unit if unit[0] == 'i' else '·' + unit}"
            else:
                body = str(mag)
            terms.append(("-" if coef < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

"""Exact scalar arithmetic over the ring Q(i, sqrt2).

Every coefficient that appears when quadratic ladder-operator expressions are
normal ordered, conjugated, or expanded in a basis lives in the field
Q(i, sqrt2): rational combinations of 1, sqrt2, i and i*sqrt2.  Working in this
field keeps the whole commutator pipeline exact; floats only enter in the
numeric cross-check layers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

_SQRT2 = math.sqrt(2.0)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational component, got {type(x).__name__}")


@dataclass(frozen=True)
class ExactScalar:
    """Element q0 + q1*sqrt2 + q2*i + q3*i*sqrt2 with rational components.

    The four components form a basis of Q(i, sqrt2) over Q, so equality,
    zero tests and inversion are exact.  Instances are immutable and usable
    as dict keys.
    """

    q0: Fraction = Fraction(0)
    q1: Fraction = Fraction(0)
    q2: Fraction = Fraction(0)
    q3: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "q0", _frac(self.q0))
        object.__setattr__(self, "q1", _frac(self.q1))
        object.__setattr__(self, "q2", _frac(self.q2))
        object.__setattr__(self, "q3", _frac(self.q3))

    # -- constructors ---------------------------------------------------

    @staticmethod
    def coerce(x) -> "ExactScalar":
        """Accept ExactScalar, int, or Fraction."""
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, (int, Rational)):
            return ExactScalar(_frac(x))
        raise TypeError(f"cannot interpret {type(x).__name__} as an exact scalar")

    @staticmethod
    def rational(p, q=1) -> "ExactScalar":
        return ExactScalar(Fraction(p, q))

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.q0 or self.q1 or self.q2 or self.q3)

    def is_rational(self) -> bool:
        return not (self.q1 or self.q2 or self.q3)

    def is_real(self) -> bool:
        return not (self.q2 or self.q3)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = ExactScalar.coerce(other)
        return ExactScalar(self.q0 + other.q0, self.q1 + other.q1,
                           self.q2 + other.q2, self.q3 + other.q3)

    __radd__ = __add__

    def __sub__(self, other):
        other = ExactScalar.coerce(other)
        return ExactScalar(self.q0 - other.q0, self.q1 - other.q1,
                           self.q2 - other.q2, self.q3 - other.q3)

    def __rsub__(self, other):
        return ExactScalar.coerce(other) - self

    def __neg__(self):
        return ExactScalar(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        if not isinstance(other, (ExactScalar, int, Rational)):
            return NotImplemented
        o = ExactScalar.coerce(other)
        a0, a1, a2, a3 = self.q0, self.q1, self.q2, self.q3
        b0, b1, b2, b3 = o.q0, o.q1, o.q2, o.q3
        # fast paths: a factor with only a rational part scales componentwise
        if not (a1 or a2 or a3):
            if not a0:
                return ZERO
            return ExactScalar(a0 * b0, a0 * b1, a0 * b2, a0 * b3)
        if not (b1 or b2 or b3):
            if not b0:
                return ZERO
            return ExactScalar(a0 * b0, a1 * b0, a2 * b0, a3 * b0)
        # (sqrt2)^2 = 2, i^2 = -1, (i*sqrt2)^2 = -2
        return ExactScalar(
            a0 * b0 + 2 * a1 * b1 - a2 * b2 - 2 * a3 * b3,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + 2 * a1 * b3 + 2 * a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ExactScalar":
        """Complex conjugation: i -> -i."""
        return ExactScalar(self.q0, self.q1, -self.q2, -self.q3)

    def inverse(self) -> "ExactScalar":
        """Exact multiplicative inverse.

        z * conj(z) is real, of the form u + v*sqrt2; it is cleared of the
        sqrt2 part by the algebraic conjugate u - v*sqrt2, whose product
        u^2 - 2*v^2 is a plain rational.
        """
        if self.is_zero():
            raise ZeroDivisionError("exact scalar division by zero")
        zbar = self.conjugate()
        norm = self * zbar
        u, v = norm.q0, norm.q1
        m = u * u - 2 * v * v  # nonzero: sqrt2 is irrational
        return zbar * ExactScalar(u / m, -v / m)

    def __truediv__(self, other):
        if not isinstance(other, (ExactScalar, int, Rational)):
            return NotImplemented
        return self * ExactScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- conversions -------------------------------------------------------

    def to_complex(self) -> complex:
        return complex(float(self.q0) + float(self.q1) * _SQRT2,
                       float(self.q2) + float(self.q3) * _SQRT2)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for coeff, unit in ((self.q0, ""), (self.q1, "sqrt2"),
                            (self.q2, "i"), (self.q3, "i*sqrt2")):
            if coeff == 0:
                continue
            mag = abs(coeff)
            if unit == "":
                body = str(mag)
            elif mag == 1:
                body = unit
            else:
                body = f"{mag}*{unit}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"ExactScalar({self})"

    def component_count(self) -> int:
        """Number of nonzero basis components (affects rendering inside products)."""
        return sum(1 for c in (self.q0, self.q1, self.q2, self.q3) if c != 0)


ZERO = ExactScalar()
ONE = ExactScalar(Fraction(1))
I = ExactScalar(Fraction(0), Fraction(0), Fraction(1))
SQRT2 = ExactScalar(Fraction(0), Fraction(1))
HALF = ExactScalar(Fraction(1, 2))

"""Exact arithmetic in the real quadratic field Q(sqrt(d)).

Elements are stored as x + y*sqrt(d) with rational x, y and a fixed
nonsquare d >= 2.  Signs, floors and comparisons are decided exactly with
integer arithmetic, which is what makes the continued-fraction and
Ostrowski machinery tolerance-free for quadratic irrationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import DomainError


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def sqrt_enclosure(d: int, bits: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure of sqrt(d) with width <= 2**-bits."""
    s = isqrt(d << (2 * bits))
    scale = 1 << bits
    return Fraction(s, scale), Fraction(s + 1, scale)


def _floor_linear(a: int, b: int, c: int, d: int) -> int:
    """Exact floor((a + b*sqrt(d)) / c) for integers with c > 0, d nonsquare.

    sqrt(d) is irrational, so b*sqrt(d) is never an integer unless b = 0.
    """
    if b == 0:
        return a // c
    if b > 0:
        fb = isqrt(b * b * d)
    else:
        fb = -isqrt(b * b * d) - 1
    # a + b*sqrt(d) = (a + fb) + theta with theta in (0, 1), so the floor of
    # the quotient is unaffected by theta when c > 0.
    return (a + fb) // c


class QuadExt:
    """An element x + y*sqrt(d) of Q(sqrt(d)), immutable."""

    __slots__ = ("d", "x", "y")

    def __init__(self, d: int, x, y):
        if d < 2 or is_square(d):
            raise DomainError(f"d must be a nonsquare integer >= 2, got {d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # -- structure ---------------------------------------------------------

    def is_rational(self) -> bool:
        return self.y == 0

    def as_fraction(self) -> Fraction:
        if self.y != 0:
            raise DomainError("value is irrational")
        return self.x

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                return NotImplemented
            return self.x == other.x and self.y == other.y
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.d, self.x, self.y))

    def __repr__(self):
        return f"QuadExt({self.x} + {self.y}*sqrt({self.d}))"

    # -- ring / field operations -------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DomainError("mixed quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.d, other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.d, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(self.d, -self.x, -self.y)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.d, self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.d, o.x - self.x, o.y - self.y)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.d,
            self.x * o.x + self.y * o.y * self.d,
            self.x * o.y + self.y * o.x,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # (x + y*sqrt(d))^-1 = (x - y*sqrt(d)) / (x^2 - y^2 d); the norm is
        # nonzero for every nonzero element because sqrt(d) is irrational.
        norm = self.x * self.x - self.y * self.y * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExt(self.d, self.x / norm, -self.y / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- exact order structure ----------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}."""
        sx = (self.x > 0) - (self.x < 0)
        sy = (self.y > 0) - (self.y < 0)
        if sy == 0:
            return sx
        if sx == 0:
            return sy
        if sx == sy:
            return sx
        # Opposite signs: compare x^2 against y^2 d; equality would force
        # sqrt(d) rational, so it cannot occur.
        lhs = self.x * self.x
        rhs = self.y * self.y * self.d
        if lhs == rhs:
            raise DomainError("nonsquare d produced a rational square root")
        return sx if lhs > rhs else sy

    def __lt__(self, other):
        o = self._coerce(other)
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        return (self - o).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        if self.y == 0:
            return self.x.numerator // self.x.denominator
        # Clear denominators: value = (a + b*sqrt(d)) / c with c > 0.
        c = self.x.denominator * self.y.denominator
        a = self.x.numerator * self.y.denominator
        b = self.y.numerator * self.x.denominator
        return _floor_linear(a, b, c, self.d)

    def ceil(self) -> int:
        return -((-self).floor())

    # -- approximation -------------------------------------------------------

    def enclosure(self, width: Fraction) -> tuple[Fraction, Fraction]:
        """Rational interval [lo, hi] containing the value, hi - lo <= width."""
        if width <= 0:
            raise DomainError("width must be positive")
        if self.y == 0:
            return self.x, self.x
        # Need sqrt(d) to width/|y|; pick bits so 2**-bits <= width/|y|.
        ratio = abs(self.y) / width
        bits = max(1, ratio.numerator.bit_length() - ratio.denominator.bit_length() + 2)
        slo, shi = sqrt_enclosure(self.d, bits)
        if self.y > 0:
            return self.x + self.y * slo, self.x + self.y * shi
        return self.x + self.y * shi, self.x + self.y * slo

    def __float__(self):
        lo, hi = self.enclosure(Fraction(1, 1 << 80))
        return float((lo + hi) / 2)

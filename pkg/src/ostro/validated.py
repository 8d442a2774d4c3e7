"""Validated reals: rational intervals that refuse to guess.

A ValidatedReal is a rational interval [lo, hi] guaranteed to contain its
target value, optionally refinable to any requested width and optionally
backed by a closed form (a Fraction or a QuadExt).  Every inequality the
library decides between real numbers goes through this type: a comparison
either certifies an answer or raises PrecisionError.  It never rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional, Tuple, Union

from .errors import DomainError, PrecisionError
from .quadratic import QuadExt

Rat = Fraction
Refiner = Callable[[Fraction], Tuple[Fraction, Fraction]]
Exact = Union[Fraction, QuadExt]

_DEFAULT_ENCLOSURE_WIDTH = Fraction(1, 1 << 64)
_MAX_REFINE_ROUNDS = 96


def _exact_sign(value: Exact) -> int:
    if isinstance(value, QuadExt):
        return value.sign()
    return (value > 0) - (value < 0)


def _exact_combine(op: str, a: Exact, b: Exact):
    """Closed-form result of a binary op, or None when fields are mixed."""
    if isinstance(a, QuadExt) and isinstance(b, QuadExt) and a.d != b.d:
        return None
    try:
        if op == "add":
            return a + b
        if op == "sub":
            return a - b
        if op == "mul":
            return a * b
        if op == "div":
            return a / b
    except ZeroDivisionError:
        raise DomainError("division by an exact zero")
    raise ValueError(op)


class ValidatedReal:
    """Interval enclosure of a real number with certified queries."""

    __slots__ = ("_exact", "_lo", "_hi", "_refiner")

    def __init__(self, lo, hi, refiner: Optional[Refiner] = None,
                 _exact: Optional[Exact] = None):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise DomainError("interval endpoints out of order")
        self._lo = lo
        self._hi = hi
        self._refiner = refiner
        self._exact = _exact

    # -- constructors --------------------------------------------------------

    @classmethod
    def exact_rational(cls, value) -> "ValidatedReal":
        v = Fraction(value)
        return cls(v, v, _exact=v)

    @classmethod
    def from_quadratic(cls, value: QuadExt) -> "ValidatedReal":
        if value.is_rational():
            return cls.exact_rational(value.as_fraction())
        lo, hi = value.enclosure(_DEFAULT_ENCLOSURE_WIDTH)
        return cls(lo, hi, _exact=value)

    @classmethod
    def wrap(cls, value) -> "ValidatedReal":
        if isinstance(value, ValidatedReal):
            return value
        if isinstance(value, QuadExt):
            return cls.from_quadratic(value)
        if isinstance(value, (int, Fraction)):
            return cls.exact_rational(value)
        raise TypeError(f"cannot interpret {value!r} as a validated real")

    # -- basic accessors -----------------------------------------------------

    @property
    def lo(self) -> Fraction:
        return self._lo

    @property
    def hi(self) -> Fraction:
        return self._hi

    @property
    def exact(self) -> Optional[Exact]:
        """Closed-form backing value, when one is known."""
        return self._exact

    def width(self) -> Fraction:
        return self._hi - self._lo

    def is_exact_rational(self) -> bool:
        return isinstance(self._exact, Fraction)

    def __repr__(self):
        tag = " exact" if self._exact is not None else ""
        return f"ValidatedReal[{self._lo}, {self._hi}]{tag}"

    def approx_float(self) -> float:
        return float((self._lo + self._hi) / 2)

    def __float__(self):
        return self.approx_float()

    # -- refinement ----------------------------------------------------------

    def refined(self, width) -> "ValidatedReal":
        """Enclosure of the same value with width <= the request.

        Raises PrecisionError when the request cannot be met.
        """
        width = Fraction(width)
        if width <= 0:
            raise DomainError("width must be positive")
        if self.width() <= width:
            return self
        if isinstance(self._exact, QuadExt):
            lo, hi = self._exact.enclosure(width)
            return ValidatedReal(lo, hi, _exact=self._exact)
        if self._refiner is not None:
            lo, hi = self._refiner(width)
            if hi - lo > width:
                raise PrecisionError("refiner could not reach requested width")
            return ValidatedReal(lo, hi, refiner=self._refiner, _exact=self._exact)
        raise PrecisionError(
            f"precision exhausted: width {float(self.width()):.3g} > requested")

    refine = refined

    # -- certified queries -----------------------------------------------------

    def sign(self) -> int:
        """Certified sign; 0 only when the value is exactly zero."""
        if self._exact is not None:
            return _exact_sign(self._exact)
        cur = self
        for _ in range(_MAX_REFINE_ROUNDS):
            if cur._lo > 0:
                return 1
            if cur._hi < 0:
                return -1
            if cur._lo == 0 and cur._hi == 0:
                return 0
            w = cur.width()
            cur = cur.refined(w / 4)
            if cur.width() >= w:
                break
        raise PrecisionError("sign undecidable at available precision")

    def _cmp_pair(self, other: "ValidatedReal", strict: bool) -> bool:
        """Certified (self < other) when strict, else (self <= other)."""
        if self._exact is not None and other._exact is not None:
            d = _exact_combine("sub", self._exact, other._exact)
            if d is not None:
                s = _exact_sign(d)
                return s < 0 if strict else s <= 0
        a, b = self, other
        for _ in range(_MAX_REFINE_ROUNDS):
            if strict:
                if a._hi < b._lo:
                    return True
                if a._lo >= b._hi:
                    return False
            else:
                if a._hi <= b._lo:
                    return True
                if a._lo > b._hi:
                    return False
            w = max(a.width(), b.width())
            if w == 0:
                # Both degenerate: endpoints decide.
                return a._lo < b._lo if strict else a._lo <= b._lo
            a = a.refined(w / 4)
            b = b.refined(w / 4)
            if max(a.width(), b.width()) >= w:
                break
        raise PrecisionError("comparison undecidable at available precision")

    def __lt__(self, other):
        return self._cmp_pair(ValidatedReal.wrap(other), strict=True)

    def __le__(self, other):
        return self._cmp_pair(ValidatedReal.wrap(other), strict=False)

    def __gt__(self, other):
        return ValidatedReal.wrap(other)._cmp_pair(self, strict=True)

    def __ge__(self, other):
        return ValidatedReal.wrap(other)._cmp_pair(self, strict=False)

    def contains(self, value) -> bool:
        v = Fraction(value)
        return self._lo <= v <= self._hi

    def floor(self) -> int:
        if self._exact is not None:
            if isinstance(self._exact, QuadExt):
                return self._exact.floor()
            return self._exact.numerator // self._exact.denominator
        cur = self
        for _ in range(_MAX_REFINE_ROUNDS):
            flo = cur._lo.numerator // cur._lo.denominator
            fhi = cur._hi.numerator // cur._hi.denominator
            if flo == fhi:
                return flo
            w = cur.width()
            cur = cur.refined(w / 4)
            if cur.width() >= w:
                break
        raise PrecisionError("floor undecidable at available precision")

    def ceil(self) -> int:
        return -((-self).floor())

    # -- arithmetic ------------------------------------------------------------

    def _binary(self, other: "ValidatedReal", op: str) -> "ValidatedReal":
        if self._exact is not None and other._exact is not None:
            ex = _exact_combine(op, self._exact, other._exact)
            if ex is not None:
                return ValidatedReal.wrap(ex)
        return _interval_binary(self, other, op)

    def __add__(self, other):
        return self._binary(ValidatedReal.wrap(other), "add")

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(ValidatedReal.wrap(other), "sub")

    def __rsub__(self, other):
        return ValidatedReal.wrap(other)._binary(self, "sub")

    def __mul__(self, other):
        return self._binary(ValidatedReal.wrap(other), "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ValidatedReal.wrap(other)
        if other._exact is not None and _exact_sign(other._exact) == 0:
            raise DomainError("division by an exact zero")
        return self._binary(other, "div")

    def __rtruediv__(self, other):
        return ValidatedReal.wrap(other).__truediv__(self)

    def __neg__(self):
        if self._exact is not None:
            return ValidatedReal.wrap(-self._exact)
        src = self

        def ref(w, _src=src):
            r = _src.refined(w)
            return -r._hi, -r._lo

        return ValidatedReal(-self._hi, -self._lo,
                             refiner=ref if self._refiner else None)

    def __abs__(self):
        if self._exact is not None:
            ex = self._exact
            s = _exact_sign(ex)
            return ValidatedReal.wrap(-ex if s < 0 else ex)
        lo, hi = self._lo, self._hi
        alo, ahi = _abs_endpoints(lo, hi)
        src = self

        def ref(w, _src=src):
            r = _src.refined(w)
            return _abs_endpoints(r._lo, r._hi)

        return ValidatedReal(alo, ahi, refiner=ref if self._refiner else None)


def _abs_endpoints(lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    if lo >= 0:
        return lo, hi
    if hi <= 0:
        return -hi, -lo
    return Fraction(0), max(-lo, hi)


def _endpoints(x: ValidatedReal, y: ValidatedReal, op: str) -> Tuple[Fraction, Fraction]:
    if op == "add":
        return x.lo + y.lo, x.hi + y.hi
    if op == "sub":
        return x.lo - y.hi, x.hi - y.lo
    if op == "mul":
        prods = (x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
        return min(prods), max(prods)
    if op == "div":
        if y.lo <= 0 <= y.hi:
            raise PrecisionError("divisor interval contains zero")
        quots = (x.lo / y.lo, x.lo / y.hi, x.hi / y.lo, x.hi / y.hi)
        return min(quots), max(quots)
    raise ValueError(op)


def _interval_binary(x: ValidatedReal, y: ValidatedReal, op: str) -> ValidatedReal:
    if op == "div":
        # Certify the divisor away from zero first, refining if needed.
        y = _exclude_zero(y)
    lo, hi = _endpoints(x, y, op)

    def ref(width, _x=x, _y=y, _op=op):
        a, b = _x, _y
        l, h = _endpoints(a, b, _op)
        for _ in range(_MAX_REFINE_ROUNDS):
            if h - l <= width:
                return l, h
            wa, wb = a.width(), b.width()
            if wa == 0 and wb == 0:
                return l, h
            target = max(wa, wb) / 4
            a = a.refined(target) if wa > 0 else a
            b = b.refined(target) if wb > 0 else b
            l, h = _endpoints(a, b, _op)
        raise PrecisionError("refinement stalled")

    refiner = ref if (x._refiner or y._refiner or x.exact is not None
                      or y.exact is not None) else None
    return ValidatedReal(lo, hi, refiner=refiner)


def _exclude_zero(y: ValidatedReal) -> ValidatedReal:
    cur = y
    for _ in range(_MAX_REFINE_ROUNDS):
        if cur.lo > 0 or cur.hi < 0:
            return cur
        w = cur.width()
        if w == 0:
            raise DomainError("division by an exact zero")
        cur = cur.refined(w / 4)
        if cur.width() >= w:
            break
    raise PrecisionError("divisor sign undecidable at available precision")

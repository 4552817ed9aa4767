"""Reproducible real numbers for fractional-part arithmetic.

A FixedPointReal stores floor(theta * 2**128) as one big integer, plus an
exactness tag:

  rational    theta = p/q, fractional parts are computed exactly mod q
  quadratic   theta = (a + b*sqrt(d))/c with b > 0 and d not a square;
              comparisons of {theta*n} against rationals are decided
              exactly with integer arithmetic on the conjugate
  approx      only the 128-bit fixed-point value is known; it defines
              the number (all platforms agree bit for bit)

Error budget for the approx tag: the stored fraction is within 2**-128 of
the intended real, so {theta*n} computed from it is within n * 2**-128 of
the true value; for n <= 2**40 that is below 2**-88.  For the rational and
quadratic tags every comparison against a rational bound is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, ldexp

SCALE_BITS = 128
SCALE = 1 << SCALE_BITS
_MASK = SCALE - 1


def _floor_quadratic(a: int, b: int, c: int, d: int, m: int) -> int:
    """floor(m * (a + b*sqrt(d)) / c) for b >= 0, c > 0, m >= 0.

    Valid because b*m*sqrt(d) is irrational unless b*m == 0, so adding
    its fractional part never carries the division over an integer.
    """
    s = isqrt(d * b * b * m * m)
    return (a * m + s) // c


class FixedPointReal:
    """An exactly comparable positive real, see module docstring."""

    __slots__ = ("scaled", "kind", "data", "label")

    def __init__(self, scaled: int, kind: str, data, label: str):
        self.scaled = scaled  # floor(theta * 2**128), includes integer part
        self.kind = kind
        self.data = data
        self.label = label

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_fraction(fr, label=None) -> "FixedPointReal":
        fr = Fraction(fr)
        if fr < 0:
            raise ValueError("negative values are not supported")
        scaled = (fr.numerator << SCALE_BITS) // fr.denominator
        return FixedPointReal(scaled, "rational", fr, label or str(fr))

    @staticmethod
    def from_int(n: int) -> "FixedPointReal":
        return FixedPointReal.from_fraction(Fraction(n))

    @staticmethod
    def quadratic(a: int, b: int, c: int, d: int, label=None) -> "FixedPointReal":
        """(a + b*sqrt(d))/c with b > 0, c > 0 and d > 1 not a perfect square."""
        if b <= 0 or c <= 0 or d <= 1:
            raise ValueError("need b > 0, c > 0, d > 1")
        r = isqrt(d)
        if r * r == d:
            raise ValueError(f"{d} is a perfect square; use a rational instead")
        if a + b * r < 0:
            raise ValueError("negative values are not supported")
        scaled = _floor_quadratic(a, b, c, d, SCALE)
        lbl = label or f"({a}+{b}*sqrt({d}))/{c}"
        return FixedPointReal(scaled, "quadratic", (a, b, c, d), lbl)

    @staticmethod
    def sqrt2() -> "FixedPointReal":
        return FixedPointReal.quadratic(0, 1, 1, 2, label="sqrt2")

    @staticmethod
    def golden() -> "FixedPointReal":
        return FixedPointReal.quadratic(1, 1, 2, 5, label="golden")

    @staticmethod
    def from_decimal(text: str) -> "FixedPointReal":
        """Decimal string taken as a 128-bit fixed-point approximant."""
        fr = Fraction(text)
        if fr < 0:
            raise ValueError("negative values are not supported")
        scaled = (fr.numerator << SCALE_BITS) // fr.denominator
        return FixedPointReal(scaled, "approx", None, text)

    @staticmethod
    def parse(text: str) -> "FixedPointReal":
        """Accepts 'sqrt2', 'golden', integers, 'p/q' and decimal strings."""
        t = text.strip().lower()
        if t == "sqrt2":
            return FixedPointReal.sqrt2()
        if t == "golden":
            return FixedPointReal.golden()
        if "/" in t:
            return FixedPointReal.from_fraction(Fraction(t), label=text.strip())
        try:
            return FixedPointReal.from_int(int(t))
        except ValueError:
            pass
        return FixedPointReal.from_decimal(text.strip())

    # -- basic queries -------------------------------------------------------

    @property
    def int_part(self) -> int:
        return self.scaled >> SCALE_BITS

    @property
    def frac128(self) -> int:
        return self.scaled & _MASK

    def is_integer(self) -> bool:
        return self.kind == "rational" and self.data.denominator == 1

    def is_rational(self) -> bool:
        return self.kind == "rational"

    def __float__(self) -> float:
        return ldexp(float(self.scaled), -SCALE_BITS)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FixedPointReal)
            and self.kind == other.kind
            and self.scaled == other.scaled
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.scaled))

    def __repr__(self) -> str:
        return f"FixedPointReal({self.label!r}, {float(self):.12f})"

    # -- multiples ----------------------------------------------------------

    def floor_mul(self, n: int) -> int:
        """floor(theta * n), exact for the rational and quadratic tags."""
        if n < 0:
            raise ValueError("n must be >= 0")
        if self.kind == "rational":
            fr = self.data * n
            return fr.numerator // fr.denominator
        if self.kind == "quadratic":
            a, b, c, d = self.data
            return _floor_quadratic(a, b, c, d, n)
        return (self.scaled * n) >> SCALE_BITS

    def frac_scaled(self, n: int) -> int:
        """floor({theta*n} * 2**128).

        Exact for the rational and quadratic tags; for the approx tag the
        stored fixed-point value is the number, so the result is the exact
        fractional part of that representative.
        """
        if self.kind == "rational":
            fr = self.data * n
            rem = fr.numerator % fr.denominator
            return (rem << SCALE_BITS) // fr.denominator
        if self.kind == "quadratic":
            a, b, c, d = self.data
            m = self.floor_mul(n)
            return _floor_quadratic(a, b, c, d, n << SCALE_BITS) - (m << SCALE_BITS)
        return (self.scaled * n) & _MASK

    def frac_float(self, n: int) -> float:
        return ldexp(float(self.frac_scaled(n)), -SCALE_BITS)

    def frac_fraction(self, n: int) -> Fraction:
        """{theta*n} as an exact Fraction for rationals, else the
        2**-128 approximant."""
        if self.kind == "rational":
            fr = self.data * n
            return Fraction(fr.numerator % fr.denominator, fr.denominator)
        return Fraction(self.frac_scaled(n), SCALE)

    def frac_cmp(self, n: int, bound) -> int:
        """Sign of {theta*n} - bound; exact except for the approx tag,
        which compares through the fixed-point representative."""
        bound = Fraction(bound)
        if self.kind == "rational":
            return _cmp(self.frac_fraction(n), bound)
        if self.kind == "quadratic":
            a, b, c, d = self.data
            m = _floor_quadratic(a, b, c, d, n)
            # compare (a*n + b*n*sqrt(d))/c - m with p/q:
            #   q*b*n*sqrt(d)  vs  c*p + q*c*m - q*a*n
            p, q = bound.numerator, bound.denominator
            lhs_b = q * b * n
            rhs = c * p + q * c * m - q * a * n
            if lhs_b == 0:
                return _cmp(0, rhs)
            if rhs < 0:
                return 1
            lhs_sq = d * lhs_b * lhs_b
            rhs_sq = rhs * rhs
            if lhs_sq > rhs_sq:
                return 1
            if lhs_sq < rhs_sq:
                return -1
            return 0  # unreachable for nonsquare d and n > 0
        return _cmp(Fraction(self.frac_scaled(n), SCALE), bound)

    def frac_in(self, n: int, lo, hi, closed: bool = True) -> bool:
        """Is {theta*n} inside [lo, hi] (or (lo, hi) when closed=False)?"""
        cl = self.frac_cmp(n, lo)
        ch = self.frac_cmp(n, hi)
        if closed:
            return cl >= 0 and ch <= 0
        return cl > 0 and ch < 0


def _cmp(a, b) -> int:
    if a < b:
        return -1
    if a > b:
        return 1
    return 0

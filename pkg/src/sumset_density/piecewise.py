"""Exact piecewise polynomials on [0, 1] with rational breakpoints.

A PiecewisePolynomial holds strictly ascending breakpoints x0 < ... < xm
spanning [0, 1] and one coefficient vector per piece, in the global
coordinate (piece i is sum_d c[d] * x**d on [x_i, x_{i+1})); the value is
0 outside [0, 1].  Evaluation at a breakpoint uses the piece on its
right, except at 1 where the last piece applies.

The iterated self-convolutions of the indicator of (0, 1/(k+1)) built by
f_family stay exact: every coefficient is a Fraction.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from math import comb
from typing import Sequence

F = Fraction
ZERO = F(0)
ONE = F(1)

Coeffs = tuple[Fraction, ...]


def _poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_eval_float(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_antiderivative(coeffs: Sequence[Fraction]) -> Coeffs:
    return (ZERO,) + tuple(c / (d + 1) for d, c in enumerate(coeffs))


def _poly_shift(coeffs: Sequence[Fraction], t: Fraction) -> Coeffs:
    """Coefficients of p(x + t)."""
    n = len(coeffs)
    out = [ZERO] * n
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        power = ONE
        for j in range(d, -1, -1):
            out[j] += c * comb(d, j) * power
            power *= t
    return tuple(out)


def _trim(coeffs: Sequence[Fraction]) -> Coeffs:
    cs = list(coeffs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class PiecewisePolynomial:
    __slots__ = ("breakpoints", "pieces")

    def __init__(self, breakpoints: Sequence[Fraction], pieces: Sequence[Sequence[Fraction]]):
        bp = tuple(F(b) for b in breakpoints)
        if len(bp) < 2 or bp[0] != 0 or bp[-1] != 1:
            raise ValueError("breakpoints must span [0, 1]")
        if any(a >= b for a, b in zip(bp, bp[1:])):
            raise ValueError("breakpoints must be strictly ascending")
        if len(pieces) != len(bp) - 1:
            raise ValueError("need exactly one coefficient vector per piece")
        self.breakpoints = bp
        self.pieces = tuple(_trim(tuple(F(c) for c in piece)) for piece in pieces)

    @staticmethod
    def constant(value) -> "PiecewisePolynomial":
        return PiecewisePolynomial((ZERO, ONE), ((F(value),),))

    @staticmethod
    def zero() -> "PiecewisePolynomial":
        return PiecewisePolynomial.constant(0)

    @staticmethod
    def indicator(lo, hi) -> "PiecewisePolynomial":
        """Indicator of [lo, hi) inside [0, 1]."""
        lo, hi = F(lo), F(hi)
        if not 0 <= lo < hi <= 1:
            raise ValueError(f"need 0 <= lo < hi <= 1, got [{lo}, {hi})")
        bps = sorted({ZERO, lo, hi, ONE})
        pieces = [((ONE,) if lo <= a < hi else (ZERO,)) for a in bps[:-1]]
        return PiecewisePolynomial(bps, pieces)

    # -- queries -------------------------------------------------------------

    def piece_index(self, x: Fraction) -> int:
        if x == 1:
            return len(self.pieces) - 1
        return bisect_right(self.breakpoints, x) - 1

    def evaluate(self, x) -> Fraction:
        x = F(x)
        if x < 0 or x > 1:
            return ZERO
        return _poly_eval(self.pieces[self.piece_index(x)], x)

    def __call__(self, x) -> Fraction:
        return self.evaluate(x)

    def float_pieces(self) -> tuple[list[float], list[list[float]]]:
        bps = [float(b) for b in self.breakpoints]
        pieces = [[float(c) for c in piece] for piece in self.pieces]
        return bps, pieces

    def evaluator(self):
        """Fast float evaluator (for sampling and quadrature)."""
        bps, pieces = self.float_pieces()

        def ev(x: float) -> float:
            if x < 0.0 or x > 1.0:
                return 0.0
            i = bisect_right(bps, x) - 1
            if i >= len(pieces):
                i = len(pieces) - 1
            return _poly_eval_float(pieces[i], x)

        return ev

    def support(self) -> tuple[Fraction, Fraction]:
        """Smallest breakpoint interval outside which the function is 0."""
        nz = [i for i, p in enumerate(self.pieces) if any(c != 0 for c in p)]
        if not nz:
            return ZERO, ZERO
        return self.breakpoints[nz[0]], self.breakpoints[nz[-1] + 1]

    def refine(self, extra: Sequence[Fraction]) -> "PiecewisePolynomial":
        bps = sorted(set(self.breakpoints) | {F(x) for x in extra if 0 <= F(x) <= 1})
        pieces = [self.pieces[self.piece_index(a)] for a in bps[:-1]]
        return PiecewisePolynomial(bps, pieces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiecewisePolynomial):
            return NotImplemented
        bps = sorted(set(self.breakpoints) | set(other.breakpoints))
        a = self.refine(bps)
        b = other.refine(bps)
        return a.pieces == b.pieces

    def __hash__(self) -> int:
        return hash((self.breakpoints, self.pieces))

    def __repr__(self) -> str:
        return f"PiecewisePolynomial({len(self.pieces)} pieces on {self.breakpoints[0]}..{self.breakpoints[-1]})"

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other: "PiecewisePolynomial") -> "PiecewisePolynomial":
        bps = sorted(set(self.breakpoints) | set(other.breakpoints))
        a = self.refine(bps)
        b = other.refine(bps)
        pieces = []
        for pa, pb in zip(a.pieces, b.pieces):
            n = max(len(pa), len(pb))
            pieces.append(tuple(
                (pa[i] if i < len(pa) else ZERO) + (pb[i] if i < len(pb) else ZERO)
                for i in range(n)
            ))
        return PiecewisePolynomial(bps, pieces)

    def scale(self, c) -> "PiecewisePolynomial":
        c = F(c)
        return PiecewisePolynomial(
            self.breakpoints, [tuple(c * v for v in p) for p in self.pieces]
        )

    def reflect(self, center) -> "PiecewisePolynomial":
        """The function x -> f(center - x), restricted to [0, 1]."""
        center = F(center)
        bps = sorted(
            {ZERO, ONE} | {center - b for b in self.breakpoints if 0 <= center - b <= 1}
        )
        pieces = []
        for a, b in zip(bps, bps[1:]):
            mid = (a + b) / 2
            src = center - mid
            if src < 0 or src > 1:
                pieces.append((ZERO,))
                continue
            coeffs = self.pieces[self.piece_index(src)]
            # p(center - x) = sum c_d (center - x)^d
            out = [ZERO] * len(coeffs)
            for d, c in enumerate(coeffs):
                if c == 0:
                    continue
                for j in range(d + 1):
                    out[j] += c * comb(d, j) * center ** (d - j) * (-1) ** j
            pieces.append(tuple(out))
        return PiecewisePolynomial(bps, pieces)

    def antiderivative(self) -> "PiecewisePolynomial":
        """The continuous antiderivative vanishing at 0."""
        pieces = []
        value = ZERO  # running value at the left end of the current piece
        for i, coeffs in enumerate(self.pieces):
            a, b = self.breakpoints[i], self.breakpoints[i + 1]
            anti = _poly_antiderivative(coeffs)
            piece = (anti[0] + value - _poly_eval(anti, a),) + anti[1:]
            pieces.append(piece)
            value = _poly_eval(piece, b)
        return PiecewisePolynomial(self.breakpoints, pieces)

    def definite_integral(self, a, b) -> Fraction:
        a, b = F(a), F(b)
        if not 0 <= a <= b <= 1:
            raise ValueError(f"need 0 <= a <= b <= 1, got [{a}, {b}]")
        anti = self.antiderivative()
        return anti.evaluate(b) - anti.evaluate(a)

    def integral(self) -> Fraction:
        return self.definite_integral(ZERO, ONE)

    def convolve_with_indicator(self, length, cap=None) -> "PiecewisePolynomial":
        """g(x) = integral of f over (max(0, x - length), min(x, cap)).

        With cap omitted this is the convolution with the indicator of
        (0, length) restricted to [0, 1].
        """
        length = F(length)
        if not 0 < length <= 1:
            raise ValueError(f"need 0 < length <= 1, got {length}")
        cap = ONE if cap is None else F(cap)
        big = self.antiderivative()
        # G(min(x, cap)) - G(max(0, x - length)) is a polynomial between
        # consecutive points of: breakpoints, breakpoints + length, cap,
        # and cap + length (past which the range (x - length, cap) is empty)
        bps = set(big.breakpoints) | {cap}
        bps |= {b + length for b in big.breakpoints if b + length <= 1}
        if cap + length <= 1:
            bps.add(cap + length)
        bps |= {ZERO, ONE}
        bps = sorted(b for b in bps if 0 <= b <= 1)
        pieces = []
        for a, b in zip(bps, bps[1:]):
            mid = (a + b) / 2
            if mid - length >= cap:
                pieces.append((ZERO,))
                continue
            # upper limit: G(x) or the constant G(cap)
            if mid <= cap:
                upper = big.pieces[big.piece_index(mid)]
            else:
                upper = (big.evaluate(cap),)
            # lower limit: G(0) = 0 or G(x - length)
            if mid <= length:
                lower: Coeffs = (ZERO,)
            else:
                src = big.pieces[big.piece_index(mid - length)]
                lower = _poly_shift(src, -length)
            n = max(len(upper), len(lower))
            pieces.append(tuple(
                (upper[i] if i < len(upper) else ZERO)
                - (lower[i] if i < len(lower) else ZERO)
                for i in range(n)
            ))
        return PiecewisePolynomial(bps, pieces)


def f_family(k: int) -> list[PiecewisePolynomial]:
    """The recursion f_1 = 1 on [0,1); f_{j+1}(x) = F_j(min(x, j/(k+1)))
    - F_j(max(0, x - 1/(k+1))).

    For j >= 2, f_j is the j-fold self-convolution of the indicator of
    (0, 1/(k+1)): supported on (0, j/(k+1)), continuous, symmetric about
    j/(2(k+1)), with integral (k+1)**-j.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    length = F(1, k + 1)
    fs = [PiecewisePolynomial.constant(1)]
    for j in range(1, k):
        cap = F(j, k + 1)
        fs.append(fs[-1].convolve_with_indicator(length, cap=cap))
    return fs

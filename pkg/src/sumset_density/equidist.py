"""Fractional-part sampling sets and quantitative equidistribution.

The membership tests below go through the exact comparison machinery of
FixedPointReal: quadratic slopes are decided exactly, fixed-point
approximants are decided exactly for their 128-bit representative.
Density statements tolerate the measure-zero boundary flips this implies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .intset import FiniteIntegerSet
from .piecewise import PiecewisePolynomial
from .reals import SCALE, FixedPointReal
from .torus import TorusSet

F = Fraction


@dataclass(frozen=True)
class EtaSpec:
    """Decay function eta(t) = scale * t**-power for the discrepancy bound.

    The floor eta(t) >= t**-0.5 (for t >= 1) is enforced through
    scale >= 1 and power <= 0.5.
    """

    scale: float = 1.0
    power: float = 0.5

    def __post_init__(self):
        if self.scale < 1.0 or not 0.0 < self.power <= 0.5:
            raise ValueError(
                f"eta(t) = {self.scale}*t^-{self.power} may fall below t^-1/2"
            )

    def __call__(self, t: float) -> float:
        if t <= 0:
            return math.inf
        return self.scale * t ** (-self.power)


def _interval_memberships(theta: FixedPointReal, intervals, n_max: int, closed: bool):
    """Yield (n, member) for 1 <= n < n_max with member iff {theta n} is in
    one of the intervals (list of Fraction pairs)."""
    if theta.is_rational():
        p = theta.data.numerator
        q = theta.data.denominator
        # {theta n} only depends on n mod q
        table = [False] * q
        for rem in range(q):
            frac = F(rem, q)
            ok = any(
                (lo < frac < hi) or (closed and (frac == lo or frac == hi))
                for lo, hi in intervals
            )
            table[rem] = ok
        for n in range(1, n_max):
            yield n, table[(p * n) % q]
        return
    scaled = theta.scaled
    mask = SCALE - 1
    bounds = []
    for lo, hi in intervals:
        lo_s = (lo.numerator << 128) // lo.denominator
        hi_s = -((-hi.numerator << 128) // hi.denominator)  # ceil
        bounds.append((lo_s, hi_s))
    for n in range(1, n_max):
        fs = (scaled * n) & mask
        yield n, any(lo_s < fs < hi_s for lo_s, hi_s in bounds)


def _members_to_set(gen, horizon: int) -> FiniteIntegerSet:
    buf = bytearray((horizon + 7) // 8)
    for n, ok in gen:
        if ok:
            buf[n >> 3] |= 1 << (n & 7)
    return FiniteIntegerSet(horizon, int.from_bytes(buf, "little"))


@lru_cache(maxsize=64)
def beatty_T(k: int, theta: FixedPointReal, horizon: int) -> FiniteIntegerSet:
    """{1 <= n < N : 0 < {theta n} < 1/(k+1)}; all of [1, N) when theta is
    an integer."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if theta.is_integer():
        return FiniteIntegerSet.interval(1, horizon, horizon)
    gen = _interval_memberships(
        theta, [(F(0), F(1, k + 1))], horizon, closed=False
    )
    return _members_to_set(gen, horizon)


def b_lambda(a: TorusSet, lam: FixedPointReal, horizon: int) -> FiniteIntegerSet:
    """B = {1 <= n < N : {lambda n} in A} for a closed interval union A."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if a.is_empty():
        return FiniteIntegerSet(horizon)
    if a.is_full():
        return FiniteIntegerSet.interval(1, horizon, horizon)
    intervals = list(a.intervals)
    gen = _interval_memberships(lam, intervals, horizon, closed=True)
    return _members_to_set(gen, horizon)


def x_theta(theta: FixedPointReal, eta: EtaSpec, horizon: int) -> FiniteIntegerSet:
    """{1 <= n < N : 2 eta(n/2) < {theta n} < 1 - 2 eta(n/2)}.

    For small n the window is empty and n is excluded automatically.
    """
    buf = bytearray((horizon + 7) // 8)
    for n in range(1, horizon):
        margin = 2.0 * eta(n / 2.0)
        if margin >= 0.5:
            continue
        fr = theta.frac_float(n)
        if margin < fr < 1.0 - margin:
            buf[n >> 3] |= 1 << (n & 7)
    return FiniteIntegerSet(horizon, int.from_bytes(buf, "little"))


@dataclass(frozen=True)
class DiscrepancyProfile:
    n: int
    m: int
    lhs: float
    bound: float
    theta: FixedPointReal
    interval: tuple[Fraction, Fraction]

    @property
    def holds(self) -> bool:
        return self.lhs <= self.bound


# the classical absolute constant in the Erdos-Turan inequality
ERDOS_TURAN_CONSTANT = 3.0


def _exp_sum_abs(theta: FixedPointReal, k: int, n: int) -> float:
    """|sum_{j=1..n} e(j k theta)| through the closed geometric form
    |sin(pi n k theta) / sin(pi k theta)|."""
    fk = theta.frac_float(k)
    if fk == 0.0:
        return float(n)
    denom = abs(math.sin(math.pi * fk))
    num = abs(math.sin(math.pi * theta.frac_float(n * k)))
    return min(float(n), num / denom)


def discrepancy_check(
    theta: FixedPointReal,
    interval: tuple,
    n: int,
    m: int,
    offset: int = 0,
) -> DiscrepancyProfile:
    """Compare the counting error of {theta j}, offset < j <= offset + n,
    on a closed interval with the Erdos-Turan bound

        3 * (1/(m+1) + (1/n) sum_{k<=m} |S_k| / k).
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    lo, hi = F(interval[0]), F(interval[1])
    if not 0 <= lo < hi <= 1:
        raise ValueError(f"bad interval [{lo}, {hi}]")
    count = 0
    for j in range(offset + 1, offset + n + 1):
        if theta.frac_in(j, lo, hi, closed=True):
            count += 1
    lhs = abs(count / n - float(hi - lo))
    tail = sum(_exp_sum_abs(theta, k, n) / k for k in range(1, m + 1))
    bound = ERDOS_TURAN_CONSTANT * (1.0 / (m + 1) + tail / n)
    return DiscrepancyProfile(n, m, lhs, bound, theta, (lo, hi))


def weyl_average(
    f: PiecewisePolynomial, theta: FixedPointReal, n: int, offset: int = 0
) -> float:
    """(1/n) * sum of f({theta j}) over offset < j <= offset + n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ev = f.evaluator()
    total = 0.0
    for j in range(offset + 1, offset + n + 1):
        total += ev(theta.frac_float(j))
    return total / n

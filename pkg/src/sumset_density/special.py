"""Special-value references and the exponential sumset-deficit integral.

big_f(k, c) evaluates the integral of exp(-c**k * lambda_k * f_k(t)) over
the support (0, k/(k+1)) of f_k with adaptive Gauss-Legendre quadrature;
the predicted density of the k-fold sumset of pseudo k-th powers is then
k/(k+1) - big_f(k, c).  solve_c inverts it.

Reference constants go through mpmath at 40 digits and are returned as
floats with an honest absolute error bound (conversion to double costs
half an ulp; the 40-digit value itself is exact at this scale).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

from .piecewise import PiecewisePolynomial, f_family

_DPS = 40
_GL_NODES = 32


@dataclass(frozen=True)
class SpecialValue:
    value: float
    abs_error_bound: float

    def __float__(self) -> float:
        return self.value


def _to_special(x: "mpmath.mpf") -> SpecialValue:
    v = float(x)
    # conversion to double is correct to 0.5 ulp; the 40-digit value is
    # many orders tighter, so one ulp is a safe honest bound
    return SpecialValue(v, math.ulp(abs(v)) if v != 0 else 5e-324)


def lambda_k(k: int) -> SpecialValue:
    """Gamma(1/k)**k / k!"""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    with mpmath.workdps(_DPS):
        val = mpmath.gamma(mpmath.mpf(1) / k) ** k / mpmath.factorial(k)
        return _to_special(val)


def beta_ref(x: float, y: float) -> SpecialValue:
    """Euler Beta(x, y) = Gamma(x) Gamma(y) / Gamma(x + y)."""
    if x <= 0 or y <= 0:
        raise ValueError(f"beta arguments must be positive, got ({x}, {y})")
    with mpmath.workdps(_DPS):
        return _to_special(mpmath.beta(x, y))


def zeta_ref(s: float) -> SpecialValue:
    if s <= 1:
        raise ValueError(f"zeta reference needs s > 1, got {s}")
    with mpmath.workdps(_DPS):
        return _to_special(mpmath.zeta(s))


@lru_cache(maxsize=None)
def _gl_nodes():
    nodes, weights = np.polynomial.legendre.leggauss(_GL_NODES)
    return nodes, weights


@lru_cache(maxsize=32)
def _f_k_float(k: int):
    """Float breakpoints and coefficient arrays of f_k for the given k."""
    fk = f_family(k)[-1]
    bps, pieces = fk.float_pieces()
    # integration stops at k/(k+1); for k >= 2 that is exactly the support
    # end of f_k, for k = 1 it cuts the everywhere-1 function f_1
    return bps, pieces, k / (k + 1)


def _gl_integrate(coeffs, a: float, b: float, scale: float) -> float:
    nodes, weights = _gl_nodes()
    half = 0.5 * (b - a)
    x = a + half * (nodes + 1.0)
    fx = np.zeros_like(x)
    for c in reversed(coeffs):
        fx = fx * x + c
    return half * float(np.dot(weights, np.exp(-scale * fx)))


def _adaptive(coeffs, a: float, b: float, scale: float, tol: float, depth: int) -> float:
    whole = _gl_integrate(coeffs, a, b, scale)
    mid = 0.5 * (a + b)
    split = _gl_integrate(coeffs, a, mid, scale) + _gl_integrate(coeffs, mid, b, scale)
    if abs(split - whole) <= tol or depth >= 40:
        return split
    return _adaptive(coeffs, a, mid, scale, tol / 2, depth + 1) + _adaptive(
        coeffs, mid, b, scale, tol / 2, depth + 1
    )


def big_f(k: int, c: float, tol: float = 1e-10) -> float:
    """Integral of exp(-c**k * lambda_k * f_k(t)) dt over (0, k/(k+1))."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if c < 0:
        raise ValueError(f"c must be >= 0, got {c}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    scale = (c ** k) * lambda_k(k).value
    bps, pieces, sup_hi = _f_k_float(k)
    # integrate piece by piece up to the support end k/(k+1)
    spans = []
    for i in range(len(pieces)):
        a, b = bps[i], min(bps[i + 1], sup_hi)
        if a >= sup_hi:
            break
        spans.append((pieces[i], a, b))
    total = 0.0
    per_piece = tol / max(1, len(spans))
    for coeffs, a, b in spans:
        total += _adaptive(coeffs, a, b, scale, per_piece, 0)
    return total


def predicted_density(k: int, c: float, tol: float = 1e-10) -> float:
    """k/(k+1) - F_k(c), the almost-sure density of the k-fold sumset for
    irrational slopes."""
    return k / (k + 1) - big_f(k, c, tol)


def solve_c(k: int, target: float, tol: float = 1e-10) -> float:
    """The c with big_f(k, c) == target; bisection on the monotone F_k."""
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    top = k / (k + 1)
    if not 0 < target < top:
        raise ValueError(f"target must be in (0, {top}), got {target}")
    lo = 0.0
    hi = 1.0
    while big_f(k, hi, tol) > target:
        hi *= 2
        if hi > 1e9:
            raise ArithmeticError("no bracketing c found below 1e9")
    # shrink until both the value and the bracket meet the tolerance
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        val = big_f(k, mid, tol)
        if val > target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol and abs(val - target) <= tol:
            return mid
    return 0.5 * (lo + hi)

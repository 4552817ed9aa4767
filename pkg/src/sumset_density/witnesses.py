"""Deterministic witness constructions for prescribed density tuples.

The builders return both a recipe (a small tagged description that can be
re-materialized) and the materialized TorusSet; every witness is
re-verified by exact sumset arithmetic before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .intset import FiniteIntegerSet, iterated_sumset as int_iterated_sumset
from .reals import FixedPointReal
from .torus import (
    TorusSet,
    minkowski_sum,
    normalize,
    scale_raw,
    sumset_profile,
)

F = Fraction


class NotApplicableError(ValueError):
    """Requested pair lies outside this constructor's regime."""


class NoTwoIntervalWitness(Exception):
    """No two-interval set attains the requested triplet."""


@dataclass(frozen=True)
class IntervalUnion:
    set: TorusSet

    def materialize(self) -> TorusSet:
        return self.set


@dataclass(frozen=True)
class APThickening:
    """[0, x] followed by the points 2x..kx thickened left by eps."""

    k: int
    x: Fraction
    eps: Fraction

    def materialize(self) -> TorusSet:
        raw = [(F(0), self.x)]
        raw.extend((j * self.x - self.eps, j * self.x) for j in range(2, self.k + 1))
        return normalize(raw)


@dataclass(frozen=True)
class CantorHybrid:
    """[0, a] unioned with the depth-d middle-thirds set scaled to [0, beta/2]."""

    a: Fraction
    beta: Fraction
    depth: int

    def materialize(self) -> TorusSet:
        raw = scale_raw(cantor_approx(3, self.depth), self.beta / 2)
        if self.a > 0:
            raw.append((F(0), self.a))
        return normalize(raw)


@dataclass(frozen=True)
class RationalResidue:
    """r residue classes mod g, each filled by a random base of density gamma."""

    g: int
    r: int
    gamma: Fraction
    seed: int


@dataclass(frozen=True)
class PseudoPower:
    k: int
    c: float
    theta: str
    seed: int


WitnessRecipe = Union[IntervalUnion, APThickening, CantorHybrid, RationalResidue, PseudoPower]


# -- Cantor approximants ---------------------------------------------------

_CANTOR_CACHE: dict[tuple[int, int], tuple] = {}


def cantor_approx(ratio_denom: int, depth: int):
    """Depth-d prefix of the Cantor set on [0,1] with dissection ratio
    1/ratio_denom: keep the first and last (b-a)/ratio_denom of every
    interval at each step.  Returns 2**d raw intervals.
    """
    if ratio_denom < 3:
        raise ValueError(f"ratio denominator must be >= 3, got {ratio_denom}")
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    key = (ratio_denom, depth)
    if key not in _CANTOR_CACHE:
        pieces = [(F(0), F(1))]
        for _ in range(depth):
            nxt = []
            for a, b in pieces:
                step = (b - a) / ratio_denom
                nxt.append((a, a + step))
                nxt.append((b - step, b))
            pieces = nxt
        _CANTOR_CACHE[key] = tuple(pieces)
    return [tuple(p) for p in _CANTOR_CACHE[key]]


def cantor_pair_witness(beta, depth: int) -> TorusSet:
    """(beta/2) times the depth-d middle-thirds set: measure
    (beta/2)(2/3)^d, doubled measure exactly beta."""
    beta = F(beta)
    if not 0 < beta <= 1:
        raise ValueError(f"beta must be in (0, 1], got {beta}")
    a = normalize(scale_raw(cantor_approx(3, depth), beta / 2))
    doubled = minkowski_sum(a, a)
    expected = TorusSet.full() if beta == 1 else normalize([(F(0), beta)])
    assert doubled == expected, (beta, depth)
    return a


# -- pair witnesses (measure alpha, doubled measure beta) -------------------

_AP_MAX_K = 512


def _ap_parameters(alpha: Fraction, beta: Fraction):
    """Smallest k for which the thickened progression fits: x, eps > 0,
    eps <= x/2 (sum pieces stay disjoint) and 2kx <= 1 (no wrap)."""
    for k in range(2, _AP_MAX_K + 1):
        x = (beta - 2 * alpha) / (k - 1)
        eps = (alpha - x) / (k - 1)
        if eps <= 0:
            continue
        if eps > x / 2:
            # eps/x only shrinks when beta/alpha >= 4k/(k+1) for a later k;
            # keep scanning, the window is monotone in neither direction
            continue
        if 2 * k * x > 1:
            continue
        return k, x, eps
    return None


def _cantor_hybrid_parameters(alpha: Fraction, beta: Fraction):
    """Minimal depth d with (beta/2)(2/3)^d <= alpha, and the exact left
    thickening a making the measure alpha."""
    half = beta / 2
    d = 0
    cantor_measure = half
    while cantor_measure > alpha:
        d += 1
        cantor_measure = half * F(2, 3) ** d
    comps = [
        (lo * half, hi * half) for lo, hi in cantor_approx(3, d)
    ]
    # measure of [0,a] union comps, as a runs through the gap after comp i:
    # a + (total measure of comps strictly above a)
    suffix = [F(0)] * (len(comps) + 1)
    for i in range(len(comps) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + (comps[i][1] - comps[i][0])
    for i in range(len(comps)):
        a = alpha - suffix[i + 1]
        gap_lo = comps[i][1]
        gap_hi = comps[i + 1][0] if i + 1 < len(comps) else half
        if gap_lo <= a <= gap_hi:
            return a, d
    if alpha == suffix[0]:
        return F(0), d
    raise AssertionError(f"no exact thickening for alpha={alpha}, beta={beta}")


def pair_witness(alpha, beta):
    """A TorusSet with measure alpha and doubled measure beta, for any
    0 < alpha <= 1 and min(2*alpha, 1) <= beta <= 1.  Returns
    (recipe, set); the profile is re-verified exactly."""
    alpha = F(alpha)
    beta = F(beta)
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    if beta > 1:
        raise ValueError(f"beta must be at most 1, got {beta}")
    if beta < min(2 * alpha, 1):
        raise NotApplicableError(
            f"beta={beta} < min(2*alpha, 1): deficient doubling, "
            "use kneser_feasibility / rational_witness"
        )
    if beta == min(2 * alpha, 1):
        recipe = IntervalUnion(normalize([(F(0), alpha)]))
    else:
        ap = _ap_parameters(alpha, beta)
        if ap is not None:
            k, x, eps = ap
            recipe = APThickening(k, x, eps)
        else:
            a, d = _cantor_hybrid_parameters(alpha, beta)
            recipe = CantorHybrid(a, beta, d)
    witness = recipe.materialize()
    assert sumset_profile(witness, 2) == [alpha, beta], (alpha, beta, recipe)
    return recipe, witness


# -- two-interval triplet witnesses ----------------------------------------

def triplet_region_contains(alpha, beta, gamma) -> bool:
    """The attainable open-ended region for (measure, doubled, tripled) of
    two-interval subsets of [0, 1/3]: beta in [2a, 3a] and either
    gamma in [3b/2, 2b - a) or beta == 3a with gamma in [3b/2, 2b]."""
    alpha, beta, gamma = F(alpha), F(beta), F(gamma)
    if not 0 <= alpha <= F(1, 3):
        return False
    if not 2 * alpha <= beta <= 3 * alpha:
        return False
    if beta == 3 * alpha:
        return 3 * beta / 2 <= gamma <= 2 * beta
    return 3 * beta / 2 <= gamma < 2 * beta - alpha


def triplet_region_closure_contains(alpha, beta, gamma) -> bool:
    """Closure of the region above (the right gamma endpoint included)."""
    alpha, beta, gamma = F(alpha), F(beta), F(gamma)
    if not 0 <= alpha <= F(1, 3):
        return False
    if not 2 * alpha <= beta <= 3 * alpha:
        return False
    hi = 2 * beta if beta == 3 * alpha else 2 * beta - alpha
    return 3 * beta / 2 <= gamma <= hi


def _two_interval_set(x, y, z) -> TorusSet:
    raw = []
    if x > 0:
        raw.append((F(0), x))
    if z > y:
        raw.append((y, z))
    return normalize(raw)


def _verify_triplet(cand, alpha, beta, gamma):
    x, y, z = cand
    if not (0 <= x <= y <= z <= F(1, 3)):
        return None
    witness = _two_interval_set(x, y, z)
    if sumset_profile(witness, 3) == [alpha, beta, gamma]:
        return witness
    return None


def triplet_witness(alpha, beta, gamma) -> TorusSet:
    """A two-interval set [0,x] u [y,z] in [0,1/3] with the exact profile
    (alpha, beta, gamma).

    Branches follow the case analysis for the component structure of 2A
    and 3A; each branch checks its strict constraints before building, and
    the result is re-verified exactly.  Raises NoTwoIntervalWitness on the
    gamma == 3*beta/2 boundary with beta > 2*alpha, where the strict case
    constraints cannot hold.
    """
    alpha, beta, gamma = F(alpha), F(beta), F(gamma)
    if not triplet_region_closure_contains(alpha, beta, gamma):
        raise ValueError(
            f"({alpha}, {beta}, {gamma}) outside the two-interval region"
        )
    if alpha == 0:
        raise ValueError("alpha must be positive")

    # degenerate single interval
    if beta == 2 * alpha and gamma == 3 * alpha:
        witness = normalize([(F(0), alpha)])
        assert sumset_profile(witness, 3) == [alpha, beta, gamma]
        return witness

    candidates = []
    third = gamma / 3
    if 2 * alpha < beta < 3 * alpha and 3 * beta / 2 < gamma < 2 * beta - alpha:
        # one overlap in 2A at the first gap, 3A connected
        candidates.append((2 * alpha - beta + third, alpha - beta + 2 * third, third))
        # one overlap in 2A at the second gap, 3A connected
        candidates.append((beta - alpha - third, beta - 2 * alpha, third))
    if beta < 3 * alpha and gamma == 2 * beta - alpha and beta > 2 * alpha:
        # boundary: 3A keeps its last gap open; one degree of freedom in z
        zlo = max(beta / 2, third, alpha, beta - 2 * alpha)
        zhi = min(beta - alpha, F(1, 3))
        if zlo < zhi:
            z = (zlo + zhi) / 2
            candidates.append((2 * alpha - beta + z, 2 * z - beta + alpha, z))
    if beta == 3 * alpha:
        # 2A has no overlap; sub-branches by the shape of 3A
        if gamma == 6 * alpha:
            # 3A fully disconnected
            x = alpha / 2
            ylo = 3 * alpha / 2
            yhi = F(1, 3) - alpha / 2
            if ylo <= yhi:
                y = (ylo + yhi) / 2
                candidates.append((x, y, y + alpha / 2))
        # 3A connected: gamma = 3z
        xlo = max((third - alpha) / 2, 2 * alpha - third, F(0))
        xhi = min(third - alpha, (9 * alpha - gamma) / 6, alpha)
        if xlo <= xhi:
            x = (xlo + xhi) / 2
            candidates.append((x, x + third - alpha, third))
        # 3A with only its first gap overcome: gamma = 6a - 3x + y
        # solve with z - y = alpha - x free through y
        x = (6 * alpha - gamma) / 2
        y = gamma - 6 * alpha + 3 * x
        candidates.append((x, y, y + alpha - x))

    for cand in candidates:
        witness = _verify_triplet(cand, alpha, beta, gamma)
        if witness is not None:
            return witness
    raise NoTwoIntervalWitness(
        f"no two-interval witness for ({alpha}, {beta}, {gamma})"
    )


def region_scan(denominator: int, kmax: int = 3):
    """Exact profiles of [0, x] u [y, z] over the grid of multiples of
    1/denominator with 0 <= x <= y <= z <= floor(D/3)/D.

    Yields (x, y, z, profile, in_closure) rows in lexicographic order.
    """
    if denominator < 3:
        raise ValueError("denominator must be >= 3")
    top = denominator // 3
    rows = []
    for xi in range(top + 1):
        for yi in range(xi, top + 1):
            for zi in range(yi, top + 1):
                x = F(xi, denominator)
                y = F(yi, denominator)
                z = F(zi, denominator)
                witness = _two_interval_set(x, y, z)
                if witness.is_empty():
                    prof = [F(0)] * kmax
                else:
                    prof = sumset_profile(witness, kmax)
                ok = triplet_region_closure_contains(prof[0], prof[1], prof[2])
                rows.append((x, y, z, prof, ok))
    return rows


# -- progression helpers (reduction machinery) ------------------------------

def u_progression(r: int) -> FiniteIntegerSet:
    """The set {0, 1, ..., r-2, r}; its j-fold sumsets have exactly j*r
    elements.  Requires r >= 3 (at r = 2 the count identity fails)."""
    if r < 3:
        raise ValueError(f"r must be >= 3, got {r}")
    return FiniteIntegerSet.from_members(list(range(r - 1)) + [r], r + 1)


def u_progression_sizes(r: int, jmax: int) -> list[int]:
    u = u_progression(r)
    wide = FiniteIntegerSet(jmax * r + 1, u.bits)
    return [len(int_iterated_sumset(wide, j)) for j in range(1, jmax + 1)]


def floor_scale(a: FiniteIntegerSet, theta: FixedPointReal) -> FiniteIntegerSet:
    """{floor(theta * a) : a in A} on the accordingly scaled horizon."""
    if float(theta) <= 1:
        raise ValueError("theta must be > 1")
    horizon = theta.floor_mul(a.horizon - 1) + 1
    return FiniteIntegerSet.from_members(
        (theta.floor_mul(m) for m in a.members()), horizon
    )


def dilate(a: FiniteIntegerSet, q: int) -> FiniteIntegerSet:
    """{q * a : a in A} on horizon q * (N - 1) + 1."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    horizon = q * (a.horizon - 1) + 1
    return FiniteIntegerSet.from_members((q * m for m in a.members()), horizon)

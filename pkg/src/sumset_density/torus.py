"""Exact arithmetic on finite unions of closed intervals in the circle R/Z.

Conventions:
  * the fundamental domain is [0, 1]; a stored interval is a pair
    (lo, hi) of Fractions with 0 <= lo < hi <= 1 and means the closed
    arc [lo, hi];
  * a TorusSet keeps its intervals sorted, pairwise disjoint and
    non-touching, except that a set may end with hi == 1 and start with
    lo == 0 (the cut point of the fundamental domain is never merged);
  * closed intervals are used instead of the open ones because they are
    stable under Minkowski sums and have the same measure; intervals that
    merely touch are merged, single points are dropped.

All operations are pure and exact (fractions.Fraction end to end).
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)

RawInterval = tuple[Fraction, Fraction]

# pairwise-sum counts above this go through the vectorised int64 path
_NUMPY_PAIR_THRESHOLD = 20_000


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected a rational value, got {type(x).__name__}")


def _check_raw(raw: Iterable) -> list[RawInterval]:
    out = []
    for pair in raw:
        lo, hi = pair
        lo = _as_fraction(lo)
        hi = _as_fraction(hi)
        if lo >= hi:
            raise ValueError(f"malformed interval: lo={lo} >= hi={hi}")
        out.append((lo, hi))
    return out


class TorusSet:
    """A finite union of disjoint closed intervals of the circle."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Sequence[RawInterval], _normalized: bool = False):
        if _normalized:
            self.intervals = tuple(intervals)
        else:
            self.intervals = normalize(intervals).intervals

    @staticmethod
    def empty() -> "TorusSet":
        return TorusSet((), _normalized=True)

    @staticmethod
    def full() -> "TorusSet":
        return TorusSet(((ZERO, ONE),), _normalized=True)

    @property
    def measure(self) -> Fraction:
        return sum((hi - lo for lo, hi in self.intervals), ZERO)

    def is_empty(self) -> bool:
        return not self.intervals

    def is_full(self) -> bool:
        return self.intervals == ((ZERO, ONE),)

    @property
    def component_count(self) -> int:
        """Number of connected components on the circle.

        A pair of intervals meeting at the cut point (hi == 1 and lo == 0)
        is a single arc of the circle and counts once.
        """
        n = len(self.intervals)
        if n >= 2 and self.intervals[0][0] == ZERO and self.intervals[-1][1] == ONE:
            return n - 1
        return n

    def contains(self, x) -> bool:
        x = _as_fraction(x) % 1
        for lo, hi in self.intervals:
            if lo <= x <= hi:
                return True
        # the point 0 is also represented by 1
        if x == ZERO and self.intervals and self.intervals[-1][1] == ONE:
            return True
        return False

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusSet) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        parts = ", ".join(f"[{lo}, {hi}]" for lo, hi in self.intervals)
        return f"TorusSet({{{parts}}})"

    # -- derived operations, thin wrappers over the module functions

    def minkowski(self, other: "TorusSet") -> "TorusSet":
        return minkowski_sum(self, other)

    def iterated(self, k: int) -> "TorusSet":
        return iterated_sumset(self, k)

    def profile(self, kmax: int) -> list[Fraction]:
        return sumset_profile(self, kmax)


def normalize(raw: Iterable) -> TorusSet:
    """Project raw real-line intervals to [0,1], split at integers, merge.

    Overlapping or touching pieces are merged; zero-length pieces are
    dropped.  An input interval of length >= 1 covers the whole circle.
    """
    pieces: list[RawInterval] = []
    for lo, hi in _check_raw(raw):
        if hi - lo >= 1:
            return TorusSet.full()
        shift = lo.__floor__()
        lo -= shift
        hi -= shift
        if hi <= ONE:
            pieces.append((lo, hi))
        else:
            pieces.append((lo, ONE))
            pieces.append((ZERO, hi - ONE))
    return _merge_sorted(sorted(pieces))


def _merge_sorted(pieces: list[RawInterval]) -> TorusSet:
    merged: list[list[Fraction]] = []
    for lo, hi in pieces:
        if lo == hi:
            continue
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    if len(merged) == 1 and merged[0][0] == ZERO and merged[0][1] == ONE:
        return TorusSet.full()
    return TorusSet(tuple((lo, hi) for lo, hi in merged), _normalized=True)


def measure(a: TorusSet) -> Fraction:
    return a.measure


def component_count(a: TorusSet) -> int:
    return a.component_count


def scale_raw(raw: Iterable, q) -> list[RawInterval]:
    """Scale every raw interval by the positive rational q."""
    q = _as_fraction(q)
    if q <= 0:
        raise ValueError(f"scale factor must be positive, got {q}")
    return [(lo * q, hi * q) for lo, hi in _check_raw(raw)]


def translate_raw(raw: Iterable, t) -> list[RawInterval]:
    t = _as_fraction(t)
    return [(lo + t, hi + t) for lo, hi in _check_raw(raw)]


def _common_denominator(sets: Iterable[TorusSet]) -> int:
    d = 1
    for s in sets:
        for lo, hi in s.intervals:
            d = lcm(d, lo.denominator, hi.denominator)
    return d


def _scaled(a: TorusSet, den: int) -> list[tuple[int, int]]:
    return [
        (int(lo * den), int(hi * den))
        for lo, hi in a.intervals
    ]


def _from_scaled(pairs: list[tuple[int, int]], den: int) -> TorusSet:
    """Merge scaled integer intervals in [0, 2*den) and reduce mod den."""
    pieces: list[tuple[int, int]] = []
    for lo, hi in pairs:
        if hi - lo >= den:
            return TorusSet.full()
        if hi <= den:
            pieces.append((lo, hi))
        elif lo >= den:
            pieces.append((lo - den, hi - den))
        else:
            pieces.append((lo, den))
            pieces.append((0, hi - den))
    pieces.sort()
    merged: list[list[int]] = []
    for lo, hi in pieces:
        if lo == hi:
            continue
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    if len(merged) == 1 and merged[0][0] == 0 and merged[0][1] == den:
        return TorusSet.full()
    return TorusSet(
        tuple((Fraction(lo, den), Fraction(hi, den)) for lo, hi in merged),
        _normalized=True,
    )


def _minkowski_numpy(sa, sb, den: int) -> TorusSet:
    """Vectorised pairwise interval sums on the common integer grid.

    Only used when 2*den fits comfortably in int64.  Sums are reduced
    mod den and merged chunk by chunk to bound memory.
    """
    alo = np.array([p[0] for p in sa], dtype=np.int64)
    ahi = np.array([p[1] for p in sa], dtype=np.int64)
    blo = np.array([p[0] for p in sb], dtype=np.int64)
    bhi = np.array([p[1] for p in sb], dtype=np.int64)

    chunk = max(1, 4_000_000 // max(1, len(sb)))
    collected: list[list[int]] = []

    def merge_into(los: np.ndarray, his: np.ndarray) -> None:
        order = np.argsort(los, kind="stable")
        los = los[order]
        his = his[order]
        # running maximum of hi delimits components
        cummax = np.maximum.accumulate(his)
        starts = np.empty(len(los), dtype=bool)
        starts[0] = True
        starts[1:] = los[1:] > cummax[:-1]
        idx = np.flatnonzero(starts)
        ends = np.empty(len(idx), dtype=np.int64)
        ends[:-1] = idx[1:] - 1
        ends[-1] = len(los) - 1
        for s, e in zip(idx, ends):
            collected.append([int(los[s]), int(cummax[e])])

    for i in range(0, len(sa), chunk):
        los = (alo[i : i + chunk, None] + blo[None, :]).ravel()
        his = (ahi[i : i + chunk, None] + bhi[None, :]).ravel()
        # reduce mod den: values live in [0, 2*den); split wrapping pieces
        wrap = (los < den) & (his > den)
        inside = ~wrap
        shift = np.where(los >= den, den, 0)
        parts_lo = [los[inside] - shift[inside]]
        parts_hi = [his[inside] - shift[inside]]
        if wrap.any():
            parts_lo.append(los[wrap])
            parts_hi.append(np.full(int(wrap.sum()), den, dtype=np.int64))
            parts_lo.append(np.zeros(int(wrap.sum()), dtype=np.int64))
            parts_hi.append(his[wrap] - den)
        merge_into(np.concatenate(parts_lo), np.concatenate(parts_hi))

    return _from_scaled(sorted((lo, hi) for lo, hi in collected), den)


def minkowski_sum(a: TorusSet, b: TorusSet) -> TorusSet:
    """Exact Minkowski sum {x + y mod 1 : x in A, y in B}."""
    if a.is_empty() or b.is_empty():
        return TorusSet.empty()
    if a.is_full() or b.is_full():
        return TorusSet.full()
    den = _common_denominator((a, b))
    sa = _scaled(a, den)
    sb = _scaled(b, den)
    npairs = len(sa) * len(sb)
    if npairs >= _NUMPY_PAIR_THRESHOLD and 4 * den < 2**62:
        return _minkowski_numpy(sa, sb, den)
    sums = [
        (la + lb, ha + hb)
        for la, ha in sa
        for lb, hb in sb
    ]
    return _from_scaled(sums, den)


def iterated_sumset(a: TorusSet, k: int) -> TorusSet:
    """k-fold sumset kA; k = 1 returns A itself."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    acc = a
    done = 1
    while done < k:
        # doubling keeps the number of Minkowski products at O(log k)
        if 2 * done <= k:
            acc = minkowski_sum(acc, acc)
            done *= 2
        else:
            rest = iterated_sumset(a, k - done)
            return minkowski_sum(acc, rest)
        if acc.is_full():
            return acc
    return acc


def sumset_profile(a: TorusSet, kmax: int) -> list[Fraction]:
    """[measure(A), measure(2A), ..., measure(kmax*A)], exact."""
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    out = [a.measure]
    cur = a
    for _ in range(2, kmax + 1):
        cur = minkowski_sum(cur, a)
        out.append(cur.measure)
    return out


# -- serialization --------------------------------------------------------
#
# Two interchangeable text formats:
#   JSON: {"intervals": [["p/q", "r/s"], ...]}
#   plain: one "p/q r/s" line per interval
# Both round-trip exactly.


def set_to_json(a: TorusSet) -> str:
    obj = {"intervals": [[str(lo), str(hi)] for lo, hi in a.intervals]}
    return json.dumps(obj)


def set_to_lines(a: TorusSet) -> str:
    return "\n".join(f"{lo} {hi}" for lo, hi in a.intervals) + "\n"


def set_from_text(text: str) -> TorusSet:
    stripped = text.strip()
    if not stripped:
        return TorusSet.empty()
    if stripped.startswith("{"):
        obj = json.loads(stripped)
        if not isinstance(obj, dict) or "intervals" not in obj:
            raise ValueError("set file JSON must be {\"intervals\": [[lo, hi], ...]}")
        pairs = [(Fraction(lo), Fraction(hi)) for lo, hi in obj["intervals"]]
    else:
        pairs = []
        for line in stripped.splitlines():
            line = line.strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ValueError(f"bad interval line: {line!r}")
            pairs.append((Fraction(fields[0]), Fraction(fields[1])))
    return normalize(pairs)

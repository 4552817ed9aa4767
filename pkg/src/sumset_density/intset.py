"""Bit-vector truncations of integer sequences.

A FiniteIntegerSet represents A intersected with [0, N) for a fixed
horizon N; bit n of `bits` is set iff n belongs to A.  Because every
element is nonnegative, truncating commutes with adding: the truncated
sumset of truncations equals the truncation of the true sumset, so the
shifted-OR convolution below is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

# use the vectorised word-aligned OR once the plain big-int loop would
# move too many bytes
_NUMPY_SHIFT_THRESHOLD = 192
_NUMPY_WORD_THRESHOLD = 1 << 11


class FiniteIntegerSet:
    """Immutable subset of [0, horizon) backed by one big integer."""

    __slots__ = ("horizon", "bits")

    def __init__(self, horizon: int, bits: int = 0):
        if horizon <= 0:
            raise ValueError(f"horizon must be positive, got {horizon}")
        self.horizon = horizon
        self.bits = bits & ((1 << horizon) - 1)

    @staticmethod
    def from_members(members: Iterable[int], horizon: int) -> "FiniteIntegerSet":
        buf = bytearray((horizon + 7) // 8)
        for m in members:
            if 0 <= m < horizon:
                buf[m >> 3] |= 1 << (m & 7)
        return FiniteIntegerSet(horizon, int.from_bytes(buf, "little"))

    @staticmethod
    def from_flags(flags: Sequence[bool] | np.ndarray, horizon: int) -> "FiniteIntegerSet":
        arr = np.asarray(flags, dtype=bool)
        if len(arr) < horizon:
            arr = np.concatenate([arr, np.zeros(horizon - len(arr), dtype=bool)])
        packed = np.packbits(arr[:horizon], bitorder="little").tobytes()
        return FiniteIntegerSet(horizon, int.from_bytes(packed, "little"))

    @staticmethod
    def interval(lo: int, hi: int, horizon: int) -> "FiniteIntegerSet":
        """All integers in [lo, hi) clipped to the horizon."""
        lo = max(lo, 0)
        hi = min(hi, horizon)
        bits = ((1 << (hi - lo)) - 1) << lo if hi > lo else 0
        return FiniteIntegerSet(horizon, bits)

    def __contains__(self, n: int) -> bool:
        return 0 <= n < self.horizon and (self.bits >> n) & 1 == 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteIntegerSet)
            and self.horizon == other.horizon
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.horizon, self.bits))

    def __repr__(self) -> str:
        n = len(self)
        head = ", ".join(str(m) for m in self.members(limit=8))
        tail = ", ..." if n > 8 else ""
        return f"FiniteIntegerSet(horizon={self.horizon}, {{{head}{tail}}})"

    def members(self, limit: int | None = None) -> list[int]:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
            if limit is not None and len(out) >= limit:
                break
        return out

    def members_array(self) -> np.ndarray:
        nbytes = (self.horizon + 7) // 8
        raw = np.frombuffer(self.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
        flags = np.unpackbits(raw, bitorder="little")[: self.horizon]
        return np.flatnonzero(flags)

    def intersect(self, other: "FiniteIntegerSet") -> "FiniteIntegerSet":
        _check_same_horizon(self, other)
        return FiniteIntegerSet(self.horizon, self.bits & other.bits)

    def union(self, other: "FiniteIntegerSet") -> "FiniteIntegerSet":
        _check_same_horizon(self, other)
        return FiniteIntegerSet(self.horizon, self.bits | other.bits)

    def counting(self, t: int) -> int:
        """A(t) = |A intersect [1, t]|."""
        if t < 1:
            return 0
        t = min(t, self.horizon - 1)
        mask = ((1 << (t + 1)) - 1) & ~1
        return (self.bits & mask).bit_count()

    def count_window(self, n0: int, n1: int) -> int:
        """|A intersect (n0, n1]|."""
        return self.counting(n1) - self.counting(n0)


def _check_same_horizon(a: FiniteIntegerSet, b: FiniteIntegerSet) -> None:
    if a.horizon != b.horizon:
        raise ValueError(f"horizon mismatch: {a.horizon} != {b.horizon}")


def _shifted_or_numpy(shifts: list[int], bits: int, horizon: int) -> int:
    """OR of (bits << s) over s in shifts, exact, via word-aligned slices.

    Shifts with a common remainder mod 64 are accumulated word-aligned
    first and bit-shifted once at the end, which keeps the work per member
    at one vectorised slice-OR.
    """
    nwords = (horizon + 63) // 64 + 1
    base = np.frombuffer(
        bits.to_bytes(nwords * 8, "little"), dtype="<u8"
    )
    by_rem: dict[int, list[int]] = {}
    for s in shifts:
        by_rem.setdefault(s & 63, []).append(s >> 6)
    acc = np.zeros(nwords + 1, dtype="<u8")
    for rem, qs in by_rem.items():
        part = np.zeros(nwords, dtype="<u8")
        for q in qs:
            np.bitwise_or(part[q:], base[: nwords - q], out=part[q:])
        if rem == 0:
            np.bitwise_or(acc[:nwords], part, out=acc[:nwords])
        else:
            np.bitwise_or(
                acc[:nwords], np.left_shift(part, np.uint64(rem)), out=acc[:nwords]
            )
            np.bitwise_or(
                acc[1 : nwords + 1],
                np.right_shift(part, np.uint64(64 - rem)),
                out=acc[1 : nwords + 1],
            )
    out = int.from_bytes(acc.tobytes(), "little")
    return out & ((1 << horizon) - 1)


def sumset(a: FiniteIntegerSet, b: FiniteIntegerSet) -> FiniteIntegerSet:
    """(A + B) intersected with [0, N), exact."""
    _check_same_horizon(a, b)
    n = a.horizon
    if a.bits == 0 or b.bits == 0:
        return FiniteIntegerSet(n, 0)
    # shift by the members of the sparser set
    if len(a) <= len(b):
        shifter, base = a, b
    else:
        shifter, base = b, a
    members = shifter.members()
    nwords = (n + 63) // 64
    if len(members) >= _NUMPY_SHIFT_THRESHOLD and nwords >= _NUMPY_WORD_THRESHOLD:
        return FiniteIntegerSet(n, _shifted_or_numpy(members, base.bits, n))
    acc = 0
    for m in members:
        acc |= base.bits << m
    return FiniteIntegerSet(n, acc)


def iterated_sumset(a: FiniteIntegerSet, k: int) -> FiniteIntegerSet:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    acc = a
    for _ in range(k - 1):
        acc = sumset(acc, a)
    return acc


def counting(a: FiniteIntegerSet, t: int) -> int:
    return a.counting(t)


def tail_density(a: FiniteIntegerSet, n0: int, n1: int) -> Fraction:
    """(A(n1) - A(n0)) / (n1 - n0), the exact density over (n0, n1]."""
    if not (0 <= n0 < n1 <= a.horizon):
        raise ValueError(f"bad window [{n0}, {n1}] for horizon {a.horizon}")
    return Fraction(a.count_window(n0, n1), n1 - n0)


def representation_count(a: FiniteIntegerSet, k: int, n: int) -> int:
    """Number of k-element subsets of A with sum n (distinct members)."""
    if n >= a.horizon:
        raise ValueError(f"n={n} outside horizon {a.horizon}")
    if k < 1:
        raise ValueError("k must be >= 1")
    # table[j][s] = number of j-subsets of the members seen so far with sum s
    table = [[0] * (n + 1) for _ in range(k + 1)]
    table[0][0] = 1
    for m in a.members():
        if m > n:
            break
        for j in range(min(k, 1 << 30), 0, -1):
            row, prev = table[j], table[j - 1]
            for s in range(n, m - 1, -1):
                if prev[s - m]:
                    row[s] += prev[s - m]
    return table[k][n]


# -- serialization ---------------------------------------------------------
#
# Text format, two variants:
#   "horizon N" then one member per line
#   "horizon N" / "bitmap" / hex digits of the little-endian bit vector


def intset_to_text(a: FiniteIntegerSet, bitmap: bool = False) -> str:
    if bitmap:
        nbytes = (a.horizon + 7) // 8
        hexstr = a.bits.to_bytes(nbytes, "little").hex()
        return f"horizon {a.horizon}\nbitmap\n{hexstr}\n"
    lines = [f"horizon {a.horizon}"]
    lines.extend(str(m) for m in a.members())
    return "\n".join(lines) + "\n"


def intset_from_text(text: str) -> FiniteIntegerSet:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("horizon"):
        raise ValueError("integer-set file must start with 'horizon N'")
    try:
        horizon = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad horizon line: {lines[0]!r}") from exc
    if len(lines) >= 2 and lines[1] == "bitmap":
        raw = bytes.fromhex("".join(lines[2:]))
        return FiniteIntegerSet(horizon, int.from_bytes(raw, "little"))
    return FiniteIntegerSet.from_members((int(x) for x in lines[1:]), horizon)

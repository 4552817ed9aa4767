import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from sumset_density.intset import (
    FiniteIntegerSet,
    counting,
    intset_from_text,
    intset_to_text,
    iterated_sumset,
    representation_count,
    sumset,
    tail_density,
)

F = Fraction


def brute_sumset(a, b, horizon):
    out = set()
    for x in a:
        for y in b:
            if x + y < horizon:
                out.add(x + y)
    return out


def brute_iterated(members, k, horizon):
    out = set()
    for combo in combinations_with_replacement(sorted(members), k):
        s = sum(combo)
        if s < horizon:
            out.add(s)
    return out


def test_sumset_examples():
    a = FiniteIntegerSet.from_members([0, 1], 10)
    assert sumset(a, a).members() == [0, 1, 2]

    b = FiniteIntegerSet.from_members([1, 3, 5, 6, 8, 10], 13)
    assert iterated_sumset(b, 2).members() == [2, 4, 6, 7, 8, 9, 10, 11, 12]

    empty = FiniteIntegerSet(13)
    assert sumset(empty, b).members() == []


def test_sumset_horizon_mismatch():
    with pytest.raises(ValueError):
        sumset(FiniteIntegerSet(5), FiniteIntegerSet(6))


def test_truncation_exactness_random():
    rng = random.Random(424242)
    for _ in range(25):
        horizon = rng.randint(50, 2000)
        members = rng.sample(range(horizon), rng.randint(0, min(40, horizon)))
        a = FiniteIntegerSet.from_members(members, horizon)
        for k in (2, 3):
            got = set(iterated_sumset(a, k).members())
            assert got == brute_iterated(members, k, horizon)


def test_numpy_or_path_matches_scalar():
    import sumset_density.intset as m

    rng = random.Random(7)
    horizon = 400_000
    members = sorted(rng.sample(range(horizon // 2), 500))
    a = FiniteIntegerSet.from_members(members, horizon)
    b = FiniteIntegerSet.from_members(rng.sample(range(horizon), 3000), horizon)
    old = m._NUMPY_SHIFT_THRESHOLD
    try:
        m._NUMPY_SHIFT_THRESHOLD = 10**9
        slow = sumset(a, b)
    finally:
        m._NUMPY_SHIFT_THRESHOLD = old
    fast = sumset(a, b)
    assert slow == fast


def test_counting_and_tail_density():
    full = FiniteIntegerSet.interval(1, 101, 200)
    assert counting(full, 100) == 100

    evens = FiniteIntegerSet.from_members(range(0, 100, 2), 100)
    # window (0, 100]: member 0 is excluded, so 49 of 100
    assert tail_density(evens, 0, 100) == F(49, 100)

    a = FiniteIntegerSet.from_members([1, 3, 5, 6, 8, 10], 11)
    assert tail_density(a, 0, 10) == F(3, 5)

    with pytest.raises(ValueError):
        tail_density(a, 5, 5)


def test_representation_count():
    a = FiniteIntegerSet.from_members([1, 2, 3], 10)
    assert representation_count(a, 2, 5) == 1
    assert representation_count(a, 2, 2) == 0  # distinctness
    b = FiniteIntegerSet.from_members([1, 2, 3, 4], 10)
    assert representation_count(b, 3, 9) == 1
    assert representation_count(b, 2, 5) == 2  # 1+4 and 2+3


def test_representation_count_matches_sumset_support():
    rng = random.Random(11)
    members = rng.sample(range(1, 60), 12)
    a = FiniteIntegerSet.from_members(members, 200)
    two = sumset(a, a)
    for n in range(2, 120):
        reps = representation_count(a, 2, n)
        if reps > 0:
            assert n in two
        # distinct-pair representations miss only the doubled points
        if n in two and reps == 0:
            assert n % 2 == 0 and n // 2 in a


def test_members_array_matches_members():
    rng = random.Random(3)
    a = FiniteIntegerSet.from_members(rng.sample(range(10_000), 700), 10_000)
    assert list(a.members_array()) == a.members()


def test_serialization_round_trip():
    rng = random.Random(5)
    a = FiniteIntegerSet.from_members(rng.sample(range(5000), 300), 5000)
    assert intset_from_text(intset_to_text(a)) == a
    assert intset_from_text(intset_to_text(a, bitmap=True)) == a
    with pytest.raises(ValueError):
        intset_from_text("1 2 3\n")

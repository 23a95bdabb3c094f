"""Shared generators for randomized suites.

Everything is drawn from seeded `random.Random` instances so failures
reproduce; hypothesis strategies live in the test modules that use them.
"""

from __future__ import annotations

import random

from genco import (
    DominateSet,
    EventuallyPeriodicSeq,
    Evens,
    ExplicitPeriodic,
    FloorRule,
    HechlerCondition,
    Primes,
    SelfCode,
    StemHitsSet,
    StemLengthSet,
    StemPattern,
    UserStemsSet,
)


def random_condition(rng: random.Random, max_stem=4, max_entry=16, max_atoms=3):
    stem = tuple(rng.randrange(max_entry + 1) for _ in range(rng.randrange(max_stem + 1)))
    floor = None
    if rng.random() < 0.4:
        table = tuple(rng.randrange(5) for _ in range(rng.randrange(3)))
        floor = FloorRule(table, rng.randrange(2), rng.randrange(4))
    excl: dict = {}
    for _ in range(rng.randrange(max_atoms + 1)):
        key = stem + tuple(
            rng.randrange(max_entry + 1) for _ in range(rng.randrange(3))
        )
        excl.setdefault(key, set()).update(
            rng.randrange(max_entry + 1) for _ in range(rng.randrange(1, 4))
        )
    return HechlerCondition(stem, excl, floor)


def random_seq(rng: random.Random, max_entry=5):
    prefix = tuple(rng.randrange(max_entry + 1) for _ in range(rng.randrange(6)))
    cycle = tuple(rng.randrange(max_entry + 1) for _ in range(rng.randrange(1, 4)))
    return EventuallyPeriodicSeq(prefix, cycle)


def random_bit_seq(rng: random.Random):
    prefix = tuple(rng.randrange(2) for _ in range(rng.randrange(6)))
    cycle = tuple(rng.randrange(2) for _ in range(rng.randrange(1, 4)))
    return EventuallyPeriodicSeq(prefix, cycle)


def random_help(rng: random.Random, kinds=("evens", "primes", "selfcode", "explicit")):
    kind = rng.choice(list(kinds))
    if kind == "evens":
        return Evens()
    if kind == "primes":
        return Primes()
    if kind == "selfcode":
        return SelfCode(random_seq(rng, max_entry=3))
    cycle = [rng.randrange(2) for _ in range(rng.randrange(2, 6))]
    if 1 not in cycle:
        cycle[rng.randrange(len(cycle))] = 1
    if 0 not in cycle:
        cycle[rng.randrange(len(cycle))] = 0
    prefix = [rng.randrange(2) for _ in range(rng.randrange(5))]
    return ExplicitPeriodic(prefix, cycle)


def random_dense(rng: random.Random):
    t = rng.choice(["stem_length", "stem_hits", "dominate", "user_stems"])
    if t == "stem_length":
        return StemLengthSet(rng.randrange(5))
    if t == "stem_hits":
        return StemHitsSet(rng.randrange(11))
    if t == "dominate":
        table = tuple(rng.randrange(6) for _ in range(rng.randrange(3)))
        return DominateSet(FloorRule(table, rng.randrange(2), rng.randrange(6)))
    patterns = []
    for _ in range(rng.randrange(1, 3)):
        if rng.random() < 0.5:
            patterns.append(StemPattern(min_len=rng.randrange(1, 4)))
        else:
            hits = ((rng.randrange(9), rng.randrange(1, 3)),)
            patterns.append(StemPattern(min_len=rng.randrange(3), hits=hits))
    return UserStemsSet(patterns)


def random_roster(rng: random.Random, max_size=8):
    return [random_dense(rng) for _ in range(rng.randrange(1, max_size + 1))]


def node_in(rng: random.Random, T: HechlerCondition, depth: int, spread: int = 6):
    """A node of T: the stem plus `depth` random legal steps."""
    v = T.stem
    for _ in range(depth):
        choice = rng.randrange(spread)
        skip: list[int] = []
        for _ in range(choice):
            skip.append(T.least_step(v, skip))
        v = v + (T.least_step(v, skip),)
    return v

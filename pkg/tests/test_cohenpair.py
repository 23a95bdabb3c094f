"""Pair coding over binary strings."""

from __future__ import annotations

import random

import pytest

from genco import (
    ContainsSet,
    DenseContractError,
    EndsWithSet,
    EventuallyPeriodicSeq,
    MinLenSet,
    build_pair,
    cohen_from_config,
    decode_pair,
    parse_pair_transcript,
    verify_pair,
    write_pair_transcript,
)
from genco.cohenpair import CohenDense, PairTranscript
from conftest import random_bit_seq


def random_cohen_roster(rng: random.Random, max_size=8):
    roster = []
    for _ in range(rng.randrange(1, max_size + 1)):
        t = rng.choice(["contains", "min_len", "ends_with"])
        if t == "contains":
            w = "".join(str(rng.randrange(2)) for _ in range(rng.randrange(1, 5)))
            roster.append(ContainsSet(w))
        elif t == "min_len":
            roster.append(MinLenSet(rng.randrange(1, 40)))
        else:
            w = "".join(str(rng.randrange(2)) for _ in range(rng.randrange(1, 4)))
            roster.append(EndsWithSet(w))
    return roster


class TestBuild:
    def test_markers_only(self):
        c1, c2, _ = build_pair([], [], EventuallyPeriodicSeq((1, 0, 1), (0,)), 3)
        assert c1 == (1, 1, 1) and c2 == (1, 0, 1)

    def test_garbage_region(self):
        c1, c2, _ = build_pair(
            [ContainsSet("00")], [], EventuallyPeriodicSeq((1,), (0,)), 1
        )
        assert c1 == (0, 0, 1) and c2 == (0, 0, 1)

    def test_zero_stages(self):
        c1, c2, t = build_pair([], [], EventuallyPeriodicSeq((1,), (0,)), 0)
        assert c1 == () and c2 == () and t.snapshots == ()

    def test_non_bit_target_rejected(self):
        with pytest.raises(ValueError):
            build_pair([], [], EventuallyPeriodicSeq((2,), (0,)), 1)

    def test_broken_oracle_reported(self):
        class Broken(CohenDense):
            def member(self, p):
                return False

            def extend(self, p):
                return p + (0,)

            def config(self):
                return {"type": "min_len", "n": 0}

        with pytest.raises(DenseContractError) as info:
            build_pair([Broken()], [], EventuallyPeriodicSeq((1,), (0,)), 1)
        assert info.value.stage == 0

    def test_random_runs_recover_target(self):
        rng = random.Random(31337)
        for _ in range(25):
            r1 = random_cohen_roster(rng, 4)
            r2 = random_cohen_roster(rng, 4)
            x = random_bit_seq(rng)
            stages = 16
            c1, c2, t = build_pair(r1, r2, x, stages)
            ones = sum(c1)
            assert ones >= stages  # one marker per stage
            assert decode_pair(c1, c2, ones) == x.values(ones)
            report = verify_pair(r1, r2, x, t)
            assert report.ok, report.failures()

    def test_deterministic(self):
        rng1, rng2 = random.Random(9), random.Random(9)
        for _ in range(10):
            a = build_pair(random_cohen_roster(rng1), [], random_bit_seq(rng1), 8)[2]
            b = build_pair(random_cohen_roster(rng2), [], random_bit_seq(rng2), 8)[2]
            assert write_pair_transcript(a) == write_pair_transcript(b)


class TestDecodePair:
    def test_examples(self):
        assert decode_pair((1, 1, 1), (1, 0, 1), 3) == (1, 0, 1)
        assert decode_pair((0, 0, 1), (0, 0, 1), 1) == (1,)
        assert decode_pair((0, 0, 0), (1, 1, 1), 0) == ()

    def test_insufficient_ones(self):
        with pytest.raises(ValueError):
            decode_pair((0, 1), (1, 1), 2)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            decode_pair((0, 0, 1), (1,), 1)


class TestTranscript:
    def test_round_trip(self):
        rng = random.Random(3)
        for _ in range(10):
            t = build_pair(
                random_cohen_roster(rng, 3),
                random_cohen_roster(rng, 3),
                random_bit_seq(rng),
                6,
            )[2]
            assert parse_pair_transcript(write_pair_transcript(t)) == t

    def test_verifier_catches_flipped_coded_bit(self):
        x = EventuallyPeriodicSeq((1, 0, 1), (0,))
        _, _, t = build_pair([], [], x, 3)
        # flip c2 at a 1-position of c1, coherently with the snapshot
        snaps = list(t.snapshots)
        last = snaps[-1]
        c2 = last.q[:-1] + (1 - last.q[-1],)
        snaps[-1] = type(last)(last.index, last.p, c2)
        bad = PairTranscript(
            t.roster1_hash, t.roster2_hash, t.target_config, t.stages,
            tuple(snaps), t.c1, c2,
        )
        report = verify_pair([], [], x, bad)
        assert not report.ok
        assert any(c.check in ("ones_coded", "decode") for c in report.failures())

    def test_verifier_catches_uncoded_garbage_one(self):
        # a garbage-region 1 in c1 whose c2 position holds 0 while the
        # pending target bit is 1
        x = EventuallyPeriodicSeq((1, 1, 1), (1,))
        c1, c2, t = build_pair([ContainsSet("0")], [], x, 1)
        assert c1[0] == 0 and c2[0] == 0
        snaps = [type(s)(s.index, (1,) + s.p[1:], s.q) for s in t.snapshots]
        bad = PairTranscript(
            t.roster1_hash, t.roster2_hash, t.target_config, t.stages,
            tuple(snaps), (1,) + c1[1:], c2,
        )
        report = verify_pair([ContainsSet("0")], [], x, bad)
        assert not report.ok
        assert any(c.check == "ones_coded" for c in report.failures())

    def test_verifier_catches_unmet_roster(self):
        x = EventuallyPeriodicSeq((1,), (0,))
        r1 = [ContainsSet("0011"), ContainsSet("1100")]
        _, _, t = build_pair(r1, [], x, 1)  # only the first set is scheduled
        report = verify_pair(r1, [], x, t)
        assert not report.ok
        assert any(c.check == "coverage.roster1" for c in report.failures())


class TestConfigs:
    def test_round_trip(self):
        for cfg in (
            {"type": "contains", "w": "001"},
            {"type": "min_len", "n": 16},
            {"type": "ends_with", "w": "1"},
        ):
            assert cohen_from_config(cfg).config() == cfg

    def test_membership_semantics(self):
        assert ContainsSet("01").member((1, 0, 1))
        assert not ContainsSet("01").member((1, 1))
        assert MinLenSet(2).member((0, 0))
        assert EndsWithSet("10").member((0, 1, 0))
        assert not EndsWithSet("10").member((0, 0, 1))

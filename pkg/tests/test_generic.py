"""The interleaved builder, transcripts, and the independent verifier."""

from __future__ import annotations

import random

import pytest

from genco import (
    EventuallyPeriodicSeq,
    Evens,
    FloorRule,
    DominateSet,
    MalformedTranscript,
    StemHitsSet,
    StemLengthSet,
    Verdict,
    build_coded_generic,
    build_plain_generic,
    decode,
    extends_A,
    extract_g,
    member,
    parse_transcript,
    verify_transcript,
    write_transcript,
)
from genco.conditions import FULL_TREE
from conftest import random_help, random_roster, random_seq
from mutations import ALL_MUTATIONS, apply_mutation

EVENS = Evens()
ONES = EventuallyPeriodicSeq((), (1,))


class TestBuild:
    def test_stem_length_trace(self):
        # hand trace with least-choice rules: first meet walks to the
        # least odd stem of length 1; each code step appends the least
        # even with label 1 (which is 2); the second meet is already met
        t = build_coded_generic([StemLengthSet(1)], EVENS, ONES, 2)
        assert t.g_prefix == (1, 2, 2)
        assert decode(EVENS, t.g_prefix) == (1, 1)

    def test_dominate_trace(self):
        # prune to steps > 4, then the least label-0 even above the
        # floor: members with label 0 are 0,4,8,... so 8
        t = build_coded_generic(
            [DominateSet(FloorRule((), 0, 4))], EVENS, EventuallyPeriodicSeq((), (0,)), 1
        )
        assert t.g_prefix == (8,)

    def test_zero_steps(self):
        t = build_coded_generic([StemLengthSet(1)], EVENS, ONES, 0)
        assert t.g_prefix == () and t.entries == ()

    def test_plain_traces(self):
        assert build_plain_generic([StemLengthSet(2)], 1).g_prefix == (0, 0)
        assert build_plain_generic([StemHitsSet(3)], 1).g_prefix == (3,)
        assert build_plain_generic([StemHitsSet(3)], 0).g_prefix == ()

    def test_alternation(self):
        # meets extend silently; code steps deliberately hit the help set
        rng = random.Random(8)
        for _ in range(20):
            roster = random_roster(rng, 4)
            A = random_help(rng)
            x = random_seq(rng)
            t = build_coded_generic(roster, A, x, 6)
            prev = FULL_TREE
            for e in t.entries:
                if e.kind == "MEET":
                    assert extends_A(e.condition, prev, A).verdict is Verdict.YES
                else:
                    ans = extends_A(e.condition, prev, A)
                    assert ans.verdict is Verdict.NO and ans.reason == "stem-avoidance"
                prev = e.condition

    def test_end_to_end_random(self):
        rng = random.Random(4096)
        for _ in range(25):
            roster = random_roster(rng, 6)
            A = random_help(rng)
            x = random_seq(rng)
            steps = 16
            t = build_coded_generic(roster, A, x, steps)
            assert decode(A, t.g_prefix) == x.values(steps)
            met = set()
            for e in t.entries:
                if e.kind == "MEET" and member(roster[e.index], e.condition) is Verdict.YES:
                    met.add(e.index)
            assert met == set(range(len(roster)))

    def test_empty_roster_code_only(self):
        t = build_coded_generic([], EVENS, ONES, 3)
        assert decode(EVENS, t.g_prefix) == (1, 1, 1)
        assert all(e.kind == "CODE" for e in t.entries)


class TestTranscriptText:
    def test_round_trip(self):
        rng = random.Random(5)
        for _ in range(10):
            t = build_coded_generic(random_roster(rng, 3), random_help(rng), random_seq(rng), 4)
            assert parse_transcript(write_transcript(t)) == t

    def test_deterministic_bytes(self):
        rng1, rng2 = random.Random(42), random.Random(42)
        for _ in range(10):
            a = build_coded_generic(random_roster(rng1, 4), random_help(rng1), random_seq(rng1), 6)
            b = build_coded_generic(random_roster(rng2, 4), random_help(rng2), random_seq(rng2), 6)
            assert write_transcript(a) == write_transcript(b)

    def test_extract_g(self):
        t = build_coded_generic([StemLengthSet(1)], EVENS, ONES, 2)
        assert extract_g(t) == t.g_prefix
        stale = type(t)(
            t.roster_hash, t.help_config, t.target_config, t.steps, t.entries, (9, 9)
        )
        with pytest.raises(MalformedTranscript):
            extract_g(stale)

    def test_malformed_text_rejected(self):
        good = write_transcript(build_coded_generic([StemLengthSet(1)], EVENS, ONES, 1))
        for bad in ("", "ROSTER x\n", good.replace("STEPS", "STEP"), good + "EXTRA\n"):
            with pytest.raises(MalformedTranscript):
                parse_transcript(bad)


class TestVerify:
    def test_builder_output_verifies(self):
        rng = random.Random(77)
        for _ in range(20):
            roster = random_roster(rng, 5)
            A = random_help(rng)
            x = random_seq(rng)
            t = build_coded_generic(roster, A, x, 8)
            report = verify_transcript(roster, A, x, t)
            assert report.ok, report.failures()

    def test_plain_output_verifies(self):
        rng = random.Random(78)
        for _ in range(10):
            roster = random_roster(rng, 5)
            t = build_plain_generic(roster, 12)
            report = verify_transcript(roster, None, None, t)
            assert report.ok, report.failures()

    def test_wrong_roster_fails(self):
        t = build_coded_generic([StemLengthSet(1)], EVENS, ONES, 2)
        report = verify_transcript([StemLengthSet(2)], EVENS, ONES, t)
        assert not report.ok

    def test_wrong_target_fails(self):
        t = build_coded_generic([StemLengthSet(1)], EVENS, ONES, 2)
        report = verify_transcript(
            [StemLengthSet(1)], EVENS, EventuallyPeriodicSeq((), (3,)), t
        )
        assert not report.ok

    def test_every_mutation_caught(self):
        rng = random.Random(2718)
        for _ in range(12):
            roster = [StemLengthSet(rng.randrange(2, 5)), StemHitsSet(rng.randrange(3, 9))]
            A = random_help(rng)
            x = random_seq(rng)
            t = build_coded_generic(roster, A, x, 5)
            text = write_transcript(t)
            for name in ALL_MUTATIONS:
                mutated = apply_mutation(name, text, A)
                assert mutated != text, name
                report = verify_transcript(roster, A, x, parse_transcript(mutated))
                assert not report.ok, f"mutation {name} slipped through"

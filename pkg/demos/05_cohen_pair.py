"""Coding a bit sequence into a pair of roster-generic binary strings.

Each string meets its own roster of dense sets; neither alone betrays
the target.  Wherever the first string holds a 1, the second holds the
next target bit, so the pair decodes by a positional read.
Run with:  python3 demos/05_cohen_pair.py
"""

from genco import (
    ContainsSet,
    EndsWithSet,
    EventuallyPeriodicSeq,
    MinLenSet,
    build_pair,
    decode_pair,
    verify_pair,
    write_pair_transcript,
)

roster1 = [ContainsSet("00"), EndsWithSet("1")]
roster2 = [MinLenSet(10)]
x = EventuallyPeriodicSeq(prefix=(1, 0, 1, 1), cycle=(0, 1))

c1, c2, t = build_pair(roster1, roster2, x, stages=6)
print(write_pair_transcript(t))

ones = sum(c1)
print("ones in c1:", ones, "(at least one per stage)")
print("decoded   :", decode_pair(c1, c2, ones))
print("target    :", x.values(ones))

report = verify_pair(roster1, roster2, x, t)
print("verifier  :", "PASS" if report.ok else "FAIL")

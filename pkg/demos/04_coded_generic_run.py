"""A full coded run: build, decode, verify, tamper.

The builder alternates roster meets (stem entries avoid the help set)
with coding steps (one help-set member per target value).  The decoder
needs only the final prefix and the help set.  The verifier re-checks
the transcript from scratch and catches any tampering.
Run with:  python3 demos/04_coded_generic_run.py
"""

from genco import (
    DominateSet,
    EventuallyPeriodicSeq,
    Evens,
    FloorRule,
    StemHitsSet,
    StemLengthSet,
    build_coded_generic,
    decode,
    parse_transcript,
    verify_transcript,
    write_transcript,
)

roster = [StemLengthSet(2), DominateSet(FloorRule((), 0, 3)), StemHitsSet(6)]
A = Evens()
x = EventuallyPeriodicSeq(prefix=(3, 1), cycle=(0, 2))

t = build_coded_generic(roster, A, x, steps=5)
print("transcript:")
print(write_transcript(t))
print("g prefix:", t.g_prefix)
print("target  :", x.values(5))
print("decoded :", decode(A, t.g_prefix))

report = verify_transcript(roster, A, x, t)
print("\nverifier on the honest transcript:", "PASS" if report.ok else "FAIL")

text = write_transcript(t)
tampered = text[: text.rindex("G [")] + "G [9]\n"  # corrupt the footer
report = verify_transcript(roster, A, x, parse_transcript(tampered))
print("verifier on a stale footer:", "PASS" if report.ok else "FAIL")
for c in report.failures():
    print("   failed:", c.check, "at", c.locus)

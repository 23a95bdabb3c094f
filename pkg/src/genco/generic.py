"""Interleaved construction of a coded roster-generic prefix.

The builder alternates two moves starting from the full tree: meet the
next dense set of the (cycled) roster while keeping every new stem entry
outside the help set A, then extend the stem by one member of A whose
label is the next target value.  The union of the stems is the prefix
g; reading g's labels at its A-positions returns exactly the target
prefix.  Every move is logged with the full resulting condition, so a
transcript can be re-checked from scratch without re-running the
builder.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coding import EventuallyPeriodicSeq, HelpSet, decode, eta
from .conditions import (
    FULL_TREE,
    HechlerCondition,
    Verdict,
    extends,
    extends_bounded,
    parse_condition,
    render_condition,
    stem_extends_avoiding,
)
from .densesets import DEFAULT_FUEL, DenseSet, code_step, extend_in_A
from .errors import FuelExhausted, MalformedTranscript
from .serialize import canonical_json, parse_seq, render_seq, roster_hash

MEET = "MEET"
CODE = "CODE"


@dataclass(frozen=True)
class TranscriptEntry:
    kind: str  # MEET or CODE
    index: int  # roster index for MEET, code counter for CODE
    condition: HechlerCondition
    z: int | None = None  # the coded stem entry (CODE only)


@dataclass(frozen=True)
class RunTranscript:
    roster_hash: str
    help_config: dict | None
    target_config: dict | None
    steps: int
    entries: tuple[TranscriptEntry, ...]
    g_prefix: tuple[int, ...]


@dataclass(frozen=True)
class CheckResult:
    check: str
    locus: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "ok" if c.ok else "FAIL"
            detail = f" {c.detail}" if c.detail else ""
            out.append(f"{status} {c.check} @{c.locus}{detail}")
        out.append("PASS" if self.ok else "FAIL")
        return out


def _roster_configs(roster) -> list[dict]:
    return [D.config() for D in roster]


def build_coded_generic(
    roster: list[DenseSet],
    A: HelpSet,
    x: EventuallyPeriodicSeq,
    steps: int,
    fuel: int = DEFAULT_FUEL,
) -> RunTranscript:
    """Alternate roster meets (avoiding A) with coding steps for the
    first `steps` target values; the roster is cycled when shorter than
    the run."""
    if steps < 0:
        raise ValueError("steps must be a natural")
    T = FULL_TREE
    entries: list[TranscriptEntry] = []
    for i in range(steps):
        if roster:
            D = roster[i % len(roster)]
            try:
                T = extend_in_A(T, D, A, fuel)
            except FuelExhausted as exc:
                exc.step = i
                raise
            entries.append(TranscriptEntry(MEET, i % len(roster), T))
        try:
            T = code_step(T, A, x.value(i), fuel)
        except FuelExhausted as exc:
            exc.step = i
            raise
        entries.append(TranscriptEntry(CODE, i, T, z=T.stem[-1]))
    return RunTranscript(
        roster_hash=roster_hash(_roster_configs(roster)),
        help_config=A.config(),
        target_config=x.config(),
        steps=steps,
        entries=tuple(entries),
        g_prefix=T.stem,
    )


def build_plain_generic(
    roster: list[DenseSet], steps: int, fuel: int = DEFAULT_FUEL
) -> RunTranscript:
    """Roster meets only, with no help set: the avoidance clause is
    vacuous and nothing is coded."""
    if steps < 0:
        raise ValueError("steps must be a natural")
    T = FULL_TREE
    entries: list[TranscriptEntry] = []
    for i in range(steps):
        if not roster:
            break
        D = roster[i % len(roster)]
        try:
            T = extend_in_A(T, D, None, fuel)
        except FuelExhausted as exc:
            exc.step = i
            raise
        entries.append(TranscriptEntry(MEET, i % len(roster), T))
    return RunTranscript(
        roster_hash=roster_hash(_roster_configs(roster)),
        help_config=None,
        target_config=None,
        steps=steps,
        entries=tuple(entries),
        g_prefix=T.stem,
    )


def extract_g(t: RunTranscript) -> tuple[int, ...]:
    """The final condition's stem; must agree with the footer."""
    final = t.entries[-1].condition.stem if t.entries else ()
    if final != t.g_prefix:
        raise MalformedTranscript(
            f"footer {t.g_prefix} does not match final stem {final}"
        )
    return t.g_prefix


def write_transcript(t: RunTranscript) -> str:
    lines = [
        f"ROSTER {t.roster_hash}",
        f"HELP {canonical_json(t.help_config) if t.help_config is not None else 'null'}",
        f"TARGET {canonical_json(t.target_config) if t.target_config is not None else 'null'}",
        f"STEPS {t.steps}",
    ]
    for e in t.entries:
        if e.kind == MEET:
            lines.append(f"MEET {e.index} {render_condition(e.condition)}")
        else:
            lines.append(f"CODE {e.index} {e.z} {render_condition(e.condition)}")
    lines.append(f"G {render_seq(t.g_prefix)}")
    return "\n".join(lines) + "\n"


def parse_transcript(text: str) -> RunTranscript:
    import json

    lines = text.splitlines()
    if len(lines) < 5:
        raise MalformedTranscript("transcript too short")

    def header(idx: int, tag: str) -> str:
        if not lines[idx].startswith(tag + " "):
            raise MalformedTranscript(f"expected {tag} on line {idx + 1}")
        return lines[idx][len(tag) + 1 :]

    rhash = header(0, "ROSTER")
    help_text = header(1, "HELP")
    target_text = header(2, "TARGET")
    steps_text = header(3, "STEPS")
    try:
        help_cfg = None if help_text == "null" else json.loads(help_text)
        target_cfg = None if target_text == "null" else json.loads(target_text)
        steps = int(steps_text)
    except ValueError as exc:
        raise MalformedTranscript(f"bad header: {exc}") from exc
    entries: list[TranscriptEntry] = []
    if not lines[-1].startswith("G "):
        raise MalformedTranscript("missing footer")
    try:
        g = parse_seq(lines[-1][2:])
        for i, line in enumerate(lines[4:-1], start=5):
            parts = line.split(" ")
            if parts[0] == MEET and len(parts) == 3:
                entries.append(
                    TranscriptEntry(MEET, int(parts[1]), parse_condition(parts[2]))
                )
            elif parts[0] == CODE and len(parts) == 4:
                entries.append(
                    TranscriptEntry(
                        CODE, int(parts[1]), parse_condition(parts[3]), z=int(parts[2])
                    )
                )
            else:
                raise MalformedTranscript(f"bad step on line {i}")
    except ValueError as exc:
        raise MalformedTranscript(f"bad step line: {exc}") from exc
    return RunTranscript(rhash, help_cfg, target_cfg, steps, tuple(entries), g)


def verify_transcript(
    roster: list[DenseSet],
    A: HelpSet | None,
    x: EventuallyPeriodicSeq | None,
    t: RunTranscript,
    depth: int = 6,
    width: int = 64,
) -> VerificationReport:
    """Re-check a transcript against the given roster, help set, and
    target without re-running the builder.

    Checks: header consistency; step structure; the descending chain
    (syntactic inclusion with a bounded exhaustive fallback); dense-set
    membership and stem avoidance at every MEET; coded value, membership
    and label at every CODE; footer; and the decoded prefix.
    """
    checks: list[CheckResult] = []

    def add(check: str, locus: str, ok: bool, detail: str = ""):
        checks.append(CheckResult(check, locus, ok, "" if ok else detail))

    expected_hash = roster_hash(_roster_configs(roster))
    add("header.roster", "-", t.roster_hash == expected_hash,
        f"hash {t.roster_hash} != roster {expected_hash}")
    help_cfg = A.config() if A is not None else None
    add("header.help", "-", t.help_config == help_cfg,
        f"transcript help {t.help_config} != {help_cfg}")
    target_cfg = x.config() if x is not None else None
    add("header.target", "-", t.target_config == target_cfg,
        f"transcript target {t.target_config} != {target_cfg}")

    # structure: per step, an optional MEET (when the roster is nonempty)
    # followed by a CODE when coding is on
    expected: list[tuple[str, int]] = []
    for i in range(t.steps):
        if roster:
            expected.append((MEET, i % len(roster)))
        if A is not None:
            expected.append((CODE, i))
    got = [(e.kind, e.index) for e in t.entries]
    add("structure", "-", got == expected,
        f"entries {got[:6]}... do not match the declared step count/mode")

    prev = FULL_TREE
    code_count = 0
    for pos, e in enumerate(t.entries):
        locus = f"entry {pos}"
        ans = extends(e.condition, prev)
        if ans.verdict is Verdict.UNKNOWN:
            chain_ok = extends_bounded(e.condition, prev, depth, width) is None
        else:
            chain_ok = ans.verdict is Verdict.YES
        add("chain.extends", locus, chain_ok, f"witness {ans.witness}")
        if e.kind == MEET:
            if roster:
                D = roster[e.index % len(roster)]
                add("meet.member", locus, D.member(e.condition) is Verdict.YES,
                    f"condition not a member of dense set {e.index}")
            avoid = stem_extends_avoiding(e.condition.stem, prev.stem, A)
            add("meet.avoid", locus, avoid,
                "new stem entries hit the help set")
        else:
            stem, pstem = e.condition.stem, prev.stem
            grew = len(stem) == len(pstem) + 1 and stem[:-1] == pstem
            add("code.step", locus, grew and e.z == (stem[-1] if grew else None),
                f"stem did not grow by exactly the recorded value {e.z}")
            if A is not None and x is not None and grew:
                z = stem[-1]
                ok = A.member(z) and eta(A, z) == x.value(e.index)
                add("code.value", locus, ok,
                    f"z={z} not a member with label {x.value(e.index)}")
            code_count += 1
        prev = e.condition

    add("footer.g", "-", t.g_prefix == prev.stem,
        f"footer {t.g_prefix} != final stem {prev.stem}")
    if A is not None and x is not None:
        decoded = decode(A, t.g_prefix)
        want = x.values(code_count)
        add("decode.prefix", "-", decoded[: len(want)] == want,
            f"decoded {decoded[:len(want)]} != target {want}")
    return VerificationReport(tuple(checks))

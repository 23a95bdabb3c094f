"""Finite symbolic conditions over the tree of natural-number sequences.

A condition describes an infinite tree T of finite sequences ("nodes"):
every node comparable with the stem belongs to T unless a constraint
removes it.  Constraints live only at or above the stem and come in two
finite shapes, so every node at or above the stem keeps cofinitely many
immediate successors:

* exclusion atoms: at a node v, a finite set of first steps z with
  v+(z,) removed;
* a floor rule: at level l, only steps z > f(l) survive, where f is a
  finite table followed by an affine tail.

All values are immutable and every operation is a pure function, so the
module is safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

Node = tuple[int, ...]


def as_node(xs) -> Node:
    node = tuple(int(x) for x in xs)
    if any(x < 0 for x in node):
        raise ValueError(f"node entries must be naturals: {xs!r}")
    return node


def is_prefix(a: Node, b: Node) -> bool:
    return len(a) <= len(b) and b[: len(a)] == a


def comparable(a: Node, b: Node) -> bool:
    return is_prefix(a, b) or is_prefix(b, a)


class Verdict(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ExtendsAnswer:
    verdict: Verdict
    witness: Node | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.verdict is Verdict.YES


@dataclass(frozen=True)
class FloorRule:
    """Level-wise lower bound: f(n) = table[n] for n < len(table), else
    slope*n + intercept.  Stored canonically: trailing table entries that
    agree with the affine tail are trimmed."""

    table: tuple[int, ...] = ()
    slope: int = 0
    intercept: int = 0

    def __post_init__(self):
        table = tuple(int(x) for x in self.table)
        if any(x < 0 for x in table) or self.slope < 0 or self.intercept < 0:
            raise ValueError("floor rule parameters must be naturals")
        while table and table[-1] == self.slope * (len(table) - 1) + self.intercept:
            table = table[:-1]
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "slope", int(self.slope))
        object.__setattr__(self, "intercept", int(self.intercept))

    def value(self, n: int) -> int:
        if n < len(self.table):
            return self.table[n]
        return self.slope * n + self.intercept


def floor_max(f: FloorRule, g: FloorRule) -> FloorRule:
    """Pointwise maximum of two floor rules, again table + affine."""
    base = max(len(f.table), len(g.table))
    if f.slope == g.slope:
        cut = base
        tail = (f.slope, max(f.intercept, g.intercept))
    else:
        hi, lo = (f, g) if f.slope > g.slope else (g, f)
        # beyond the crossing, the steeper tail dominates
        cross = (lo.intercept - hi.intercept) // (hi.slope - lo.slope) + 1
        cut = max(base, cross, 0)
        tail = (hi.slope, hi.intercept)
    table = tuple(max(f.value(n), g.value(n)) for n in range(cut))
    return FloorRule(table, tail[0], tail[1])


def _floor_at(floor: FloorRule | None, level: int) -> int:
    # -1 means "no bound": every natural step passes
    return -1 if floor is None else floor.value(level)


def floor_dominates(f2: FloorRule | None, f1: FloorRule, from_level: int) -> bool:
    """True iff f2(l) >= f1(l) for every level l >= from_level."""
    if f2 is None:
        return False
    base = max(from_level, 0)
    stop = max(len(f1.table), len(f2.table), base)
    for n in range(base, stop):
        if f2.value(n) < f1.value(n):
            return False
    if f2.slope < f1.slope:
        return False
    return f2.value(stop) >= f1.value(stop)


def least_floor_gap(f2: FloorRule | None, f1: FloorRule, from_level: int) -> int | None:
    """Least level l >= from_level with f2(l) < f1(l), if any."""
    base = max(from_level, 0)
    stop = max(len(f1.table), len(f2.table) if f2 else 0, base)
    for n in range(base, stop):
        if _floor_at(f2, n) < f1.value(n):
            return n
    a2 = f2.slope if f2 else 0
    b2 = f2.intercept if f2 else -1
    if a2 > f1.slope:
        return None
    if a2 == f1.slope:
        return stop if b2 < f1.intercept else None
    # shallower tail: gap opens where (a1-a2)*l > b2-b1
    first = (b2 - f1.intercept) // (f1.slope - a2) + 1
    return max(stop, first)


@dataclass(frozen=True)
class HechlerCondition:
    """Stem + exclusion atoms + optional floor rule.

    A node u belongs to the described tree iff u is comparable with the
    stem and, for every prefix v of u at or above the stem, the first
    step z of u after v has z not excluded at v and z > floor(len(v)).
    Exclusion keys must extend the stem (or equal it); exclusions are
    stored as a sorted tuple of (node, ascending steps) pairs.
    """

    stem: Node = ()
    exclusions: tuple[tuple[Node, tuple[int, ...]], ...] = ()
    floor: FloorRule | None = None

    def __post_init__(self):
        stem = as_node(self.stem)
        merged: dict[Node, set[int]] = {}
        items = self.exclusions.items() if isinstance(self.exclusions, dict) else self.exclusions
        for key, steps in items:
            key = as_node(key)
            if not is_prefix(stem, key):
                raise ValueError(f"exclusion key {key} does not extend stem {stem}")
            merged.setdefault(key, set()).update(int(z) for z in steps)
        canon = tuple(
            (key, tuple(sorted(steps)))
            for key, steps in sorted(merged.items())
            if steps
        )
        for _, steps in canon:
            if steps[0] < 0:
                raise ValueError("excluded steps must be naturals")
        object.__setattr__(self, "stem", stem)
        object.__setattr__(self, "exclusions", canon)

    def exclusion_at(self, v: Node) -> tuple[int, ...]:
        for key, steps in self.exclusions:
            if key == v:
                return steps
        return ()

    def floor_at(self, level: int) -> int:
        return _floor_at(self.floor, level)

    def admits_step(self, v: Node, z: int) -> bool:
        """Is z a legal first step from the at-or-above-stem node v?"""
        return z > self.floor_at(len(v)) and z not in self.exclusion_at(v)

    def least_step(self, v: Node, skip=()) -> int:
        """Least legal first step from v not in `skip` (always exists)."""
        z = self.floor_at(len(v)) + 1
        banned = set(self.exclusion_at(v)) | set(skip)
        while z in banned:
            z += 1
        return z


FULL_TREE = HechlerCondition()


def contains(T: HechlerCondition, u) -> bool:
    """Membership of the node u in the tree described by T."""
    u = as_node(u)
    if is_prefix(u, T.stem):
        return True
    if not is_prefix(T.stem, u):
        return False
    for i in range(len(T.stem), len(u)):
        if not T.admits_step(u[:i], u[i]):
            return False
    return True


def excluded_successors(T: HechlerCondition, t) -> tuple[int, ...]:
    """The exact finite set {z : t+(z,) not in T}, ascending."""
    t = as_node(t)
    if not is_prefix(T.stem, t):
        raise ValueError(f"{t} is below the stem {T.stem}")
    if not contains(T, t):
        raise ValueError(f"{t} is not in the condition")
    out = set(T.exclusion_at(t))
    out.update(range(0, T.floor_at(len(t)) + 1))
    return tuple(sorted(out))


def restrict(T: HechlerCondition, t) -> HechlerCondition:
    """The condition of all nodes of T comparable with t (stem becomes t).

    Exclusion atoms at keys not extending t are dropped: keys inside the
    new stem were already honoured by t (t is in T), keys incomparable
    with t constrain nodes outside the restricted tree.
    """
    t = as_node(t)
    if not contains(T, t):
        raise ValueError(f"cannot restrict to {t}: not in the condition")
    kept = tuple((k, s) for k, s in T.exclusions if is_prefix(t, k))
    return HechlerCondition(t, kept, T.floor)


def meet(T1: HechlerCondition, T2: HechlerCondition) -> HechlerCondition | None:
    """Intersection of two conditions with comparable stems.

    Returns None when the longer stem dies under the other condition's
    constraints (the intersection then has no infinite part).
    """
    if not comparable(T1.stem, T2.stem):
        raise ValueError(f"stems {T1.stem} and {T2.stem} are incomparable")
    short, long = (T1, T2) if len(T1.stem) <= len(T2.stem) else (T2, T1)
    if not contains(short, long.stem):
        return None
    stem = long.stem
    merged: dict[Node, set[int]] = {}
    for side in (short, long):
        for key, steps in side.exclusions:
            if is_prefix(stem, key):
                merged.setdefault(key, set()).update(steps)
    if T1.floor is None:
        floor = T2.floor
    elif T2.floor is None:
        floor = T1.floor
    else:
        floor = floor_max(T1.floor, T2.floor)
    return HechlerCondition(stem, merged, floor)


def _first_bad_prefix(T1: HechlerCondition, u: Node) -> Node:
    """Shortest prefix of u missing from T1 (assumes one exists)."""
    for i in range(len(u) + 1):
        if not contains(T1, u[:i]):
            return u[:i]
    raise AssertionError("no bad prefix found")


def floor_gap_witness(
    T2: HechlerCondition, f1: FloorRule, start_level: int
) -> Node | None:
    """A node of T2 whose last step is <= f1 at its level, if one is
    found near the first level where T2's floor fails to dominate f1.

    Walks least-step paths from T2's stem, trying a few sibling variants
    to dodge exclusion atoms; returns None when atoms mask every
    candidate (the caller then reports Unknown).
    """
    gap = least_floor_gap(T2.floor, f1, start_level)
    if gap is None:
        return None
    variants = len(T2.exclusions) + 2
    for level in range(gap, gap + variants + 4):
        if _floor_at(T2.floor, level) >= f1.value(level):
            continue
        for variant in range(variants if level > start_level else 1):
            v = T2.stem
            while len(v) < level - 1:
                v = v + (T2.least_step(v),)
            if len(v) < level:
                skip: list[int] = []
                for _ in range(variant):
                    skip.append(T2.least_step(v, skip))
                v = v + (T2.least_step(v, skip),)
            lo, hi = _floor_at(T2.floor, level), f1.value(level)
            for z in range(lo + 1, hi + 1):
                if T2.admits_step(v, z):
                    return v + (z,)
    return None


def extends(T2: HechlerCondition, T1: HechlerCondition) -> ExtendsAnswer:
    """Decide T2 <= T1 (inclusion of the described trees) syntactically.

    Yes requires the stem of T2 to lie in T1, every exclusion atom of T1
    at or above that stem to be covered by T2's constraints, and T2's
    floor to dominate T1's pointwise.  No carries a witness node in
    T2 - T1.  Unknown arises only when a floor deficit is masked by
    exclusion atoms in a non-syntactic way.
    """
    s2, s1 = T2.stem, T1.stem
    if not comparable(s2, s1):
        return ExtendsAnswer(Verdict.NO, witness=s2)
    if len(s2) < len(s1):
        z = T2.least_step(s2, skip=(s1[len(s2)],))
        return ExtendsAnswer(Verdict.NO, witness=s2 + (z,))
    if not contains(T1, s2):
        return ExtendsAnswer(Verdict.NO, witness=_first_bad_prefix(T1, s2))
    for key, steps in T1.exclusions:
        if not is_prefix(s2, key) or not contains(T2, key):
            continue
        covered = set(excluded_successors(T2, key))
        bad = sorted(set(steps) - covered)
        if bad:
            return ExtendsAnswer(Verdict.NO, witness=key + (bad[0],))
    if T1.floor is not None and not floor_dominates(T2.floor, T1.floor, len(s2)):
        witness = floor_gap_witness(T2, T1.floor, len(s2))
        if witness is not None:
            return ExtendsAnswer(Verdict.NO, witness=witness)
        return ExtendsAnswer(Verdict.UNKNOWN, reason="floor deficit masked by atoms")
    return ExtendsAnswer(Verdict.YES)


def extends_bounded(
    T2: HechlerCondition, T1: HechlerCondition, depth: int, width: int
) -> Node | None:
    """First node (depth-first preorder, ascending steps) of length <=
    depth with entries <= width lying in T2 but not in T1; None if the
    bounded universe is consistent with T2 <= T1.

    Exact over the bounded universe: subtrees where both conditions are
    atom-free and T2's floor dominates T1's are skipped wholesale.
    """
    s2 = T2.stem

    def t1_admits(u: Node) -> bool:
        v, z = u[:-1], u[-1]
        if is_prefix(u, T1.stem):
            return True
        if not is_prefix(T1.stem, u):
            return False
        return T1.admits_step(v, z)

    def subtree_included(v: Node) -> bool:
        # sound prune: below v both trees are atom-free on the T1 side
        # and T2's floor admits only steps T1's floor admits too
        if not (is_prefix(s2, v) and is_prefix(T1.stem, v)):
            return False
        if any(is_prefix(v, k) for k, _ in T1.exclusions):
            return False
        return all(
            _floor_at(T2.floor, n) >= _floor_at(T1.floor, n)
            for n in range(len(v), depth)
        )

    def dfs(v: Node) -> Node | None:
        if len(v) >= depth or subtree_included(v):
            return None
        for z in (z for z in range(width + 1) if T2.admits_step(v, z)):
            u = v + (z,)
            if not t1_admits(u):
                return u
            found = dfs(u)
            if found is not None:
                return found
        return None

    # prefixes of the stem come first in preorder along the unique path
    for i in range(min(len(s2), depth) + 1):
        u = s2[:i]
        if any(e > width for e in u):
            return None
        if not contains(T1, u):
            return u
    if len(s2) > depth or any(e > width for e in s2):
        return None
    return dfs(s2)


def stem_extends_avoiding(t2, t1, A) -> bool:
    """t2 extends t1 and every new entry stays outside the help set A
    (A may be None, making the avoidance clause vacuous)."""
    t2, t1 = as_node(t2), as_node(t1)
    if not is_prefix(t1, t2):
        return False
    if A is None:
        return True
    return all(not A.member(z) for z in t2[len(t1):])


def extends_A(T2: HechlerCondition, T1: HechlerCondition, A) -> ExtendsAnswer:
    """Conjunction of extends(T2, T1) and stem avoidance of A."""
    inc = extends(T2, T1)
    if inc.verdict is Verdict.NO:
        return ExtendsAnswer(Verdict.NO, witness=inc.witness, reason="inclusion")
    if not stem_extends_avoiding(T2.stem, T1.stem, A):
        return ExtendsAnswer(Verdict.NO, reason="stem-avoidance")
    if inc.verdict is Verdict.UNKNOWN:
        return ExtendsAnswer(Verdict.UNKNOWN, reason=inc.reason)
    return ExtendsAnswer(Verdict.YES)


def render_condition(T: HechlerCondition) -> str:
    """Bit-exact text form used in transcripts.

    ``stem=[a,b];excl{[k]:{z1,z2};...};floor(table=[...],a=A,b=B)`` with
    keys in lexicographic order, steps ascending, ``floor(-)`` if absent.
    """
    from .serialize import render_seq

    excl = ";".join(
        f"{render_seq(key)}:{{{','.join(str(z) for z in steps)}}}"
        for key, steps in T.exclusions
    )
    if T.floor is None:
        floor = "floor(-)"
    else:
        floor = (
            f"floor(table={render_seq(T.floor.table)},"
            f"a={T.floor.slope},b={T.floor.intercept})"
        )
    return f"stem={render_seq(T.stem)};excl{{{excl}}};{floor}"


def parse_condition(text: str) -> HechlerCondition:
    from .serialize import parse_seq

    try:
        stem_part, rest = text.split(";excl{", 1)
        excl_part, floor_part = rest.rsplit("};floor(", 1)
        if not stem_part.startswith("stem=") or not floor_part.endswith(")"):
            raise ValueError
        stem = parse_seq(stem_part[len("stem="):])
        exclusions = {}
        if excl_part:
            for entry in excl_part.split(";"):
                key_text, steps_text = entry.split(":{", 1)
                if not steps_text.endswith("}"):
                    raise ValueError
                steps = tuple(
                    int(z) for z in steps_text[:-1].split(",") if z
                )
                exclusions[parse_seq(key_text)] = steps
        floor_body = floor_part[:-1]
        if floor_body == "-":
            floor = None
        else:
            table_text, tail = floor_body.split(",a=", 1)
            if not table_text.startswith("table="):
                raise ValueError
            slope_text, intercept_text = tail.split(",b=", 1)
            floor = FloorRule(
                parse_seq(table_text[len("table="):]),
                int(slope_text),
                int(intercept_text),
            )
        return HechlerCondition(stem, exclusions, floor)
    except (ValueError, IndexError) as exc:
        raise ValueError(f"malformed condition text: {text!r}") from exc

"""Dense open families of tree conditions and the searches over them.

A dense set is presented in one of two runtime shapes:

* stem-based: a witness oracle `member_witness(s)` returning a member
  condition with stem s whenever one exists (s is then "in S"), plus an
  ascending, unbounded enumeration `good_successors(s)` of first steps
  that make progress toward S.  Honesty contract: the enumeration is
  infinite and, off S, every enumerated step strictly decreases the
  reachability rank of the node.
* pruning: a `refine(T)` returning a member below T with the same stem.

`extend_in_A` realises the central search: it meets a dense set from any
condition while keeping every new stem entry outside a co-infinite help
set A.  Off S the enumerated progress steps are infinite while the
exclusions of T and the members of A thin them out only finitely /
co-infinitely, so an honest descent always finds a legal avoided step
and strictly decreases rank; the fuel budget merely converts dishonest
user oracles into errors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .conditions import (
    FloorRule,
    HechlerCondition,
    Node,
    Verdict,
    as_node,
    contains,
    floor_gap_witness,
    floor_max,
    least_floor_gap,
    meet,
    restrict,
)
from .errors import FuelExhausted, WitnessStemMismatch

DEFAULT_FUEL = 100_000


class DenseSet:
    """Runtime interface shared by all dense-set presentations."""

    def member(self, T: HechlerCondition) -> Verdict:
        raise NotImplementedError

    def config(self) -> dict:
        raise NotImplementedError


class StemBasedDenseSet(DenseSet):
    def member_witness(self, s: Node) -> HechlerCondition | None:
        raise NotImplementedError

    def good_successors(self, s: Node):
        raise NotImplementedError

    def node_class(self, s: Node):
        """Optional memoisation key: nodes with equal classes must have
        identical witness/successor behaviour along all extensions.
        Return None to disable collapsing."""
        return None


class PruningDenseSet(DenseSet):
    def refine(self, T: HechlerCondition) -> HechlerCondition:
        raise NotImplementedError


class StemLengthSet(StemBasedDenseSet):
    """Conditions whose stem has at least n entries."""

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("length bound must be a natural")
        self.n = n

    def member_witness(self, s: Node) -> HechlerCondition | None:
        return HechlerCondition(s) if len(s) >= self.n else None

    def good_successors(self, s: Node):
        return itertools.count(0)

    def node_class(self, s: Node):
        return min(len(s), self.n)

    def member(self, T: HechlerCondition) -> Verdict:
        return Verdict.YES if len(T.stem) >= self.n else Verdict.NO

    def config(self) -> dict:
        return {"type": "stem_length", "n": self.n}


class StemHitsSet(StemBasedDenseSet):
    """Conditions whose stem contains an entry >= k."""

    def __init__(self, k: int):
        if k < 0:
            raise ValueError("threshold must be a natural")
        self.k = k

    def member_witness(self, s: Node) -> HechlerCondition | None:
        return HechlerCondition(s) if any(e >= self.k for e in s) else None

    def good_successors(self, s: Node):
        return itertools.count(self.k)

    def node_class(self, s: Node):
        return any(e >= self.k for e in s)

    def member(self, T: HechlerCondition) -> Verdict:
        return Verdict.YES if any(e >= self.k for e in T.stem) else Verdict.NO

    def config(self) -> dict:
        return {"type": "stem_hits", "k": self.k}


@dataclass(frozen=True)
class StemPattern:
    """Conjunction of stem requirements: a length bound and counted
    entry thresholds.  All requirements shrink monotonically under stem
    extension, so the induced family is open."""

    min_len: int = 0
    hits: tuple[tuple[int, int], ...] = ()  # (threshold k, required count)

    def deficits(self, s: Node) -> tuple[int, ...]:
        length = max(0, self.min_len - len(s))
        counted = tuple(
            max(0, need - sum(1 for e in s if e >= k)) for k, need in self.hits
        )
        return (length,) + counted

    def distance(self, s: Node) -> int:
        return max(self.deficits(s))

    def step_threshold(self) -> int:
        return max((k for k, _ in self.hits), default=0)

    def config(self) -> dict:
        cfg: dict = {}
        if self.min_len:
            cfg["min_len"] = self.min_len
        if self.hits:
            cfg["hits"] = [{"k": k, "count": c} for k, c in self.hits]
        return cfg


class UserStemsSet(StemBasedDenseSet):
    """Disjunction of stem patterns; a stem is in S when some pattern's
    requirements are all met."""

    def __init__(self, patterns):
        pats = tuple(patterns)
        if not pats:
            raise ValueError("at least one pattern is required")
        for p in pats:
            if p.min_len == 0 and not p.hits:
                raise ValueError("empty pattern matches everything; drop it")
        self.patterns = pats

    @classmethod
    def from_pattern_configs(cls, configs) -> "UserStemsSet":
        pats = []
        for cfg in configs:
            hits = tuple((h["k"], h["count"]) for h in cfg.get("hits", ()))
            pats.append(StemPattern(cfg.get("min_len", 0), hits))
        return cls(pats)

    def _best(self, s: Node) -> StemPattern:
        return min(self.patterns, key=lambda p: p.distance(s))

    def member_witness(self, s: Node) -> HechlerCondition | None:
        if any(p.distance(s) == 0 for p in self.patterns):
            return HechlerCondition(s)
        return None

    def good_successors(self, s: Node):
        # a step clearing the best pattern's largest threshold shrinks
        # every one of its deficits at once
        return itertools.count(self._best(s).step_threshold())

    def node_class(self, s: Node):
        return tuple(p.deficits(s) for p in self.patterns)

    def member(self, T: HechlerCondition) -> Verdict:
        if any(p.distance(T.stem) == 0 for p in self.patterns):
            return Verdict.YES
        return Verdict.NO

    def config(self) -> dict:
        return {"type": "user_stems", "patterns": [p.config() for p in self.patterns]}


class DominateSet(PruningDenseSet):
    """Conditions all of whose first steps above the stem clear a floor
    rule; met by raising the floor, which leaves the stem untouched."""

    def __init__(self, floor: FloorRule):
        self.floor = floor

    def refine(self, T: HechlerCondition) -> HechlerCondition:
        merged = self.floor if T.floor is None else floor_max(T.floor, self.floor)
        return HechlerCondition(T.stem, T.exclusions, merged)

    def member(self, T: HechlerCondition) -> Verdict:
        base = len(T.stem)
        if least_floor_gap(T.floor, self.floor, base) is None:
            return Verdict.YES
        witness = floor_gap_witness(T, self.floor, base)
        if witness is not None:
            return Verdict.NO
        return Verdict.UNKNOWN

    def config(self) -> dict:
        return {
            "type": "dominate",
            "table": list(self.floor.table),
            "a": self.floor.slope,
            "b": self.floor.intercept,
        }


def dense_from_config(cfg: dict) -> DenseSet:
    t = cfg.get("type")
    if t == "stem_length":
        return StemLengthSet(cfg["n"])
    if t == "stem_hits":
        return StemHitsSet(cfg["k"])
    if t == "dominate":
        return DominateSet(FloorRule(tuple(cfg["table"]), cfg["a"], cfg["b"]))
    if t == "user_stems":
        return UserStemsSet.from_pattern_configs(cfg["patterns"])
    raise ValueError(f"unknown dense set type {t!r}")


def member(D: DenseSet, T: HechlerCondition) -> Verdict:
    return D.member(T)


def rank_bounded(
    D: StemBasedDenseSet, t, max_rank: int, width: int
) -> int | None:
    """Least r <= max_rank such that t reaches S in r progress steps,
    with the successor search truncated to the first `width` enumerated
    steps per node; None if no such r.

    For honest enumerations the result is an upper bound on the true
    reachability rank.  Nodes are collapsed through `node_class` when
    the dense set provides one.
    """
    if not isinstance(D, StemBasedDenseSet):
        raise TypeError("rank is defined for stem-based dense sets")
    t = as_node(t)
    memo: dict = {}

    def key(s: Node):
        c = D.node_class(s)
        return ("node", s) if c is None else ("class", c)

    def search(s: Node, cap: int) -> int | None:
        if D.member_witness(s) is not None:
            return 0
        if cap <= 0:
            return None
        k = (key(s), cap)
        if k in memo:
            return memo[k]
        best: int | None = None
        for z in itertools.islice(D.good_successors(s), width):
            child_cap = cap - 1 if best is None else best - 2
            r = search(s + (z,), child_cap)
            if r is not None:
                best = r + 1
                if best == 1:
                    break
        memo[k] = best
        return best

    return search(t, max_rank)


def extend_in_A(
    T: HechlerCondition,
    D: DenseSet,
    A=None,
    fuel: int = DEFAULT_FUEL,
) -> HechlerCondition:
    """A member of D below T whose new stem entries all avoid A.

    Pruning sets are met in place (stem unchanged).  For stem-based sets
    the search walks from the stem of T: at a node with a member
    witness, the witness is intersected with T restricted to that node;
    otherwise the enumerated progress steps are scanned in ascending
    order for the least one that is a legal step in T and lies outside
    A.  A may be None, which disables the avoidance clause.
    """
    if fuel <= 0:
        raise ValueError("fuel must be positive")
    if isinstance(D, PruningDenseSet):
        refined = D.refine(T)
        result = meet(refined, T)
        if result is None or result.stem != T.stem:
            raise WitnessStemMismatch("refine changed the stem or killed it")
        return result
    if not isinstance(D, StemBasedDenseSet):
        raise TypeError(f"not a dense-set presentation: {D!r}")
    t = T.stem
    budget = fuel
    while True:
        W = D.member_witness(t)
        if W is not None:
            if W.stem != t:
                raise WitnessStemMismatch(
                    f"witness stem {W.stem} differs from requested {t}"
                )
            result = meet(W, restrict(T, t))
            if result is None:
                raise WitnessStemMismatch("witness incompatible with its own stem")
            return result
        moved = False
        for z in D.good_successors(t):
            budget -= 1
            if budget <= 0:
                raise FuelExhausted(
                    f"no legal avoided successor of {t} within {fuel} probes"
                )
            if contains(T, t + (z,)) and (A is None or not A.member(z)):
                t = t + (z,)
                moved = True
                break
        if not moved:
            raise FuelExhausted(f"successor enumeration of {t} ended early")


def code_step(T: HechlerCondition, A, m: int, fuel: int = DEFAULT_FUEL) -> HechlerCondition:
    """Extend the stem by one member of A carrying label m (the least
    legal one), deliberately breaking stem avoidance to record m."""
    from .coding import eta_fiber_element

    for k in range(fuel):
        z = eta_fiber_element(A, m, k)
        if contains(T, T.stem + (z,)):
            return restrict(T, T.stem + (z,))
    raise FuelExhausted(f"no legal label-{m} member of the help set within {fuel} probes")

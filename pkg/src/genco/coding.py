"""Help sets and the positional codec they induce.

A help set A is an infinite, co-infinite set of naturals with a
decidable membership test and a strictly increasing enumeration e_A.
Fixing theta(n) = 2-adic valuation of n+1 (every fiber of theta is
infinite), each member z of A carries the label

    eta(A, z) = theta(position of z in the enumeration of A),

and every label m is carried by infinitely many members.  A sequence g
then encodes the sequence of labels read off at the positions where g
lands in A; `decode` extracts it using only membership tests and
enumeration indices.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass

from . import primes
from .errors import FuelExhausted, MalformedCodeElement


def theta(n: int) -> int:
    """2-adic valuation of n+1; each fiber theta^-1(m) is infinite."""
    if n < 0:
        raise ValueError("theta is defined on naturals")
    return ((n + 1) & -(n + 1)).bit_length() - 1


def theta_fiber(m: int, k: int) -> int:
    """k-th element (ascending) of theta^-1(m): (2k+1)*2^m - 1."""
    if m < 0 or k < 0:
        raise ValueError("fiber coordinates must be naturals")
    return (2 * k + 1) * (1 << m) - 1


@dataclass(frozen=True)
class EventuallyPeriodicSeq:
    """Total sequence of naturals: finite prefix, then a repeating cycle."""

    prefix: tuple[int, ...] = ()
    cycle: tuple[int, ...] = (0,)

    def __post_init__(self):
        prefix = tuple(int(x) for x in self.prefix)
        cycle = tuple(int(x) for x in self.cycle)
        if not cycle:
            raise ValueError("cycle must be nonempty")
        if any(x < 0 for x in prefix + cycle):
            raise ValueError("sequence entries must be naturals")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)

    def value(self, n: int) -> int:
        if n < len(self.prefix):
            return self.prefix[n]
        return self.cycle[(n - len(self.prefix)) % len(self.cycle)]

    def values(self, n: int) -> tuple[int, ...]:
        return tuple(self.value(i) for i in range(n))

    def config(self) -> dict:
        return {"prefix": list(self.prefix), "cycle": list(self.cycle)}

    @classmethod
    def from_config(cls, cfg: dict) -> "EventuallyPeriodicSeq":
        return cls(tuple(cfg["prefix"]), tuple(cfg["cycle"]))


def prefix_code(entries) -> int:
    """Product of nth_prime(i) ** (entries[i] + 1); strictly increasing
    along prefix extension, so a single large element determines every
    shorter prefix."""
    z = 1
    for i, a in enumerate(entries):
        z *= primes.nth_prime(i) ** (a + 1)
    return z


def decode_prefix_code(z: int) -> tuple[int, ...]:
    """Invert prefix_code; raises MalformedCodeElement on gaps."""
    if z < 2:
        raise MalformedCodeElement(z)
    digits = []
    for i in itertools.count():
        p = primes.nth_prime(i)
        e = 0
        while z % p == 0:
            z //= p
            e += 1
        if e == 0:
            if z != 1:
                raise MalformedCodeElement(z)
            break
        digits.append(e - 1)
        if z == 1:
            break
    return tuple(digits)


class HelpSet:
    """Infinite, co-infinite subset of the naturals.

    Subclasses provide member / enumerate / index_of / config; the
    enumeration is strictly increasing with index_of its inverse.
    """

    def member(self, z: int) -> bool:
        raise NotImplementedError

    def enumerate(self, n: int) -> int:
        raise NotImplementedError

    def index_of(self, z: int) -> int:
        raise NotImplementedError

    def config(self) -> dict:
        raise NotImplementedError

    def elements(self):
        for n in itertools.count():
            yield self.enumerate(n)


class Evens(HelpSet):
    def member(self, z: int) -> bool:
        return z >= 0 and z % 2 == 0

    def enumerate(self, n: int) -> int:
        return 2 * n

    def index_of(self, z: int) -> int:
        if not self.member(z):
            raise ValueError(f"{z} is not a member")
        return z // 2

    def config(self) -> dict:
        return {"kind": "evens"}


class Primes(HelpSet):
    def member(self, z: int) -> bool:
        return primes.is_prime(z)

    def enumerate(self, n: int) -> int:
        return primes.nth_prime(n)

    def index_of(self, z: int) -> int:
        if not primes.is_prime(z):
            raise ValueError(f"{z} is not a member")
        return primes.prime_index(z)

    def config(self) -> dict:
        return {"kind": "primes"}


class SelfCode(HelpSet):
    """The set of prefix codes of a fixed sequence abar: element n is
    prefix_code(abar restricted to n+1 entries).  Any infinite subset
    recovers abar, hence the whole set."""

    def __init__(self, abar: EventuallyPeriodicSeq):
        self.abar = abar
        self._codes: list[int] = []
        self._lock = threading.Lock()

    def _code(self, n: int) -> int:
        with self._lock:
            while len(self._codes) <= n:
                k = len(self._codes)
                prev = self._codes[-1] if self._codes else 1
                self._codes.append(prev * primes.nth_prime(k) ** (self.abar.value(k) + 1))
            return self._codes[n]

    def member(self, z: int) -> bool:
        try:
            digits = decode_prefix_code(z)
        except MalformedCodeElement:
            return False
        return digits == self.abar.values(len(digits))

    def enumerate(self, n: int) -> int:
        return self._code(n)

    def index_of(self, z: int) -> int:
        if not self.member(z):
            raise ValueError(f"{z} is not a member")
        return len(decode_prefix_code(z)) - 1

    def config(self) -> dict:
        return {"kind": "selfcode", "abar": self.abar.config()}


class ExplicitPeriodic(HelpSet):
    """Membership given by an eventually periodic 0/1 pattern over the
    naturals; the cycle must contain a 1 (infinite) and a 0 (co-infinite)."""

    def __init__(self, prefix, cycle):
        self.prefix = tuple(int(b) for b in prefix)
        self.cycle = tuple(int(b) for b in cycle)
        if not self.cycle:
            raise ValueError("cycle must be nonempty")
        if any(b not in (0, 1) for b in self.prefix + self.cycle):
            raise ValueError("membership pattern must be 0/1 valued")
        if 1 not in self.cycle:
            raise ValueError("pattern describes a finite set")
        if 0 not in self.cycle:
            raise ValueError("pattern describes a cofinite set")
        self._prefix_ones = [i for i, b in enumerate(self.prefix) if b]
        self._cycle_ones = [i for i, b in enumerate(self.cycle) if b]

    def member(self, z: int) -> bool:
        if z < 0:
            return False
        if z < len(self.prefix):
            return self.prefix[z] == 1
        return self.cycle[(z - len(self.prefix)) % len(self.cycle)] == 1

    def enumerate(self, n: int) -> int:
        if n < len(self._prefix_ones):
            return self._prefix_ones[n]
        m = n - len(self._prefix_ones)
        block, r = divmod(m, len(self._cycle_ones))
        return len(self.prefix) + block * len(self.cycle) + self._cycle_ones[r]

    def index_of(self, z: int) -> int:
        if not self.member(z):
            raise ValueError(f"{z} is not a member")
        if z < len(self.prefix):
            return sum(self.prefix[:z])
        m = z - len(self.prefix)
        block, r = divmod(m, len(self.cycle))
        return (
            len(self._prefix_ones)
            + block * len(self._cycle_ones)
            + sum(self.cycle[:r])
        )

    def config(self) -> dict:
        return {"kind": "explicit", "prefix": list(self.prefix), "cycle": list(self.cycle)}


def help_set_from_config(cfg: dict) -> HelpSet:
    kind = cfg.get("kind")
    if kind == "evens":
        return Evens()
    if kind == "primes":
        return Primes()
    if kind == "selfcode":
        return SelfCode(EventuallyPeriodicSeq.from_config(cfg["abar"]))
    if kind == "explicit":
        return ExplicitPeriodic(cfg["prefix"], cfg["cycle"])
    raise ValueError(f"unknown help set kind {kind!r}")


def eta(A: HelpSet, z: int) -> int:
    """Label of the member z: theta of its enumeration index."""
    return theta(A.index_of(z))


def eta_fiber_element(A: HelpSet, m: int, k: int) -> int:
    """k-th smallest member of A carrying label m."""
    return A.enumerate(theta_fiber(m, k))


def selfcode_element(abar: EventuallyPeriodicSeq, n: int) -> int:
    """n-th element (ascending) of the self-coding set of abar."""
    return prefix_code(abar.values(n + 1))


def recover_from_subset(elements, n: int, fuel: int = 100_000) -> tuple[int, ...]:
    """Read off the first n entries of abar from any infinite subset of
    its self-coding set: the first element whose code length reaches n
    settles the answer.  Malformed elements are reported with the value;
    a stalling stream exhausts the fuel."""
    if n == 0:
        return ()
    seen = 0
    for z in elements:
        seen += 1
        if seen > fuel:
            break
        digits = decode_prefix_code(z)
        if len(digits) >= n:
            return digits[:n]
    raise FuelExhausted(f"no element of code length >= {n} within {fuel} reads")


def decode(A: HelpSet, g) -> tuple[int, ...]:
    """Labels of g's entries that land in A, in positional order.

    Uses only membership tests and enumeration indices of A, plus the
    values of g.  A prefix with no hits decodes to the empty sequence.
    """
    return tuple(eta(A, z) for z in g if A.member(z))


def difference_prefix(B, A, count: int, fuel: int = 100_000) -> list[int]:
    """First `count` elements of B - A, scanning B's enumeration with a
    probe budget."""
    out: list[int] = []
    for n in range(fuel):
        if len(out) >= count:
            return out
        z = B.enumerate(n)
        if not A.member(z):
            out.append(z)
    if len(out) >= count:
        return out
    raise FuelExhausted(f"found {len(out)}/{count} elements outside A within {fuel} probes")


def coinfinite_prefix(A, count: int, bound: int) -> list[int]:
    """First `count` non-members of A below `bound` (fuel-style check)."""
    out = [z for z in range(bound) if not A.member(z)][:count]
    if len(out) < count:
        raise FuelExhausted(f"found only {len(out)} non-members below {bound}")
    return out

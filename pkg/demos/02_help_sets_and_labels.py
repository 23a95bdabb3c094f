"""Help sets and the label codec.

Every member z of a help set A carries the label
theta(position of z in A's enumeration), where theta(n) counts the
trailing binary zeros of n+1.  Every label recurs on infinitely many
members, so any value can be planted wherever the tree allows a member
of A.  Run with:  python3 demos/02_help_sets_and_labels.py
"""

from genco import (
    EventuallyPeriodicSeq,
    Evens,
    Primes,
    decode,
    eta,
    eta_fiber_element,
    recover_from_subset,
    selfcode_element,
    theta,
)

print("theta over 0..15:", [theta(n) for n in range(16)])

A = Evens()
print("\nlabels of the first even numbers:")
print("  ", {2 * n: eta(A, 2 * n) for n in range(8)})
print("members of label 1, ascending:", [eta_fiber_element(A, 1, k) for k in range(4)])
print("members of label 2, ascending:", [eta_fiber_element(A, 2, k) for k in range(4)])

P = Primes()
print("\nsame machinery over the primes: label of 7 is", eta(P, 7))

print("\ndecoding reads labels at the positions that land in A:")
g = (5, 2, 7, 6)
print(f"   decode(evens, {g}) = {decode(A, g)}")

print("\nself-coding sets: each element is a prime-power code of a prefix")
abar = EventuallyPeriodicSeq(prefix=(2, 0, 1), cycle=(1,))
elems = [selfcode_element(abar, n) for n in range(4)]
print("   first elements:", elems)
print("   8 = 2^(2+1), 24 = 8*3^(0+1), 600 = 24*5^(1+1), ...")
every_other = (selfcode_element(abar, n) for n in range(0, 40, 2))
print("   recovered from every 2nd element:", recover_from_subset(every_other, 6))

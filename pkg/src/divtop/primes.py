"""Constructive prime generation for unique-factorization rings.

Given pairwise non-associated primes a_1, ..., a_n, the element
x_m = a_1^m + a_2*a_3*...*a_n (empty tail product = 1) is, for the first m
making it a nonzero non-unit, divisible by none of the a_i; any irreducible
factor of it is therefore a brand-new prime class.  Iterating grows the list
without bound.  Works only where factorization is unique and the unit group
is finite; both are read off the ring's capability metadata.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import AssociatedInputs, CapabilityMissing, NotIrreducible, SizeGuard
from .rings import ClassId, Ring

M_CAP = 64  # with >= 2 primes m = 1 already works; this is defensive


@dataclass(frozen=True)
class PrimeList:
    ring: str
    members: tuple

    def texts(self) -> list:
        return [c.text for c in self.members]

    def __len__(self) -> int:
        return len(self.members)


def _require_stream_capability(ring: Ring) -> None:
    if not ring.caps.is_ufd:
        raise CapabilityMissing(f"{ring.name} is not a UFD")
    if not ring.caps.unit_count.is_finite:
        raise CapabilityMissing(
            f"{ring.name} has infinitely many units; the construction needs a finite unit group"
        )


def _validate_members(ring: Ring, members: Sequence[ClassId]) -> None:
    if len(set(members)) != len(members):
        raise AssociatedInputs("prime list members must be pairwise non-associated")
    for c in members:
        if not ring.is_irreducible(c.rep):
            raise NotIrreducible(f"{c.text} is not prime in {ring.name}")


def euclid_step(ring: Ring, primes: PrimeList) -> ClassId:
    """One growth step: returns a prime class not associated to any member."""
    _require_stream_capability(ring)
    members = primes.members
    if not members:
        raise ValueError("prime list must be nonempty")
    _validate_members(ring, members)
    head = members[0].rep
    tail = ring.product(c.rep for c in members[1:])
    x = None
    power = ring.one()
    for _ in range(M_CAP):
        power = ring.mul(power, head)
        cand = ring.add(power, tail)
        if not ring.is_zero(cand) and not ring.is_unit(cand):
            x = cand
            break
    if x is None:
        raise SizeGuard(f"no non-unit candidate within {M_CAP} exponent steps")
    # the construction guarantees every current member misses x
    for c in members:
        assert not ring.divides(c.rep, x), f"{c.text} divides the candidate"
    factors = ring.factor(x)
    return min(factors, key=ring.class_sort_key)


def prime_stream(ring: Ring, start: PrimeList, count: int) -> PrimeList:
    """Extend the list by count new pairwise non-associated primes."""
    if count < 1:
        raise ValueError("count must be >= 1")
    members = list(start.members)
    for _ in range(count):
        q = euclid_step(ring, PrimeList(ring.name, tuple(members)))
        members.append(q)
    return PrimeList(ring.name, tuple(members))

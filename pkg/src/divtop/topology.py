"""Finite divisor-closed fragments and the subspace topology they induce.

A fragment is a finite set of association classes closed under taking
divisors, together with its divisibility relation.  On such a set the basic
open at a point p is exactly the in-fragment divisor set of p, opens are the
down-sets of the divisibility order, and closed sets are the up-sets; every
point keeps a smallest neighborhood.  Point sets are bitmasks over the
fragment's (deterministically ordered) point list.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    EmptyFamily,
    FragmentMismatch,
    FragmentTooLarge,
    FragmentTooLargeForEnumeration,
    PointNotInFragment,
    RingMismatch,
)
from .rings import ClassId, Ring

POINT_CAP = 4096
ENUM_CAP = 20


class PointSet:
    """Subset of a fragment's points, stored as a bitmask in point order."""

    __slots__ = ("fragment", "bits")

    def __init__(self, fragment: "Fragment", bits: int):
        self.fragment = fragment
        self.bits = bits

    def classes(self) -> tuple:
        pts = self.fragment.points
        return tuple(pts[i] for i in range(len(pts)) if self.bits >> i & 1)

    def texts(self) -> tuple:
        return tuple(c.text for c in self.classes())

    def __iter__(self) -> Iterator[ClassId]:
        return iter(self.classes())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, c: ClassId) -> bool:
        return bool(self.bits >> self.fragment.index_of(c) & 1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PointSet)
            and self.bits == other.bits
            and self.fragment == other.fragment
        )

    def __hash__(self) -> int:
        return hash((self.bits, self.fragment.points))

    def __and__(self, other: "PointSet") -> "PointSet":
        self.fragment.claim(other)
        return PointSet(self.fragment, self.bits & other.bits)

    def __or__(self, other: "PointSet") -> "PointSet":
        self.fragment.claim(other)
        return PointSet(self.fragment, self.bits | other.bits)

    def __le__(self, other: "PointSet") -> bool:
        self.fragment.claim(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> "PointSet":
        return PointSet(self.fragment, ~self.bits & self.fragment.full_bits)

    def __repr__(self) -> str:
        return "{" + ", ".join(self.texts()) + "}"


class Fragment:
    """Divisor-closed point list plus its divisibility matrix.

    ``col(j)`` masks the divisors of point j (the basic open), ``row(i)``
    masks the multiples of point i (the closure of the singleton).  Both are
    reflexive.  Instances are immutable once built.
    """

    def __init__(self, ring: Ring, points: tuple, cols: tuple, rows: tuple, seeds: tuple):
        self.ring = ring
        self.points = points
        self.seeds = seeds
        self._cols = cols
        self._rows = rows
        self._index = {c: i for i, c in enumerate(points)}
        self.full_bits = (1 << len(points)) - 1

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Fragment)
            and self.ring.name == other.ring.name
            and self.points == other.points
            and self.seeds == other.seeds
        )

    def __hash__(self) -> int:
        return hash((self.ring.name, self.points, self.seeds))

    def __repr__(self) -> str:
        return f"<fragment {self.ring.name} with {len(self.points)} points>"

    # -- membership ---------------------------------------------------------

    def index_of(self, c: ClassId) -> int:
        try:
            return self._index[c]
        except KeyError:
            raise PointNotInFragment(f"{c} is not a point of this fragment") from None

    def __contains__(self, c: ClassId) -> bool:
        return c in self._index

    def claim(self, s: PointSet) -> None:
        if s.fragment is not self and s.fragment != self:
            raise FragmentMismatch("point set belongs to a different fragment")

    # -- set constructors -----------------------------------------------------

    def point_set(self, classes: Iterable[ClassId]) -> PointSet:
        bits = 0
        for c in classes:
            bits |= 1 << self.index_of(c)
        return PointSet(self, bits)

    def empty_set(self) -> PointSet:
        return PointSet(self, 0)

    def full_set(self) -> PointSet:
        return PointSet(self, self.full_bits)

    # -- topology -------------------------------------------------------------

    def basic_open(self, p: ClassId) -> PointSet:
        return PointSet(self, self._cols[self.index_of(p)])

    def minimal_open(self, p: ClassId) -> PointSet:
        # the smallest open containing p is its basic open
        return self.basic_open(p)

    def specializes(self, p: ClassId, q: ClassId) -> bool:
        """True when q lies in the closure of {p}, i.e. p divides q."""
        return bool(self._rows[self.index_of(p)] >> self.index_of(q) & 1)

    def is_open(self, s: PointSet) -> bool:
        self.claim(s)
        bits = s.bits
        for j in _iter_bits(bits):
            if self._cols[j] & ~bits:
                return False
        return True

    def is_closed(self, s: PointSet) -> bool:
        self.claim(s)
        bits = s.bits
        for i in _iter_bits(bits):
            if self._rows[i] & ~bits:
                return False
        return True

    def closure(self, s: PointSet) -> PointSet:
        self.claim(s)
        out = 0
        for i in _iter_bits(s.bits):
            out |= self._rows[i]
        return PointSet(self, out)

    def interior(self, s: PointSet) -> PointSet:
        self.claim(s)
        out = 0
        for j in _iter_bits(s.bits):
            if self._cols[j] & ~s.bits == 0:
                out |= 1 << j
        return PointSet(self, out)

    def enumerate_opens(self) -> Iterator[PointSet]:
        """Yield every open (divisor-closed) subset exactly once, incl. the
        empty set and the whole fragment.  Consumers may stop early."""
        n = len(self.points)
        if n > ENUM_CAP:
            raise FragmentTooLargeForEnumeration(
                f"{n} points exceeds the enumeration cap {ENUM_CAP}"
            )
        # process points so that divisors come first; then a point may join
        # only when its whole basic open is already in
        order = sorted(range(n), key=lambda j: (self._cols[j].bit_count(), j))

        def rec(k: int, bits: int) -> Iterator[int]:
            if k == n:
                yield bits
                return
            j = order[k]
            yield from rec(k + 1, bits)
            if self._cols[j] & ~(bits | 1 << j) == 0:
                yield from rec(k + 1, bits | 1 << j)

        for bits in rec(0, 0):
            yield PointSet(self, bits)

    def covering_pairs(self) -> list:
        """Transitive reduction of the divisibility relation, as index pairs."""
        out = []
        n = len(self.points)
        for i in range(n):
            for j in _iter_bits(self._rows[i]):
                if j == i:
                    continue
                between = self._rows[i] & self._cols[j] & ~(1 << i) & ~(1 << j)
                if between == 0:
                    out.append((i, j))
        return out


def _iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def build_fragment(ring: Ring, seeds: Iterable[ClassId]) -> Fragment:
    """Union of the seeds' divisor classes with the divides matrix filled in.

    Point order is the representative-serialization sort, which makes every
    derived artifact (bitmasks, JSON, DOT) reproducible byte for byte.
    """
    seeds = tuple(seeds)
    if not seeds:
        raise EmptyFamily("at least one seed class is needed")
    for s in seeds:
        if s.ring != ring.name:
            raise RingMismatch(f"seed {s} does not belong to {ring.name}")
    classes = set()
    for s in seeds:
        classes.add(s)
        classes.update(ring.divisor_classes(s.rep))
    if len(classes) > POINT_CAP:
        raise FragmentTooLarge(f"{len(classes)} points exceeds the cap {POINT_CAP}")
    points = tuple(sorted(classes, key=lambda c: c.text))
    n = len(points)
    cols = [0] * n
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if i == j or ring.divides(points[i].rep, points[j].rep):
                cols[j] |= 1 << i
                rows[i] |= 1 << j
    return Fragment(ring, points, tuple(cols), tuple(rows), seeds)

"""Executable checks and witness constructors over fragments.

Universal statements about the full (infinite) class space are rendered here
as either fragment-level verifications (T0, isolated points, nestedness,
density) or finite witness constructions that follow the relevant
contradiction or separation argument (T1 failure, non-regularity,
non-compactness, the strictly growing basic-open chain).  Every entry point
returns a CheckReport whose contents are deterministic for fixed inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import (
    AssociatedInputs,
    EmptyFamily,
    FragmentTooLargeForEnumeration,
    NotAtomic,
    NotIrreducible,
    RingMismatch,
)
from .rings import ClassId, Ring
from .topology import Fragment, PointSet, build_fragment

HOLDS = "holds"
FAILS = "fails"
WITNESS = "witness-produced"


@dataclass(frozen=True)
class CheckReport:
    check: str
    verdict: str
    witnesses: tuple = ()
    details: Mapping = field(default_factory=dict)

    def witness_texts(self) -> list:
        return [w.text for w in self.witnesses]


def _texts(s) -> list:
    if isinstance(s, PointSet):
        return list(s.texts())
    return sorted(c.text for c in s)


# ---------------------------------------------------------------------------
# separation


def check_t0(fragment: Fragment) -> CheckReport:
    """Every pair of distinct points is separated by some basic open."""
    pts = fragment.points
    example = None
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            p, q = pts[i], pts[j]
            if not fragment.specializes(p, q):
                # p does not divide q, so the basic open at q misses p
                sep, inside, outside = fragment.basic_open(q), q, p
            elif not fragment.specializes(q, p):
                sep, inside, outside = fragment.basic_open(p), p, q
            else:
                return CheckReport(
                    "t0",
                    FAILS,
                    (p, q),
                    {"reason": "mutually dividing distinct points"},
                )
            if example is None:
                example = {
                    "pair": [outside.text, inside.text],
                    "separating_open": _texts(sep),
                    "contains": inside.text,
                }
    n = len(pts)
    details = {"pairs_checked": n * (n - 1) // 2}
    if example is not None:
        details["example"] = example
    return CheckReport("t0", HOLDS, (), details)


def t1_failure_witness(ring: Ring, a: ClassId) -> CheckReport:
    """The pair ([a], [a^2]) cannot be T1-separated: every open around the
    square also contains a."""
    a2 = ring.mul_class(a, a)
    fragment = build_fragment(ring, [a2])
    square_in_closure = a2 in fragment.closure(fragment.point_set([a]))
    a_in_min_open = a in fragment.minimal_open(a2)
    opens_checked = 0
    exhaustive = True
    if len(fragment) <= 20:
        for o in fragment.enumerate_opens():
            opens_checked += 1
            if a2 in o and a not in o:
                exhaustive = False
    verdict = WITNESS if (square_in_closure and a_in_min_open and exhaustive) else FAILS
    return CheckReport(
        "t1",
        verdict,
        (a, a2),
        {
            "square": a2.text,
            "square_in_closure_of_point": square_in_closure,
            "point_in_minimal_open_of_square": a_in_min_open,
            "opens_enumerated": opens_checked,
        },
    )


def isolated_points(fragment: Fragment) -> CheckReport:
    """Points whose basic open is a singleton; must coincide with the
    irreducible representatives."""
    isolated = tuple(p for p in fragment.points if len(fragment.basic_open(p)) == 1)
    irred = tuple(p for p in fragment.points if fragment.ring.is_irreducible(p.rep))
    match = isolated == irred
    # on a mismatch the symmetric difference is the witness (in point order)
    diff = set(isolated) ^ set(irred)
    witnesses = isolated if match else tuple(p for p in fragment.points if p in diff)
    return CheckReport(
        "isolated",
        HOLDS if match else FAILS,
        witnesses,
        {
            "isolated": [p.text for p in isolated],
            "irreducible": [p.text for p in irred],
            "match": match,
        },
    )


# ---------------------------------------------------------------------------
# nestedness and basis laws


def check_nested(ring: Ring, seeds: Sequence[ClassId]) -> CheckReport:
    """All basic opens comparable under inclusion <=> total divisibility."""
    fragment = build_fragment(ring, seeds)
    pts = fragment.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            oi, oj = fragment.basic_open(pts[i]), fragment.basic_open(pts[j])
            if not (oi <= oj or oj <= oi):
                return CheckReport(
                    "nested",
                    FAILS,
                    (pts[i], pts[j]),
                    {
                        "open_left": _texts(oi),
                        "open_right": _texts(oj),
                        "ring_is_valuation": ring.caps.is_valuation,
                    },
                )
    return CheckReport(
        "nested",
        HOLDS,
        (),
        {"points": len(pts), "ring_is_valuation": ring.caps.is_valuation},
    )


def basis_intersection(ring: Ring, a: ClassId, b: ClassId) -> CheckReport:
    """Intersection of two basic opens: empty, a basic open, or a non-basic
    witness set on rings without gcd."""
    if a.ring != ring.name or b.ring != ring.name:
        raise RingMismatch(f"classes {a.ring}/{b.ring} do not belong to {ring.name}")
    da = ring.divisor_classes(a.rep)
    db = ring.divisor_classes(b.rep)
    inter = da & db
    details = {"left": a.text, "right": b.text, "intersection": _texts(inter)}
    if ring.caps.has_gcd:
        g = ring.gcd_class(a.rep, b.rep)
        if g is None:
            details["gcd"] = None
            ok = not inter
        else:
            details["gcd"] = g.text
            ok = inter == ring.divisor_classes(g.rep)
        return CheckReport(
            "gcd-intersection", HOLDS if ok else FAILS, () if ok else (a, b), details
        )
    # no gcd: look for a member whose divisor set is the whole intersection
    for g in sorted(inter, key=ring.class_sort_key):
        if ring.divisor_classes(g.rep) == inter:
            details["basic"] = True
            details["generator"] = g.text
            return CheckReport("gcd-intersection", HOLDS, (), details)
    details["basic"] = not inter
    if inter:
        return CheckReport(
            "gcd-intersection",
            WITNESS,
            tuple(sorted(inter, key=ring.class_sort_key)),
            details,
        )
    return CheckReport("gcd-intersection", HOLDS, (), details)


# ---------------------------------------------------------------------------
# density


def density_check(ring: Ring, samples: Sequence[ClassId]) -> CheckReport:
    """Every sampled basic open contains an irreducible class."""
    if not ring.caps.is_atomic:
        raise NotAtomic(f"{ring.name} is not atomic")
    samples = list(samples)
    finds = []
    missing = []
    for a in samples:
        qs = ring.factor(a.rep)
        q = qs[0] if qs else None
        if q is None or not ring.divides(q.rep, a.rep):
            missing.append(a)
        else:
            finds.append([a.text, q.text])
    verdict = HOLDS if not missing else FAILS
    return CheckReport(
        "density",
        verdict,
        tuple(missing),
        {"checked": len(samples), "finds": finds},
    )


def dense_open_check(fragment: Fragment) -> CheckReport:
    """Dense opens all contain the isolated points, and their intersection is
    dense again (one-fragment Baire echo)."""
    if len(fragment) > 12:
        raise FragmentTooLargeForEnumeration(
            f"{len(fragment)} points exceeds the dense-open cap 12"
        )
    iso = fragment.point_set(
        p for p in fragment.points if len(fragment.basic_open(p)) == 1
    )
    full = fragment.full_set()
    dense_opens = []
    total = 0
    for o in fragment.enumerate_opens():
        total += 1
        if fragment.closure(o) == full:
            dense_opens.append(o)
    all_contain = all(iso <= o for o in dense_opens)
    inter = full
    for o in dense_opens:
        inter = inter & o
    inter_dense = fragment.closure(inter) == full
    ok = all_contain and inter_dense
    return CheckReport(
        "dense-open",
        HOLDS if ok else FAILS,
        () if ok else tuple(iso.classes()),
        {
            "opens": total,
            "dense_opens": len(dense_opens),
            "isolated": _texts(iso),
            "dense_opens_contain_isolated": all_contain,
            "intersection_of_dense_opens": _texts(inter),
            "intersection_dense": inter_dense,
        },
    )


# ---------------------------------------------------------------------------
# connectivity and neighborhood witnesses


def ultraconnected_witness(ring: Ring, a: ClassId, b: ClassId) -> CheckReport:
    """The product class lies in the closure of both singletons."""
    ab = ring.mul_class(a, b)
    left = ring.divides(a.rep, ab.rep)
    right = ring.divides(b.rep, ab.rep)
    verdict = WITNESS if (left and right) else FAILS
    return CheckReport(
        "ultra",
        verdict,
        (ab,),
        {
            "left": a.text,
            "right": b.text,
            "product": ab.text,
            "product_in_closure_of_left": left,
            "product_in_closure_of_right": right,
        },
    )


def no_disjoint_nbhd_witness(
    ring: Ring, a: ClassId, b: ClassId, c: ClassId
) -> CheckReport:
    """{[ab]} and {[ac]} are separated yet share every open neighborhood pair:
    both minimal opens contain the divisors of a."""
    for x in (a, b, c):
        if not ring.is_irreducible(x.rep):
            raise NotIrreducible(f"{x.text} is not irreducible in {ring.name}")
    if len({a, b, c}) < 3:
        raise AssociatedInputs("inputs must be pairwise non-associated")
    ab = ring.mul_class(a, b)
    ac = ring.mul_class(a, c)
    separated = not ring.divides(ab.rep, ac.rep) and not ring.divides(ac.rep, ab.rep)
    dab = ring.divisor_classes(ab.rep)
    dac = ring.divisor_classes(ac.rep)
    da = ring.divisor_classes(a.rep)
    common_contains_ua = da <= (dab & dac)
    verdict = WITNESS if (separated and common_contains_ua) else FAILS
    return CheckReport(
        "sep-nbhd",
        verdict,
        (ab, ac),
        {
            "separated_pair": [ab.text, ac.text],
            "separated": separated,
            "minimal_open_intersection": _texts(dab & dac),
            "contains_basic_open_of": a.text,
            "common_point": a.text,
        },
    )


def non_regular_witness(ring: Ring, a: ClassId) -> CheckReport:
    """{[a]} is not closed: its closure picks up the square."""
    a2 = ring.mul_class(a, a)
    fragment = build_fragment(ring, [a2])
    singleton = fragment.point_set([a])
    cl = fragment.closure(singleton)
    not_closed = not fragment.is_closed(singleton) and a2 in cl
    verdict = WITNESS if not_closed else FAILS
    return CheckReport(
        "regular",
        verdict,
        (a, a2),
        {
            "closure_of_singleton": _texts(cl),
            "singleton_closed": fragment.is_closed(singleton),
        },
    )


def non_compact_witness(
    ring: Ring, x: ClassId, family: Optional[Sequence[ClassId]] = None
) -> CheckReport:
    """x^2 never divides x back, while closures of finitely many singletons
    still meet in the product class."""
    x2 = ring.mul_class(x, x)
    escapes = not ring.divides(x2.rep, x.rep)
    details = {
        "point": x.text,
        "square": x2.text,
        "square_divides_point": not escapes,
    }
    ok = escapes
    if family:
        prod = family[0]
        for c in family[1:]:
            prod = ring.mul_class(prod, c)
        hits = all(ring.divides(c.rep, prod.rep) for c in family)
        details["family"] = [c.text for c in family]
        details["common_point"] = prod.text
        details["common_point_in_every_closure"] = hits
        ok = ok and hits
    verdict = WITNESS if ok else FAILS
    return CheckReport("compact", verdict, (x, x2), details)


# ---------------------------------------------------------------------------
# chain conditions


def noetherian_chain(ring: Ring, a: ClassId, n: int) -> CheckReport:
    """Basic opens of a, a^2, ..., a^n grow strictly at every step."""
    if n < 2:
        raise ValueError("chain length must be >= 2")
    powers = [a]
    for _ in range(n - 1):
        powers.append(ring.mul_class(powers[-1], a))
    fragment = build_fragment(ring, [powers[-1]])
    sizes = [len(fragment.basic_open(p)) for p in powers]
    strict = all(s < t for s, t in zip(sizes, sizes[1:]))
    steps_escape = all(
        not ring.divides(powers[k + 1].rep, powers[k].rep) for k in range(n - 1)
    )
    verdict = WITNESS if (strict and steps_escape) else FAILS
    return CheckReport(
        "chain",
        verdict,
        (a,),
        {
            "chain": [f"U_{p.text}" for p in powers],
            "sizes": sizes,
            "strictly_increasing": strict,
            "no_step_divides_back": steps_escape,
        },
    )


def maximal_basic_open(fragment: Fragment, subfamily: Sequence[ClassId]) -> CheckReport:
    """Inclusion-maximal members of a finite family of basic opens."""
    subfamily = list(subfamily)
    if not subfamily:
        raise EmptyFamily("subfamily of basic opens is empty")
    opens = [(p, fragment.basic_open(p)) for p in subfamily]
    maximal = []
    for p, o in opens:
        if any(o.bits != q.bits and o <= q for _, q in opens):
            continue
        maximal.append(p)
    order = {c: i for i, c in enumerate(fragment.points)}
    maximal = sorted(set(maximal), key=lambda c: order[c])
    return CheckReport(
        "maximal",
        WITNESS,
        tuple(maximal),
        {
            "family": [p.text for p in subfamily],
            "maximal": [p.text for p in maximal],
        },
    )

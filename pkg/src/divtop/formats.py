"""Element parsing, fragment/report serialization, and DOT export.

JSON documents carry the schema tag "divtop/1", fixed key order, and points
in fragment order, so identical inputs always serialize to identical bytes.
The DOT export draws the covering relation (transitive reduction) with nodes
ranked by divisor count.
"""

from __future__ import annotations

import json

from .checks import CheckReport
from .errors import DivtopError
from .rings import ClassId, Ring, make_ring
from .topology import Fragment, PointSet, build_fragment

SCHEMA = "divtop/1"


def parse_element(ring: Ring, text: str):
    """Exact parse of one element in the ring's text grammar.

    Zero and out-of-guard values are legal here; they are rejected by class
    construction, not by the parser.
    """
    return ring.parse(text)


def ring_descriptor(ring: Ring) -> dict:
    d = {"tag": ring.tag}
    if ring.p is not None:
        d["p"] = ring.p
    return d


def ring_from_descriptor(d: dict) -> Ring:
    return make_ring(d["tag"], d.get("p"))


def _dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def fragment_to_json(fragment: Fragment) -> str:
    texts = [p.text for p in fragment.points]
    edges = [
        [texts[i], texts[j]] for i, j in sorted(fragment.covering_pairs())
    ]
    doc = {
        "schema": SCHEMA,
        "ring": ring_descriptor(fragment.ring),
        "seeds": [s.text for s in fragment.seeds],
        "points": texts,
        "edges": edges,
    }
    return _dumps(doc)


def fragment_from_json(text: str) -> Fragment:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise DivtopError(f"unsupported schema {doc.get('schema')!r}")
    ring = ring_from_descriptor(doc["ring"])
    seeds = tuple(ring.canonical_class(ring.parse(t)) for t in doc["seeds"])
    fragment = build_fragment(ring, seeds)
    points = [p.text for p in fragment.points]
    if points != doc["points"]:
        raise DivtopError("point list does not match the fragment its seeds build")
    return fragment


def fragment_to_dot(fragment: Fragment) -> str:
    texts = [p.text for p in fragment.points]
    lines = ["digraph fragment {", "  rankdir=BT;"]
    for t in texts:
        lines.append(f'  "{t}";')
    by_rank: dict = {}
    for i, p in enumerate(fragment.points):
        by_rank.setdefault(len(fragment.basic_open(p)), []).append(texts[i])
    for rank in sorted(by_rank):
        row = " ".join(f'"{t}";' for t in by_rank[rank])
        lines.append(f"  {{ rank=same; {row} }}")
    for i, j in sorted(fragment.covering_pairs()):
        lines.append(f'  "{texts[i]}" -> "{texts[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _plain(value):
    if isinstance(value, ClassId):
        return value.text
    if isinstance(value, PointSet):
        return list(value.texts())
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def report_to_json(report: CheckReport) -> str:
    doc = {
        "check": report.check,
        "verdict": report.verdict,
        "witnesses": [w.text for w in report.witnesses],
        "details": _plain(dict(report.details)),
    }
    return _dumps(doc)


def primes_to_json(ring: Ring, members) -> str:
    doc = {
        "schema": SCHEMA,
        "ring": ring_descriptor(ring),
        "members": [c.text for c in members],
    }
    return _dumps(doc)

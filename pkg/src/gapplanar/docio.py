"""Document schemas: drawings, crossing reports, certificates, manifests.

Documents are JSON with a fixed field order, so serialized bytes are
deterministic for a given value.  Rational coordinates are emitted as plain
integers when integral and as "p/q" strings otherwise; loading parses
integers, decimal strings, and "p/q" strings exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Union

from .geometry import (Crossing, CrossingSet, DegeneracyReport, Drawing,
                       DrawingError, Edge, Point, to_fraction)
from .solver import GapAssignment, ViolationWitness


def frac_out(f: Fraction) -> Union[int, str]:
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _point_out(p: Point) -> dict:
    return {"x": frac_out(p.x), "y": frac_out(p.y)}


def _point_in(obj: Any, where: str) -> Point:
    if not isinstance(obj, dict) or "x" not in obj or "y" not in obj:
        raise DrawingError(f"schema violation: bad point in {where}")
    return Point(to_fraction(obj["x"]), to_fraction(obj["y"]))


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DrawingError(f"schema violation: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise DrawingError("schema violation: top level must be an object")
    return doc


# -- drawings ---------------------------------------------------------------

def drawing_to_doc(d: Drawing) -> dict:
    return {
        "multigraph": d.multigraph,
        "vertices": [{"id": vid, "x": frac_out(p.x), "y": frac_out(p.y)}
                     for vid, p in sorted(d.vertices)],
        "edges": [{"id": e.id, "source": e.source, "target": e.target,
                   "bends": [_point_out(b) for b in e.bends]}
                  for e in sorted(d.edges, key=lambda e: e.id)],
    }


def load_drawing(doc: dict) -> Drawing:
    """Validate a drawing document and parse coordinates exactly."""
    for field in ("vertices", "edges"):
        if field not in doc or not isinstance(doc[field], list):
            raise DrawingError(f"schema violation: missing list {field!r}")
    vertices = []
    for v in doc["vertices"]:
        if not isinstance(v, dict) or not {"id", "x", "y"} <= set(v):
            raise DrawingError("schema violation: vertex needs id, x, y")
        vertices.append((str(v["id"]), Point(to_fraction(v["x"]),
                                             to_fraction(v["y"]))))
    edges = []
    for e in doc["edges"]:
        if not isinstance(e, dict) or not {"id", "source", "target"} <= set(e):
            raise DrawingError("schema violation: edge needs id, source, target")
        bends = tuple(_point_in(b, f"edge {e['id']}")
                      for b in e.get("bends", []))
        edges.append(Edge(str(e["id"]), str(e["source"]), str(e["target"]),
                          bends))
    return Drawing(tuple(vertices), tuple(edges),
                   bool(doc.get("multigraph", False)))


def load_drawing_text(text: str) -> Drawing:
    return load_drawing(loads(text))


# -- crossing report --------------------------------------------------------

def crossing_report_doc(cs: CrossingSet, report: DegeneracyReport) -> dict:
    return {
        "crossings": [{"id": c.id, "edge_a": c.edge_a, "edge_b": c.edge_b,
                       "point": _point_out(c.point),
                       "segment_a": c.seg_a, "segment_b": c.seg_b}
                      for c in cs],
        "degeneracy_report": {
            "self_crossing_edges": list(report.self_crossing_edges),
            "multiply_crossing_pairs": [list(p) for p
                                        in report.multiply_crossing_pairs],
            "adjacent_crossings": list(report.adjacent_crossings),
        },
    }


# -- certificates -----------------------------------------------------------

def assignment_to_doc(ga: GapAssignment) -> dict:
    return {
        "k": ga.k,
        "assignments": [{"crossing": cid, "edge": eid}
                        for cid, eid in sorted(ga.assignment.items())],
        "gaps_per_edge": [{"edge": eid, "count": c}
                          for eid, c in sorted(ga.gaps_per_edge.items())],
    }


def doc_to_assignment(doc: dict) -> GapAssignment:
    try:
        assignment = {a["crossing"]: a["edge"] for a in doc["assignments"]}
        gaps = {g["edge"]: int(g["count"]) for g in doc["gaps_per_edge"]}
        return GapAssignment(k=int(doc["k"]), assignment=assignment,
                             gaps_per_edge=gaps)
    except (KeyError, TypeError) as exc:
        raise DrawingError(f"schema violation in assignment document: {exc}")


def witness_to_doc(w: ViolationWitness) -> dict:
    return {"k": w.k, "subset": list(w.edges),
            "crossings_in_subset": w.crossings_in_subset}


def doc_to_witness(doc: dict) -> ViolationWitness:
    try:
        return ViolationWitness(k=int(doc["k"]),
                                edges=tuple(doc["subset"]),
                                crossings_in_subset=int(doc["crossings_in_subset"]))
    except (KeyError, TypeError) as exc:
        raise DrawingError(f"schema violation in witness document: {exc}")

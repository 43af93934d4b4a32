"""Exact-rational representation of graph drawings and their crossings.

Coordinates are `fractions.Fraction` throughout: every intersection predicate
is decided exactly, so a crossing either exists or it does not, and recomputing
a crossing set (possibly after a rational translation) reproduces it verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

Coord = Union[int, str, Fraction]


class DrawingError(ValueError):
    """Structural problem in a drawing document (schema, dangling ids, ...)."""


class DegeneracyError(ValueError):
    """Geometric degeneracy the gap model cannot tolerate (triple point,
    collinear overlap, crossing at a bend point, edge through a vertex)."""


def to_fraction(value: Coord) -> Fraction:
    """Parse a coordinate: int, Fraction, decimal string or 'p/q' string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DrawingError(f"bad coordinate {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # floats are accepted but converted via their exact decimal repr so the
        # same document read twice yields identical rationals
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DrawingError(f"bad coordinate {value!r}") from exc
    raise DrawingError(f"bad coordinate {value!r}")


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, f: Fraction) -> "Point":
        f = Fraction(f)
        return Point(self.x * f, self.y * f)


def pt(x: Coord, y: Coord) -> Point:
    return Point(to_fraction(x), to_fraction(y))


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (d > 0) - (d < 0)


def on_segment(a: Point, b: Point, p: Point) -> bool:
    """True iff p lies on the closed segment ab (a==b allowed)."""
    if orient(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def segment_intersection(a: Point, b: Point, c: Point, d: Point):
    """Classify the intersection of closed segments ab and cd.

    Returns one of
      ('none', None)
      ('proper', point)   -- transversal crossing interior to both segments
      ('touch', point)    -- single common point, not interior to both
      ('overlap', None)   -- collinear overlap in more than one point
    """
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)

    if o1 != o2 and o3 != o4 and o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        r = b - a
        s = d - c
        denom = r.x * s.y - r.y * s.x
        t = ((c.x - a.x) * s.y - (c.y - a.y) * s.x) / denom
        return "proper", Point(a.x + t * r.x, a.y + t * r.y)

    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        # collinear: overlap, touch at one point, or disjoint
        pts = [p for p in (c, d) if on_segment(a, b, p)]
        pts += [p for p in (a, b) if on_segment(c, d, p) and p not in pts]
        if not pts:
            return "none", None
        if all(p == pts[0] for p in pts):
            return "touch", pts[0]
        return "overlap", None

    # non-collinear but some endpoint lies on the other segment
    for p, (u, v) in ((c, (a, b)), (d, (a, b)), (a, (c, d)), (b, (c, d))):
        if on_segment(u, v, p):
            return "touch", p
    return "none", None


@dataclass(frozen=True)
class Edge:
    id: str
    source: str
    target: str
    bends: tuple[Point, ...] = ()


@dataclass(frozen=True)
class Drawing:
    """A polyline drawing: vertex points plus edges with optional bends."""

    vertices: tuple[tuple[str, Point], ...]
    edges: tuple[Edge, ...]
    multigraph: bool = False

    def __post_init__(self):
        object.__setattr__(self, "_vpos", dict(self.vertices))
        object.__setattr__(self, "_emap", {e.id: e for e in self.edges})
        self._validate()

    def _validate(self) -> None:
        if len(self._vpos) != len(self.vertices):
            raise DrawingError("duplicate vertex id")
        if len(self._emap) != len(self.edges):
            raise DrawingError("duplicate edge id")
        seen_points: dict[Point, str] = {}
        for vid, p in self.vertices:
            if p in seen_points:
                raise DrawingError(
                    f"vertices {seen_points[p]!r} and {vid!r} share the point "
                    f"({p.x}, {p.y})")
            seen_points[p] = vid
        pairs: set[frozenset[str]] = set()
        for e in self.edges:
            for end in (e.source, e.target):
                if end not in self._vpos:
                    raise DrawingError(
                        f"dangling endpoint: edge {e.id!r} references {end!r}")
            poly = self.polyline(e.id)
            for p, q in zip(poly, poly[1:]):
                if p == q:
                    raise DrawingError(
                        f"edge {e.id!r} has two consecutive equal points")
            if not self.multigraph:
                if e.source == e.target:
                    raise DrawingError(f"self-loop {e.id!r} in a simple graph")
                key = frozenset((e.source, e.target))
                if key in pairs:
                    raise DrawingError(
                        f"parallel edges on {set(key)} in a simple graph")
                pairs.add(key)
        self._check_vertices_off_edges()

    def _check_vertices_off_edges(self) -> None:
        for e in self.edges:
            poly = self.polyline(e.id)
            ends = {poly[0], poly[-1]}
            for vid, p in self.vertices:
                if p in ends:
                    continue
                for a, b in zip(poly, poly[1:]):
                    if on_segment(a, b, p):
                        raise DegeneracyError(
                            f"edge {e.id!r} passes through vertex {vid!r}")

    # -- accessors ---------------------------------------------------------

    def vertex_point(self, vid: str) -> Point:
        return self._vpos[vid]

    def edge(self, eid: str) -> Edge:
        return self._emap[eid]

    def edge_ids(self) -> list[str]:
        return [e.id for e in self.edges]

    def polyline(self, eid: str) -> list[Point]:
        e = self._emap[eid]
        return [self._vpos[e.source], *e.bends, self._vpos[e.target]]

    def segments(self, eid: str) -> list[tuple[Point, Point]]:
        poly = self.polyline(eid)
        return list(zip(poly, poly[1:]))

    def adjacent(self, eid1: str, eid2: str) -> bool:
        e1, e2 = self._emap[eid1], self._emap[eid2]
        return bool({e1.source, e1.target} & {e2.source, e2.target})

    def translated(self, dx: Coord, dy: Coord) -> "Drawing":
        d = Point(to_fraction(dx), to_fraction(dy))
        return Drawing(
            vertices=tuple((vid, p + d) for vid, p in self.vertices),
            edges=tuple(
                Edge(e.id, e.source, e.target, tuple(b + d for b in e.bends))
                for e in self.edges),
            multigraph=self.multigraph)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)


def drawing(vertices: Iterable[tuple[str, Coord, Coord]],
            edges: Iterable[tuple] ,
            multigraph: bool = False) -> Drawing:
    """Convenience constructor from plain tuples.

    Edges are (id, source, target) or (id, source, target, [(x, y), ...]).
    """
    vs = tuple((vid, pt(x, y)) for vid, x, y in vertices)
    es = []
    for spec in edges:
        if len(spec) == 3:
            eid, s, t = spec
            bends: tuple[Point, ...] = ()
        else:
            eid, s, t, raw = spec
            bends = tuple(pt(x, y) for x, y in raw)
        es.append(Edge(eid, s, t, bends))
    return Drawing(vs, tuple(es), multigraph)


@dataclass(frozen=True)
class Crossing:
    id: str
    edge_a: str
    edge_b: str
    point: Point
    seg_a: int
    seg_b: int


@dataclass(frozen=True)
class CrossingSet:
    crossings: tuple[Crossing, ...]

    def __len__(self) -> int:
        return len(self.crossings)

    def __iter__(self):
        return iter(self.crossings)

    def by_id(self, cid: str) -> Crossing:
        for c in self.crossings:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def count_within(self, edge_subset: Iterable[str]) -> int:
        """Number of crossings both of whose responsible edges are in the subset."""
        sub = set(edge_subset)
        return sum(1 for c in self.crossings
                   if c.edge_a in sub and c.edge_b in sub)


@dataclass(frozen=True)
class DegeneracyReport:
    """Soft flags from crossing computation (hard errors raise instead)."""

    self_crossing_edges: tuple[str, ...] = ()
    multiply_crossing_pairs: tuple[tuple[str, str], ...] = ()
    adjacent_crossings: tuple[str, ...] = ()

    @property
    def clean(self) -> bool:
        return not (self.self_crossing_edges or self.multiply_crossing_pairs
                    or self.adjacent_crossings)


def _float_bbox(poly: Sequence[Point]) -> tuple[float, float, float, float]:
    xs = [float(p.x) for p in poly]
    ys = [float(p.y) for p in poly]
    return min(xs), min(ys), max(xs), max(ys)


def compute_crossings(d: Drawing) -> tuple[CrossingSet, DegeneracyReport]:
    """All transversal crossings between segments of distinct edges.

    Hard errors (DegeneracyError): three or more edges through one point,
    collinear overlapping segments, a crossing located at a polyline bend
    point or at a vertex.  Soft conditions (self-crossings, edge pairs
    crossing more than once, crossings of adjacent edges) go into the report.
    """
    eids = d.edge_ids()
    polys = {eid: d.polyline(eid) for eid in eids}
    segs = {eid: list(zip(polys[eid], polys[eid][1:])) for eid in eids}
    boxes = {}
    for eid in eids:
        poly = polys[eid]
        boxes[eid] = [_float_bbox([a, b]) for a, b in segs[eid]]

    # bend points (polyline interior points) per edge; crossings may not sit on them
    bend_points = {eid: set(polys[eid][1:-1]) for eid in eids}
    vertex_points = {p for _, p in d.vertices}

    raw: list[Crossing] = []
    self_crossing: set[str] = set()
    eps = 1e-9

    for i, ea in enumerate(eids):
        for eb in eids[i + 1:]:
            shared = set()
            e1, e2 = d.edge(ea), d.edge(eb)
            for v in (e1.source, e1.target):
                if v in (e2.source, e2.target):
                    shared.add(d.vertex_point(v))
            for ia, (a, b) in enumerate(segs[ea]):
                ba = boxes[ea][ia]
                for ib, (c, cd) in enumerate(segs[eb]):
                    bb = boxes[eb][ib]
                    if (ba[2] < bb[0] - eps or bb[2] < ba[0] - eps
                            or ba[3] < bb[1] - eps or bb[3] < ba[1] - eps):
                        continue
                    kind, p = segment_intersection(a, b, c, cd)
                    if kind == "none":
                        continue
                    if kind == "overlap":
                        raise DegeneracyError(
                            f"edges {ea!r} and {eb!r} have collinear "
                            f"overlapping segments")
                    if kind == "touch":
                        if p in shared and p in (a, b) and p in (c, cd):
                            continue  # meeting at their common endpoint
                        raise DegeneracyError(
                            f"edges {ea!r} and {eb!r} touch without crossing "
                            f"transversally at ({p.x}, {p.y})")
                    # proper crossing
                    if p in bend_points[ea] or p in bend_points[eb]:
                        raise DegeneracyError(
                            f"edges {ea!r} and {eb!r} cross at a polyline "
                            f"bend point ({p.x}, {p.y})")
                    if p in vertex_points:
                        raise DegeneracyError(
                            f"edges {ea!r} and {eb!r} cross at a vertex point "
                            f"({p.x}, {p.y})")
                    raw.append(Crossing("", ea, eb, p, ia, ib))

    # self-crossings: non-adjacent segment pairs of one edge
    for eid in eids:
        ss = segs[eid]
        for ia in range(len(ss)):
            for ib in range(ia + 1, len(ss)):
                a, b = ss[ia]
                c, cd = ss[ib]
                kind, p = segment_intersection(a, b, c, cd)
                if kind == "none":
                    continue
                if ib == ia + 1:
                    if kind == "touch" and p == b:
                        continue  # consecutive segments share the bend
                    raise DegeneracyError(
                        f"edge {eid!r} degenerate at its own bend")
                if kind == "proper":
                    self_crossing.add(eid)
                elif kind == "overlap":
                    raise DegeneracyError(
                        f"edge {eid!r} overlaps itself")
                else:
                    raise DegeneracyError(
                        f"edge {eid!r} touches itself at ({p.x}, {p.y})")
        # closed polylines (self-loops) legitimately share their endpoint
        poly = polys[eid]
        if poly[0] == poly[-1] and len(poly) > 2:
            pass

    # triple points: same point in crossings of >= 3 distinct edges
    by_point: dict[Point, set[str]] = {}
    for c in raw:
        by_point.setdefault(c.point, set()).update((c.edge_a, c.edge_b))
    for p, involved in by_point.items():
        if len(involved) > 2:
            raise DegeneracyError(
                f"edges {sorted(involved)} pass through the common point "
                f"({p.x}, {p.y})")

    raw.sort(key=lambda c: (c.edge_a, c.edge_b, c.seg_a, c.seg_b,
                            c.point.x, c.point.y))
    crossings = tuple(
        Crossing(f"c{i}", c.edge_a, c.edge_b, c.point, c.seg_a, c.seg_b)
        for i, c in enumerate(raw))

    pair_counts: dict[tuple[str, str], int] = {}
    adjacent: list[str] = []
    for c in crossings:
        key = (c.edge_a, c.edge_b)
        pair_counts[key] = pair_counts.get(key, 0) + 1
        if d.adjacent(c.edge_a, c.edge_b):
            adjacent.append(c.id)
    multi = tuple(sorted(k for k, v in pair_counts.items() if v >= 2))

    report = DegeneracyReport(
        self_crossing_edges=tuple(sorted(self_crossing)),
        multiply_crossing_pairs=multi,
        adjacent_crossings=tuple(adjacent))
    return CrossingSet(crossings), report


@dataclass(frozen=True)
class CrossingGraph:
    """One node per drawn edge, one arc per crossing (parallel arcs kept)."""

    nodes: tuple[str, ...]
    arcs: tuple[tuple[str, str, str], ...]  # (crossing id, edge a, edge b)

    def __post_init__(self):
        adj: dict[str, list[tuple[str, str]]] = {n: [] for n in self.nodes}
        for cid, a, b in self.arcs:
            adj[a].append((cid, b))
            adj[b].append((cid, a))
        object.__setattr__(self, "_adj", adj)

    def neighbors(self, node: str) -> list[tuple[str, str]]:
        """(crossing id, other endpoint) with multiplicity."""
        return self._adj[node]

    def degree(self, node: str) -> int:
        return len(self._adj[node])

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)


def crossing_graph(cs: CrossingSet,
                   isolated: Iterable[str] = ()) -> CrossingGraph:
    """Build the crossing graph; `isolated` adds crossing-free edge nodes."""
    nodes: list[str] = []
    seen = set()
    for c in cs:
        for e in (c.edge_a, c.edge_b):
            if e not in seen:
                seen.add(e)
                nodes.append(e)
    for e in isolated:
        if e not in seen:
            seen.add(e)
            nodes.append(e)
    arcs = tuple((c.id, c.edge_a, c.edge_b) for c in cs)
    return CrossingGraph(tuple(sorted(nodes)), arcs)


@dataclass(frozen=True)
class SimplicityReport:
    is_simple_topological: bool
    self_crossing_edges: tuple[str, ...]
    multiply_crossing_pairs: tuple[tuple[str, str], ...]
    adjacent_crossings: tuple[str, ...]


def simplicity_report(d: Drawing, cs: CrossingSet,
                      report: DegeneracyReport) -> SimplicityReport:
    """Is the drawing simple-topological (no self-crossings, every pair of
    edges crossing at most once)?  No redrawing is attempted."""
    return SimplicityReport(
        is_simple_topological=not (report.self_crossing_edges
                                   or report.multiply_crossing_pairs),
        self_crossing_edges=report.self_crossing_edges,
        multiply_crossing_pairs=report.multiply_crossing_pairs,
        adjacent_crossings=report.adjacent_crossings)


def _polygon_contains(polygon: Sequence[Point], p: Point) -> bool:
    """Exact even-odd test; points on the boundary count as not inside."""
    for a, b in zip(polygon, list(polygon[1:]) + [polygon[0]]):
        if on_segment(a, b, p):
            return False
    inside = False
    for a, b in zip(polygon, list(polygon[1:]) + [polygon[0]]):
        if (a.y > p.y) != (b.y > p.y):
            # x coordinate of the segment at height p.y
            t = (p.y - a.y) / (b.y - a.y)
            x = a.x + t * (b.x - a.x)
            if x > p.x:
                inside = not inside
    return inside


def _simple_closed(poly: Sequence[Point]) -> bool:
    """Is the closed polyline simple? poly lists the cycle without repetition."""
    n = len(poly)
    segs = [(poly[i], poly[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = segs[i]
            c, d = segs[j]
            kind, p = segment_intersection(a, b, c, d)
            if kind == "none":
                continue
            if (j == i + 1 or (i == 0 and j == n - 1)):
                if kind == "touch" and p in (a, b) and p in (c, d):
                    continue
                return False
            return False
    return True


def homotopic_parallel_pairs(d: Drawing, cs: CrossingSet) -> dict:
    """Classify parallel edge pairs as homotopic / not / undecided.

    A pair is homotopic iff the closed curve formed by the two polylines is
    simple and encloses no vertex point.  Pairs whose union is not a simple
    closed curve (they cross each other or themselves) are 'undecided'.
    """
    if not d.multigraph:
        return {"homotopic": [], "not_homotopic": [], "undecided": []}
    groups: dict[frozenset[str], list[Edge]] = {}
    for e in d.edges:
        if e.source != e.target:
            groups.setdefault(frozenset((e.source, e.target)), []).append(e)

    homotopic, not_homotopic, undecided = [], [], []
    for key, group in sorted(groups.items(), key=lambda kv: sorted(kv[0])):
        if len(group) < 2:
            continue
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                e1, e2 = group[i], group[j]
                pair = (e1.id, e2.id)
                p1 = d.polyline(e1.id)
                p2 = d.polyline(e2.id)
                if p2[0] != p1[0]:
                    p2 = list(reversed(p2))
                # closed cycle: p1 then p2 reversed, dropping duplicate joints
                cycle = p1[:-1] + list(reversed(p2))[:-1]
                if len(cycle) < 3 or not _simple_closed(cycle):
                    undecided.append(pair)
                    continue
                endpoints = {p1[0], p1[-1]}
                enclosed = [vid for vid, p in d.vertices
                            if p not in endpoints and _polygon_contains(cycle, p)]
                if enclosed:
                    not_homotopic.append(pair)
                else:
                    homotopic.append(pair)
    return {"homotopic": homotopic, "not_homotopic": not_homotopic,
            "undecided": undecided}


def max_crossings_per_edge(cs: CrossingSet,
                           all_edges: Iterable[str] = ()) -> tuple[dict, int]:
    """Per-edge crossing counts and the maximum (the drawing's k-planarity)."""
    counts: dict[str, int] = {e: 0 for e in all_edges}
    for c in cs:
        counts[c.edge_a] = counts.get(c.edge_a, 0) + 1
        counts[c.edge_b] = counts.get(c.edge_b, 0) + 1
    return counts, (max(counts.values()) if counts else 0)

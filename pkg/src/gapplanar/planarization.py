"""Planarization of a drawing: one degree-4 dummy vertex per crossing.

The embedding is taken from the geometry (counterclockwise angular order of
the incident curve pieces at every node), and faces are traced with the
standard next-edge traversal of that rotation system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .geometry import (CrossingSet, DegeneracyError, DegeneracyReport,
                       Drawing, Point)


@dataclass(frozen=True)
class Planarization:
    """Plane graph with real vertices and one dummy vertex per crossing."""

    nodes: tuple[str, ...]  # 'v:<vertex id>' and 'x:<crossing id>'
    real_nodes: frozenset
    positions: dict  # node id -> Point
    pieces: tuple  # (piece id, node u, node v, polyline points)
    faces: tuple  # tuple of face walks, each a tuple of node ids

    @property
    def n_star(self) -> int:
        return len(self.nodes)

    @property
    def m_star(self) -> int:
        return len(self.pieces)

    @property
    def f_star(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class PlanarizationStats:
    n_star: int
    m_star: int
    f_star: int
    components: int
    connected: bool
    biconnected: bool
    euler_consistent: bool
    faces_per_real_vertex: dict  # vertex id -> |F(u)|
    real_pairs_sharing_face: tuple  # sorted unordered pairs of vertex ids
    per_component: tuple  # (n_i, m_i, f_i) when disconnected, else ()


def euler_face_count(n: int, m: int, components: int = 1) -> int:
    """Faces of a plane graph from Euler's formula (outer face included)."""
    return m - n + 1 + components


def _segment_param(a: Point, b: Point, p: Point) -> Fraction:
    if b.x != a.x:
        return (p.x - a.x) / (b.x - a.x)
    return (p.y - a.y) / (b.y - a.y)


def _dir_cmp(d1: Point, d2: Point) -> int:
    """Exact counterclockwise comparison of nonzero direction vectors."""
    def half(d: Point) -> int:
        return 0 if (d.y > 0 or (d.y == 0 and d.x > 0)) else 1
    h1, h2 = half(d1), half(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    cr = d1.x * d2.y - d1.y * d2.x
    return 0 if cr == 0 else (-1 if cr > 0 else 1)


def planarize(d: Drawing, cs: CrossingSet,
              report: DegeneracyReport | None = None) -> Planarization:
    """Insert a dummy vertex at each crossing and trace the faces."""
    if report is not None and report.self_crossing_edges:
        raise DegeneracyError(
            "self-crossing edges cannot be planarized: "
            f"{report.self_crossing_edges}")

    positions: dict[str, Point] = {}
    real = []
    for vid, p in d.vertices:
        positions[f"v:{vid}"] = p
        real.append(f"v:{vid}")
    for c in cs:
        positions[f"x:{c.id}"] = c.point

    # events (crossing passages) along each edge, ordered along the polyline
    events: dict[str, list[tuple[int, Fraction, str]]] = {e: [] for e in d.edge_ids()}
    for c in cs:
        for eid, seg in ((c.edge_a, c.seg_a), (c.edge_b, c.seg_b)):
            segs = d.segments(eid)
            a, b = segs[seg]
            events[eid].append((seg, _segment_param(a, b, c.point), f"x:{c.id}"))
    for eid in events:
        events[eid].sort()

    pieces: list[tuple[str, str, str, tuple[Point, ...]]] = []
    for eid in d.edge_ids():
        e = d.edge(eid)
        poly = d.polyline(eid)
        cur_node = f"v:{e.source}"
        cur_pts: list[Point] = [poly[0]]
        idx = 0
        ev = events[eid]
        pos = 0
        for seg_i, (a, b) in enumerate(zip(poly, poly[1:])):
            while pos < len(ev) and ev[pos][0] == seg_i:
                _, _, node = ev[pos]
                p = positions[node]
                cur_pts.append(p)
                pieces.append((f"{eid}#{idx}", cur_node, node, tuple(cur_pts)))
                idx += 1
                cur_node = node
                cur_pts = [p]
                pos += 1
            cur_pts.append(b)
        pieces.append((f"{eid}#{idx}", cur_node, f"v:{e.target}", tuple(cur_pts)))

    faces = _trace_faces(positions, pieces)
    nodes = tuple(sorted(positions))
    plan = Planarization(nodes=nodes, real_nodes=frozenset(real),
                         positions=positions, pieces=tuple(pieces),
                         faces=faces)
    for node in nodes:
        if node.startswith("x:"):
            deg = sum((u == node) + (v == node) for _, u, v, _ in pieces)
            if deg != 4:
                raise DegeneracyError(f"dummy vertex {node} has degree {deg}")
    return plan


def _trace_faces(positions: dict, pieces: list) -> tuple:
    """Orbits of the next-edge rule on the geometric rotation system."""
    # half-edge h = (piece id, forward?) with tail/head and outgoing direction
    half_edges: list[tuple[str, bool]] = []
    tail: dict[tuple[str, bool], str] = {}
    head: dict[tuple[str, bool], str] = {}
    out_dir: dict[tuple[str, bool], Point] = {}
    for pid, u, v, pts in pieces:
        for fwd, (s, t, pp) in ((True, (u, v, pts)),
                                (False, (v, u, tuple(reversed(pts))))):
            h = (pid, fwd)
            half_edges.append(h)
            tail[h], head[h] = s, t
            out_dir[h] = pp[1] - pp[0]

    rotation: dict[str, list] = {}
    for h in half_edges:
        rotation.setdefault(tail[h], []).append(h)
    succ_cw: dict[tuple[str, bool], tuple[str, bool]] = {}
    for node, hs in rotation.items():
        hs.sort(key=cmp_to_key(lambda h1, h2: _dir_cmp(out_dir[h1], out_dir[h2])))
        for i, h in enumerate(hs):
            succ_cw[h] = hs[i - 1]  # clockwise neighbor in the rotation

    visited = set()
    faces = []
    for h0 in half_edges:
        if h0 in visited:
            continue
        walk = []
        h = h0
        while h not in visited:
            visited.add(h)
            walk.append(tail[h])
            twin = (h[0], not h[1])
            h = succ_cw[twin]
        faces.append(tuple(walk))
    return tuple(faces)


def _components(plan: Planarization) -> list[set]:
    adj: dict[str, set] = {n: set() for n in plan.nodes}
    for _, u, v, _ in plan.pieces:
        adj[u].add(v)
        adj[v].add(u)
    seen: set[str] = set()
    comps = []
    for n in plan.nodes:
        if n in seen:
            continue
        comp = {n}
        stack = [n]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def _biconnected(plan: Planarization) -> bool:
    nodes = plan.nodes
    if len(nodes) <= 1:
        return True
    adj: dict[str, list] = {n: [] for n in nodes}
    for pid, u, v, _ in plan.pieces:
        adj[u].append((pid, v))
        adj[v].append((pid, u))
    comps = _components(plan)
    if len(comps) > 1:
        return False
    if len(nodes) == 2:
        return len(plan.pieces) >= 1
    # iterative articulation-point detection; parallel pieces count as cycles,
    # so the tree edge (not the tree parent node) is what gets skipped
    root = nodes[0]
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    parent_edge: dict[str, str | None] = {root: None}
    timer = 0
    stack = [(root, iter(adj[root]))]
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    while stack:
        node, it = stack[-1]
        advanced = False
        for pid, nb in it:
            if nb not in disc:
                parent_edge[nb] = pid
                disc[nb] = low[nb] = timer
                timer += 1
                if node == root:
                    root_children += 1
                stack.append((nb, iter(adj[nb])))
                advanced = True
                break
            elif pid != parent_edge[node]:
                low[node] = min(low[node], disc[nb])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[node])
                if p != root and low[node] >= disc[p]:
                    return False
    return root_children <= 1


def planarization_stats(plan: Planarization) -> PlanarizationStats:
    """Counts, Euler consistency, biconnectivity, and face incidences."""
    comps = _components(plan)
    connected = len(comps) == 1
    f_star = plan.f_star
    if connected:
        euler_ok = f_star == euler_face_count(plan.n_star, plan.m_star)
    else:
        # face traversal counts every component's outer face separately
        euler_ok = True
        for comp in comps:
            m_i = sum(1 for _, u, v, _ in plan.pieces if u in comp)
            if m_i == 0:
                continue
            n_i = len(comp)
            f_i = sum(1 for walk in plan.faces if walk and walk[0] in comp)
            euler_ok = euler_ok and f_i == m_i - n_i + 2

    faces_per_real: dict[str, int] = {}
    pair_set = set()
    for walk in plan.faces:
        reals = sorted({n for n in walk if n in plan.real_nodes})
        for r in reals:
            faces_per_real[r] = faces_per_real.get(r, 0) + 1
        for i in range(len(reals)):
            for j in range(i + 1, len(reals)):
                pair_set.add((reals[i][2:], reals[j][2:]))
    for n in plan.real_nodes:
        faces_per_real.setdefault(n, 0)

    per_component: tuple = ()
    if not connected:
        rows = []
        for comp in comps:
            n_i = len(comp)
            m_i = sum(1 for _, u, v, _ in plan.pieces if u in comp)
            f_i = sum(1 for walk in plan.faces if walk and walk[0] in comp)
            rows.append((n_i, m_i, f_i))
        per_component = tuple(sorted(rows))

    return PlanarizationStats(
        n_star=plan.n_star,
        m_star=plan.m_star,
        f_star=f_star,
        components=len(comps),
        connected=connected,
        biconnected=_biconnected(plan),
        euler_consistent=euler_ok,
        faces_per_real_vertex={k[2:]: v for k, v in sorted(faces_per_real.items())},
        real_pairs_sharing_face=tuple(sorted(pair_set)),
        per_component=per_component)

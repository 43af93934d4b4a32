"""Gap feasibility, minimum gap number, and crossing-graph analyses.

Feasibility for a given k is a bipartite assignment problem: every crossing
must be charged to one of its two responsible edges, no edge taking more than
k crossings.  An augmenting-path search decides it; on failure, the edges
visited by the failed search form a Hall violator E' whose induced crossings
exceed k * |E'|, which is the infeasibility certificate.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Optional, Union

from .geometry import CrossingGraph


@dataclass(frozen=True)
class GapAssignment:
    """A k-gap assignment: each crossing charged to one responsible edge."""

    k: int
    assignment: dict  # crossing id -> edge id
    gaps_per_edge: dict  # edge id -> gap count (only gapped edges listed)

    def validate(self, cg: CrossingGraph) -> None:
        arcs = {cid: (a, b) for cid, a, b in cg.arcs}
        if set(self.assignment) != set(arcs):
            raise ValueError("assignment does not cover the crossing set")
        counts: dict[str, int] = {}
        for cid, eid in self.assignment.items():
            if eid not in arcs[cid]:
                raise ValueError(
                    f"crossing {cid!r} assigned to non-responsible edge {eid!r}")
            counts[eid] = counts.get(eid, 0) + 1
        if any(v > self.k for v in counts.values()):
            raise ValueError("an edge exceeds its gap budget")
        declared = {e: c for e, c in self.gaps_per_edge.items() if c}
        if declared != counts:
            raise ValueError("gaps_per_edge inconsistent with assignment")

    @property
    def gapped_edges(self) -> list[str]:
        return sorted(e for e, c in self.gaps_per_edge.items() if c > 0)


@dataclass(frozen=True)
class ViolationWitness:
    """An edge subset inducing more than k * |subset| crossings."""

    k: int
    edges: tuple[str, ...]
    crossings_in_subset: int

    def validate(self, cg: CrossingGraph) -> None:
        sub = set(self.edges)
        count = sum(1 for _, a, b in cg.arcs if a in sub and b in sub)
        if count != self.crossings_in_subset:
            raise ValueError("witness crossing recount mismatch")
        if count <= self.k * len(sub):
            raise ValueError("witness does not violate the inequality")


@dataclass(frozen=True)
class PseudoforestDecomposition:
    k: int
    parts: tuple[tuple[str, ...], ...]  # crossing ids per part


def feasible_k(cg: CrossingGraph,
               k: int) -> Union[GapAssignment, ViolationWitness]:
    """Decide k-gap feasibility of a crossing graph, with certificate.

    Crossings are processed in canonical id order and prefer the lower edge
    id, so the result is deterministic.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    arcs = sorted(cg.arcs)
    ends = {cid: tuple(sorted((a, b))) for cid, a, b in arcs}
    load: dict[str, list[str]] = {}

    def slots(eid: str) -> list[str]:
        return load.setdefault(eid, [])

    def try_insert(cid: str, options: tuple[str, ...],
                   visited: set[str]) -> bool:
        # direct placement on an edge with spare capacity
        for eid in options:
            if eid not in visited and len(slots(eid)) < k:
                visited.add(eid)
                slots(eid).append(cid)
                return True
        # relocate an occupant of a full edge
        for eid in options:
            if eid in visited:
                continue
            visited.add(eid)
            for occ in list(slots(eid)):
                other = tuple(e for e in ends[occ] if e != eid)
                if try_insert(occ, other, visited):
                    slots(eid).remove(occ)
                    slots(eid).append(cid)
                    return True
        return False

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * len(arcs) + 1000))
    try:
        for cid, a, b in arcs:
            visited: set[str] = set()
            if not try_insert(cid, ends[cid], visited):
                subset = tuple(sorted(visited))
                sub = set(subset)
                count = sum(1 for _, x, y in arcs if x in sub and y in sub)
                return ViolationWitness(k=k, edges=subset,
                                        crossings_in_subset=count)
    finally:
        sys.setrecursionlimit(old_limit)

    owner = {cid: eid for eid, cids in load.items() for cid in cids}
    gaps = {eid: len(cids) for eid, cids in sorted(load.items()) if cids}
    return GapAssignment(k=k, assignment=dict(sorted(owner.items())),
                         gaps_per_edge=gaps)


def min_gap_k(cg: CrossingGraph) -> dict:
    """Minimum k with a feasible assignment, plus both certificates.

    Binary search over [0, number of crossings]; returns {'k_star',
    'assignment', 'witness'} where the witness certifies infeasibility at
    k_star - 1 (None when k_star == 0).
    """
    lo, hi = 0, cg.num_arcs  # one edge can absorb all its crossings at k=total
    best: Optional[GapAssignment] = None
    while lo < hi:
        mid = (lo + hi) // 2
        result = feasible_k(cg, mid)
        if isinstance(result, GapAssignment):
            best = result
            hi = mid
        else:
            lo = mid + 1
    if best is None or best.k != lo:
        result = feasible_k(cg, lo)
        assert isinstance(result, GapAssignment)
        best = result
    witness = None
    if lo >= 1:
        w = feasible_k(cg, lo - 1)
        assert isinstance(w, ViolationWitness)
        witness = w
    return {"k_star": lo, "assignment": best, "witness": witness}


def brute_force_min_k(cg: CrossingGraph, guard: int = 20) -> int:
    """Exact minimum k by subset enumeration: the max over nonempty node
    subsets S of ceil(arcs(S) / |S|).  Independent oracle for min_gap_k."""
    nodes = list(cg.nodes)
    n = len(nodes)
    if n > guard:
        raise ValueError(f"brute force guard exceeded: {n} > {guard}")
    if n == 0 or cg.num_arcs == 0:
        return 0
    index = {v: i for i, v in enumerate(nodes)}
    mult: dict[tuple[int, int], int] = {}
    for _, a, b in cg.arcs:
        i, j = index[a], index[b]
        key = (min(i, j), max(i, j))
        mult[key] = mult.get(key, 0) + 1
    neigh: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (i, j), c in mult.items():
        neigh[i].append((j, c))
        neigh[j].append((i, c))

    arcs_in = [0] * (1 << n)
    best = 0
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        a = arcs_in[rest]
        for u, c in neigh[v]:
            if rest >> u & 1:
                a += c
        arcs_in[mask] = a
        if a:
            k = -(-a // mask.bit_count())
            if k > best:
                best = k
    return best


def pseudoforest_decomposition(cg: CrossingGraph,
                               ga: GapAssignment) -> PseudoforestDecomposition:
    """Split the crossing-graph arcs into k pseudoforests.

    The assignment orients every arc toward its assigned edge (indegree <= k);
    numbering each node's incoming arcs 0..k-1 yields k indegree-1 classes,
    and every indegree-1 graph is a pseudoforest.  Each class is verified.
    """
    ga.validate(cg)
    k = ga.k
    incoming: dict[str, list[str]] = {}
    for cid, a, b in sorted(cg.arcs):
        incoming.setdefault(ga.assignment[cid], []).append(cid)
    parts: list[list[str]] = [[] for _ in range(max(k, 1))]
    for eid, cids in sorted(incoming.items()):
        for slot, cid in enumerate(cids):
            parts[slot].append(cid)

    arc_ends = {cid: (a, b) for cid, a, b in cg.arcs}
    for part in parts:
        _check_pseudoforest([arc_ends[cid] for cid in part])
    return PseudoforestDecomposition(k=k, parts=tuple(tuple(p) for p in parts))


def _check_pseudoforest(arcs: list[tuple[str, str]]) -> None:
    """Union-find check that every component closes at most one cycle."""
    parent: dict[str, str] = {}
    cycles: dict[str, int] = {}

    def find(x: str) -> str:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in arcs:
        ra, rb = find(a), find(b)
        if ra == rb:
            cycles[ra] = cycles.get(ra, 0) + 1
            if cycles[ra] > 1:
                raise ValueError("part is not a pseudoforest")
        else:
            merged = cycles.pop(ra, 0) + cycles.pop(rb, 0)
            parent[ra] = rb
            if merged > 1:
                raise ValueError("part is not a pseudoforest")
            cycles[rb] = merged


def degeneracy(cg: CrossingGraph) -> dict:
    """Degeneracy by minimum-degree peeling (parallel arcs count toward
    degree).  Returns {'d', 'order'}; under the reversed order every node has
    at most d neighbors among later-peeled nodes."""
    degrees = {v: cg.degree(v) for v in cg.nodes}
    alive = set(cg.nodes)
    order: list[str] = []
    d = 0
    while alive:
        v = min(alive, key=lambda u: (degrees[u], u))
        d = max(d, degrees[v])
        order.append(v)
        alive.remove(v)
        for _, u in cg.neighbors(v):
            if u in alive:
                degrees[u] -= 1
    return {"d": d, "order": order}


def has_cycle(cg: CrossingGraph) -> dict:
    """Cycle detection; two parallel arcs between the same nodes already form
    a cycle of length 2.  Returns {'found', 'nodes', 'arcs'}."""
    parent: dict[str, str] = {}

    def find(x: str) -> str:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree: dict[str, list[tuple[str, str]]] = {v: [] for v in cg.nodes}
    for cid, a, b in sorted(cg.arcs):
        if find(a) == find(b):
            prev: dict[str, tuple[Optional[str], Optional[str]]] = {a: (None, None)}
            queue = [a]
            while queue:
                x = queue.pop(0)
                if x == b:
                    break
                for arc_id, y in tree[x]:
                    if y not in prev:
                        prev[y] = (x, arc_id)
                        queue.append(y)
            path_nodes = [b]
            path_arcs = [cid]
            x = b
            while prev[x][0] is not None:
                px, arc_id = prev[x]
                path_arcs.append(arc_id)
                path_nodes.append(px)
                x = px
            return {"found": True, "nodes": list(reversed(path_nodes)),
                    "arcs": list(reversed(path_arcs))}
        parent[find(a)] = find(b)
        tree[a].append((cid, b))
        tree[b].append((cid, a))
    return {"found": False, "nodes": [], "arcs": []}


def max_pairwise_crossing(cg: CrossingGraph, limit: int = 64) -> int:
    """Size of a maximum set of pairwise-crossing edges (exact max clique,
    branch and bound with greedy coloring).  Guarded by node count."""
    nodes = list(cg.nodes)
    n = len(nodes)
    if n > limit:
        raise ValueError(f"clique guard exceeded: {n} > {limit}")
    if n == 0:
        return 0
    index = {v: i for i, v in enumerate(nodes)}
    adj = [0] * n
    for _, a, b in cg.arcs:
        i, j = index[a], index[b]
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best
        if candidates == 0:
            if size > best:
                best = size
            return
        # greedy coloring of the candidates: color is an upper bound on the
        # clique extension, vertices visited in decreasing color order
        order: list[tuple[int, int]] = []
        uncolored = candidates
        color = 0
        while uncolored:
            color += 1
            cls = uncolored
            while cls:
                v = (cls & -cls).bit_length() - 1
                order.append((v, color))
                uncolored ^= 1 << v
                cls &= uncolored & ~adj[v]
        pool = candidates
        for v, c in reversed(order):
            if size + c <= best:
                return
            expand(pool & adj[v], size + 1)
            pool ^= 1 << v

    expand((1 << n) - 1, 0)
    return best

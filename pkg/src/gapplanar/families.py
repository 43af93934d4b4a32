"""Generators for the extremal and witness drawing families.

Every generator returns a GeneratedFamily whose declared counts have been
recomputed from the emitted drawing; a mismatch raises GenerationError, so a
returned family is always internally consistent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .geometry import (CrossingSet, DegeneracyError, Drawing, Edge, Point,
                       compute_crossings, crossing_graph, pt)
from .solver import GapAssignment, ViolationWitness, feasible_k, min_gap_k


class GenerationError(RuntimeError):
    """A generator failed to realize its declared crossing pattern."""


@dataclass(frozen=True)
class GeneratedFamily:
    family: str
    params: dict
    drawing: Drawing
    n: int
    m: int
    expected_crossings: int
    crossings: CrossingSet
    assignment: Optional[GapAssignment] = None

    def manifest(self) -> dict:
        doc = {"family": self.family, "params": self.params, "n": self.n,
               "m": self.m, "expected_crossings": self.expected_crossings}
        if self.assignment is not None:
            from .docio import assignment_to_doc
            doc["assignment"] = assignment_to_doc(self.assignment)
        return doc


def _finish(family: str, params: dict, d: Drawing, expected_crossings: int,
            assignment: Optional[GapAssignment] = None,
            solve_k: Optional[int] = None) -> GeneratedFamily:
    """Recount the drawing, check the declared crossing total, attach or
    solve a gap assignment, and package the family."""
    cs, report = compute_crossings(d)
    if len(cs) != expected_crossings:
        raise GenerationError(
            f"{family}: expected {expected_crossings} crossings, "
            f"drawing has {len(cs)}")
    ga = assignment
    if ga is None and solve_k is not None:
        result = feasible_k(crossing_graph(cs), solve_k)
        if isinstance(result, ViolationWitness):
            raise GenerationError(
                f"{family}: drawing is not {solve_k}-gap feasible")
        ga = result
    if ga is not None:
        ga.validate(crossing_graph(cs))
    return GeneratedFamily(family=family, params=params, drawing=d,
                           n=d.n, m=d.m, expected_crossings=expected_crossings,
                           crossings=cs, assignment=ga)


# -- shared geometry helpers -------------------------------------------------

_DIR_DEN = 10 ** 6


def _ratdir(deg: Fraction | int | float) -> Point:
    """Rational approximation of (cos deg, sin deg), symmetric per quadrant."""
    a = float(deg) % 360.0
    quadrant = int(a // 90.0)
    base = a - 90.0 * quadrant
    c = Fraction(round(math.cos(math.radians(base)) * _DIR_DEN), _DIR_DEN)
    s = Fraction(round(math.sin(math.radians(base)) * _DIR_DEN), _DIR_DEN)
    if quadrant == 0:
        return Point(c, s)
    if quadrant == 1:
        return Point(-s, c)
    if quadrant == 2:
        return Point(-c, -s)
    return Point(s, -c)


def _polar(radius, deg) -> Point:
    return _ratdir(deg).scale(Fraction(radius))


def _circle_point(t: Fraction, radius: Fraction) -> Point:
    """Exact rational point on the circle of the given radius (t = tan(a/2))."""
    den = 1 + t * t
    return Point(radius * (1 - t * t) / den, radius * 2 * t / den)


def _invert(p: Point, radius_sq: Fraction) -> Point:
    """Inversion in the circle of squared radius radius_sq (exact)."""
    norm = p.x * p.x + p.y * p.y
    if norm == 0:
        raise GenerationError("cannot invert the circle center")
    f = radius_sq / norm
    return Point(p.x * f, p.y * f)


def _densify(points: list[Point], pieces: int) -> list[Point]:
    """Subdivide every segment of a polyline into `pieces` equal parts."""
    out = [points[0]]
    for a, b in zip(points, points[1:]):
        for v in range(1, pieces):
            f = Fraction(v, pieces)
            out.append(Point(a.x + (b.x - a.x) * f, a.y + (b.y - a.y) * f))
        out.append(b)
    return out


def _shorten(deg: float) -> float:
    """Normalize an angular difference to (-180, 180]."""
    d = deg % 360.0
    return d - 360.0 if d > 180.0 else d


def _centroid(points: list[Point]) -> Point:
    n = len(points)
    return Point(sum(p.x for p in points) / n, sum(p.y for p in points) / n)


def _perp(v: Point) -> Point:
    return Point(-v.y, v.x)


# -- pentagram-in-a-face helper ----------------------------------------------

def _pentagram_polylines(corners: list[Point], toward: Point,
                         pull: Fraction = Fraction(1, 5),
                         twist: Fraction = Fraction(1, 40)) -> list[list[Point]]:
    """Five face diagonals (i, i+2) with a single bend near corner i+1.

    The bend near a corner is the corner pulled toward the given interior
    target plus a small perpendicular twist (the twist keeps insertion spokes
    off the bend points).  Returned in index order of the starting corner.
    """
    polys = []
    for i in range(5):
        mid = corners[(i + 1) % 5]
        inward = toward - mid
        bend = mid + inward.scale(pull) + _perp(inward).scale(twist)
        polys.append([corners[i], bend, corners[(i + 2) % 5]])
    return polys


def _pentagram_assignment_arcs(face_edges: list[str]) -> list[tuple[str, str]]:
    """Cyclic charging of a pentagram: the crossing of diagonals (i, i+2) and
    (i+1, i+3) goes to diagonal i+1.  Pairs are (crossing edge pair sorted),
    value = charged edge."""
    out = []
    for i in range(5):
        a, b = face_edges[i], face_edges[(i + 1) % 5]
        out.append((a, b))
    return out


# -- nested squares (K8 for s = 2) --------------------------------------------

def gen_nested_squares(s: int = 2) -> GeneratedFamily:
    """Concentric squares with 16 edges per consecutive ring, drawn as
    monotone spirals with 16 ring crossings, plus two face diagonals inside
    the innermost square and two routed around the outer face.

    n = 4s, m = 20s - 12 = 5n - 12; for s = 2 the drawing is K8.
    """
    if s < 2:
        raise ValueError("need at least two squares")
    radii = [Fraction(100) * 4 ** i for i in range(s)]
    offs = [45 if i % 2 == 0 else 0 for i in range(s)]

    vertices: list[tuple[str, Fraction, Fraction]] = []
    corners: list[list[Point]] = []
    for i in range(s):
        ring = []
        for j in range(4):
            p = _polar(radii[i], offs[i] + 90 * j)
            vertices.append((f"s{i}c{j}", p.x, p.y))
            ring.append(p)
        corners.append(ring)

    edges: list[tuple] = []
    for i in range(s):
        for j in range(4):
            edges.append((f"side-{i}-{j}", f"s{i}c{j}", f"s{i}c{(j + 1) % 4}"))

    # innermost diagonals: straight chords through the middle
    edges.append(("diag-in-0", "s0c0", "s0c2"))
    edges.append(("diag-in-1", "s0c1", "s0c3"))

    # ring spirals between consecutive squares
    for i in range(s - 1):
        r_in, r_out = radii[i], radii[i + 1]
        cap = r_out * Fraction(7, 10)
        for ji in range(4):
            alpha = offs[i] + 90 * ji
            for jo in range(4):
                beta = offs[i + 1] + 90 * jo
                delta = _shorten(beta - alpha)
                eps = (ji + 1) * 2.0 * (-1 if delta > 0 else 1)
                sweep = delta + eps
                steps = max(2, int(abs(sweep) / 15.0) + 1)
                bends = []
                for v in range(1, steps + 1):
                    f = Fraction(v, steps)
                    ang = alpha + sweep * v / steps
                    rad = r_in + (cap - r_in) * f
                    bends.append(_polar(rad, ang))
                poly = [(p.x, p.y) for p in bends]
                edges.append((f"ring-{i}-{ji}-{jo}", f"s{i}c{ji}",
                              f"s{i + 1}c{jo}", poly))

    # outermost diagonals around the outside, one arc per diagonal
    r_s = radii[-1]
    for dj, blow, steps in ((0, Fraction(5, 4), 11), (1, Fraction(11, 8), 13)):
        # odd step counts keep arc samples off the 90-degree grid, so the one
        # diagonal-diagonal crossing cannot land on a bend point
        a0 = offs[-1] + 90 * dj
        bends = [_polar(r_s * blow, a0)]
        for v in range(1, steps):
            bends.append(_polar(r_s * blow, a0 + 180.0 * v / steps))
        bends.append(_polar(r_s * blow, a0 + 180))
        poly = [(p.x, p.y) for p in bends]
        edges.append((f"diag-out-{dj}", f"s{s - 1}c{dj}", f"s{s - 1}c{dj + 2}",
                      poly))

    from .geometry import drawing as mk
    d = mk(vertices, edges)
    expected = 16 * (s - 1) + 2
    return _finish("nested-squares", {"s": s}, d, expected, solve_k=1)

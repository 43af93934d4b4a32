"""Density thresholds and crossing-number lower bounds as rejection filters.

All thresholds are exact rationals; a violated bound proves that no drawing
of an (n, m) graph can admit a k-gap assignment.  The square-root threshold
is stored as its exact integer floor, which is equivalent for integer m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# proof-derived constants, conservative: 5.58 and 17.17 as exact decimals
SQRT_COEFF = Fraction(558, 100)
LINEAR_COEFF = Fraction(1717, 100)
CUBIC_COEFF = Fraction(1024, 31827)
CUBIC_SLOPE_MIN = Fraction(103, 6)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    threshold: Fraction  # maximum edge count still allowed
    satisfied: bool
    note: str = ""


@dataclass(frozen=True)
class DensityReport:
    n: int
    m: int
    k: int
    bounds: tuple[BoundEntry, ...]
    verdict: str  # 'possibly k-gap-planar' | 'not k-gap-planar (bound violated)'

    @property
    def violated(self) -> list[str]:
        return [b.name for b in self.bounds if not b.satisfied]


def _sqrt_bound_threshold(n: int, k: int) -> Fraction:
    """Exact floor of max(5.58*sqrt(k), 17.17) * n."""
    linear = LINEAR_COEFF * n
    # 5.58*sqrt(k)*n > 17.17*n  iff  k > (17.17/5.58)^2 ~ 9.47
    if SQRT_COEFF * SQRT_COEFF * k <= LINEAR_COEFF * LINEAR_COEFF:
        return linear
    # floor(sqrt(c^2 k) * n) with c = 558/100: isqrt of the exact square
    num = 558 * 558 * k * n * n
    den = 100 * 100
    return Fraction(math.isqrt(num * den) // den)


def density_report(n: int, m: int, k: int, simple: bool = True,
                   attest_no_homotopic_parallels: bool = False) -> DensityReport:
    """Evaluate every density bound applicable to an (n, m) graph at level k.

    The 5n-10 bound applies for k = 1 to simple graphs, and to multigraphs
    only when the caller attests the drawing has no homotopic parallel edges.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if m < 0 or k < 1:
        raise ValueError("m must be non-negative and k positive")
    bounds: list[BoundEntry] = []

    thr = _sqrt_bound_threshold(n, k)
    bounds.append(BoundEntry(
        name="general-k",
        threshold=thr,
        satisfied=m <= thr,
        note="max(5.58*sqrt(k), 17.17)*n, proof-derived constant, conservative"))

    if 7 - 3 * k > 0:  # k in {1, 2}; vacuous (suppressed) for k >= 3
        thr = Fraction(25 * (n - 2), 7 - 3 * k)
        bounds.append(BoundEntry(
            name="25(n-2)/(7-3k)",
            threshold=thr,
            satisfied=m <= thr))

    if k == 1:
        if simple or attest_no_homotopic_parallels:
            thr = Fraction(5 * n - 10)
            bounds.append(BoundEntry(
                name="5n-10",
                threshold=thr,
                satisfied=m <= thr))
        else:
            bounds.append(BoundEntry(
                name="5n-10",
                threshold=Fraction(5 * n - 10),
                satisfied=True,
                note="not applicable: multigraph without a no-homotopic-"
                     "parallels attestation"))

    ok = all(b.satisfied for b in bounds)
    verdict = ("possibly %d-gap-planar" % k if ok
               else "not %d-gap-planar (bound violated)" % k)
    return DensityReport(n=n, m=m, k=k, bounds=tuple(bounds), verdict=verdict)


@dataclass(frozen=True)
class CrossingLowerBounds:
    linear: Fraction  # cr(G) >= (7/3)m - (25/3)(n-2)
    cubic: Fraction | None  # cr(G) >= (1024/31827) m^3/n^2 when m >= (103/6)n
    cubic_applicable: bool


def crossing_lower_bounds(n: int, m: int) -> CrossingLowerBounds:
    """Exact rational crossing-number lower bounds for an (n, m) graph."""
    if n < 3:
        raise ValueError("n must be at least 3")
    linear = Fraction(7, 3) * m - Fraction(25, 3) * (n - 2)
    applicable = Fraction(m) >= CUBIC_SLOPE_MIN * n
    cubic = CUBIC_COEFF * m ** 3 / Fraction(n * n) if applicable else None
    return CrossingLowerBounds(linear=linear, cubic=cubic,
                               cubic_applicable=applicable)

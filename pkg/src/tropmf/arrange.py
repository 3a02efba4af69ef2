"""Tropical line arrangements in the plane.

Each column p of a weight matrix gives a tropical line: three rays from
an apex, leftward, downward, and up-diagonal.  The plane splits into
three sectors per line, numbered by the row that wins the argmin of
(0, apex_x - x, apex_y - y) at a query point; the boundary between
sectors is the line itself.  Reading the sector numbers of the three
lines of a triple inside the unique cell where all three differ
reconstructs the induced tableau, which gives a purely geometric route
to the matching field and a cross-check of the algebraic one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .mfcore import (MatchingField, Triple, WeightMatrix, check_triple,
                     normalize, triples)

Point = tuple[Fraction, Fraction]


class OnBoundary(ValueError):
    """The query point lies on a ray of the given line."""

    def __init__(self, index: int):
        self.index = index
        super().__init__("point on a ray of line %d" % index)


class NotFound(ValueError):
    """No cell with pairwise distinct sector types was found."""


class Ambiguous(ValueError):
    """Two cells with distinct covectors both have coarse type (1,1,1)."""


class TiedX(ValueError):
    """Two apexes share an x coordinate, so the left-right order is undefined."""

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__("lines %d and %d have equal apex x" % (i, j))


@dataclass(frozen=True)
class TropicalLine:
    index: int
    apex: Point


@dataclass(frozen=True)
class Arrangement:
    """One tropical line per column, plus the normalized source matrix."""

    lines: tuple[TropicalLine, ...]
    source: WeightMatrix

    @property
    def n(self) -> int:
        return len(self.lines)

    def line(self, p: int) -> TropicalLine:
        return self.lines[p - 1]

    def apex(self, p: int) -> Point:
        return self.lines[p - 1].apex


@dataclass(frozen=True)
class Covector:
    """Which lines take sector type 1, 2, 3 at a point."""

    s1: frozenset
    s2: frozenset
    s3: frozenset

    def coarse(self) -> tuple[int, int, int]:
        return (len(self.s1), len(self.s2), len(self.s3))

    def singletons(self) -> tuple[int, int, int]:
        (c1,), (c2,), (c3,) = self.s1, self.s2, self.s3
        return (c1, c2, c3)


def apexes(M: WeightMatrix) -> Arrangement:
    """Arrangement with line p at (m2p - m1p, m3p - m1p)."""
    N = normalize(M)
    lines = tuple(TropicalLine(p, (N.rows[1][p - 1], N.rows[2][p - 1]))
                  for p in range(1, N.n + 1))
    return Arrangement(lines, N)


def type_at(line: TropicalLine, q: Point) -> int:
    """Sector type of q relative to one line: the argmin row of
    (0, apex_x - x, apex_y - y).  Raises OnBoundary on a tie."""
    a, b = line.apex
    x, y = Fraction(q[0]), Fraction(q[1])
    values = (Fraction(0), a - x, b - y)
    low = min(values)
    hits = [t for t in (1, 2, 3) if values[t - 1] == low]
    if len(hits) > 1:
        raise OnBoundary(line.index)
    return hits[0]


def covector_at(A: Arrangement, q: Point, subset) -> Covector:
    """Covector of the queried lines at q (OnBoundary propagates)."""
    buckets = {1: set(), 2: set(), 3: set()}
    for p in sorted(subset):
        buckets[type_at(A.line(p), q)].add(p)
    return Covector(frozenset(buckets[1]), frozenset(buckets[2]),
                    frozenset(buckets[3]))


def _support_values(A: Arrangement, T: Triple):
    xs = [A.apex(p)[0] for p in T]
    ys = [A.apex(p)[1] for p in T]
    ds = [A.apex(p)[1] - A.apex(p)[0] for p in T]
    return xs, ys, ds


def _candidate_vertices(xs, ys, ds):
    """Pairwise intersections of the vertical, horizontal, and slope-1
    support lines through the three apexes."""
    pts = set()
    for x in xs:
        for y in ys:
            pts.add((x, y))
        for d in ds:
            pts.add((x, x + d))
    for y in ys:
        for d in ds:
            pts.add((y - d, y))
    return pts


def _min_positive_gap(values):
    vals = sorted(set(values))
    gaps = [b - a for a, b in zip(vals, vals[1:])]
    return min(gaps) if gaps else None


_COMPASS = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))


def cell111(A: Arrangement, T: Triple):
    """Sample point and covector of the cell where the triple's three
    lines take pairwise distinct sector types.

    Probes the eight compass neighbours of every pairwise intersection
    of the nine support lines.  The cell is an intersection of three
    convex sectors, so it is a polygon bounded by support lines; some
    corner of it has an interior angle of at least 90 degrees, and that
    corner admits a compass direction strictly inside.  The offset is a
    quarter (not half) of the smallest positive coordinate gap because
    a NW or SE probe drifts the diagonal coordinate y - x by twice the
    offset.
    """
    T = check_triple(T, A.n)
    xs, ys, ds = _support_values(A, T)
    pts = _candidate_vertices(xs, ys, ds)
    pool_x = xs + [p[0] for p in pts]
    pool_y = ys + [p[1] for p in pts]
    pool_d = ds + [p[1] - p[0] for p in pts]
    gaps = [g for g in (_min_positive_gap(pool_x), _min_positive_gap(pool_y),
                        _min_positive_gap(pool_d)) if g is not None]
    if not gaps:
        raise NotFound("all support coordinates coincide for triple %r" % (T,))
    delta = min(gaps) / 4
    found = {}
    for vx, vy in sorted(pts):
        for dx, dy in _COMPASS:
            q = (vx + delta * dx, vy + delta * dy)
            try:
                cov = covector_at(A, q, T)
            except OnBoundary:
                continue
            if cov.coarse() == (1, 1, 1):
                found.setdefault(cov, q)
    if not found:
        raise NotFound("no cell with distinct types for triple %r" % (T,))
    if len(found) > 1:
        raise Ambiguous("distinct covectors %r for triple %r"
                        % (sorted(c.singletons() for c in found), T))
    cov, q = next(iter(found.items()))
    return q, cov


def induce_geometric(A: Arrangement) -> MatchingField:
    """Matching field read off the arrangement, triple by triple."""
    assignment = {}
    for T in triples(A.n):
        _, cov = cell111(A, T)
        assignment[T] = cov.singletons()
    return MatchingField(A.n, assignment)


def x_order(A: Arrangement) -> tuple:
    """Line indices sorted by apex x coordinate, left to right."""
    keyed = sorted((line.apex[0], line.index) for line in A.lines)
    for (xa, ia), (xb, ib) in zip(keyed, keyed[1:]):
        if xa == xb:
            raise TiedX(ia, ib)
    return tuple(idx for _, idx in keyed)


def adjacent(A: Arrangement, i: int, j: int) -> bool:
    """True iff i and j are consecutive in the x order."""
    order = x_order(A)
    pi, pj = order.index(i), order.index(j)
    return abs(pi - pj) == 1

"""Exact rational planar primitives: points, segments, rays and polygonal chains.

Every coordinate is a fractions.Fraction and every predicate is decided with
exact integer arithmetic; nothing in this module ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence, Tuple

Q = Fraction


class GeometryError(Exception):
    pass


class VerticalOverlap(GeometryError):
    """A vertical section was requested along a line that contains a vertical edge."""


class DegeneratePosition(GeometryError):
    """A crossing-parity probe hit a vertex abscissa or lies on the chain.

    Callers are expected to re-choose the probe at a fresh abscissa.
    """


class UnclippableRay(GeometryError):
    """A vertical ray cannot be truncated by an x-slab."""


def _q(value) -> Q:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True, order=True)
class Point:
    x: Q
    y: Q

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def scaled(self, t: Q) -> "Point":
        return Point(self.x * t, self.y * t)

    def cross(self, other: "Point") -> Q:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "Point") -> Q:
        return self.x * other.x + self.y * other.y


def point(x, y) -> Point:
    return Point(_q(x), _q(y))


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p); 0 iff the points are collinear."""
    c = (q - p).cross(r - p)
    return (c > 0) - (c < 0)


def primitive_direction(dx, dy) -> Tuple[int, int]:
    """Canonical primitive integer vector parallel to (dx, dy)."""
    dx, dy = _q(dx), _q(dy)
    if dx == 0 and dy == 0:
        raise ValueError("direction must be nonzero")
    common = dx.denominator * dy.denominator // gcd(dx.denominator, dy.denominator)
    ix, iy = int(dx * common), int(dy * common)
    g = gcd(abs(ix), abs(iy))
    return ix // g, iy // g


@dataclass(frozen=True)
class Edge:
    """A closed segment or a closed ray.

    Segments store both endpoints; rays store their origin plus a canonical
    primitive integer direction, so equality and file round-trips are exact.
    """

    kind: str  # "segment" | "ray"
    origin: Point
    other: Optional[Point] = None
    direction: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if self.kind == "segment":
            if self.other is None or self.other == self.origin:
                raise ValueError("segment endpoints must be distinct")
        elif self.kind == "ray":
            if self.direction is None or self.direction == (0, 0):
                raise ValueError("ray needs a nonzero direction")
        else:
            raise ValueError(f"unknown edge kind {self.kind!r}")

    @property
    def is_ray(self) -> bool:
        return self.kind == "ray"

    def dvec(self) -> Point:
        if self.kind == "segment":
            return self.other - self.origin
        return Point(Q(self.direction[0]), Q(self.direction[1]))

    def param_max(self) -> Optional[Q]:
        """Upper parameter bound: 1 for segments, None (unbounded) for rays."""
        return Q(1) if self.kind == "segment" else None

    def at(self, t: Q) -> Point:
        return self.origin + self.dvec().scaled(t)

    def contains_point(self, p: Point) -> bool:
        d = self.dvec()
        w = p - self.origin
        if d.cross(w) != 0:
            return False
        t_num = w.dot(d)
        if t_num < 0:
            return False
        if self.kind == "segment" and t_num > d.dot(d):
            return False
        return True


def segment(p: Point, q: Point) -> Edge:
    return Edge("segment", p, other=q)


def ray(origin: Point, dx, dy) -> Edge:
    return Edge("ray", origin, direction=primitive_direction(dx, dy))


class _Overlap:
    __slots__ = ()

    def __repr__(self):
        return "OVERLAP"


#: Distinguished result for one-dimensional intersections.
OVERLAP = _Overlap()


def _interval_on_line(e1: Edge, e2: Edge):
    """Parameter interval of e2 on e1's supporting line, in e1's parameter.

    Assumes the edges are collinear.  Returns (lo, hi) where None means
    unbounded on that side.
    """
    d1 = e1.dvec()
    dd = d1.dot(d1)
    t0 = (e2.origin - e1.origin).dot(d1) / dd
    if e2.kind == "segment":
        t1 = (e2.other - e1.origin).dot(d1) / dd
        return (min(t0, t1), max(t0, t1))
    forward = e2.dvec().dot(d1) > 0
    return (t0, None) if forward else (None, t0)


def intersect_edges(e1: Edge, e2: Edge):
    """Exact classification of e1 & e2: None, a single Point, or OVERLAP."""
    d1, d2 = e1.dvec(), e2.dvec()
    w = e2.origin - e1.origin
    denom = d1.cross(d2)
    if denom != 0:
        t = w.cross(d2) / denom
        u = w.cross(d1) / denom
        if t < 0 or u < 0:
            return None
        m1, m2 = e1.param_max(), e2.param_max()
        if (m1 is not None and t > m1) or (m2 is not None and u > m2):
            return None
        return e1.at(t)
    if d1.cross(w) != 0:
        return None
    lo1, hi1 = Q(0), e1.param_max()
    lo2, hi2 = _interval_on_line(e1, e2)
    lo = lo1 if lo2 is None else max(lo1, lo2)
    hi = hi1 if hi2 is None else (hi2 if hi1 is None else min(hi1, hi2))
    if hi is None:
        return OVERLAP
    if lo > hi:
        return None
    if lo == hi:
        return e1.at(lo)
    return OVERLAP


@dataclass(frozen=True)
class Chain:
    """A polygonal chain, optionally extended to infinity by one or two rays.

    ``vertices`` is ordered; a present ray's origin must equal the adjacent
    end vertex.
    """

    vertices: Tuple[Point, ...]
    leading_ray: Optional[Edge] = None
    trailing_ray: Optional[Edge] = None

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("chain needs at least one vertex")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if a == b:
                raise ValueError("consecutive chain vertices must be distinct")
        for r, v in ((self.leading_ray, self.vertices[0]),
                     (self.trailing_ray, self.vertices[-1])):
            if r is not None:
                if not r.is_ray:
                    raise ValueError("chain end extensions must be rays")
                if r.origin != v:
                    raise ValueError("ray origin must equal the adjacent end vertex")
        if self.piece_count() < 1:
            raise ValueError("chain needs at least one piece")

    def piece_count(self) -> int:
        n = len(self.vertices) - 1
        n += self.leading_ray is not None
        n += self.trailing_ray is not None
        return n

    def edges(self) -> Iterator[Edge]:
        if self.leading_ray is not None:
            yield self.leading_ray
        for a, b in zip(self.vertices, self.vertices[1:]):
            yield segment(a, b)
        if self.trailing_ray is not None:
            yield self.trailing_ray

    def is_finite(self) -> bool:
        return self.leading_ray is None and self.trailing_ray is None

    def contains_point(self, p: Point) -> bool:
        return any(e.contains_point(p) for e in self.edges())


def chain(vertices: Sequence[Point], leading_ray=None, trailing_ray=None) -> Chain:
    return Chain(tuple(vertices), leading_ray, trailing_ray)


def full_line(p: Point, slope) -> Chain:
    """The whole straight line of the given slope through p, as a 2-ray chain."""
    s = _q(slope)
    return Chain((p,), leading_ray=ray(p, -1, -s), trailing_ray=ray(p, 1, s))


def chain_common_points(a: Chain, b: Chain):
    """All common points of two chains: OVERLAP, or a frozenset of Points.

    A 1-dimensional intersection between any pair of edges yields OVERLAP;
    otherwise each common point is reported once, even when it is a vertex
    of either chain.
    """
    pts = set()
    b_edges = list(b.edges())
    for ea in a.edges():
        for eb in b_edges:
            hit = intersect_edges(ea, eb)
            if hit is OVERLAP:
                return OVERLAP
            if hit is not None:
                pts.add(hit)
    return frozenset(pts)


def disjoint_chains(a: Chain, b: Chain) -> bool:
    common = chain_common_points(a, b)
    return common is not OVERLAP and len(common) == 0


def _edge_vertical_hit(e: Edge, x0: Q) -> Optional[Q]:
    d = e.dvec()
    if d.x == 0:
        if e.origin.x == x0:
            raise VerticalOverlap(f"vertical edge lies on x = {x0}")
        return None
    t = (x0 - e.origin.x) / d.x
    if t < 0:
        return None
    m = e.param_max()
    if m is not None and t > m:
        return None
    return e.origin.y + t * d.y


def vertical_section(a: Chain, x0) -> list:
    """Ascending, deduplicated y-values of the chain on the line x = x0."""
    x0 = _q(x0)
    ys = set()
    for e in a.edges():
        y = _edge_vertical_hit(e, x0)
        if y is not None:
            ys.add(y)
    return sorted(ys)


def upward_crossings(a: Chain, p: Point) -> int:
    """Number of points of the chain strictly above p on the vertical through p.

    Demands generic position: p must avoid the chain, and no vertex or
    vertical edge of the chain may share p's abscissa.
    """
    for v in a.vertices:
        if v.x == p.x:
            raise DegeneratePosition(f"chain vertex at probe abscissa {p.x}")
    for e in a.edges():
        if e.dvec().x == 0 and e.origin.x == p.x:
            raise DegeneratePosition(f"vertical edge at probe abscissa {p.x}")
    if a.contains_point(p):
        raise DegeneratePosition("probe lies on the chain")
    return sum(1 for y in vertical_section(a, p.x) if y > p.y)


def _clip_ray(r: Edge, x_lo: Q, x_hi: Q) -> Point:
    d = r.dvec()
    if d.x == 0:
        raise UnclippableRay("vertical ray cannot be clipped to an x-slab")
    bound = x_hi if d.x > 0 else x_lo
    t = (bound - r.origin.x) / d.x
    if t <= 0:
        t = Q(1)
    return r.at(t)


def clip_chain(a: Chain, x_lo, x_hi) -> Chain:
    """Finite chain: every ray truncated at its last point inside [x_lo, x_hi].

    Bounded edges are preserved as they are.  Rays whose origin already lies
    outside the slab (moving away) are cut one unit along their direction so
    the result stays a valid chain.
    """
    x_lo, x_hi = _q(x_lo), _q(x_hi)
    if x_lo >= x_hi:
        raise ValueError("empty clipping slab")
    verts = list(a.vertices)
    if a.leading_ray is not None:
        verts.insert(0, _clip_ray(a.leading_ray, x_lo, x_hi))
    if a.trailing_ray is not None:
        verts.append(_clip_ray(a.trailing_ray, x_lo, x_hi))
    return Chain(tuple(verts))


def dist2_point_point(p: Point, q: Point) -> Q:
    d = p - q
    return d.dot(d)


def dist2_point_edge(p: Point, e: Edge) -> Q:
    """Exact squared distance from a point to a closed segment or ray."""
    d = e.dvec()
    w = p - e.origin
    dd = d.dot(d)
    t = w.dot(d) / dd
    if t < 0:
        t = Q(0)
    m = e.param_max()
    if m is not None and t > m:
        t = m
    return dist2_point_point(p, e.at(t))


def dist2_edge_edge(e1: Edge, e2: Edge) -> Q:
    """Exact squared distance between two closed edges (0 if they meet)."""
    if intersect_edges(e1, e2) is not None:
        return Q(0)
    best = dist2_point_edge(e1.origin, e2)
    if e1.kind == "segment":
        best = min(best, dist2_point_edge(e1.other, e2))
    best = min(best, dist2_point_edge(e2.origin, e1))
    if e2.kind == "segment":
        best = min(best, dist2_point_edge(e2.other, e1))
    return best

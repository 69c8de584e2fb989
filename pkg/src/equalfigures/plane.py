"""Points, synthetic predicates and ruler-and-compass style constructions.

Predicates take points, never line objects: a line is an ordered pair of
distinct points.  Betweenness is strict.  Degenerate inputs (coincident
points where a direction is needed, collinear triples where a triangle is
needed) raise :class:`DomainError` instead of returning False.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .exact import DomainError, ExactNumber, as_exact, sqrt

__all__ = [
    "Point",
    "Segment",
    "LineRelation",
    "point",
    "cross",
    "dot",
    "sqdist",
    "collinear",
    "between",
    "congruent",
    "line_relation",
    "parallel",
    "right_angle",
    "same_side",
    "opposite_side",
    "angles_equal",
    "triangle_congruent",
    "foot_of_perpendicular",
    "line_intersection",
    "lay_off",
    "midpoint",
    "orthocenter",
    "circumcircle",
    "concyclic",
    "on_altitude",
]


@dataclass(frozen=True, eq=False)
class Point:
    x: ExactNumber
    y: ExactNumber

    def __post_init__(self):
        object.__setattr__(self, "x", as_exact(self.x))
        object.__setattr__(self, "y", as_exact(self.y))

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k):
        return Point(self.x * k, self.y * k)

    def perp(self):
        """The vector rotated a quarter turn counterclockwise."""
        return Point(-self.y, self.x)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self):
        return f"Point({self.x.to_literal()}, {self.y.to_literal()})"


def point(x, y):
    return Point(as_exact(x), as_exact(y))


@dataclass(frozen=True, eq=False)
class Segment:
    p: Point
    q: Point

    def squared_length(self):
        return sqdist(self.p, self.q)

    def length(self):
        return sqrt(self.squared_length())

    def is_degenerate(self):
        return self.p == self.q


class LineRelation(enum.Enum):
    STRICTLY_PARALLEL = "strictly parallel"
    COINCIDENT = "coincident"
    NEITHER = "neither"


def cross(u, v):
    return u.x * v.y - u.y * v.x


def dot(u, v):
    return u.x * v.x + u.y * v.y


def sqdist(a, b):
    d = b - a
    return dot(d, d)


def _orient(a, b, c):
    return cross(b - a, c - a).sign()


def _require_distinct(a, b, what):
    if a == b:
        raise DomainError(f"degenerate {what}: coincident points")


def collinear(a, b, c):
    return _orient(a, b, c) == 0


def between(a, b, c):
    """Strict betweenness: b lies in the open segment ac."""
    if not collinear(a, b, c):
        return False
    if a == b or b == c or a == c:
        return False
    ab = b - a
    ac = c - a
    t = dot(ab, ac)
    return t.sign() > 0 and (dot(ac, ac) - t).sign() > 0


def congruent(a, b, c, d):
    """Segment ab is congruent to segment cd."""
    return sqdist(a, b) == sqdist(c, d)


def line_relation(a, b, c, d):
    _require_distinct(a, b, "line")
    _require_distinct(c, d, "line")
    if cross(b - a, d - c).sign() != 0:
        return LineRelation.NEITHER
    if collinear(a, b, c):
        return LineRelation.COINCIDENT
    return LineRelation.STRICTLY_PARALLEL


def parallel(a, b, c, d, *, allow_coincident=True):
    """Lines ab and cd are parallel; coincident lines count unless disallowed."""
    rel = line_relation(a, b, c, d)
    if rel is LineRelation.STRICTLY_PARALLEL:
        return True
    return allow_coincident and rel is LineRelation.COINCIDENT


def right_angle(a, b, c):
    """The angle abc (vertex b) is right."""
    _require_distinct(a, b, "ray")
    _require_distinct(c, b, "ray")
    return dot(a - b, c - b).sign() == 0


def same_side(p, q, a, b):
    _require_distinct(a, b, "line")
    sp, sq = _orient(a, b, p), _orient(a, b, q)
    if sp == 0 or sq == 0:
        raise DomainError("point lies on the line")
    return sp == sq


def opposite_side(p, q, a, b):
    return not same_side(p, q, a, b)


def angles_equal(a, b, c, d, e, f):
    """Angle abc equals angle def (unsigned, vertices b and e)."""
    u1, v1 = a - b, c - b
    u2, v2 = d - e, f - e
    for u in (u1, v1, u2, v2):
        if dot(u, u).sign() == 0:
            raise DomainError("degenerate angle")
    d1, d2 = dot(u1, v1), dot(u2, v2)
    if d1.sign() != d2.sign():
        return False
    lhs = d1 * d1 * dot(u2, u2) * dot(v2, v2)
    rhs = d2 * d2 * dot(u1, u1) * dot(v1, v1)
    return lhs == rhs


def _require_triangle(a, b, c):
    if collinear(a, b, c):
        raise DomainError("collinear points do not form a triangle")


def triangle_congruent(a, b, c, a2, b2, c2):
    _require_triangle(a, b, c)
    _require_triangle(a2, b2, c2)
    return congruent(a, b, a2, b2) and congruent(b, c, b2, c2) and congruent(c, a, c2, a2)


def foot_of_perpendicular(p, a, b):
    _require_distinct(a, b, "line")
    d = b - a
    t = dot(p - a, d) / dot(d, d)
    return a + d.scale(t)


def line_intersection(a, b, c, d):
    _require_distinct(a, b, "line")
    _require_distinct(c, d, "line")
    u, v = b - a, d - c
    den = cross(u, v)
    if den.sign() == 0:
        raise DomainError("lines are parallel or coincident")
    t = cross(c - a, v) / den
    return a + u.scale(t)


def lay_off(origin, toward, length_of):
    """The point X on ray origin->toward with |origin X| = |length_of|."""
    _require_distinct(origin, toward, "ray")
    if length_of.is_degenerate():
        raise DomainError("degenerate segment")
    d = toward - origin
    k = sqrt(length_of.squared_length() / dot(d, d))
    return origin + d.scale(k)


def midpoint(a, b):
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def on_altitude(h, vertex, p, q):
    """h lies on the altitude from vertex to line pq."""
    return dot(h - vertex, q - p).sign() == 0


def orthocenter(a, b, c):
    _require_triangle(a, b, c)
    # altitude from a: a + t * perp(c - b); altitude from b: b + s * perp(c - a)
    return line_intersection(a, a + (c - b).perp(), b, b + (c - a).perp())


def circumcircle(a, b, c):
    """(center, squared radius) of the circle through three points."""
    _require_triangle(a, b, c)
    m1, m2 = midpoint(a, b), midpoint(a, c)
    center = line_intersection(m1, m1 + (b - a).perp(), m2, m2 + (c - a).perp())
    return center, sqdist(center, a)


def concyclic(a, b, c, d):
    center, r2 = circumcircle(a, b, c)
    return sqdist(center, d) == r2

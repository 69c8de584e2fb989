"""Equal rectangles, equal triangles, equal quadrilaterals and area.

Rectangles are compared by the corner-to-corner placement: copies of the
two rectangles share the vertex B with one pair of sides collinear, the
outer sides are extended to a large rectangle, and the two are equal iff
its far corners H and K are collinear with B, with B between them.

A triangle ABC (ordered; its base is AB) is compared through its first
circumscribed rectangle ABDK, whose side DK lies on the parallel to AB
through C.  A quadrilateral is either convex (its diagonals meet) or
"really a triangle" (one vertex lies between its two neighbours); strictly
non-convex quadrilaterals are rejected.  A convex quadrilateral has one
circumscribed rectangle per diagonal; one that is really a triangle has the
three first circumscribed rectangles of that triangle.

The area of a figure, relative to a fixed unit segment, is the width of the
unit-height rectangle equal to the figure's circumscribed rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import DomainError, ExactNumber, as_exact, sqrt
from .plane import (
    LineRelation,
    Point,
    Segment,
    between,
    collinear,
    cross,
    foot_of_perpendicular,
    line_intersection,
    line_relation,
    midpoint,
    right_angle,
    sqdist,
)
from .proportion import fourth_proportional, segment_of_length

__all__ = [
    "RectWH",
    "AreaValue",
    "Triangle",
    "Quadrilateral",
    "Convex",
    "ReallyTriangle",
    "Invalid",
    "equal_rectangles",
    "placement",
    "rect_of_points",
    "first_circumscribed_rectangle",
    "equal_triangles",
    "classify_quadrilateral",
    "circumscribed_rectangle_points",
    "circumscribed_rectangles",
    "rectangles_agree",
    "equal_quadrilaterals",
    "equal_figures",
    "area",
    "area_sum",
    "oracle_area",
    "halves",
]


@dataclass(frozen=True, eq=False)
class RectWH:
    """A rectangle up to congruence: its two side lengths."""

    width: ExactNumber
    height: ExactNumber

    def __post_init__(self):
        w, h = as_exact(self.width), as_exact(self.height)
        if w.sign() <= 0 or h.sign() <= 0:
            raise DomainError("rectangle sides must be positive")
        object.__setattr__(self, "width", w)
        object.__setattr__(self, "height", h)

    def transposed(self):
        return RectWH(self.height, self.width)

    def __repr__(self):
        return f"RectWH({self.width.to_literal()}, {self.height.to_literal()})"


@dataclass(frozen=True, eq=False)
class AreaValue:
    """Width of the rectangle with side ``unit`` equal to a figure."""

    width: ExactNumber
    unit: ExactNumber

    def __repr__(self):
        return f"AreaValue({self.width.to_literal()}, unit={self.unit.to_literal()})"


@dataclass(frozen=True, eq=False)
class Triangle:
    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        if collinear(self.a, self.b, self.c):
            raise DomainError("degenerate triangle")

    @property
    def points(self):
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class Convex:
    center: Point


@dataclass(frozen=True)
class ReallyTriangle:
    index: int


@dataclass(frozen=True)
class Invalid:
    reason: str


class Quadrilateral:
    """Four points in boundary order; convex or really a triangle."""

    __slots__ = ("points", "kind")

    def __init__(self, a, b, c, d):
        self.points = (a, b, c, d)
        kind = classify_quadrilateral(self.points)
        if isinstance(kind, Invalid):
            raise DomainError(f"invalid quadrilateral: {kind.reason}")
        self.kind = kind

    def __repr__(self):
        return "Quadrilateral({})".format(", ".join(map(repr, self.points)))


# -- rectangles ---------------------------------------------------------


def placement(r, s):
    """The corner-to-corner figure for rectangles r and s.

    Returns a dict of the named points: r is placed as BEFG, s as BMLA,
    H and K are the far corners of the completed rectangle.
    """
    zero = as_exact(0)
    b = Point(zero, zero)
    e = Point(r.width, zero)
    g = Point(zero, r.height)
    f = Point(r.width, r.height)
    m = Point(zero, -s.height)
    a = Point(-s.width, zero)
    l = Point(-s.width, -s.height)
    h = Point(-s.width, r.height)
    k = Point(r.width, -s.height)
    return {"B": b, "E": e, "F": f, "G": g, "M": m, "L": l, "A": a, "H": h, "K": k}


def equal_rectangles(r, s):
    pts = placement(r, s)
    return between(pts["H"], pts["B"], pts["K"])


def rect_of_points(p, q, r, s):
    """Side lengths (|pq|, |qr|) of the rectangle pqrs."""
    corners = (p, q, r, s)
    try:
        ok = all(right_angle(corners[i - 1], corners[i], corners[(i + 1) % 4]) for i in range(4))
    except DomainError:
        ok = False
    if not ok:
        raise DomainError("points do not form a rectangle")
    return RectWH(sqrt(sqdist(p, q)), sqrt(sqdist(q, r)))


# -- triangles ----------------------------------------------------------


def _as_triangle(t):
    return t if isinstance(t, Triangle) else Triangle(*t)


def first_circumscribed_rectangle(t):
    """Rectangle ABDK on base AB with C on line DK; returns (RectWH, (A, B, D, K))."""
    t = _as_triangle(t)
    a, b, c = t.points
    c2 = c + (b - a)
    d = foot_of_perpendicular(b, c, c2)
    k = foot_of_perpendicular(a, c, c2)
    return rect_of_points(a, b, d, k), (a, b, d, k)


def equal_triangles(t1, t2):
    r1, _ = first_circumscribed_rectangle(t1)
    r2, _ = first_circumscribed_rectangle(t2)
    return equal_rectangles(r1, r2)


# -- quadrilaterals -----------------------------------------------------


def classify_quadrilateral(pts):
    a, b, c, d = pts
    if a != c and b != d and line_relation(a, c, b, d) is LineRelation.NEITHER:
        o = line_intersection(a, c, b, d)
        if between(a, o, c) and between(b, o, d):
            return Convex(o)
    for i in range(4):
        prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % 4]
        if between(prev, cur, nxt):
            rest = [pts[(i + j) % 4] for j in (1, 2, 3)]
            if collinear(*rest):
                return Invalid("all four points are collinear")
            return ReallyTriangle(i)
    return Invalid("diagonals do not meet and no vertex is straight")


def _as_quad(q):
    return q if isinstance(q, Quadrilateral) else Quadrilateral(*q)


def _diagonal_rectangle(j, k, l, m):
    """Circumscribed rectangle with two sides parallel to diagonal km."""
    u = m - k
    p1 = foot_of_perpendicular(k, j, j + u)
    p2 = foot_of_perpendicular(m, j, j + u)
    p3 = foot_of_perpendicular(m, l, l + u)
    p4 = foot_of_perpendicular(k, l, l + u)
    return (p1, p2, p3, p4)


def _triangle_of(q):
    i = q.kind.index
    return Triangle(*(q.points[(i + j) % 4] for j in (1, 2, 3)))


def circumscribed_rectangle_points(fig):
    """All circumscribed rectangles of a figure, as corner quadruples."""
    if isinstance(fig, Triangle):
        return [first_circumscribed_rectangle(fig)[1]]
    q = _as_quad(fig)
    if isinstance(q.kind, Convex):
        j, k, l, m = q.points
        return [_diagonal_rectangle(j, k, l, m), _diagonal_rectangle(k, l, m, j)]
    x, y, z = _triangle_of(q).points
    return [first_circumscribed_rectangle(t)[1] for t in ((x, y, z), (y, z, x), (z, x, y))]


def circumscribed_rectangles(fig):
    if isinstance(fig, Triangle):
        return [first_circumscribed_rectangle(fig)[0]]
    q = _as_quad(fig)
    if isinstance(q.kind, ReallyTriangle):
        x, y, z = _triangle_of(q).points
        return [first_circumscribed_rectangle(t)[0] for t in ((x, y, z), (y, z, x), (z, x, y))]
    return [rect_of_points(*corners) for corners in circumscribed_rectangle_points(q)]


def rectangles_agree(fig):
    """All circumscribed rectangles of the figure are pairwise equal."""
    rects = circumscribed_rectangles(fig)
    return all(equal_rectangles(rects[0], r) for r in rects[1:])


def equal_quadrilaterals(q1, q2):
    """Some circumscribed rectangle of q1 equals some circumscribed rectangle of q2."""
    return equal_figures(_as_quad(q1), _as_quad(q2))


def _as_figure(f):
    if isinstance(f, (Triangle, Quadrilateral)):
        return f
    if len(f) == 3:
        return Triangle(*f)
    return Quadrilateral(*f)


def equal_figures(f1, f2):
    rs1 = circumscribed_rectangles(_as_figure(f1))
    rs2 = circumscribed_rectangles(_as_figure(f2))
    return any(equal_rectangles(r, s) for r in rs1 for s in rs2)


# -- area ---------------------------------------------------------------


def area(fig, unit):
    """Rectangle-valued area of a figure relative to the unit segment."""
    if not isinstance(unit, Segment):
        unit = Segment(*unit)
    if unit.is_degenerate():
        raise DomainError("degenerate unit segment")
    rect = circumscribed_rectangles(_as_figure(fig))[0]
    u = unit.length()
    # w : W = H : u, i.e. u : H = W : w
    w = fourth_proportional(segment_of_length(u), segment_of_length(rect.height), segment_of_length(rect.width))
    return AreaValue(w, u)


def area_sum(a, b):
    """End-to-end sum of two unit-height rectangles."""
    if a.unit != b.unit:
        raise DomainError("areas measured against different units")
    return AreaValue(a.width + b.width, a.unit)


def oracle_area(fig):
    """Shoelace area.  Test oracle only; the defined relations never use it."""
    pts = fig.points if isinstance(fig, (Triangle, Quadrilateral)) else tuple(fig)
    twice = as_exact(0)
    for i, p in enumerate(pts):
        q = pts[(i + 1) % len(pts)]
        twice = twice + cross(p, q)
    return abs(twice) / 2


def halves(corners):
    """The two halves of a rectangle pqrs cut by the midline through pq and rs."""
    p, q, r, s = corners
    m1, m2 = midpoint(p, q), midpoint(s, r)
    return (p, m1, m2, s), (m1, q, r, m2)


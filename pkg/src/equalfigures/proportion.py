"""Proportion between segments, by the right-angle construction.

``PQ:RS = pq:rs`` holds when copies of the four segments, laid off from a
common vertex A of a right angle (PQ and pq on one arm, RS and rs on the
other), give endpoints B, C, b, c with BC parallel to bc or equal to it.
The relation is evaluated by performing exactly that construction; no
cross-multiplication is used here.
"""

from __future__ import annotations

from .exact import DomainError
from .plane import (
    LineRelation,
    Point,
    Segment,
    angles_equal,
    between,
    collinear,
    concyclic,
    dot,
    line_intersection,
    line_relation,
    lay_off,
    parallel,
    point,
)

__all__ = [
    "ORIGIN",
    "segment_of_length",
    "proportion_holds",
    "fourth_proportional",
    "check_interchange",
    "check_fundamental",
    "pascal_kupffer_check",
    "cyclic_quad_check",
]

ORIGIN = point(0, 0)
_X_ARM = point(1, 0)
_Y_ARM = point(0, 1)


def segment_of_length(length):
    """A segment on the x axis starting at the origin with the given length."""
    return Segment(ORIGIN, Point(length, 0))


def _as_segment(s):
    if isinstance(s, Segment):
        seg = s
    else:
        p, q = s
        seg = Segment(p, q)
    if seg.is_degenerate():
        raise DomainError("proportion of a zero-length segment")
    return seg


def _right_angle_figure(pq, rs, pq2, rs2):
    a = ORIGIN
    b = lay_off(a, _X_ARM, pq)
    c = lay_off(a, _Y_ARM, rs)
    b2 = lay_off(a, _X_ARM, pq2)
    c2 = lay_off(a, _Y_ARM, rs2)
    return a, b, c, b2, c2


def proportion_holds(pq, rs, pq2, rs2):
    """PQ:RS = pq:rs for four nondegenerate segments."""
    segs = [_as_segment(s) for s in (pq, rs, pq2, rs2)]
    _, b, c, b2, c2 = _right_angle_figure(*segs)
    return parallel(b, c, b2, c2)


def fourth_proportional(a, b, c):
    """The length x with a:b = c:x, found by drawing a parallel."""
    a, b, c = (_as_segment(s) for s in (a, b, c))
    o = ORIGIN
    pb = lay_off(o, _X_ARM, a)
    pc = lay_off(o, _Y_ARM, b)
    qb = lay_off(o, _X_ARM, c)
    qc = line_intersection(qb, qb + (pc - pb), o, _Y_ARM)
    return qc.y


def check_interchange(a, b, p, q):
    """Given a:b = p:q, report whether a:p = b:q."""
    if not proportion_holds(a, b, p, q):
        raise DomainError("hypothesis a:b = p:q does not hold")
    return proportion_holds(a, p, b, q)


def _on_ray(origin, x, toward):
    """x is on the ray from origin through toward, and distinct from origin."""
    if x == origin:
        return False
    return collinear(origin, toward, x) and dot(x - origin, toward - origin).sign() > 0


def check_fundamental(a, b, c, b2, c2):
    """Parallels bc and b2c2 across the angle at a; report AB:Ab = AC:Ac."""
    if collinear(a, b, c):
        raise DomainError("the two rays must form an angle")
    if not (_on_ray(a, b2, b) and _on_ray(a, c2, c)):
        raise DomainError("points are not on the rays of the angle")
    if not parallel(b, c, b2, c2):
        raise DomainError("the two cutting lines are not parallel")
    return proportion_holds(Segment(a, b), Segment(a, b2), Segment(a, c), Segment(a, c2))


def _distinct(*pts):
    return all(pts[i] != pts[j] for i in range(len(pts)) for j in range(i + 1, len(pts)))


def pascal_kupffer_check(o, a, b, c, a2, b2, c2):
    """Right-angle Pascal configuration; report whether AC' || CA'."""
    if not _distinct(a, b, c) or not _distinct(a2, b2, c2):
        raise DomainError("points on each line must be distinct")
    if any(o == x for x in (a, b, c, a2, b2, c2)):
        raise DomainError("points must be distinct from O")
    if not (collinear(o, a, b) and collinear(o, a, c)):
        raise DomainError("A, B, C must lie on one line through O")
    if not (collinear(o, a2, b2) and collinear(o, a2, c2)):
        raise DomainError("A', B', C' must lie on one line through O")
    if dot(a - o, a2 - o).sign() != 0:
        raise DomainError("the two lines must be perpendicular at O")
    if not (_on_ray(o, b2, a2) and _on_ray(o, c2, a2)):
        raise DomainError("A', B', C' must lie on the same side of O")
    if not (parallel(a, b2, b, a2) and parallel(b, c2, c, b2)):
        raise DomainError("parallelism hypotheses do not hold")
    return parallel(a, c2, c, a2)


def cyclic_quad_check(a, b, c, d):
    """Convex ABCD with diagonals meeting at O and angle OAB = angle ODC:
    report whether the four vertices are concyclic."""
    if line_relation(a, c, b, d) is not LineRelation.NEITHER:
        raise DomainError("quadrilateral is not convex")
    o = line_intersection(a, c, b, d)
    if not (between(a, o, c) and between(b, o, d)):
        raise DomainError("quadrilateral is not convex")
    if not angles_equal(o, a, b, o, d, c):
        raise DomainError("angles OAB and ODC are not equal")
    return concyclic(a, b, c, d)

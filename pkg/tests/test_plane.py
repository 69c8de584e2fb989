from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from equalfigures.exact import DomainError, as_exact, sqrt
from equalfigures.plane import (
    LineRelation,
    Point,
    Segment,
    between,
    circumcircle,
    collinear,
    concyclic,
    congruent,
    cross,
    dot,
    foot_of_perpendicular,
    lay_off,
    line_intersection,
    line_relation,
    on_altitude,
    opposite_side,
    orthocenter,
    parallel,
    point,
    right_angle,
    same_side,
    sqdist,
    triangle_congruent,
)

coords = st.fractions(min_value=-12, max_value=12, max_denominator=4)
points = st.builds(point, coords, coords)


def P(x, y):
    return point(Fraction(x), Fraction(y))


def test_collinear():
    assert collinear(P(0, 0), P(1, 1), P(3, 3))
    assert not collinear(P(0, 0), P(1, 0), P(0, 1))
    assert collinear(P(0, 0), P(0, 0), P(5, 7))


def test_between():
    assert between(P(0, 0), P(1, 0), P(2, 0))
    assert not between(P(0, 0), P(2, 0), P(1, 0))
    assert between(P(0, 0), P(1, 1), P(3, 3))
    # strict: endpoints are excluded
    assert not between(P(0, 0), P(0, 0), P(3, 3))
    assert not between(P(0, 0), P(3, 3), P(3, 3))


def test_congruent():
    # 3^2 + 4^2 = 25 = 0^2 + 5^2
    assert congruent(P(0, 0), P(3, 4), P(1, 1), P(1, 6))
    assert congruent(P(0, 0), P(1, 0), P(0, 0), P(0, 1))
    assert not congruent(P(0, 0), P(1, 0), P(0, 0), P(2, 0))


def test_parallel_distinguishes_coincident_lines():
    assert line_relation(P(0, 0), P(1, 0), P(0, 1), P(1, 1)) is LineRelation.STRICTLY_PARALLEL
    assert line_relation(P(0, 0), P(1, 0), P(2, 0), P(3, 0)) is LineRelation.COINCIDENT
    assert line_relation(P(0, 0), P(1, 0), P(0, 0), P(1, 1)) is LineRelation.NEITHER
    assert parallel(P(0, 0), P(1, 0), P(2, 0), P(3, 0))
    assert not parallel(P(0, 0), P(1, 0), P(2, 0), P(3, 0), allow_coincident=False)
    with pytest.raises(DomainError):
        parallel(P(0, 0), P(0, 0), P(0, 1), P(1, 1))


def test_right_angle():
    assert right_angle(P(1, 0), P(0, 0), P(0, 1))
    assert not right_angle(P(1, 0), P(0, 0), P(1, 1))
    # dot((3,4), (-4,3)) = -12 + 12
    assert right_angle(P(3, 4), P(0, 0), P(-4, 3))
    with pytest.raises(DomainError):
        right_angle(P(0, 0), P(0, 0), P(1, 1))


def test_sides_of_a_line():
    a, b = P(0, 0), P(1, 0)
    assert same_side(P(0, 1), P(1, 1), a, b)
    assert not same_side(P(0, 1), P(0, -1), a, b)
    assert not same_side(P(2, 5), P(3, -7), a, b)
    assert opposite_side(P(2, 5), P(3, -7), a, b)
    with pytest.raises(DomainError):
        same_side(P(5, 0), P(0, 1), a, b)


def test_triangle_congruent():
    t = (P(0, 0), P(1, 0), P(0, 1))
    assert triangle_congruent(*t, P(5, 5), P(6, 5), P(5, 6))
    assert triangle_congruent(*t, P(0, 0), P(0, 1), P(1, 0))
    assert not triangle_congruent(*t, P(0, 0), P(2, 0), P(0, 2))
    with pytest.raises(DomainError):
        triangle_congruent(*t, P(0, 0), P(1, 1), P(2, 2))


def test_foot_of_perpendicular():
    assert foot_of_perpendicular(P(1, 3), P(0, 0), P(4, 0)) == P(1, 0)
    assert foot_of_perpendicular(P(2, 0), P(0, 0), P(4, 0)) == P(2, 0)
    # ((p.d)/(d.d)) d with p = (0,2), d = (1,1)
    d = (Fraction(0 * 1 + 2 * 1), Fraction(1 * 1 + 1 * 1))
    t = d[0] / d[1]
    assert foot_of_perpendicular(P(0, 2), P(0, 0), P(1, 1)) == P(t, t)
    assert foot_of_perpendicular(P(0, 2), P(0, 0), P(1, 1)).x.is_rational()
    with pytest.raises(DomainError):
        foot_of_perpendicular(P(0, 2), P(1, 1), P(1, 1))


def _solve2(a11, a12, b1, a21, a22, b2):
    det = a11 * a22 - a12 * a21
    return (b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det


def test_line_intersection():
    assert line_intersection(P(0, 0), P(2, 2), P(0, 2), P(2, 0)) == P(1, 1)
    assert line_intersection(P(0, 0), P(1, 0), P(5, -1), P(5, 1)) == P(5, 0)
    # y = x/2 and x/6 + y/3 = 1, i.e. x - 2y = 0 and x + 2y = 6
    x, y = _solve2(Fraction(1), Fraction(-2), Fraction(0), Fraction(1), Fraction(2), Fraction(6))
    assert (x, y) == (3, Fraction(3, 2))
    assert line_intersection(P(0, 0), P(4, 2), P(0, 3), P(6, 0)) == P(x, y)
    with pytest.raises(DomainError):
        line_intersection(P(0, 0), P(1, 0), P(0, 1), P(1, 1))
    with pytest.raises(DomainError):
        line_intersection(P(0, 0), P(1, 0), P(2, 0), P(3, 0))


def test_lay_off():
    five = Segment(P(0, 0), P(0, 5))
    assert lay_off(P(0, 0), P(1, 0), five) == P(5, 0)
    assert lay_off(P(0, 0), P(3, 4), five) == P(3, 4)
    unit = Segment(P(0, 0), P(1, 0))
    x = lay_off(P(0, 0), P(1, 1), unit)
    assert x == Point(1 / sqrt(2), 1 / sqrt(2))
    assert congruent(P(0, 0), x, unit.p, unit.q)
    with pytest.raises(DomainError):
        lay_off(P(0, 0), P(0, 0), unit)
    with pytest.raises(DomainError):
        lay_off(P(0, 0), P(1, 0), Segment(P(2, 2), P(2, 2)))


def test_orthocenter():
    # altitude from C is x = 1; altitude from A is perpendicular to BC = (-3,3): y = x
    assert orthocenter(P(0, 0), P(4, 0), P(1, 3)) == P(1, 1)
    assert orthocenter(P(0, 0), P(1, 0), P(0, 1)) == P(0, 0)
    # altitude from C is x = 0; from B=(1,0) perpendicular to AC=(1,2): x + 2y = 1
    x, y = _solve2(Fraction(1), Fraction(0), Fraction(0), Fraction(1), Fraction(2), Fraction(1))
    assert orthocenter(P(-1, 0), P(1, 0), P(0, 2)) == P(x, y)
    with pytest.raises(DomainError):
        orthocenter(P(0, 0), P(1, 1), P(2, 2))


def test_circumcircle():
    center, r2 = circumcircle(P(0, 0), P(4, 0), P(0, 2))
    assert center == P(2, 1) and r2 == 5
    # perpendicular bisectors x = 1 and x + y = 1
    x, y = _solve2(Fraction(1), Fraction(0), Fraction(1), Fraction(1), Fraction(1), Fraction(1))
    center, r2 = circumcircle(P(0, 0), P(2, 0), P(1, 1))
    assert center == P(x, y) and r2 == 1
    a, b, c = P(0, 0), P(1, 0), P(Fraction(1, 2), 5)
    center, r2 = circumcircle(a, b, c)
    assert center.x == as_exact(Fraction(1, 2))
    assert sqdist(center, a) == sqdist(center, b) == sqdist(center, c) == r2
    with pytest.raises(DomainError):
        circumcircle(P(0, 0), P(1, 1), P(2, 2))


def test_concyclic():
    assert concyclic(P(0, 0), P(1, 0), P(1, 1), P(0, 1))
    assert concyclic(P(0, 0), P(4, 0), P(0, 2), P(4, 2))
    # circumcenter (1/2, 1/2), r^2 = 1/2; (5,5) is at 81/2
    assert sqdist(P(Fraction(1, 2), Fraction(1, 2)), P(5, 5)) != Fraction(1, 2)
    assert not concyclic(P(0, 0), P(1, 0), P(0, 1), P(5, 5))


# -- properties ---------------------------------------------------------------


@given(points, points, points)
def test_betweenness_is_symmetric_and_exclusive(a, b, c):
    assert between(a, b, c) == between(c, b, a)
    assert not (between(a, b, c) and between(b, a, c))


@given(points, st.fractions(min_value=0, max_value=1, max_denominator=9).filter(lambda t: 0 < t < 1), points)
def test_betweenness_of_constructed_points(a, t, c):
    assume(a != c)
    b = a + (c - a).scale(as_exact(t))
    assert between(a, b, c)
    assert not between(b, a, c)


@given(points, points, points)
def test_projection_is_idempotent(p, a, b):
    assume(a != b)
    f = foot_of_perpendicular(p, a, b)
    assert collinear(a, b, f)
    assert foot_of_perpendicular(f, a, b) == f
    assert f == p or right_angle(p, f, a if f != a else b)


@given(points, points, points, points)
def test_lay_off_round_trip(origin, toward, s, t):
    assume(origin != toward and s != t)
    x = lay_off(origin, toward, Segment(s, t))
    assert congruent(origin, x, s, t)
    assert collinear(origin, toward, x)
    assert dot(x - origin, toward - origin).sign() > 0


@given(points, points, points)
def test_three_altitudes_meet(a, b, c):
    assume(not collinear(a, b, c))
    h = orthocenter(a, b, c)
    assert on_altitude(h, a, b, c)
    assert on_altitude(h, b, c, a)
    assert on_altitude(h, c, a, b)


@given(points, points, points)
def test_circumcenter_is_equidistant(a, b, c):
    assume(not collinear(a, b, c))
    center, r2 = circumcircle(a, b, c)
    assert sqdist(center, a) == r2 and sqdist(center, b) == r2 and sqdist(center, c) == r2
    assert concyclic(a, b, c, center + (center - a))


@given(points, points)
def test_cross_is_antisymmetric(u, v):
    assert cross(u, v) == -cross(v, u)

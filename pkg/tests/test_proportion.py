from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from equalfigures.exact import DomainError, as_exact, sqrt
from equalfigures.plane import Point, Segment, point
from equalfigures.proportion import (
    check_fundamental,
    check_interchange,
    cyclic_quad_check,
    fourth_proportional,
    pascal_kupffer_check,
    proportion_holds,
    segment_of_length,
)

coords = st.fractions(min_value=-12, max_value=12, max_denominator=4)
raw_segments = st.tuples(coords, coords, coords, coords).filter(lambda s: (s[0], s[1]) != (s[2], s[3]))
lengths = st.fractions(min_value=Fraction(1, 4), max_value=12, max_denominator=4)


def P(x, y):
    return point(Fraction(x), Fraction(y))


def seg(raw):
    x1, y1, x2, y2 = raw
    return Segment(P(x1, y1), P(x2, y2))


def sq(raw):
    # plain-Fraction squared length, independent of the package
    x1, y1, x2, y2 = raw
    return (x2 - x1) ** 2 + (y2 - y1) ** 2


def cross_oracle(a, b, c, d):
    return sq(a) * sq(d) == sq(b) * sq(c)


def L(n):
    return segment_of_length(as_exact(Fraction(n)))


def test_proportion_examples():
    # 2^2 * 6^2 = 3^2 * 4^2
    assert proportion_holds(L(2), L(3), L(4), L(6))
    # 1 * 3 != 2 * 2
    assert not proportion_holds(L(1), L(2), L(2), L(3))
    a, b = Segment(P(0, 0), P(3, 4)), Segment(P(1, 1), P(2, 7))
    assert proportion_holds(a, b, a, b)


def test_zero_length_segments_are_rejected():
    with pytest.raises(DomainError):
        proportion_holds(Segment(P(1, 1), P(1, 1)), L(1), L(2), L(3))
    with pytest.raises(DomainError):
        fourth_proportional(L(1), L(2), (P(0, 0), P(0, 0)))


def test_fourth_proportional_examples():
    assert fourth_proportional(L(2), L(3), L(4)) == 6  # 3 * 4 / 2
    assert fourth_proportional(L(5), L(5), L(7)) == 7
    c = Segment(P(1, 2), P(4, 6))
    assert fourth_proportional(L(3), L(3), c) == 5
    assert fourth_proportional(L(1), L(2), Segment(P(0, 0), P(1, 1))) == 2 * sqrt(2)


def test_interchange_examples():
    assert check_interchange(L(2), L(3), L(4), L(6))
    assert check_interchange(L(1), L(1), L(5), L(5))
    # 3 * 8 = 4 * 6 and 3 * 8 = 6 * 4
    assert check_interchange(L(3), L(4), L(6), L(8))
    with pytest.raises(DomainError):
        check_interchange(L(1), L(2), L(2), L(3))


def test_fundamental_examples():
    assert check_fundamental(P(0, 0), P(1, 0), P(0, 1), P(2, 0), P(0, 2))
    # 2 * 6 = 3 * 4
    assert check_fundamental(P(0, 0), P(2, 0), P(0, 4), P(3, 0), P(0, 6))
    assert check_fundamental(P(0, 0), P(2, 1), P(1, 3), P(4, 2), P(2, 6))
    with pytest.raises(DomainError):
        check_fundamental(P(0, 0), P(2, 0), P(0, 4), P(3, 0), P(0, 5))


def test_pascal_kupffer_examples():
    o = P(0, 0)
    # a a' = b b' = c c' = 6
    assert pascal_kupffer_check(o, P(1, 0), P(2, 0), P(3, 0), P(0, 6), P(0, 3), P(0, 2))
    assert pascal_kupffer_check(o, P(1, 0), P(2, 0), P(4, 0), P(0, 4), P(0, 2), P(0, 1))
    with pytest.raises(DomainError):
        pascal_kupffer_check(o, P(1, 0), P(1, 0), P(1, 0), P(0, 4), P(0, 2), P(0, 1))


def test_cyclic_quad_examples():
    assert cyclic_quad_check(P(0, 0), P(4, 0), P(4, 2), P(0, 2))
    assert cyclic_quad_check(P(-2, 0), P(2, 0), P(1, 3), P(-1, 3))
    assert cyclic_quad_check(P(0, 0), P(1, 0), P(1, 1), P(0, 1))
    with pytest.raises(DomainError):
        cyclic_quad_check(P(0, 0), P(2, 0), P(1, 1), P(1, 3))


# -- properties ---------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(raw_segments, raw_segments, raw_segments, raw_segments)
def test_matches_cross_multiplication(a, b, c, d):
    assert proportion_holds(seg(a), seg(b), seg(c), seg(d)) == cross_oracle(a, b, c, d)


@settings(max_examples=60, deadline=None)
@given(raw_segments, raw_segments, lengths)
def test_constructed_proportions_hold(a, b, k):
    # scaling both terms by k keeps the ratio
    c = (Fraction(0), Fraction(0), k * (a[2] - a[0]), k * (a[3] - a[1]))
    d = (Fraction(1), Fraction(1), 1 + k * (b[2] - b[0]), 1 + k * (b[3] - b[1]))
    assert cross_oracle(a, b, c, d)
    assert proportion_holds(seg(a), seg(b), seg(c), seg(d))
    assert proportion_holds(seg(a), seg(c), seg(b), seg(d))


@settings(max_examples=60, deadline=None)
@given(raw_segments, raw_segments, raw_segments, raw_segments)
def test_flip_and_symmetry(a, b, c, d):
    A, B, C, D = map(seg, (a, b, c, d))
    assert proportion_holds(C, D, A, B) == proportion_holds(D, C, B, A)
    assert proportion_holds(A, B, C, D) == proportion_holds(C, D, A, B)


@settings(max_examples=60, deadline=None)
@given(raw_segments, raw_segments, raw_segments)
def test_fourth_proportional_is_the_unique_solution(a, b, c):
    A, B, C = map(seg, (a, b, c))
    x = fourth_proportional(A, B, C)
    assert x.sign() > 0
    assert proportion_holds(A, B, C, segment_of_length(x))
    # oracle: |x|^2 = |b|^2 |c|^2 / |a|^2
    assert x * x == as_exact(sq(b) * sq(c) / sq(a))


@settings(max_examples=40, deadline=None)
@given(raw_segments, raw_segments, lengths, lengths)
def test_transitivity(a, b, k, m):
    c = (Fraction(0), Fraction(0), k * (a[2] - a[0]), k * (a[3] - a[1]))
    d = (Fraction(0), Fraction(0), k * (b[2] - b[0]), k * (b[3] - b[1]))
    e = (Fraction(2), Fraction(0), 2 + m * (a[2] - a[0]), m * (a[3] - a[1]))
    f = (Fraction(0), Fraction(2), m * (b[2] - b[0]), 2 + m * (b[3] - b[1]))
    A, B, C, D, E, F = map(seg, (a, b, c, d, e, f))
    assert proportion_holds(A, B, C, D) and proportion_holds(C, D, E, F)
    assert proportion_holds(A, B, E, F)


@settings(max_examples=40, deadline=None)
@given(coords, coords, coords, coords, lengths)
def test_fundamental_on_random_angles(bx, by, cx, cy, k):
    a, b, c = P(0, 0), P(bx, by), P(cx, cy)
    assume((bx * cy - by * cx) != 0)
    b2 = Point(b.x * as_exact(k), b.y * as_exact(k))
    c2 = Point(c.x * as_exact(k), c.y * as_exact(k))
    assert check_fundamental(a, b, c, b2, c2)

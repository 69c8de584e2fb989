"""Proportion by construction, and the right-angle Pascal theorem.

PQ:RS = pq:rs is decided by laying the four segments off along the two arms
of a right angle and asking whether the two connecting lines are parallel.
From there the interchange theorem, the fourth proportional and the
Pascal configuration on two perpendicular lines can all be checked.
"""

from equalfigures.exact import as_exact
from equalfigures.plane import orthocenter, on_altitude, point
from equalfigures.proportion import (
    check_interchange,
    fourth_proportional,
    pascal_kupffer_check,
    proportion_holds,
    segment_of_length,
)


def seg(n):
    return segment_of_length(as_exact(n))


print("2:3 = 4:6 ?", proportion_holds(seg(2), seg(3), seg(4), seg(6)))
print("1:2 = 2:3 ?", proportion_holds(seg(1), seg(2), seg(2), seg(3)))
print("interchange 2:3 = 4:6 gives 2:4 = 3:6 ?", check_interchange(seg(2), seg(3), seg(4), seg(6)))
print("fourth proportional to 2, 3, 5:", fourth_proportional(seg(2), seg(3), seg(5)))

# A, B, C on the x axis, A', B', C' on the y axis with a a' = b b' = c c' = 6
o = point(0, 0)
a, b, c = point(1, 0), point(2, 0), point(3, 0)
a2, b2, c2 = point(0, 6), point(0, 3), point(0, 2)
print("AB' || BA' and BC' || CB' imply AC' || CA' :", pascal_kupffer_check(o, a, b, c, a2, b2, c2))

# the orthocenter argument behind it
h = orthocenter(point(0, 0), point(4, 0), point(1, 3))
print("orthocenter of (0,0),(4,0),(1,3):", h)
print("on all three altitudes:", on_altitude(h, point(0, 0), point(4, 0), point(1, 3))
      and on_altitude(h, point(4, 0), point(1, 3), point(0, 0))
      and on_altitude(h, point(1, 3), point(0, 0), point(4, 0)))

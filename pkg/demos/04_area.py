"""Area as a rectangle width.

Fix a unit segment UV.  The area of a figure is the width of the rectangle
with height |UV| that is equal to the figure's circumscribed rectangle.
Equal figures get equal widths, and cutting a figure in two splits its
width into a sum.  The shoelace formula is printed only for comparison.
"""

from equalfigures.figures import Quadrilateral, Triangle, area, area_sum, equal_quadrilaterals, oracle_area
from equalfigures.plane import Segment, point

unit = Segment(point(0, 0), point(1, 0))

quad = Quadrilateral(point(0, 0), point(2, 0), point(3, 2), point(0, 1))
strip = Quadrilateral(point(0, 0), point(7, 0), point(7, "1/2"), point(0, "1/2"))

print("area(quad)  =", area(quad, unit).width, " shoelace", oracle_area(quad))
print("area(strip) =", area(strip, unit).width, " shoelace", oracle_area(strip))
print("EF(quad, strip):", equal_quadrilaterals(quad, strip))

# cut along the diagonal AC
a, b, c, d = quad.points
left, right = Triangle(a, b, c), Triangle(a, c, d)
total = area_sum(area(left, unit), area(right, unit))
print("area(ABC) + area(ACD) =", total.width, "equals area(ABCD):", total.width == area(quad, unit).width)

# a longer unit scales every width by the same factor
half = Segment(point(0, 0), point(2, 0))
print("with |UV| = 2: area(quad) =", area(quad, half).width)

"""A triangle equals its rotation.

Equal triangles are defined through the first circumscribed rectangle,
whose base is the first side.  Rotating the vertices changes the base, so
the two rectangles usually have different shapes; the theorem is that they
are still equal rectangles.  Here we look at one triangle and then check all
six vertex orders.
"""

from itertools import permutations

from equalfigures.figures import equal_triangles, first_circumscribed_rectangle
from equalfigures.plane import point

a, b, c = point(0, 0), point(4, 0), point(1, 3)

for name, tri in (("ABC", (a, b, c)), ("BCA", (b, c, a)), ("CAB", (c, a, b))):
    rect, corners = first_circumscribed_rectangle(tri)
    print(f"{name}: base {rect.width.to_literal()}, height {rect.height.to_literal()}")

print("ET(ABC, BCA):", equal_triangles((a, b, c), (b, c, a)))
print("all six orders equal:", all(equal_triangles((a, b, c), p) for p in permutations((a, b, c))))

# a sheared triangle on the same base with apex on the same parallel
print("ET(ABC, AB(7,3)):", equal_triangles((a, b, c), (a, b, point(7, 3))))
print("ET(ABC, AB(1,2)):", equal_triangles((a, b, c), (a, b, point(1, 2))))

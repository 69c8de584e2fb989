"""Equal rectangles without multiplying sides.

Two rectangles are placed corner to corner at a common vertex B, one as
BEFG and the other as BMLA, and the outer rectangle is completed.  They are
equal exactly when its far corners H and K lie on a line through B with B
between them.
"""

from equalfigures.exact import as_exact, sqrt
from equalfigures.figures import RectWH, equal_rectangles, placement
from equalfigures.plane import between, collinear


def show(w1, h1, w2, h2):
    r, s = RectWH(as_exact(w1), as_exact(h1)), RectWH(as_exact(w2), as_exact(h2))
    pts = placement(r, s)
    h, b, k = pts["H"], pts["B"], pts["K"]
    print(f"{r} vs {s}")
    print(f"  H = {h}, K = {k}")
    print(f"  collinear(H, B, K) = {collinear(h, b, k)}, between(H, B, K) = {between(h, b, k)}")
    print(f"  equal: {equal_rectangles(r, s)}")


show(2, 3, 6, 1)
show(2, 3, 2, 4)
# irrational sides work the same way: sqrt2 x sqrt8 against 2 x 2
show(sqrt(2), sqrt(8), 2, 2)
